#include "ffstat/cli.hpp"

int main(int argc, char** argv) { return ffstat::run_command(argc, argv); }
