#ifndef FFSTAT_FFSTAT_HPP
#define FFSTAT_FFSTAT_HPP

#include "ffstat/combinatorics.hpp"
#include "ffstat/factor.hpp"
#include "ffstat/gf.hpp"
#include "ffstat/parallel.hpp"
#include "ffstat/partition.hpp"
#include "ffstat/poly.hpp"
#include "ffstat/report.hpp"
#include "ffstat/statistics.hpp"
#include "ffstat/text.hpp"
#include "ffstat/verify.hpp"

#endif  // FFSTAT_FFSTAT_HPP
