#ifndef FFSTAT_CLI_HPP
#define FFSTAT_CLI_HPP

// Command-line front end.  run_command() parses argv, runs one subcommand
// and writes a JSON document (or a CSV table for scans).
//
// Exit codes: 0 success, 1 a checked identity or closed form disagreed,
// 2 usage or input error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffstat/combinatorics.hpp"
#include "ffstat/factor.hpp"
#include "ffstat/gf.hpp"
#include "ffstat/partition.hpp"
#include "ffstat/report.hpp"
#include "ffstat/statistics.hpp"
#include "ffstat/text.hpp"
#include "ffstat/verify.hpp"

namespace ffstat {

struct RunConfig {
  unsigned threads = 0;
  std::uint64_t budget = kDefaultBudget;
  std::int64_t seed = 0;  // accepted, unused: every scan is exhaustive
  std::string output;     // empty: standard output
  std::string format = "json";
  bool dry_run = false;
  bool no_timing = false;
};

namespace cli_detail {

struct Args {
  RunConfig cfg;
  std::uint32_t p = 0;
  unsigned nu = 1;
  int k = 0;
  int m = -1;
  int d = 0;
  unsigned n = 0;
  std::string f, D, lambda, variant = "p2", qs;
  bool per_cell = false;
  bool enumerate = false;
  bool decompose = false;
  std::uint64_t max_cells = 0;
};

/// What a subcommand produced.
struct Outcome {
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json result;
  nlohmann::json excluded = nlohmann::json::object();
  const Field* field = nullptr;
  std::uint64_t projected = 0;
  bool disagreement = false;
  std::optional<DeviationReport> scan;  // for CSV
};

inline std::vector<std::uint64_t> parse_q_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& tok : detail::split(detail::strip_spaces(text), ',')) {
    if (tok.empty()) throw std::invalid_argument("malformed q list '" + text + "'");
    out.push_back(std::stoull(tok));
  }
  return out;
}

inline std::uint64_t pow_or_max(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > ~std::uint64_t{0} / q) return ~std::uint64_t{0};
    r *= q;
  }
  return r;
}

inline void need(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace cli_detail

/// Runs one invocation.  argv[0] is the program name.
inline int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  using nlohmann::json;
  Args a;
  CLI::App app{"Exact factorization statistics of polynomials over finite fields", "ffstat"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--p", a.p, "field characteristic");
  app.add_option("--nu", a.nu, "field degree over F_p")->default_val(1);
  app.add_option("--threads", a.cfg.threads, "worker threads (FFSTAT_THREADS overrides)");
  app.add_option("--budget", a.cfg.budget, "maximum enumeration size")->default_val(kDefaultBudget);
  app.add_option("--seed", a.cfg.seed, "reserved; scans are exhaustive");
  app.add_option("--output", a.cfg.output, "output path (default: stdout)");
  app.add_option("--format", a.cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--dry-run", a.cfg.dry_run, "print the projected cell count and exit");
  app.add_flag("--no-timing", a.cfg.no_timing, "report timing_ms as 0");

  auto* pi = app.add_subcommand("pi", "number of monic irreducibles of degree k");
  pi->add_option("--k", a.k)->required();
  pi->add_flag("--enumerate", a.enumerate, "also count by exhaustive irreducibility tests");

  auto* pi_type = app.add_subcommand("pi-type", "monic degree-k polynomials of factorization type lambda");
  pi_type->add_option("--k", a.k)->required();
  pi_type->add_option("--lambda", a.lambda)->required();

  auto* interval = app.add_subcommand("interval", "factorization-type census of I(f, m)");
  interval->add_option("--f", a.f)->required();
  interval->add_option("--m", a.m)->required();
  interval->add_option("--k", a.k, "expected degree of f");
  interval->add_option("--lambda", a.lambda);

  auto* progression = app.add_subcommand("progression", "census of f + D g over monic g of degree k - deg D");
  progression->add_option("--D", a.D)->required();
  progression->add_option("--f", a.f)->required();
  progression->add_option("--k", a.k)->required();
  progression->add_option("--lambda", a.lambda);

  auto* scan_int = app.add_subcommand("scan-intervals", "deviation scan over all intervals I(f, m) of M(k, q)");
  scan_int->add_option("--k", a.k)->required();
  scan_int->add_option("--m", a.m)->required();
  scan_int->add_option("--lambda", a.lambda)->required();
  scan_int->add_flag("--per-cell", a.per_cell);

  auto* scan_prog = app.add_subcommand("scan-progressions", "deviation scan over moduli D of degree k - m - 1");
  scan_prog->add_option("--k", a.k)->required();
  scan_prog->add_option("--m", a.m)->required();
  scan_prog->add_option("--lambda", a.lambda)->required();
  scan_prog->add_option("--max-cells", a.max_cells, "cap on (D, f) cells, canonical order");
  scan_prog->add_flag("--per-cell", a.per_cell);

  auto* mean_var = app.add_subcommand("mean-variance", "exact mean and variance of nu(.; m) over M(k, q)");
  mean_var->add_option("--k", a.k)->required();
  mean_var->add_option("--m", a.m)->required();

  auto* trend = app.add_subcommand("variance-trend", "Var nu / q^{m+1} against the limit k - m - 2");
  trend->add_option("--k", a.k)->required();
  trend->add_option("--m", a.m)->required();
  trend->add_option("--q", a.qs, "comma-separated prime powers")->required();

  auto* radical = app.add_subcommand("radical", "I(f, m)^{1/d}");
  radical->add_option("--f", a.f)->required();
  radical->add_option("--m", a.m)->required();
  radical->add_option("--d", a.d)->required();

  auto* nu_cmd = app.add_subcommand("nu", "von Mangoldt sum over I(f, m) with g(0) != 0");
  nu_cmd->add_option("--f", a.f)->required();
  nu_cmd->add_option("--m", a.m)->required();
  nu_cmd->add_flag("--decompose", a.decompose, "also split nu by prime degree");

  auto* ce = app.add_subcommand("counterexample", "small-m counterexamples");
  ce->require_subcommand(1);
  auto* ce_m0 = ce->add_subcommand("m0", "irreducibles among t^k + a");
  ce_m0->add_option("--k", a.k)->required();
  auto* ce_m1 = ce->add_subcommand("m1", "irreducibles in I(t^k, 1) over F_{p^{2n}}");
  ce_m1->add_option("--n", a.n)->required();
  ce_m1->add_option("--variant", a.variant, "p2 (k = p^2) or p2+1 (k = p^2 + 1)")
      ->check(CLI::IsMember({"p2", "p2+1"}));

  auto* hyp = app.add_subcommand("hypotheses", "coverage classification of an interval or progression");
  hyp->add_option("--f", a.f)->required();
  hyp->add_option("--m", a.m)->required();
  hyp->add_option("--D", a.D, "modulus; selects the progression conditions");
  hyp->add_option("--k", a.k, "target degree (progressions)");

  auto* tot = app.add_subcommand("totient", "units of F_q[t]/D");
  tot->add_option("--D", a.D)->required();

  auto* pprob = app.add_subcommand("partition-prob", "probability of a cycle type in S_k");
  pprob->add_option("--lambda", a.lambda)->required();

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ffstat: error: " << e.what() << '\n';
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  Outcome o;
  std::string command;
  try {
    auto field = [&]() -> const Field& {
      need(a.p != 0, "--p is required");
      return make_field(a.p, a.nu);
    };
    auto parse_lambda = [&](int k) {
      const Partition lam = Partition::parse(a.lambda);
      need(lam.k() == k, "partition " + lam.to_string() + " does not sum to k = " + std::to_string(k));
      return lam;
    };
    RunOptions run{a.cfg.threads, a.cfg.budget};
    ScanOptions scan{a.cfg.threads, a.cfg.budget, a.per_cell, a.max_cells};

    if (pi->parsed()) {
      command = "pi";
      const Field& F = field();
      o.field = &F;
      need(a.k >= 1, "--k must be positive");
      o.params = {{"k", a.k}, {"enumerate", a.enumerate}};
      o.projected = a.enumerate ? pow_or_max(F.q(), a.k) : 0;
      if (!a.cfg.dry_run) {
        const BigInt closed = exact_prime_count(F.q(), a.k);
        if (!a.enumerate) {
          o.result = json_int(closed);
        } else {
          ensure_budget(o.projected, a.cfg.budget);
          std::uint64_t found = 0;
          for (std::uint64_t i = 0; i < o.projected; ++i)
            if (is_irreducible(Poly::monic_from_index(F, a.k, i))) ++found;
          o.result = {{"closed_form", json_int(closed)}, {"enumerated", found}, {"agrees", BigInt(found) == closed}};
          o.disagreement = BigInt(found) != closed;
        }
      }
    } else if (pi_type->parsed()) {
      command = "pi-type";
      const Field& F = field();
      o.field = &F;
      const Partition lam = parse_lambda(a.k);
      o.params = {{"k", a.k}, {"lambda", lam.to_string()}};
      if (!a.cfg.dry_run) o.result = json_int(exact_type_count(F.q(), a.k, lam));
    } else if (interval->parsed()) {
      command = "interval";
      const Field& F = field();
      o.field = &F;
      const Poly f = parse_poly(a.f, F);
      if (a.k) need(f.degree() == a.k, "--f has degree " + std::to_string(f.degree()) + ", not k = " + std::to_string(a.k));
      const IntervalSpec I(f, a.m);
      o.params = {{"f", render_poly(f)}, {"m", a.m}, {"k", I.k()}};
      o.projected = pow_or_max(F.q(), a.m + 1);
      if (!a.cfg.dry_run) {
        ensure_budget(o.projected, a.cfg.budget);
        const TypeCensus census = interval_counts(I, run);
        json res = {{"census", to_json(census, I.k())},
                    {"total", census.total()},
                    {"canonical_center", render_poly(I.canonical_center())}};
        if (a.m >= 1) res["coverage"] = to_json(check_hypotheses_interval(f, a.m));
        if (!a.lambda.empty()) {
          const Partition lam = parse_lambda(I.k());
          o.params["lambda"] = lam.to_string();
          res["count"] = census.at(lam);
          res["expected"] = json_rational(cycle_type_probability(lam) * Rational(big_pow(F.q(), a.m + 1)));
        }
        o.result = std::move(res);
      }
    } else if (progression->parsed()) {
      command = "progression";
      const Field& F = field();
      o.field = &F;
      const ProgressionSpec P(parse_poly(a.D, F), parse_poly(a.f, F), a.k);
      const int m = a.k - P.modulus().degree() - 1;
      o.params = {{"D", render_poly(P.modulus())}, {"f", render_poly(P.residue())}, {"k", a.k}};
      o.projected = pow_or_max(F.q(), a.k - P.modulus().degree());
      if (!a.cfg.dry_run) {
        ensure_budget(o.projected, a.cfg.budget);
        const TypeCensus census = progression_counts(P, run);
        const BigInt phi = poly_totient(P.modulus());
        json res = {{"census", to_json(census, a.k)},
                    {"total", census.total()},
                    {"totient", json_int(phi)},
                    {"m", m},
                    {"coverage", to_json(check_hypotheses_progression(a.k, m, P.modulus(), P.residue()))}};
        if (!a.lambda.empty()) {
          const Partition lam = parse_lambda(a.k);
          o.params["lambda"] = lam.to_string();
          res["count"] = census.at(lam);
          res["expected"] = json_rational(Rational(exact_type_count(F.q(), a.k, lam), phi));
        }
        o.result = std::move(res);
      }
    } else if (scan_int->parsed() || scan_prog->parsed()) {
      const bool is_interval = scan_int->parsed();
      command = is_interval ? "scan-intervals" : "scan-progressions";
      const Field& F = field();
      o.field = &F;
      const Partition lam = parse_lambda(a.k);
      o.params = {{"k", a.k}, {"m", a.m}, {"lambda", lam.to_string()}, {"per_cell", a.per_cell}};
      if (!is_interval) o.params["max_cells"] = a.max_cells;
      if (a.cfg.format == "csv") scan.per_cell = true;
      o.projected = is_interval ? pow_or_max(F.q(), a.k) : projected_progression_work(F, a.k, a.m, a.max_cells);
      if (!a.cfg.dry_run) {
        DeviationReport r = is_interval ? scan_intervals(F, a.k, a.m, lam, scan) : scan_progressions(F, a.k, a.m, lam, scan);
        o.result = to_json(r);
        o.excluded = excluded_json(r);
        o.scan = std::move(r);
      }
    } else if (mean_var->parsed()) {
      command = "mean-variance";
      const Field& F = field();
      o.field = &F;
      o.params = {{"k", a.k}, {"m", a.m}};
      o.projected = pow_or_max(F.q(), a.k);
      if (!a.cfg.dry_run) {
        const MeanVariance mv = mean_variance_nu(F, a.k, a.m, run);
        const Rational closed = mean_nu_closed_form(F.q(), a.k, a.m);
        o.result = to_json(mv);
        o.result["mean_closed_form"] = json_rational(closed);
        o.result["mean_agrees"] = mv.mean == closed;
        o.disagreement = mv.mean != closed;
      }
    } else if (trend->parsed()) {
      command = "variance-trend";
      const auto qs = parse_q_list(a.qs);
      o.params = {{"k", a.k}, {"m", a.m}, {"q", qs}};
      for (auto q : qs) {
        split_prime_power(q);
        o.projected += pow_or_max(q, a.k);
      }
      if (!a.cfg.dry_run) o.result = to_json(variance_trend(a.k, a.m, qs, run));
    } else if (radical->parsed()) {
      command = "radical";
      const Field& F = field();
      o.field = &F;
      const IntervalSpec I(parse_poly(a.f, F), a.m);
      o.params = {{"f", render_poly(I.center())}, {"m", a.m}, {"d", a.d}};
      need(a.d > 1 && I.k() % a.d == 0, "--d must satisfy d > 1 and d | k");
      o.projected = pow_or_max(F.q(), I.k() / a.d);
      if (!a.cfg.dry_run) {
        const auto set = radical_set(I, a.d, run);
        json members = json::array();
        for (const auto& g : set) members.push_back(render_poly(g));
        const auto bound = pow_or_max(F.q(), a.m);
        o.result = {{"members", std::move(members)}, {"size", set.size()}, {"bound", bound}, {"within_bound", set.size() <= bound}};
        o.disagreement = set.size() > bound;
      }
    } else if (nu_cmd->parsed()) {
      command = "nu";
      const Field& F = field();
      o.field = &F;
      const Poly f = parse_poly(a.f, F);
      o.params = {{"f", render_poly(f)}, {"m", a.m}, {"decompose", a.decompose}};
      o.projected = pow_or_max(F.q(), a.m + 1);
      if (!a.cfg.dry_run) {
        ensure_budget(o.projected, a.cfg.budget);
        if (a.decompose) {
          const NuDecomposition dec = nu_decomposition(f, a.m, run);
          o.result = to_json(dec);
          o.disagreement = dec.reconstructed != dec.nu;
        } else {
          o.result = nu(f, a.m, run);
        }
      }
    } else if (ce->parsed()) {
      if (ce_m0->parsed()) {
        command = "counterexample m0";
        const Field& F = field();
        o.field = &F;
        o.params = {{"k", a.k}};
        o.projected = F.q();
        if (!a.cfg.dry_run) {
          const auto r = counterexample_m0(F, a.k);
          o.result = to_json(r);
          o.disagreement = r.agrees && !*r.agrees;
        }
      } else {
        command = "counterexample m1";
        need(a.p != 0, "--p is required");
        const auto variant = a.variant == "p2" ? M1Variant::PSquared : M1Variant::PSquaredPlusOne;
        o.params = {{"n", a.n}, {"variant", a.variant}};
        o.field = &make_field(a.p, 2 * a.n);
        o.projected = pow_or_max(o.field->q(), 2);
        if (!a.cfg.dry_run) {
          const auto r = counterexample_m1(a.p, a.n, variant, run);
          o.result = to_json(r);
          o.disagreement = r.agrees && !*r.agrees;
        }
      }
    } else if (hyp->parsed()) {
      command = "hypotheses";
      const Field& F = field();
      o.field = &F;
      const Poly f = parse_poly(a.f, F);
      o.params = {{"f", render_poly(f)}, {"m", a.m}};
      if (!a.cfg.dry_run) {
        if (a.D.empty()) {
          o.params["mode"] = "interval";
          o.result = to_json(check_hypotheses_interval(f, a.m));
        } else {
          const Poly D = parse_poly(a.D, F);
          need(a.k > 0, "--k is required with --D");
          o.params["mode"] = "progression";
          o.params["D"] = render_poly(D);
          o.params["k"] = a.k;
          o.result = to_json(check_hypotheses_progression(a.k, a.m, D, f));
        }
      }
    } else if (tot->parsed()) {
      command = "totient";
      const Field& F = field();
      o.field = &F;
      const Poly D = parse_poly(a.D, F);
      o.params = {{"D", render_poly(D)}};
      if (!a.cfg.dry_run) o.result = json_int(poly_totient(D));
    } else if (pprob->parsed()) {
      command = "partition-prob";
      const Partition lam = Partition::parse(a.lambda);
      o.params = {{"lambda", lam.to_string()}};
      if (!a.cfg.dry_run) o.result = json_rational(cycle_type_probability(lam));
    }

    if (a.cfg.dry_run) {
      o.result = {{"dry_run", true}, {"projected_cells", o.projected}};
      o.excluded = json::object();
    }
  } catch (const BudgetExceeded& e) {
    err << "ffstat: error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "ffstat: error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "ffstat: error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "ffstat: error: number out of range (" << e.what() << ")\n";
    return 2;
  }

  const auto elapsed = std::chrono::steady_clock::now() - started;
  const std::int64_t timing =
      a.cfg.no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

  std::ostringstream body;
  if (a.cfg.format == "csv" && !a.cfg.dry_run) {
    if (!o.scan) {
      err << "ffstat: error: --format csv is only available for scan-intervals and scan-progressions\n";
      return 2;
    }
    write_csv(body, *o.scan);
  } else {
    body << make_document(command, o.field, o.params, o.result, o.excluded, timing).dump(2) << '\n';
  }
  if (a.cfg.output.empty()) {
    out << body.str();
  } else {
    std::ofstream file(a.cfg.output, std::ios::binary);
    if (!file) {
      err << "ffstat: error: cannot open " << a.cfg.output << '\n';
      return 2;
    }
    file << body.str();
  }
  return o.disagreement ? 1 : 0;
}

inline int run_command(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run_command(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace ffstat

#endif  // FFSTAT_CLI_HPP
