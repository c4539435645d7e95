// lcgraph: spectra, Cheeger constants and random walks on graphs with Levi-Civita weights.

#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lcg/lcg.hpp"
#include "lcg/random.hpp"

namespace {

using namespace lcg;

enum Exit { kPass = 0, kTheoremFailure = 1, kInputError = 2, kComputationError = 3 };

struct RunConfig {
  Exponent trunc_order{8};
  std::string mode = "rational";
  unsigned precision_bits = 256;
  std::uint64_t seed = 1;
  int digits = 30;
};

Exponent parse_exponent(const std::string &text) {
  BigRational v;
  try {
    v = BigRational(text);
  } catch (const std::exception &) {
    throw CLI::ValidationError("--trunc", "expected a rational such as 8 or 17/2, got '" + text + "'");
  }
  if (v <= 0)
    throw CLI::ValidationError("--trunc", "truncation order must be positive");
  return Exponent(v);
}

template <class F>
std::string show(const Series<F> &a, const RunConfig &) {
  return to_string(a);
}

template <class F>
std::string show(const VertexFunction<F> &f, const RunConfig &cfg) {
  std::string out = "(";
  for (std::size_t x = 0; x < f.size(); ++x)
    out += (x ? ", " : "") + show(f[x], cfg);
  return out + ")";
}

template <class F>
std::string show_subset(const OFGraph<F> &g, const std::vector<std::size_t> &subset) {
  std::string out = "{";
  for (std::size_t k = 0; k < subset.size(); ++k)
    out += (k ? ", " : "") + g.name(subset[k]);
  return out + "}";
}

template <class F>
std::string show_complement(const OFGraph<F> &g, const std::vector<std::size_t> &subset) {
  std::vector<std::size_t> rest;
  for (std::size_t x = 0; x < g.size(); ++x)
    if (std::find(subset.begin(), subset.end(), x) == subset.end())
      rest.push_back(x);
  return show_subset(g, rest);
}

int print_report(std::ostream &os, const Report &rep) {
  os << rep;
  return rep.passed() ? kPass : kTheoremFailure;
}

template <class F>
int cmd_spectrum(const OFGraph<F> &g, const RunConfig &cfg, std::ostream &os) {
  auto s = compute_spectrum(g);
  for (const auto &e : s.pairs) {
    os << "lambda = " << show(e.lambda, cfg) << " ; alpha = " << show(e.alpha, cfg) << " ; v = "
       << show(e.v, cfg);
    if (e.multiplicity > 1)
      os << " ; multiplicity " << e.multiplicity;
    os << '\n';
  }
  return kPass;
}

template <class F>
void print_cut(const OFGraph<F> &g, const CheegerCut<F> &cut, const RunConfig &cfg, std::ostream &os) {
  os << "h = " << show(cut.h, cfg) << '\n';
  os << "subset = " << show_subset(g, cut.subset) << " ; complement = " << show_complement(g, cut.subset)
     << '\n';
}

template <class F>
int cmd_cheeger(const OFGraph<F> &g, const RunConfig &cfg, std::ostream &os) {
  auto cut = cheeger_constant(g);
  auto s = compute_spectrum(g);
  print_cut(g, cut, cfg, os);
  os << "lambda_1 = " << show(s.pairs.at(1).lambda, cfg) << '\n';
  return print_report(os, cheeger_inequality_check(g, s, cut));
}

template <class F>
int cmd_walk(const OFGraph<F> &g, const RunConfig &cfg, const std::string &function_file, int steps,
             bool bipartite, std::ostream &os) {
  auto f = load_function(function_file, g);
  auto cut = cheeger_constant(g);
  WalkOptions<F> opt;
  opt.h = cut.h;
  std::optional<Spectrum<F>> s;
  if (bipartite) {
    opt.alpha1_squared = alpha1_squared(g);
  } else {
    s = compute_spectrum(g);
    const auto &a1 = s->pairs.at(1).alpha;
    opt.alpha1_squared = a1 * a1;
    opt.spectrum = &*s;
  }
  auto rep = iterate(g, f, steps, bipartite ? WalkMode::Bipartite : WalkMode::Full, opt);
  auto flag = [](const std::optional<bool> &b) { return !b ? "n/a" : (*b ? "PASS" : "FAIL"); };
  os << "mode = " << (bipartite ? "bipartite" : "full") << '\n';
  os << "equilibrium = " << show(rep.equilibrium, cfg) << '\n';
  os << "<f, f> = " << show(rep.norm_sq, cfg) << '\n';
  os << "alpha_1^2 = " << show(*opt.alpha1_squared, cfg) << '\n';
  os << "h = " << show(cut.h, cfg) << '\n';
  const char *power = bipartite ? "2m" : "m";
  for (const auto &st : rep.steps)
    os << "m = " << st.m << " ; deviation^2 = " << show(st.deviation_sq, cfg) << " ; alpha_1^(2" << power
       << ") bound " << flag(st.alpha_bound_ok) << " ; (1-h^2)^(" << power << ") bound "
       << flag(st.cheeger_bound_ok) << '\n';
  if (!bipartite)
    os << "span precondition: " << to_string(rep.span) << '\n';
  if (rep.span == SpanCheck::Violated) {
    os << "verdict: f is outside the positive-alpha span; bounds are not asserted\n";
    return kPass;
  }
  const bool ok = rep.bounds_hold();
  os << "verdict: " << (ok ? "PASS" : "FAIL") << " bounds hold for m = 1.." << steps << '\n';
  return ok ? kPass : kTheoremFailure;
}

template <class F>
int cmd_verify(const OFGraph<F> &g, const RunConfig &cfg, std::ostream &os) {
  auto s = compute_spectrum(g);
  auto cut = cheeger_constant(g);
  Report rep = verify_spectral_theorems(g, s);
  rep.append(cheeger_inequality_check(g, s, cut));
  auto verdict = h_convergence_verdict(g, cut, std::optional<Series<F>>(s.pairs.at(1).alpha));
  rep.add("convergence verdict agrees with the classifier", verdict.consistent, verdict.summary);
  if (!g.is_bipartite()) {
    auto w = nonconvergence_witness(g, s);
    rep.add("alpha_{n-1}^m v(x) has no limit", w.pairs_failed == 0,
            "vertex " + g.name(w.vertex) + ", gap bound " + show(w.gap_bound, cfg) + ", " +
                std::to_string(w.pairs_checked) + " pairs");
  }
  print_cut(g, cut, cfg, os);
  return print_report(os, rep);
}

template <class F>
int cmd_print(const OFGraph<F> &g, const RunConfig &, std::ostream &os) {
  os << to_string(g);
  return kPass;
}

// Random graphs checked against the spectral and Cheeger theorems. Always numeric: random
// weights almost never give rational eigenvalues.
int cmd_selftest(const RunConfig &cfg, int count, std::ostream &os) {
  std::mt19937_64 rng(cfg.seed);
  int failures = 0;
  for (int t = 0; t < count; ++t) {
    auto g = random_graph<Real>(rng, {}, cfg.trunc_order);
    auto s = compute_spectrum(g);
    auto cut = cheeger_constant(g);
    Report rep = verify_spectral_theorems(g, s);
    rep.append(cheeger_inequality_check(g, s, cut));
    if (!g.is_bipartite())
      rep.add("no limit of alpha_{n-1}^m v(x)", nonconvergence_witness(g, s).pairs_failed == 0);
    os << "graph " << t << ": n = " << g.size() << ", " << rep.checks.size() << " checks, "
       << (rep.passed() ? "PASS" : "FAIL") << '\n';
    if (!rep.passed()) {
      ++failures;
      os << to_string(g) << rep;
    }
  }
  os << "selftest: " << count - failures << " of " << count << " graphs pass\n";
  return failures ? kTheoremFailure : kPass;
}

// Runs a graph command in the configured mode. Rational mode falls back to numeric when a value
// turns out to be irrational; only the numeric run's output is kept.
template <class Command>
int dispatch(const RunConfig &cfg, const std::string &file, Command command) {
  std::ostringstream out;
  auto run = [&]<class F>() {
    auto g = load_graph<F>(file, cfg.trunc_order);
    return command(g, out);
  };
  int code;
  if (cfg.mode == "rational") {
    try {
      code = run.template operator()<Rational>();
    } catch (const ModeError &e) {
      out.str({});
      out << "note: " << e.what() << "\nnote: recomputed in numeric mode at " << cfg.precision_bits << " bits\n";
      code = run.template operator()<Real>();
    }
  } else {
    code = run.template operator()<Real>();
  }
  std::cout << out.str();
  return code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Spectra, Cheeger constants and random walks on graphs with Levi-Civita weights"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string trunc = "8";
  app.add_option("--trunc", trunc, "Truncation order T: values are kept modulo O(eps^T)")
      ->capture_default_str();
  app.add_option("--mode", cfg.mode, "Coefficient field")
      ->check(CLI::IsMember({"rational", "numeric"}))
      ->capture_default_str();
  app.add_option("--precision", cfg.precision_bits, "Bits of numeric precision")
      ->check(CLI::Range(64U, 1U << 20))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for selftest")->capture_default_str();
  app.add_option("--digits", cfg.digits, "Significant digits of numeric coefficients (0: all)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::string file, function_file;
  int steps = 8, count = 20;
  bool bipartite = false;

  auto *spectrum = app.add_subcommand("spectrum", "Eigenvalues and eigenfunctions of the normalized Laplacian");
  auto *cheeger = app.add_subcommand("cheeger", "Cheeger constant and the Cheeger inequalities");
  auto *walk = app.add_subcommand("walk", "Iterate the random walk and check the convergence bounds");
  auto *verify = app.add_subcommand("verify", "Check every spectral, Cheeger and convergence statement");
  auto *print = app.add_subcommand("print", "Print the graph in canonical form");
  auto *selftest = app.add_subcommand("selftest", "Check the theorems on seeded random graphs");
  for (auto *sub : {spectrum, cheeger, walk, verify, print})
    sub->add_option("graph", file, "Graph file")->required();
  walk->add_option("--f", function_file, "Function file: one 'vertex value' line per vertex")->required();
  walk->add_option("--steps", steps, "Number of steps M")->check(CLI::NonNegativeNumber)->capture_default_str();
  walk->add_flag("--bipartite", bipartite, "Even steps towards the bipartite equilibrium");
  selftest->add_option("--count", count, "Number of random graphs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    cfg.trunc_order = parse_exponent(trunc);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInputError;
  }
  numeric::set_precision(cfg.precision_bits);
  display_digits() = cfg.digits;

  try {
    if (*selftest) {
      cfg.mode = "numeric";
      return cmd_selftest(cfg, count, std::cout);
    }
    if (*spectrum)
      return dispatch(cfg, file, [&](const auto &g, std::ostream &os) { return cmd_spectrum(g, cfg, os); });
    if (*cheeger)
      return dispatch(cfg, file, [&](const auto &g, std::ostream &os) { return cmd_cheeger(g, cfg, os); });
    if (*walk)
      return dispatch(cfg, file, [&](const auto &g, std::ostream &os) {
        return cmd_walk(g, cfg, function_file, steps, bipartite, os);
      });
    if (*verify)
      return dispatch(cfg, file, [&](const auto &g, std::ostream &os) { return cmd_verify(g, cfg, os); });
    if (*print)
      return dispatch(cfg, file, [&](const auto &g, std::ostream &os) { return cmd_print(g, cfg, os); });
  } catch (const GraphError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error &e) {
    std::cerr << "computation failed: " << e.what() << '\n';
    return kComputationError;
  }
  return kInputError;
}
