#include "gupent/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "gupent/cli/output.hpp"
#include "gupent/coeff_file.hpp"
#include "gupent/entropy.hpp"
#include "gupent/errors.hpp"
#include "gupent/grid.hpp"
#include "gupent/gup.hpp"
#include "gupent/maxent.hpp"
#include "gupent/superstats.hpp"

namespace gupent::cli {

namespace {

struct CommandResult {
  OutputRecord record;
  std::vector<std::string> failed_checks;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    double v{};
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (item.empty() || ec != std::errc{} || ptr != end) {
      throw ArgumentError(fmt::format("{}: cannot parse '{}'", what, item));
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

// ---------------------------------------------------------------- boltzmann

struct BoltzmannConfig {
  std::string pgrid = "0.05:1:20";
  std::string grid = "0:5:20";
  double beta0 = 1.0;
  double tol = 1e-9;
  int order = 2;
};

CommandResult cmd_boltzmann(const BoltzmannConfig& cfg) {
  const auto ps = GridSpec::parse(cfg.pgrid).values();
  const auto xs = GridSpec::parse(cfg.grid).values();
  for (double p : ps) {
    if (!(p > 0.0 && p <= 1.0)) throw ArgumentError(fmt::format("--pgrid: p = {} outside (0, 1]", p));
  }
  for (double x : xs) {
    if (!(x >= 0.0)) throw ArgumentError(fmt::format("--grid: beta0*E = {} is negative", x));
  }
  if (!(cfg.tol > 0.0)) throw ArgumentError("--tol must be positive");
  if (cfg.order < 0 || cfg.order > 2) throw ArgumentError("--order must be 0, 1 or 2");

  auto table = superstats::boltzmann_table(ps, xs, cfg.beta0, cfg.tol);

  CommandResult res;
  auto& r = res.record;
  r.command = "boltzmann";
  r.columns = {{"p", "1"},      {"beta0E", "1"},
               {"closed", "1"}, {"quadrature", "1"},
               {fmt::format("series{}", cfg.order), "1"}, {"abs_diff", "1"}};
  double max_abs = 0.0;
  double max_rel = 0.0;
  for (const auto& row : table) {
    const double series = cfg.order == 2 ? row.series2
                                         : superstats::boltzmann_series(
                                               superstats::GammaBetaParams(row.p, cfg.beta0),
                                               row.beta0_energy / cfg.beta0, cfg.order);
    r.rows.push_back({row.p, row.beta0_energy, row.closed, row.quadrature, series, row.abs_diff});
    max_abs = std::max(max_abs, row.abs_diff);
    max_rel = std::max(max_rel, row.abs_diff / row.closed);
  }
  r.summary = {{"beta0", cfg.beta0, "1/energy"},
               {"max_abs_diff", max_abs, "1"},
               {"max_rel_diff", max_rel, "1"},
               {"tol", cfg.tol, "1"}};
  if (max_rel > cfg.tol) {
    res.failed_checks.push_back(
        fmt::format("quadrature deviates from closed form by {} (relative) > tol {}", max_rel, cfg.tol));
  }
  return res;
}

// ------------------------------------------------------------------ entropy

struct EntropyConfig {
  std::optional<std::string> probs;
  std::optional<int> omega;
  double q = 2.0;
};

CommandResult cmd_entropy(const EntropyConfig& cfg) {
  if (cfg.probs.has_value() == cfg.omega.has_value()) {
    throw ArgumentError("entropy: give exactly one of --probs or --omega");
  }
  if (cfg.omega && *cfg.omega < 2) throw ArgumentError("--omega must be >= 2");
  const entropy::ProbVector p = cfg.omega ? entropy::ProbVector::uniform(*cfg.omega)
                                          : entropy::ProbVector(parse_list(*cfg.probs, "--probs"));

  CommandResult res;
  auto& r = res.record;
  r.command = "entropy";
  r.columns = {{"measure", ""}, {"nterms", ""}, {"value", "k_B"}, {"exact", "k_B"}, {"abs_error", "k_B"}};
  auto plain = [&](const std::string& name, double v) {
    r.rows.push_back({name, std::monostate{}, v, std::monostate{}, std::monostate{}});
  };
  plain("shannon", entropy::shannon(p));
  plain("s_plus", entropy::s_plus(p));
  plain("s_minus", entropy::s_minus(p));
  plain(fmt::format("tsallis(q={})", cfg.q), entropy::tsallis(p, cfg.q));
  plain(fmt::format("renyi(q={})", cfg.q), entropy::renyi(p, cfg.q));

  if (cfg.omega) {
    const double exact_plus = entropy::s_plus(p);
    const double exact_minus = entropy::s_minus(p);
    for (int n = 1; n <= 3; ++n) {
      const double v = entropy::s_plus_equiprob_expansion(*cfg.omega, n);
      r.rows.push_back({"s_plus_expansion", static_cast<long long>(n), v, exact_plus,
                        std::abs(v - exact_plus)});
    }
    for (int n = 1; n <= 3; ++n) {
      const double v = entropy::s_minus_equiprob_expansion(*cfg.omega, n);
      r.rows.push_back({"s_minus_expansion", static_cast<long long>(n), v, exact_minus,
                        std::abs(v - exact_minus)});
    }
  }
  r.summary = {{"states", static_cast<long long>(p.size()), ""}, {"q", cfg.q, "1"}};
  return res;
}

// ------------------------------------------------------------------- maxent

struct MaxentConfig {
  std::string kind = "plus";
  std::string grid = "0:3:31";
  double tol = maxent::kDefaultSolverTol;
  std::optional<std::string> energies;
  double beta = 1.0;
};

maxent::Statistics parse_statistics(const std::string& kind) {
  if (kind == "plus") return maxent::Statistics::plus;
  if (kind == "minus") return maxent::Statistics::minus;
  if (kind == "boltzmann") return maxent::Statistics::boltzmann;
  throw ArgumentError(fmt::format("--kind '{}' must be plus, minus or boltzmann", kind));
}

CommandResult cmd_maxent(const MaxentConfig& cfg) {
  const auto stats = parse_statistics(cfg.kind);
  if (!(cfg.tol > 0.0)) throw ArgumentError("--tol must be positive");
  CommandResult res;
  auto& r = res.record;
  r.command = "maxent";

  if (cfg.energies) {
    const auto levels = parse_list(*cfg.energies, "--energies");
    if (!(cfg.beta >= 0.0)) throw ArgumentError("--beta must be >= 0");
    const auto dist = maxent::maxent_distribution(levels, cfg.beta, stats, cfg.tol);
    r.columns = {{"level", ""}, {"energy", "energy"}, {"probability", "1"}};
    for (std::size_t i = 0; i < levels.size(); ++i) {
      r.rows.push_back({static_cast<long long>(i), levels[i], dist.probs()[i]});
    }
    r.summary = {{"kind", cfg.kind, ""}, {"beta", cfg.beta, "1/energy"}};
    return res;
  }

  const auto xs = GridSpec::parse(cfg.grid).values();
  for (double x : xs) {
    if (!(x >= 0.0)) throw ArgumentError(fmt::format("--grid: x = {} is negative", x));
  }
  r.columns = {{"x", "1"}, {"p", "1"}, {"residual", "1"}, {"gibbs", "1"}};
  if (stats == maxent::Statistics::boltzmann) {
    for (double x : xs) r.rows.push_back({x, std::exp(-x), 0.0, std::exp(-x)});
  } else {
    const auto branch = stats == maxent::Statistics::plus ? maxent::Branch::plus : maxent::Branch::minus;
    for (const auto& s : maxent::solve_grid(branch, xs, cfg.tol)) {
      r.rows.push_back({s.x, s.p, s.residual, std::exp(-s.x)});
    }
  }
  r.summary = {{"kind", cfg.kind, ""}, {"tol", cfg.tol, "1"}};
  return res;
}

// ---------------------------------------------------------------------- fit

struct FitConfig {
  std::string kind;
  int degree = maxent::kDefaultFitDegree;
  std::string grid = GridSpec{maxent::kDefaultFitStart, maxent::kDefaultFitStop,
                              maxent::kDefaultFitCount}.to_string();
  double tol = maxent::kDefaultSolverTol;
  std::optional<std::string> coeffs_out;
};

CommandResult cmd_fit(const FitConfig& cfg) {
  maxent::Branch branch;
  if (cfg.kind == "plus") branch = maxent::Branch::plus;
  else if (cfg.kind == "minus") branch = maxent::Branch::minus;
  else throw ArgumentError(fmt::format("--kind '{}' must be plus or minus", cfg.kind));
  if (cfg.degree < 2) throw ArgumentError(fmt::format("--degree {} must be >= 2", cfg.degree));
  if (!(cfg.tol > 0.0)) throw ArgumentError("--tol must be positive");
  const auto grid = GridSpec::parse(cfg.grid);

  const auto fit = maxent::fit_gen_exp(branch, cfg.degree, grid.values(), cfg.tol);
  const auto reference = branch == maxent::Branch::plus ? maxent::table1_plus() : maxent::table1_minus();

  if (cfg.coeffs_out) save_coeff_file(*cfg.coeffs_out, {fit.coeffs, fit.rms_residual, grid.to_string()});

  CommandResult res;
  auto& r = res.record;
  r.command = "fit";
  r.columns = {{"j", ""}, {"a_j", "1"}, {"table1", "1"}};
  for (int j = 0; j <= fit.coeffs.degree(); ++j) {
    Cell ref = j <= reference.degree() ? Cell{reference.a()[j]} : Cell{};
    r.rows.push_back({static_cast<long long>(j), fit.coeffs.a()[j], ref});
  }
  const double a1 = fit.coeffs.coeff(1);
  const double a2 = fit.coeffs.coeff(2);
  r.summary = {{"kind", cfg.kind, ""},
               {"degree", static_cast<long long>(cfg.degree), ""},
               {"grid", grid.to_string(), ""},
               {"rms_residual", fit.rms_residual, "1"}};
  if (a1 != 1.0) r.summary.push_back({"alpha0_closed", gup::deformation_closed(a1, a2), "1"});
  if (cfg.coeffs_out) r.summary.push_back({"coeff_file", *cfg.coeffs_out, ""});
  return res;
}

// ------------------------------------------------------------------- derive

struct DeriveConfig {
  std::optional<std::string> coeffs;
  std::optional<std::string> kind;
  std::optional<double> q;
  int order = series::kDefaultOrder;
  double mpl = 1.0;
};

maxent::AnsatzCoeffs resolve_coeffs(const DeriveConfig& cfg, std::string& source) {
  if (cfg.coeffs && cfg.kind) throw ArgumentError("derive: give either --coeffs or --kind, not both");
  if (cfg.coeffs) {
    source = *cfg.coeffs;
    if (*cfg.coeffs == "table1-plus") return maxent::table1_plus();
    if (*cfg.coeffs == "table1-minus") return maxent::table1_minus();
    return load_coeff_file(*cfg.coeffs).coeffs;
  }
  if (!cfg.kind) throw ArgumentError("derive: a coefficient source (--coeffs or --kind) is required");
  if (*cfg.kind == "tsallis") {
    if (!cfg.q) throw ArgumentError("derive: --kind tsallis needs --q");
    source = fmt::format("tsallis(q={})", *cfg.q);
    return gup::tsallis_coeffs(*cfg.q, std::max(4, cfg.order / 2));
  }
  if (cfg.q) throw ArgumentError("derive: --q only applies to --kind tsallis");
  if (*cfg.kind == "plus") {
    source = "table1-plus";
    return maxent::table1_plus();
  }
  if (*cfg.kind == "minus") {
    source = "table1-minus";
    return maxent::table1_minus();
  }
  throw ArgumentError(fmt::format("--kind '{}' must be plus, minus or tsallis", *cfg.kind));
}

void append_regime(std::vector<SummaryEntry>& summary, const gup::GupParams& params) {
  const auto regime = gup::regime_summary(params);
  summary.push_back({"regime", std::string(gup::regime_name(regime.regime)), ""});
  if (regime.minimal_length) summary.push_back({"minimal_length", *regime.minimal_length, "1/M"});
  if (regime.max_momentum) summary.push_back({"max_momentum", *regime.max_momentum, "M"});
}

CommandResult cmd_derive(const DeriveConfig& cfg) {
  std::string source;
  const auto coeffs = resolve_coeffs(cfg, source);
  const auto report = gup::deformation_pipeline(coeffs, cfg.order);

  CommandResult res;
  auto& r = res.record;
  r.command = "derive";
  r.columns = {{"series", ""}, {"power", ""}, {"coefficient", "1"}};
  auto emit = [&](const char* name, const series::Series& s) {
    for (int j = 0; j <= s.order(); ++j) {
      if (s[j] != 0.0) r.rows.push_back({std::string(name), static_cast<long long>(j), s[j]});
    }
  };
  emit("H_eff", report.hamiltonian);
  emit("p_eff", report.momentum);
  emit("p_normalized", report.normalized_momentum);

  r.summary = {{"source", source, ""},
               {"kind", maxent::kind_label(coeffs), ""},
               {"a1", coeffs.coeff(1), "1"},
               {"a2", coeffs.coeff(2), "1"},
               {"alpha0_pipeline", report.alpha0_pipeline, "1"},
               {"alpha0_closed", report.alpha0_closed, "1"},
               {"discrepancy", report.discrepancy, "1"}};
  if (coeffs.kind() == maxent::AnsatzKind::tsallis) {
    const double one_minus_q = 1.0 - *coeffs.q();
    r.summary.push_back({"alpha0_tsallis_claim", one_minus_q, "1"});
    if (one_minus_q != 0.0) {
      r.summary.push_back({"pipeline_over_claim", report.alpha0_pipeline / one_minus_q, "1"});
    }
  }
  const gup::GupParams params(report.alpha0_pipeline, cfg.mpl);
  r.summary.push_back({"m_pl", cfg.mpl, "M"});
  r.summary.push_back({"alpha", params.alpha(), "1/M^2"});
  append_regime(r.summary, params);

  if (!(report.discrepancy <= gup::kPipelineTolerance)) {
    res.failed_checks.push_back(fmt::format("pipeline and closed form disagree by {} > {}",
                                            report.discrepancy, gup::kPipelineTolerance));
  }
  return res;
}

// ---------------------------------------------------------------------- gup

struct GupConfig {
  double alpha0 = 0.0;
  double mpl = 1.0;
  std::string grid = "0:1:11";
};

CommandResult cmd_gup(const GupConfig& cfg) {
  const gup::GupParams params(cfg.alpha0, cfg.mpl);
  const auto ks = GridSpec::parse(cfg.grid).values();
  const double alpha = params.alpha();
  if (alpha > 0.0) {
    const double limit = std::numbers::pi / (2.0 * std::sqrt(alpha));
    for (double k : ks) {
      if (std::abs(k) >= limit) {
        throw ArgumentError(fmt::format(
            "--grid: |k| = {} violates the tan-branch bound |k| < pi/(2 sqrt(alpha)) = {}", std::abs(k),
            limit));
      }
    }
  }

  CommandResult res;
  auto& r = res.record;
  r.command = "gup";
  r.columns = {{"k", "M"}, {"p", "M"}, {"commutator", "1"}, {"dx_bound", "1/M"}};
  for (double k : ks) {
    // Work in Planck units internally; rescale at the boundary.
    const double k_bar = k / cfg.mpl;
    const gup::GupParams unit(cfg.alpha0, 1.0);
    const double p = gup::p_of_k(unit, k_bar) * cfg.mpl;
    const double f = gup::commutator_rhs(params, p);
    Cell bound;
    if (p != 0.0) bound = gup::uncertainty_lower_bound(params, std::abs(p));
    r.rows.push_back({k, p, f, bound});
  }
  r.summary = {{"alpha0", cfg.alpha0, "1"}, {"m_pl", cfg.mpl, "M"}, {"alpha", alpha, "1/M^2"}};
  append_regime(r.summary, params);
  return res;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized uncertainty relations from non-extensive entropies"};
  app.require_subcommand(1);
  app.fallthrough(false);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->capture_default_str();
  };

  BoltzmannConfig bz;
  auto* bsub = app.add_subcommand("boltzmann", "Effective Boltzmann factor: closed form, quadrature, series");
  add_format(bsub);
  bsub->add_option("--pgrid", bz.pgrid, "p values start:stop:count")->capture_default_str();
  bsub->add_option("--grid", bz.grid, "beta0*E values start:stop:count")->capture_default_str();
  bsub->add_option("--beta0", bz.beta0, "Average inverse temperature")->capture_default_str();
  bsub->add_option("--tol", bz.tol, "Quadrature relative tolerance")->capture_default_str();
  bsub->add_option("--order", bz.order, "Series order in p (0..2)")->capture_default_str();

  EntropyConfig en;
  auto* esub = app.add_subcommand("entropy", "Entropy measures and equiprobable expansions");
  add_format(esub);
  esub->add_option("--probs", en.probs, "Comma-separated probabilities");
  esub->add_option("--omega", en.omega, "Number of equiprobable states");
  esub->add_option("--q", en.q, "Tsallis/Renyi index")->capture_default_str();

  MaxentConfig me;
  auto* msub = app.add_subcommand("maxent", "Solve the maximum-entropy equations");
  add_format(msub);
  msub->add_option("--kind", me.kind, "plus, minus or boltzmann")->capture_default_str();
  msub->add_option("--grid", me.grid, "x = beta*E values start:stop:count")->capture_default_str();
  msub->add_option("--tol", me.tol, "Residual tolerance")->capture_default_str();
  msub->add_option("--energies", me.energies, "Comma-separated energy levels");
  msub->add_option("--beta", me.beta, "Inverse temperature for --energies")->capture_default_str();

  FitConfig ft;
  auto* fsub = app.add_subcommand("fit", "Fit generalized-exponential coefficients");
  add_format(fsub);
  fsub->add_option("--kind", ft.kind, "plus or minus")->required();
  fsub->add_option("--degree,--order", ft.degree, "Ansatz degree J")->capture_default_str();
  fsub->add_option("--grid", ft.grid, "Fit grid start:stop:count")->capture_default_str();
  fsub->add_option("--tol", ft.tol, "Solver residual tolerance")->capture_default_str();
  fsub->add_option("--coeffs", ft.coeffs_out, "Write the coefficient file here");

  DeriveConfig dv;
  auto* dsub = app.add_subcommand("derive", "Deformation parameter from Ansatz coefficients");
  add_format(dsub);
  dsub->add_option("--coeffs", dv.coeffs, "Coefficient file, or table1-plus / table1-minus");
  dsub->add_option("--kind", dv.kind, "plus, minus (built-in tables) or tsallis");
  dsub->add_option("--q", dv.q, "Tsallis index for --kind tsallis");
  dsub->add_option("--order", dv.order, "Series order in k (even, >= 4)")->capture_default_str();
  dsub->add_option("--mpl", dv.mpl, "Planck mass scale")->capture_default_str();

  GupConfig gp;
  auto* gsub = app.add_subcommand("gup", "Deformed momentum, commutator and uncertainty bound");
  add_format(gsub);
  gsub->add_option("--alpha0", gp.alpha0, "Dimensionless deformation parameter")->capture_default_str();
  gsub->add_option("--mpl", gp.mpl, "Planck mass scale")->capture_default_str();
  gsub->add_option("--grid", gp.grid, "k values start:stop:count")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format fmt_tag = parse_format(format);
    CommandResult result;
    if (bsub->parsed()) result = cmd_boltzmann(bz);
    else if (esub->parsed()) result = cmd_entropy(en);
    else if (msub->parsed()) result = cmd_maxent(me);
    else if (fsub->parsed()) result = cmd_fit(ft);
    else if (dsub->parsed()) result = cmd_derive(dv);
    else result = cmd_gup(gp);

    render(out, result.record, fmt_tag);
    for (const auto& msg : result.failed_checks) fmt::print(err, "check failed: {}\n", msg);
    return result.failed_checks.empty() ? kExitOk : kExitNumerical;
  } catch (const ArgumentError& e) {
    fmt::print(err, "usage error: {}\n", e.what());
    return kExitUsage;
  } catch (const DomainError& e) {
    fmt::print(err, "precondition violated: {}\n", e.what());
    return kExitUsage;
  } catch (const NumericalError& e) {
    fmt::print(err, "numerical failure: {}\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitNumerical;
  }
}

}  // namespace gupent::cli
