#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "errbounds/bounds.hpp"
#include "errbounds/entropy.hpp"
#include "errbounds/verifier.hpp"

namespace errbounds::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<double> h;
  std::optional<double> e;
  std::optional<double> p_min;
  std::optional<double> p1;
  int m = 2;
  std::string figure;
  std::size_t curve_points = 256;
  std::size_t oracle_grid = 10000;
  std::size_t tightness_grid = 400;
  std::string out_path;
  std::uint64_t seed = 42;
  std::size_t samples = 1'000'000;
  double tolerance = tolerance::kBoundary;
  unsigned threads = 0;
  std::string kind = "bayes";
};

void line(std::ostream& os, std::string_view key, double value) { os << key << ": " << format_real(value) << '\n'; }

void line(std::ostream& os, std::string_view key, std::string_view value) { os << key << ": " << value << '\n'; }

Probability checked_p_min(double value) {
  if (!(value > 0.0 && value <= 0.5)) throw UsageError("--pmin must lie in (0, 0.5]");
  return Probability(value);
}

Priors checked_priors(double p1) {
  if (!(p1 > 0.0 && p1 < 1.0)) throw UsageError("--p1 must lie strictly inside (0, 1)");
  return make_priors(p1);
}

// Priors from --p1, else (1 - pmin, pmin) from --pmin.
std::optional<Priors> priors_from(const Options& o) {
  if (o.p1) return checked_priors(*o.p1);
  if (o.p_min) return make_priors(1.0 - checked_p_min(*o.p_min).value());
  return std::nullopt;
}

int run_bounds(const Options& o, std::ostream& out) {
  if (o.m < 2) throw UsageError("--m must be at least 2");
  const double h_max = std::log2(static_cast<double>(o.m));
  if (!(*o.h >= 0.0 && *o.h <= h_max)) {
    throw UsageError("--h must lie in [0, log2(m)] = [0, " + format_real(h_max) + "]");
  }
  if (o.p_min && o.m != 2) throw UsageError("--pmin applies to binary problems only (--m 2)");
  const std::optional<Probability> p_min = o.p_min ? std::optional(checked_p_min(*o.p_min)) : std::nullopt;

  const Bits h(*o.h);
  const BoundQuery q{.h = h, .m = o.m, .priors = std::nullopt, .error_kind = ErrorKind::NonBayes};
  line(out, "h_bits", h.value());
  line(out, "m", static_cast<double>(o.m));
  line(out, "fano_lower", fano_lower_bound(q).value());
  line(out, "kovalevskij_upper", kovalevskij_upper_bound(q).value());
  if (o.m == 2) {
    line(out, "general_upper", general_upper_bound(h).value());
  }
  if (p_min) {
    const double cap = conditional_entropy_max(*p_min).value();
    line(out, "p_min", p_min->value());
    line(out, "bayes_error_cap", bayes_error_cap(make_priors(1.0 - p_min->value())).value());
    line(out, "analytical_upper", capped_analytical_upper(h, *p_min).value());
    if (h <= analytical_upper_domain(*p_min, ErrorKind::NonBayes)) {
      line(out, "mirrored_analytical_lower", mirrored_analytical_lower(h, *p_min).value());
    } else {
      line(out, "mirrored_analytical_lower", "none");
    }
    line(out, "conditional_entropy_max", cap);
    line(out, "within_entropy_cap", h.value() <= cap + kInputSlack ? "true" : "false");
  }
  return kSuccess;
}

int run_curves(const Options& o, std::ostream& out) {
  if (o.figure != "fig1" && o.figure != "fig2") throw UsageError("--figure must be fig1 or fig2");
  const Probability p_min = checked_p_min(*o.p_min);
  if (o.curve_points < 2) throw UsageError("--n must be at least 2");

  std::vector<BoundCurve> curves;
  if (o.figure == "fig1") {
    for (const auto kind : {CurveKind::FanoLower, CurveKind::KovalevskijUpper, CurveKind::AnalyticalUpper,
                            CurveKind::BayesErrorCap}) {
      curves.push_back(curve_samples(kind, p_min, o.curve_points, ErrorKind::Bayes));
    }
  } else {
    for (const auto kind : {CurveKind::FanoLower, CurveKind::GeneralUpper, CurveKind::AnalyticalUpper,
                            CurveKind::MirroredAnalytical, CurveKind::EntropyCap}) {
      curves.push_back(curve_samples(kind, p_min, o.curve_points, ErrorKind::NonBayes));
    }
  }

  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + o.out_path + " for writing");
  file << "curve_kind,h_bits,error_probability\n";
  std::size_t rows = 0;
  for (const auto& c : curves) {
    for (const auto& pt : c.points) {
      file << to_string(c.kind) << ',' << format_real(pt.h().value()) << ',' << format_real(pt.e().value()) << '\n';
      ++rows;
    }
  }
  file.flush();
  if (!file) throw IoError("failed writing " + o.out_path);

  line(out, "figure", o.figure);
  line(out, "curves", static_cast<double>(curves.size()));
  line(out, "rows", static_cast<double>(rows));
  line(out, "out", o.out_path);
  return kSuccess;
}

int run_classify(const Options& o, std::ostream& out) {
  if (!(*o.h >= 0.0 && *o.h <= 1.0)) throw UsageError("--h must lie in [0, 1]");
  if (!(*o.e >= 0.0 && *o.e <= 1.0)) throw UsageError("--e must lie in [0, 1]");
  if (o.kind != "bayes" && o.kind != "nonbayes") throw UsageError("--kind must be bayes or nonbayes");
  const ErrorKind kind = o.kind == "bayes" ? ErrorKind::Bayes : ErrorKind::NonBayes;
  const auto priors = priors_from(o);
  if (kind == ErrorKind::Bayes && !priors) throw UsageError("Bayes points need --p1 or --pmin");
  if (kind == ErrorKind::Bayes && *o.e > 0.5) throw UsageError("a Bayes error cannot exceed 0.5");

  const DiagramPoint pt(Bits(*o.h), Probability(*o.e), kind);
  const Membership m = classify_point(pt, priors);
  std::string binding;
  for (const auto b : m.binding) {
    if (!binding.empty()) binding += ',';
    binding += to_string(b);
  }
  line(out, "verdict", to_string(m.verdict));
  line(out, "binding", binding.empty() ? "none" : binding);
  line(out, "slack", m.slack);
  return kSuccess;
}

int run_verify(const Options& o, std::ostream& out) {
  if (o.samples < 1) throw UsageError("--samples must be at least 1");
  if (!(o.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  SamplerConfig cfg;
  cfg.seed = o.seed;
  cfg.n_samples = o.samples;
  cfg.tolerance = o.tolerance;
  if (o.p1) cfg.fixed_priors = checked_priors(*o.p1);

  const auto mc = certify_bounds(cfg, o.threads);
  const auto deriv = derivative_check(10);
  out << to_text(mc) << '\n' << to_text(deriv);
  const bool ok = mc.violations == 0 && deriv.violations == 0;
  line(out, "status", ok ? "pass" : "fail");
  return ok ? kSuccess : kVerificationFailure;
}

void print_oracle(std::ostream& out, std::string_view prefix, const OracleResult& r) {
  const std::string p(prefix);
  line(out, p + "_extremal_h", r.extremal_h.value());
  line(out, p + "_arg_e2", r.argmax_or_argmin_e2.value());
  line(out, p + "_closed_form_h", r.closed_form_h.value());
  line(out, p + "_abs_gap", r.abs_gap);
}

int run_oracle(const Options& o, std::ostream& out) {
  const Priors priors = checked_priors(*o.p1);
  if (!(*o.e >= 0.0 && *o.e <= 1.0)) throw UsageError("--e must lie in [0, 1]");
  if (o.oracle_grid < 100) throw UsageError("--n (oracle grid) must be at least 100");
  const Probability e(*o.e);

  line(out, "p1", priors.p1().value());
  line(out, "e", e.value());
  bool ok = true;
  if (e <= priors.p_min()) {
    const auto lo = brute_force_min_h(priors, e, o.oracle_grid);
    print_oracle(out, "min", lo);
    ok = ok && lo.abs_gap <= tolerance::kOracle;
  } else {
    line(out, "min", "skipped (e > p_min)");
  }
  const auto hi = brute_force_max_h(priors, e, o.oracle_grid);
  print_oracle(out, "max", hi);
  ok = ok && hi.abs_gap <= tolerance::kOracle;
  line(out, "status", ok ? "pass" : "fail");
  return ok ? kSuccess : kVerificationFailure;
}

int run_tightness(const Options& o, std::ostream& out) {
  const Probability p_min = checked_p_min(*o.p_min);
  if (o.tightness_grid < 1) throw UsageError("--n must be at least 1");
  const auto report = tightness_report(p_min, o.tightness_grid);
  out << to_text(report);
  return report.violations == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds between conditional entropy and error probability of binary classifiers", "errbounds"};
  app.require_subcommand(1);
  // "-h" would collide with the --h option of several subcommands.
  app.set_help_flag("--help", "Print this help message and exit");
  Options o;

  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound at a conditional entropy");
  bounds->add_option("--h", o.h, "Conditional entropy H(T|Y) in bits")->required();
  bounds->add_option("--pmin", o.p_min, "Smaller class prior, in (0, 0.5]");
  bounds->add_option("--m", o.m, "Number of classes")->capture_default_str();

  auto* curves = app.add_subcommand("curves", "Write bound curves of a diagram as CSV");
  curves->add_option("--figure", o.figure, "fig1 (Bayes) or fig2 (non-Bayes)")->required();
  curves->add_option("--pmin", o.p_min, "Smaller class prior, in (0, 0.5]")->required();
  curves->add_option("--n", o.curve_points, "Samples per curve")->capture_default_str();
  curves->add_option("--out", o.out_path, "Output CSV path")->required();

  auto* classify = app.add_subcommand("classify", "Locate a (h, e) point relative to the bounds");
  classify->add_option("--h", o.h, "Conditional entropy in bits")->required();
  classify->add_option("--e", o.e, "Error probability")->required();
  classify->add_option("--kind", o.kind, "bayes or nonbayes")->capture_default_str();
  auto* classify_p1 = classify->add_option("--p1", o.p1, "Prior of class 1");
  classify->add_option("--pmin", o.p_min, "Smaller class prior")->excludes(classify_p1);

  auto* verify = app.add_subcommand("verify", "Monte Carlo certification of the bounds");
  verify->add_option("--seed", o.seed, "Sampler seed")->capture_default_str();
  verify->add_option("--samples", o.samples, "Number of sampled settings")->capture_default_str();
  verify->add_option("--p1", o.p1, "Fix the priors instead of sampling them");
  verify->add_option("--tolerance", o.tolerance, "Violation tolerance")->capture_default_str();
  verify->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Brute-force extremes of H(T|Y) at fixed error");
  oracle->add_option("--p1", o.p1, "Prior of class 1")->required();
  oracle->add_option("--e", o.e, "Total error probability")->required();
  oracle->add_option("--n", o.oracle_grid, "Scan grid size")->capture_default_str();

  auto* tightness = app.add_subcommand("report-tightness", "Compare the analytical and Kovalevskij bounds");
  tightness->add_option("--pmin", o.p_min, "Smaller class prior, in (0, 0.5]")->required();
  tightness->add_option("--n", o.tightness_grid, "Interior grid points")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (bounds->parsed()) return run_bounds(o, out);
    if (curves->parsed()) return run_curves(o, out);
    if (classify->parsed()) return run_classify(o, out);
    if (verify->parsed()) return run_verify(o, out);
    if (oracle->parsed()) return run_oracle(o, out);
    if (tightness->parsed()) return run_tightness(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsageError;
}

}  // namespace errbounds::cli
