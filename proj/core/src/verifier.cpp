#include "errbounds/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "errbounds/bounds.hpp"
#include "errbounds/entropy.hpp"
#include "errbounds/numeric.hpp"

namespace errbounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kProbeMatch = 1e-6;

// Maps two 32-bit words to a double in [0, 1) with 53 random bits.
double unit_interval(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
  return static_cast<double>(bits) * 0x1.0p-53;
}

double h_along_e2(const Priors& p, double e, double e2) {
  return conditional_entropy(make_setting(p, Probability(e - e2), Probability(e2))).value();
}

struct ScanRange {
  double lo;
  double hi;
};

// Feasible e2 for total error e: e1 = e - e2 must lie in [0, p1], e2 in [0, p2].
std::optional<ScanRange> e2_range(const Priors& p, double e) {
  const double lo = std::max(0.0, e - p.p1().value());
  const double hi = std::min(e, p.p2().value());
  if (lo > hi + kInputSlack) return std::nullopt;
  return ScanRange{lo, std::max(lo, hi)};
}

double grid_point(const ScanRange& r, std::size_t i, std::size_t n) {
  if (n < 2 || i == 0) return r.lo;
  if (i == n - 1) return r.hi;
  return r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

// Grid scan of sign * H(T|Y) over e2 followed by golden-section refinement of
// the best bracket. Returns the minimiser of sign * H.
numeric::Extremum scan_and_refine(const Priors& p, double e, std::size_t grid, double sign) {
  const auto range = e2_range(p, e);
  if (!range) {
    throw DomainError("no setting with this error exists for the given priors");
  }
  const auto objective = [&](double e2) { return sign * h_along_e2(p, e, e2); };
  if (range->hi - range->lo <= 0.0) {
    return {range->lo, objective(range->lo)};
  }
  std::size_t best = 0;
  double best_value = kInf;
  for (std::size_t i = 0; i < grid; ++i) {
    const double v = objective(grid_point(*range, i, grid));
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  const double a = grid_point(*range, best == 0 ? 0 : best - 1, grid);
  const double b = grid_point(*range, std::min(best + 1, grid - 1), grid);
  auto refined = numeric::golden_section_minimize(objective, a, b, 1e-10);
  if (best_value < refined.fx) {
    refined = {grid_point(*range, best, grid), best_value};
  }
  return refined;
}

void require_grid(std::size_t grid) {
  if (grid < 100) throw DomainError("oracle grid must have at least 100 points");
}

struct Tally {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst = kInf;
  std::size_t worst_index = 0;
  CheckSlacks worst_by_check{kInf, kInf, kInf};
  double min_band_position = kInf;

  void add(const JointSetting& s, std::size_t index, double tol) {
    const CheckSlacks slacks = check_setting(s);
    ++samples;
    const double w = slacks.worst();
    if (w < -tol) ++violations;
    if (w < worst || (w == worst && index < worst_index)) {
      worst = w;
      worst_index = index;
    }
    worst_by_check.fano = std::min(worst_by_check.fano, slacks.fano);
    worst_by_check.entropy_cap = std::min(worst_by_check.entropy_cap, slacks.entropy_cap);
    worst_by_check.analytical = std::min(worst_by_check.analytical, slacks.analytical);
    // Position of h inside the band [G2^{-1}, H] at this error; 0 on the analytical bound.
    const double band = slacks.fano + slacks.analytical;
    if (band > tolerance::kIdentity) {
      min_band_position = std::min(min_band_position, slacks.analytical / band);
    }
  }

  void merge(const Tally& other) {
    samples += other.samples;
    violations += other.violations;
    if (other.worst < worst || (other.worst == worst && other.worst_index < worst_index)) {
      worst = other.worst;
      worst_index = other.worst_index;
    }
    worst_by_check.fano = std::min(worst_by_check.fano, other.worst_by_check.fano);
    worst_by_check.entropy_cap = std::min(worst_by_check.entropy_cap, other.worst_by_check.entropy_cap);
    worst_by_check.analytical = std::min(worst_by_check.analytical, other.worst_by_check.analytical);
    min_band_position = std::min(min_band_position, other.min_band_position);
  }

  [[nodiscard]] VerificationReport report(std::string header) const {
    VerificationReport r;
    r.samples_checked = samples;
    r.violations = violations;
    r.max_violation = samples == 0 ? 0.0 : worst;
    r.tightness_min_ratio = std::isfinite(min_band_position) ? min_band_position : 0.0;
    std::ostringstream notes;
    notes << header;
    if (samples > 0) {
      notes << "worst_sample_index: " << worst_index << '\n'
            << "worst_fano_slack: " << format_real(worst_by_check.fano) << '\n'
            << "worst_entropy_cap_slack: " << format_real(worst_by_check.entropy_cap) << '\n'
            << "worst_analytical_slack: " << format_real(worst_by_check.analytical) << '\n';
    }
    r.notes = notes.str();
    return r;
  }
};

}  // namespace

double CheckSlacks::worst() const noexcept { return std::min({fano, entropy_cap, analytical}); }

JointSetting sample_setting(const SamplerConfig& cfg, std::size_t index) {
  const auto idx = static_cast<std::uint64_t>(index);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
  std::array<std::uint32_t, 6> words{};
  seq.generate(words.begin(), words.end());

  const Priors priors =
      cfg.fixed_priors ? *cfg.fixed_priors : make_priors(0.01 + 0.98 * unit_interval(words[0], words[1]));
  const double e1 = unit_interval(words[2], words[3]) * priors.p1().value();
  const double e2 = unit_interval(words[4], words[5]) * priors.p2().value();
  return make_setting(priors, Probability(e1), Probability(e2));
}

OracleResult brute_force_min_h(const Priors& p, Probability e, std::size_t grid) {
  require_grid(grid);
  if (e.value() > p.p_min().value() + kInputSlack) {
    throw DomainError("minimum-entropy oracle requires e <= p_min");
  }
  const auto best = scan_and_refine(p, e.value(), grid, 1.0);
  const Bits closed = analytical_upper_inverse(e, p.p_min());
  return {e, Bits(best.fx), Probability(best.x), closed, std::abs(best.fx - closed.value())};
}

OracleResult brute_force_max_h(const Priors& p, Probability e, std::size_t grid) {
  require_grid(grid);
  const auto best = scan_and_refine(p, e.value(), grid, -1.0);
  const double extremal = -best.fx;
  const double p_min = p.p_min().value();
  const double p_max = 1.0 - p_min;
  double closed = extremal;
  if (e.value() <= p_min) {
    closed = binary_entropy(e).value();
  } else if (e.value() <= p_max) {
    closed = binary_entropy(p.p_min()).value();
  }
  return {e, Bits(extremal), Probability(best.x), Bits(closed), std::abs(extremal - closed)};
}

CheckSlacks check_setting(const JointSetting& s) {
  const double h = conditional_entropy(s).value();
  const double e = s.e().value();
  const Probability folded(std::min(e, 1.0 - e));
  const Probability p_min = s.priors().p_min();
  return {
      .fano = binary_entropy(s.e()).value() - h,
      .entropy_cap = binary_entropy(p_min).value() - h,
      .analytical = h - analytical_upper_inverse(folded, p_min, ErrorKind::NonBayes).value(),
  };
}

VerificationReport certify_bounds(const SamplerConfig& cfg, unsigned workers) {
  if (cfg.n_samples < 1) throw DomainError("n_samples must be at least 1");
  if (!(cfg.tolerance > 0.0)) throw DomainError("tolerance must be positive");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.n_samples));

  std::vector<Tally> partial(workers);
  const std::size_t chunk = (cfg.n_samples + workers - 1) / workers;
  const auto run = [&](unsigned w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(cfg.n_samples, begin + chunk);
    for (std::size_t i = begin; i < end; ++i) {
      partial[w].add(sample_setting(cfg, i), i, cfg.tolerance);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  Tally total;
  for (const auto& t : partial) total.merge(t);

  std::ostringstream header;
  header << "check: monte_carlo_bounds\n"
         << "seed: " << cfg.seed << '\n'
         << "priors_mode: "
         << (cfg.fixed_priors ? "fixed p1=" + format_real(cfg.fixed_priors->p1().value()) : std::string("free"))
         << '\n'
         << "tolerance: " << format_real(cfg.tolerance) << '\n';
  return total.report(header.str());
}

VerificationReport certify_settings(std::span<const JointSetting> settings, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  Tally total;
  for (std::size_t i = 0; i < settings.size(); ++i) total.add(settings[i], i, tol);
  return total.report("check: explicit_settings\ntolerance: " + format_real(tol) + '\n');
}

VerificationReport tightness_report(Probability p_min, std::size_t grid) {
  if (!(p_min.value() > 0.0 && p_min.value() <= 0.5)) throw DomainError("p_min must lie in (0, 0.5]");
  if (grid < 1) throw DomainError("grid must have at least one point");

  constexpr double kRatioTolerance = 1e-9;
  const double corner = 2.0 * p_min.value();
  double min_ratio = kInf;
  double max_ratio = -kInf;
  double h_at_min = 0.0;
  double h_at_max = 0.0;
  double first_ratio = 0.0;
  double last_ratio = 0.0;
  std::size_t violations = 0;
  for (std::size_t i = 1; i <= grid; ++i) {
    const double h = corner * static_cast<double>(i) / static_cast<double>(grid + 1);
    const double ratio = capped_analytical_upper(Bits(h), p_min).value() / (h / 2.0);
    if (ratio > 1.0 + kRatioTolerance) ++violations;
    if (ratio < min_ratio) {
      min_ratio = ratio;
      h_at_min = h;
    }
    if (ratio > max_ratio) {
      max_ratio = ratio;
      h_at_max = h;
    }
    if (i == 1) first_ratio = ratio;
    last_ratio = ratio;
  }

  VerificationReport r;
  r.samples_checked = grid;
  r.violations = violations;
  r.max_violation = 1.0 - max_ratio;
  r.tightness_min_ratio = min_ratio;
  std::ostringstream notes;
  notes << "check: tightness_vs_kovalevskij\n"
        << "p_min: " << format_real(p_min.value()) << '\n'
        << "h_range: (0, " << format_real(corner) << ")\n"
        << "min_ratio_at_h: " << format_real(h_at_min) << '\n'
        << "max_ratio: " << format_real(max_ratio) << '\n'
        << "max_ratio_at_h: " << format_real(h_at_max) << '\n'
        << "ratio_first_interior_point: " << format_real(first_ratio) << '\n'
        << "ratio_last_interior_point: " << format_real(last_ratio) << '\n';
  r.notes = notes.str();
  return r;
}

double mi_finite_difference(double p2, double e2, double e, double delta) {
  const Priors priors = make_priors(1.0 - p2);
  const auto mi = [&](double total) {
    return mutual_information_direct(make_setting(priors, Probability(total - e2), Probability(e2)));
  };
  return (mi(e + delta) - mi(e - delta)) / (2.0 * delta);
}

VerificationReport derivative_check(std::size_t grid) {
  if (grid < 10) throw DomainError("derivative grid must have at least 10 points per axis");

  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_slack = kInf;
  double max_gap = 0.0;
  double max_derivative = -kInf;
  for (std::size_t i = 0; i < grid; ++i) {
    const double p2 = 0.05 + 0.4 * static_cast<double>(i) / static_cast<double>(grid - 1);
    for (std::size_t j = 0; j < grid; ++j) {
      const double e = p2 * static_cast<double>(j + 1) / static_cast<double>(grid + 1);
      for (std::size_t k = 0; k < grid; ++k) {
        const double e2 = e * static_cast<double>(k) / static_cast<double>(grid);
        const double closed = mi_derivative_in_e(Probability(p2), Probability(e2), Probability(e));
        const double gap = std::abs(closed - mi_finite_difference(p2, e2, e));
        const double slack = std::min(tolerance::kFiniteDifference - gap, -closed);
        ++checked;
        if (slack < 0.0) ++violations;
        worst_slack = std::min(worst_slack, slack);
        max_gap = std::max(max_gap, gap);
        max_derivative = std::max(max_derivative, closed);
      }
    }
  }

  VerificationReport r;
  r.samples_checked = checked;
  r.violations = violations;
  r.max_violation = worst_slack;
  r.tightness_min_ratio = 0.0;
  std::ostringstream notes;
  notes << "check: mi_derivative\n"
        << "max_abs_gap_vs_finite_difference: " << format_real(max_gap) << '\n'
        << "largest_derivative: " << format_real(max_derivative) << '\n';
  r.notes = notes.str();
  return r;
}

ProbeResult admissibility_probe(const DiagramPoint& pt, const std::optional<Priors>& p, std::size_t budget) {
  if (budget < 100) throw DomainError("probe budget must be at least 100");
  const double target_h = pt.h().value();
  const double target_e = pt.e().value();

  ProbeResult result;
  result.min_distance = kInf;

  // Walk the continuous path e2 -> H(T|Y) at e fixed and bisect any crossing.
  const auto probe_line = [&](const Priors& priors) -> bool {
    const auto range = e2_range(priors, target_e);
    if (!range) return false;
    const auto f = [&](double e2) { return h_along_e2(priors, target_e, e2); };

    std::vector<std::pair<double, double>> samples;
    const std::size_t n = range->hi > range->lo ? budget : 1;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = grid_point(*range, i, n);
      samples.emplace_back(x, f(x));
    }
    if (n > 1) {
      for (const double sign : {1.0, -1.0}) {
        const auto ext = scan_and_refine(priors, target_e, budget, sign);
        samples.emplace_back(ext.x, sign * ext.fx);
      }
      std::sort(samples.begin(), samples.end());
    }

    const auto accept = [&](double x) {
      result.found = true;
      result.witness = make_setting(priors, Probability(target_e - x), Probability(x));
      result.min_distance = std::abs(f(x) - target_h);
      return true;
    };
    for (const auto& [x, h] : samples) {
      result.min_distance = std::min(result.min_distance, std::abs(h - target_h));
      if (std::abs(h - target_h) <= kProbeMatch) return accept(x);
    }
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      auto [a, fa] = samples[i];
      auto [b, fb] = samples[i + 1];
      if ((fa - target_h) * (fb - target_h) > 0.0) continue;
      const bool rising = fa < fb;
      for (int it = 0; it < numeric::kMaxBisectionIterations && b - a > 1e-15; ++it) {
        const double mid = a + 0.5 * (b - a);
        if ((f(mid) < target_h) == rising) {
          a = mid;
        } else {
          b = mid;
        }
      }
      const double x = 0.5 * (a + b);
      if (std::abs(f(x) - target_h) <= kProbeMatch) return accept(x);
    }
    return false;
  };

  std::vector<Priors> candidates;
  if (p) {
    candidates.push_back(*p);
  } else {
    for (std::size_t j = 0; j < budget; ++j) {
      candidates.push_back(make_priors((static_cast<double>(j) + 0.5) / static_cast<double>(budget)));
    }
    candidates.push_back(make_priors(0.5));
  }

  for (const auto& priors : candidates) {
    if (probe_line(priors)) return result;
  }

  // No match on the e = const line: report the nearest setting in the plane.
  for (const auto& priors : candidates) {
    const ScanRange e1_range{0.0, priors.p1().value()};
    const ScanRange e2_full{0.0, priors.p2().value()};
    for (std::size_t a = 0; a < budget; ++a) {
      const double e1 = grid_point(e1_range, a, budget);
      for (std::size_t b = 0; b < budget; ++b) {
        const double e2 = grid_point(e2_full, b, budget);
        const auto s = make_setting(priors, Probability(e1), Probability(e2));
        const double dh = conditional_entropy(s).value() - target_h;
        const double de = s.e().value() - target_e;
        result.min_distance = std::min(result.min_distance, std::hypot(dh, de));
      }
    }
  }
  return result;
}

}  // namespace errbounds
