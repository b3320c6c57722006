#pragma once

/// \file
/// Independent certification of the bounds: brute-force extremisation of
/// H(T|Y) at fixed error, Monte Carlo falsification over random joint
/// tables, tightness against Kovalevskij's bound, a finite-difference check
/// of the MI derivative and a search for settings realising a given point.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "errbounds/types.hpp"

namespace errbounds {

/// Reference tolerances; each absorbs the accumulated error of the one above.
namespace tolerance {
inline constexpr double kRoot = 1e-12;
inline constexpr double kIdentity = 1e-10;
inline constexpr double kBoundary = 1e-9;
inline constexpr double kOracle = 1e-6;
inline constexpr double kFiniteDifference = 1e-5;
}  // namespace tolerance

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t n_samples = 1;
  /// Fixed priors, or p1 ~ Uniform(0.01, 0.99) per sample when empty.
  std::optional<Priors> fixed_priors;
  double tolerance = tolerance::kBoundary;
};

/// Result of a brute-force extremisation of H(T|Y) over e2 at fixed e.
struct OracleResult {
  Probability e;
  Bits extremal_h;
  Probability argmax_or_argmin_e2;
  Bits closed_form_h;
  double abs_gap = 0.0;
};

/// Signed slacks of the three certified inequalities for one setting:
///   fano         H(min(e, 1 - e)) - h
///   entropy_cap  H(p_min) - h
///   analytical   h - G2^{-1}(min(e, 1 - e))
struct CheckSlacks {
  double fano = 0.0;
  double entropy_cap = 0.0;
  double analytical = 0.0;

  [[nodiscard]] double worst() const noexcept;
};

/// Deterministic function of (seed, index): the same pair always yields the
/// same setting, regardless of which thread draws it.
[[nodiscard]] JointSetting sample_setting(const SamplerConfig& cfg, std::size_t index);

/// Minimises H(T|Y) over e2 for fixed priors and e <= p_min (grid scan plus
/// golden-section refinement); compares with the analytical upper curve.
[[nodiscard]] OracleResult brute_force_min_h(const Priors& p, Probability e, std::size_t grid);

/// Maximises H(T|Y) over e2 for fixed priors and any e. The closed form is
/// H(e) for e <= p_min and H(p_min) for e in [p_min, p_max]; elsewhere the
/// scan value itself is reported.
[[nodiscard]] OracleResult brute_force_max_h(const Priors& p, Probability e, std::size_t grid);

[[nodiscard]] CheckSlacks check_setting(const JointSetting& s);

/// Certifies the bounds over cfg.n_samples sampled settings using `workers`
/// threads (0 picks the hardware concurrency). The report does not depend on
/// the worker count.
[[nodiscard]] VerificationReport certify_bounds(const SamplerConfig& cfg, unsigned workers = 0);

/// Certifies the bounds on an explicit list of settings.
[[nodiscard]] VerificationReport certify_settings(std::span<const JointSetting> settings,
                                                  double tol = tolerance::kBoundary);

/// Ratio min(p_min, G2(h)) / (h / 2) over `grid` interior points of
/// (0, 2 p_min). Counts a violation where the ratio exceeds 1 + 1e-9.
[[nodiscard]] VerificationReport tightness_report(Probability p_min, std::size_t grid);

/// Compares the closed-form MI derivative with central finite differences of
/// the direct MI sum on a grid^3 lattice of valid (p2, e2, e).
[[nodiscard]] VerificationReport derivative_check(std::size_t grid);

/// Central finite difference of the direct MI sum in e, p2 and e2 fixed.
[[nodiscard]] double mi_finite_difference(double p2, double e2, double e, double delta = 1e-6);

struct ProbeResult {
  bool found = false;
  std::optional<JointSetting> witness;
  /// Distance in the (h, e) plane from pt to the nearest setting examined.
  double min_distance = 0.0;
};

/// Searches for a joint table whose (H(T|Y), e) matches pt within 1e-6.
/// With priors given only e2 is searched; otherwise priors are scanned too.
[[nodiscard]] ProbeResult admissibility_probe(const DiagramPoint& pt, const std::optional<Priors>& p,
                                              std::size_t budget);

}  // namespace errbounds
