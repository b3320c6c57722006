#pragma once

/// \file
/// Bounds on the error probability of a classifier as functions of its
/// conditional entropy H(T|Y), and membership tests against the regions
/// they enclose.
///
/// Two error regimes are distinguished. A Bayes error is the optimal error
/// for known priors and never exceeds p_min. A non-Bayes error belongs to an
/// arbitrary classifier and ranges over [0, 1]; its high-error half is
/// governed by mirror images (e -> 1 - e) of the low-error bounds.

#include <cstddef>
#include <optional>
#include <vector>

#include "errbounds/types.hpp"

namespace errbounds {

/// Classification boundary tolerance, in probability units.
inline constexpr double kBoundaryTolerance = 1e-9;

struct BoundQuery {
  Bits h;
  int m = 2;  ///< number of classes; only Fano and Kovalevskij accept m > 2
  std::optional<Priors> priors;
  ErrorKind error_kind = ErrorKind::NonBayes;
};

/// Smallest error compatible with H(X|Y) = h among m classes, i.e. the
/// smallest e with H(e) + e log2(m - 1) >= h. For m = 2 this is the lower
/// branch of the inverse binary entropy.
[[nodiscard]] Probability fano_lower_bound(const BoundQuery& q);

/// Largest error compatible with H(X|Y) = h: the inverse of Kovalevskij's
/// piecewise-linear bound. h / 2 for m = 2.
[[nodiscard]] Probability kovalevskij_upper_bound(const BoundQuery& q);

/// Conditional entropy on the analytical upper-bound curve:
///
///   G2^{-1}(e) = -p_min log2(p_min / (e + p_min)) - e log2(e / (e + p_min))
///
/// Bayes errors are accepted up to p_min (where the value is 2 p_min);
/// non-Bayes errors up to 0.5.
[[nodiscard]] Bits analytical_upper_inverse(Probability e, Probability p_min,
                                            ErrorKind kind = ErrorKind::Bayes);

/// Largest h accepted by analytical_upper for the given regime.
[[nodiscard]] Bits analytical_upper_domain(Probability p_min, ErrorKind kind = ErrorKind::Bayes);

/// G2(h), the inverse of analytical_upper_inverse. The p_min cap is not
/// applied here; use capped_analytical_upper for min(p_min, G2(h)).
[[nodiscard]] Probability analytical_upper(Bits h, Probability p_min,
                                           ErrorKind kind = ErrorKind::Bayes);

/// min(p_min, G2(h)), with the cap alone past the corner h = 2 p_min.
[[nodiscard]] Probability capped_analytical_upper(Bits h, Probability p_min);

/// The largest Bayes error for the given priors, p_min.
[[nodiscard]] Probability bayes_error_cap(const Priors& priors);

/// Upper bound on a non-Bayes error with unknown priors: 1 - H^{-1}(h).
[[nodiscard]] Probability general_upper_bound(Bits h);

/// Lower bound on a non-Bayes error in [0.5, 1] with known priors:
/// 1 - G2(h), over the extended (non-Bayes) domain of G2.
[[nodiscard]] Probability mirrored_analytical_lower(Bits h, Probability p_min);

/// Largest conditional entropy reachable with the given p_min: H(p_min).
[[nodiscard]] Bits conditional_entropy_max(Probability p_min);

enum class Verdict { Inside, Boundary, Outside };

[[nodiscard]] std::string_view to_string(Verdict verdict) noexcept;

struct Membership {
  Verdict verdict = Verdict::Inside;
  /// Constraints whose slack is at most kBoundaryTolerance, in enum order.
  std::vector<CurveKind> binding;
  /// Smallest signed slack over all constraints. Probability units except
  /// for the EntropyCap constraint, which is a vertical line and measured
  /// in bits.
  double slack = 0.0;
};

/// Tests a diagram point against every bound that applies to its error
/// regime. Priors are mandatory for Bayes points.
[[nodiscard]] Membership classify_point(const DiagramPoint& pt, const std::optional<Priors>& priors);

/// Samples a bound curve with n points spaced uniformly in e (uniformly in h
/// for the horizontal BayesErrorCap segment). `kind` selects the Bayes or
/// the extended non-Bayes extent of the AnalyticalUpper curve.
[[nodiscard]] BoundCurve curve_samples(CurveKind curve, std::optional<Probability> p_min, std::size_t n,
                                       ErrorKind kind = ErrorKind::Bayes);

/// Distance of a point from the defining equation of a curve: in bits for
/// curves of the form h = f(e), in probability for BayesErrorCap.
[[nodiscard]] double curve_residual(CurveKind curve, const DiagramPoint& pt,
                                    std::optional<Probability> p_min);

}  // namespace errbounds
