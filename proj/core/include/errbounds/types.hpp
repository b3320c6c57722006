#pragma once

/// \file
/// Validated value types shared by every errbounds module: probabilities,
/// entropies in bits, class priors and the 2x2 joint table of a binary
/// classifier.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace errbounds {

/// Raised whenever an input lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Absolute slack accepted on probability and entropy inputs before clamping.
inline constexpr double kInputSlack = 1e-12;

/// A probability in [0, 1]. Values within kInputSlack outside the interval
/// are clamped; anything further out (or NaN) throws DomainError.
class Probability {
 public:
  constexpr Probability() = default;
  explicit Probability(double value);

  [[nodiscard]] constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(Probability, Probability) = default;
  friend constexpr auto operator<=>(Probability, Probability) = default;

 private:
  double value_ = 0.0;
};

/// An entropy in bits (base-2 logarithm). Non-negative; slightly negative
/// inputs are clamped to zero.
class Bits {
 public:
  constexpr Bits() = default;
  explicit Bits(double value);

  [[nodiscard]] constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(Bits, Bits) = default;
  friend constexpr auto operator<=>(Bits, Bits) = default;

 private:
  double value_ = 0.0;
};

/// Class priors (p1, p2) of a binary problem, strictly inside (0, 1).
class Priors {
 public:
  [[nodiscard]] Probability p1() const noexcept { return p1_; }
  [[nodiscard]] Probability p2() const noexcept { return p2_; }
  /// min(p1, p2); also the largest attainable Bayes error.
  [[nodiscard]] Probability p_min() const noexcept { return p_min_; }

  friend bool operator==(const Priors&, const Priors&) = default;

 private:
  friend Priors make_priors(double p1);
  Priors(Probability p1, Probability p2, Probability p_min) : p1_(p1), p2_(p2), p_min_(p_min) {}

  Probability p1_;
  Probability p2_;
  Probability p_min_;
};

/// Builds priors (p1, 1 - p1). Throws DomainError unless 0 < p1 < 1.
[[nodiscard]] Priors make_priors(double p1);

/// Joint distribution p(t, y) of true class t and predicted class y:
///
///     p11 = p1 - e1   p12 = e1
///     p21 = e2        p22 = p2 - e2
///
/// e1 and e2 are the error masses of class 1 and class 2, e = e1 + e2.
class JointSetting {
 public:
  [[nodiscard]] double p11() const noexcept { return p11_; }
  [[nodiscard]] double p12() const noexcept { return p12_; }
  [[nodiscard]] double p21() const noexcept { return p21_; }
  [[nodiscard]] double p22() const noexcept { return p22_; }

  [[nodiscard]] const Priors& priors() const noexcept { return priors_; }
  [[nodiscard]] Probability e1() const noexcept { return e1_; }
  [[nodiscard]] Probability e2() const noexcept { return e2_; }
  [[nodiscard]] Probability e() const noexcept { return e_; }

  /// Column marginals P(y = 1) and P(y = 2).
  [[nodiscard]] double q1() const noexcept { return p11_ + p21_; }
  [[nodiscard]] double q2() const noexcept { return p12_ + p22_; }

  friend bool operator==(const JointSetting&, const JointSetting&) = default;

 private:
  friend JointSetting make_setting(const Priors& priors, Probability e1, Probability e2);
  JointSetting(const Priors& priors, Probability e1, Probability e2);

  Priors priors_;
  Probability e1_;
  Probability e2_;
  Probability e_;
  double p11_ = 0.0;
  double p12_ = 0.0;
  double p21_ = 0.0;
  double p22_ = 0.0;
};

/// Throws DomainError if e1 > p1 or e2 > p2 (beyond kInputSlack).
[[nodiscard]] JointSetting make_setting(const Priors& priors, Probability e1, Probability e2);

/// Builds a setting from the four cells; they must be non-negative and sum
/// to one within kInputSlack.
[[nodiscard]] JointSetting make_setting_from_table(double p11, double p12, double p21, double p22);

enum class ErrorKind { Bayes, NonBayes };

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/// A location (conditional entropy, error probability) in the bound diagram.
/// Bayes errors never exceed 0.5.
class DiagramPoint {
 public:
  DiagramPoint(Bits h, Probability e, ErrorKind kind = ErrorKind::NonBayes);

  [[nodiscard]] Bits h() const noexcept { return h_; }
  [[nodiscard]] Probability e() const noexcept { return e_; }
  [[nodiscard]] ErrorKind error_kind() const noexcept { return kind_; }

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;

 private:
  Bits h_;
  Probability e_;
  ErrorKind kind_;
};

enum class CurveKind {
  FanoLower,
  KovalevskijUpper,
  AnalyticalUpper,
  BayesErrorCap,
  GeneralUpper,  // mirrored Fano
  MirroredAnalytical,
  EntropyCap,
};

[[nodiscard]] std::string_view to_string(CurveKind kind) noexcept;
[[nodiscard]] std::optional<CurveKind> parse_curve_kind(std::string_view name) noexcept;

/// Sampled bound curve, points ordered by nondecreasing h.
struct BoundCurve {
  CurveKind kind;
  std::vector<DiagramPoint> points;
  std::optional<Probability> p_min;
};

/// Outcome of a certification run. `max_violation` is the worst (smallest)
/// signed slack seen; it is below -tolerance exactly when violations > 0.
struct VerificationReport {
  std::size_t samples_checked = 0;
  std::size_t violations = 0;
  double max_violation = 0.0;
  double tightness_min_ratio = 0.0;
  std::string notes;
};

/// Formats a real with 12 significant digits ('.' decimal separator).
[[nodiscard]] std::string format_real(double value);

/// Renders a report as `key: value` lines.
[[nodiscard]] std::string to_text(const VerificationReport& report);

}  // namespace errbounds
