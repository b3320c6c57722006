#pragma once

/// \file
/// Constructors for the extremal classification settings that realise each
/// bound, and for the named key points of the bound diagrams.

#include <string_view>

#include "errbounds/types.hpp"

namespace errbounds {

enum class KeyPointKind {
  O,                    ///< perfect classification
  A_NoClassification1,  ///< balanced classes, everything predicted as class 1
  A_NoClassification2,  ///< balanced classes, everything predicted as class 2
  A_RandomGuess,        ///< balanced classes, uniform joint table
  D,                    ///< labels exchanged
  BC,                   ///< corner of the Bayes region: all p2 of error on class 1
  BCPrime_AllToOne,     ///< minority class absorbed by the majority class
  BCPrime_Symmetric,    ///< balanced priors with symmetric error p2
  EF,                   ///< class 1 always wrong, class 2 always right
  APrime,               ///< error 0.5 on the analytical curve
};

[[nodiscard]] std::string_view to_string(KeyPointKind kind) noexcept;

/// Zero-information family: e1 = p1 (p2 - e2) / p2. Rows of the joint table
/// are proportional, so MI(T, Y) = 0 and H(T|Y) = H(T).
[[nodiscard]] JointSetting fano_family_setting(const Priors& p, Probability e2);

/// Minimum-entropy setting for error e <= p_min: all error mass on the
/// majority class (class 1 on ties).
[[nodiscard]] JointSetting upper_extremal_setting(const Priors& p, Probability e);

/// Balanced priors with error e split evenly over both classes.
[[nodiscard]] JointSetting symmetric_noise_setting(Probability e);

/// Setting on the mirrored analytical bound for e in (0.5, 1]: class 2 is
/// always misclassified (e2 = p2) and class 1 carries the rest (e1 = e - p2).
/// Requires p1 > p2.
[[nodiscard]] JointSetting mirrored_extremal_setting(const Priors& p, Probability e);

/// The joint table of a named key point. A-variants require balanced priors;
/// BC, BCPrime_* and EF require p1 > p2; APrime requires p1 > 0.5.
/// BCPrime_Symmetric replaces the priors by (0.5, 0.5) with error p2.
[[nodiscard]] JointSetting key_point_setting(KeyPointKind kind, const Priors& p);

}  // namespace errbounds
