#pragma once

/// \file
/// Exact information-theoretic functionals of a binary classification
/// setting. All logarithms are base 2 and every 0 * log(0 / q) term is
/// taken as zero.

#include "errbounds/types.hpp"

namespace errbounds {

/// Which half of the binary entropy curve an inverse should land on.
enum class EntropyBranch {
  Lower,  ///< preimage in [0, 0.5]
  Upper,  ///< preimage in [0.5, 1]
};

/// H(e) = -e log2 e - (1 - e) log2 (1 - e).
[[nodiscard]] Bits binary_entropy(Probability e);

/// Preimage of h under binary_entropy on the requested branch, by bisection
/// to 1e-12 in e. Throws DomainError if h > 1.
[[nodiscard]] Probability binary_entropy_inverse(Bits h, EntropyBranch branch);

/// H(T), the entropy of the class priors.
[[nodiscard]] Bits prior_entropy(const Priors& priors);

/// H(T|Y) = -sum_ij p_ij log2(p_ij / q_j), clamped to [0, H(T)].
[[nodiscard]] Bits conditional_entropy(const JointSetting& s);

/// MI(T, Y) = H(T) - H(T|Y).
[[nodiscard]] Bits mutual_information(const JointSetting& s);

/// MI(T, Y) from the four-term sum sum_ij p_ij log2(p_ij / (p_i q_j)),
/// without going through H(T|Y). Unclamped; may be a few ulps below zero.
[[nodiscard]] double mutual_information_direct(const JointSetting& s);

/// Derivative of MI(T, Y) with respect to the total error e, holding p2 and
/// e2 fixed (e1 = e - e2):
///
///   log2( (1 - p2 - e + 2 e2)(e - e2) / ((1 - p2 - e + e2)(e - 2 e2 + p2)) )
///
/// Requires 1 > 1 - p2 > p2 > e > e2 >= 0; the result is then finite and
/// negative. Throws DomainError otherwise.
[[nodiscard]] double mi_derivative_in_e(Probability p2, Probability e2, Probability e);

}  // namespace errbounds
