#include "errbounds/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "errbounds/numeric.hpp"

namespace errbounds {

namespace {

// -p log2 p with the 0 log 0 = 0 convention.
double surprisal_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// p log2(p / q); zero-mass cells contribute nothing.
double relative_term(double p, double q) { return p > 0.0 ? p * std::log2(p / q) : 0.0; }

double entropy_of(double e) { return surprisal_term(e) + surprisal_term(1.0 - e); }

}  // namespace

Bits binary_entropy(Probability e) { return Bits(std::min(entropy_of(e.value()), 1.0)); }

Probability binary_entropy_inverse(Bits h, EntropyBranch branch) {
  const double target = h.value();
  if (target > 1.0 + kInputSlack) {
    throw DomainError("binary entropy never exceeds 1 bit");
  }
  if (target >= 1.0) return Probability(0.5);
  if (target <= 0.0) return Probability(branch == EntropyBranch::Lower ? 0.0 : 1.0);

  if (branch == EntropyBranch::Lower) {
    return Probability(numeric::bisect_increasing(entropy_of, target, 0.0, 0.5));
  }
  // Upper branch: H is decreasing on [0.5, 1]; reflect through e -> 1 - e.
  const double lower = numeric::bisect_increasing(entropy_of, target, 0.0, 0.5);
  return Probability(1.0 - lower);
}

Bits prior_entropy(const Priors& priors) { return binary_entropy(priors.p_min()); }

Bits conditional_entropy(const JointSetting& s) {
  const double q1 = s.q1();
  const double q2 = s.q2();
  const double h = -(relative_term(s.p11(), q1) + relative_term(s.p21(), q1) +
                     relative_term(s.p12(), q2) + relative_term(s.p22(), q2));
  return Bits(std::clamp(h, 0.0, prior_entropy(s.priors()).value()));
}

Bits mutual_information(const JointSetting& s) {
  return Bits(std::max(prior_entropy(s.priors()).value() - conditional_entropy(s).value(), 0.0));
}

double mutual_information_direct(const JointSetting& s) {
  const double p1 = s.priors().p1().value();
  const double p2 = s.priors().p2().value();
  const double q1 = s.q1();
  const double q2 = s.q2();
  return relative_term(s.p11(), p1 * q1) + relative_term(s.p12(), p1 * q2) +
         relative_term(s.p21(), p2 * q1) + relative_term(s.p22(), p2 * q2);
}

double mi_derivative_in_e(Probability p2_in, Probability e2_in, Probability e_in) {
  const double p2 = p2_in.value();
  const double e2 = e2_in.value();
  const double e = e_in.value();
  if (!(1.0 - p2 < 1.0 && 1.0 - p2 > p2 && p2 > e && e > e2 && e2 >= 0.0)) {
    throw DomainError("mi_derivative_in_e requires 1 > 1 - p2 > p2 > e > e2 >= 0");
  }
  const double numerator = (1.0 - p2 - e + 2.0 * e2) * (e - e2);
  const double denominator = (1.0 - p2 - e + e2) * (e - 2.0 * e2 + p2);
  return std::log2(numerator / denominator);
}

}  // namespace errbounds
