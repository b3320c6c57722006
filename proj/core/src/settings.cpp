#include "errbounds/settings.hpp"

#include <cmath>

namespace errbounds {

namespace {

void require_majority_first(const Priors& p, std::string_view what) {
  if (!(p.p1().value() > p.p2().value())) {
    throw DomainError(std::string(what) + " requires p1 > p2");
  }
}

void require_balanced(const Priors& p, std::string_view what) {
  if (std::abs(p.p1().value() - 0.5) > kInputSlack) {
    throw DomainError(std::string(what) + " requires balanced priors (0.5, 0.5)");
  }
}

}  // namespace

std::string_view to_string(KeyPointKind kind) noexcept {
  switch (kind) {
    case KeyPointKind::O:
      return "O";
    case KeyPointKind::A_NoClassification1:
      return "A_NoClassification1";
    case KeyPointKind::A_NoClassification2:
      return "A_NoClassification2";
    case KeyPointKind::A_RandomGuess:
      return "A_RandomGuess";
    case KeyPointKind::D:
      return "D";
    case KeyPointKind::BC:
      return "BC";
    case KeyPointKind::BCPrime_AllToOne:
      return "BCPrime_AllToOne";
    case KeyPointKind::BCPrime_Symmetric:
      return "BCPrime_Symmetric";
    case KeyPointKind::EF:
      return "EF";
    case KeyPointKind::APrime:
      return "APrime";
  }
  return "?";
}

JointSetting fano_family_setting(const Priors& p, Probability e2) {
  const double p1 = p.p1().value();
  const double p2 = p.p2().value();
  if (e2.value() > p2 + kInputSlack) {
    throw DomainError("class-2 error mass exceeds p2");
  }
  const double e1 = p1 * (p2 - e2.value()) / p2;
  if (e1 > p1 + kInputSlack) {
    throw DomainError("zero-information family error e1 exceeds p1");
  }
  return make_setting(p, Probability(e1), e2);
}

JointSetting upper_extremal_setting(const Priors& p, Probability e) {
  if (e.value() > p.p_min().value() + kInputSlack) {
    throw DomainError("extremal Bayes setting requires e <= p_min");
  }
  if (p.p2().value() > p.p1().value()) {
    return make_setting(p, Probability(0.0), e);
  }
  return make_setting(p, e, Probability(0.0));
}

JointSetting symmetric_noise_setting(Probability e) {
  const double half = e.value() / 2.0;
  return make_setting(make_priors(0.5), Probability(half), Probability(half));
}

JointSetting mirrored_extremal_setting(const Priors& p, Probability e) {
  require_majority_first(p, "mirrored extremal setting");
  const double p2 = p.p2().value();
  if (!(e.value() > 0.5)) {
    throw DomainError("mirrored extremal setting requires e > 0.5");
  }
  if (e.value() - p2 > p.p1().value() + kInputSlack) {
    throw DomainError("mirrored extremal setting requires e - p2 <= p1");
  }
  return make_setting(p, Probability(e.value() - p2), p.p2());
}

JointSetting key_point_setting(KeyPointKind kind, const Priors& p) {
  const Probability zero(0.0);
  switch (kind) {
    case KeyPointKind::O:
      return make_setting(p, zero, zero);
    case KeyPointKind::A_NoClassification1:
      require_balanced(p, "point A");
      return make_setting(p, zero, p.p2());
    case KeyPointKind::A_NoClassification2:
      require_balanced(p, "point A");
      return make_setting(p, p.p1(), zero);
    case KeyPointKind::A_RandomGuess:
      require_balanced(p, "point A");
      return make_setting(p, Probability(0.25), Probability(0.25));
    case KeyPointKind::D:
      return make_setting(p, p.p1(), p.p2());
    case KeyPointKind::BC:
      require_majority_first(p, "point B/C");
      return make_setting(p, p.p2(), zero);
    case KeyPointKind::BCPrime_AllToOne:
      require_majority_first(p, "point B'/C'");
      return make_setting(p, zero, p.p2());
    case KeyPointKind::BCPrime_Symmetric:
      require_majority_first(p, "point B'/C'");
      return symmetric_noise_setting(p.p2());
    case KeyPointKind::EF:
      require_majority_first(p, "point E/F");
      return make_setting(p, p.p1(), zero);
    case KeyPointKind::APrime:
      if (!(p.p1().value() > 0.5)) {
        throw DomainError("point A' requires p1 > 0.5");
      }
      return make_setting(p, Probability(0.5), zero);
  }
  throw DomainError("unknown key point");
}

}  // namespace errbounds
