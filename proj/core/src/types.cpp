#include "errbounds/types.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>

namespace errbounds {

namespace {

std::string describe(double value) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << value;
  return os.str();
}

constexpr std::array<std::string_view, 7> kCurveNames = {
    "FanoLower",    "KovalevskijUpper",   "AnalyticalUpper", "BayesErrorCap",
    "GeneralUpper", "MirroredAnalytical", "EntropyCap",
};

}  // namespace

Probability::Probability(double value) {
  if (!(value >= -kInputSlack && value <= 1.0 + kInputSlack)) {
    throw DomainError("probability out of [0, 1]: " + describe(value));
  }
  value_ = std::clamp(value, 0.0, 1.0);
}

Bits::Bits(double value) {
  if (!(value >= -kInputSlack) || !std::isfinite(value)) {
    throw DomainError("entropy must be a finite non-negative number of bits: " + describe(value));
  }
  value_ = std::max(value, 0.0);
}

Priors make_priors(double p1) {
  if (!(p1 > 0.0 && p1 < 1.0)) {
    throw DomainError("class prior p1 must lie strictly inside (0, 1): " + describe(p1));
  }
  const double p2 = 1.0 - p1;
  return Priors(Probability(p1), Probability(p2), Probability(std::min(p1, p2)));
}

JointSetting::JointSetting(const Priors& priors, Probability e1, Probability e2)
    : priors_(priors), e1_(e1), e2_(e2), e_(e1.value() + e2.value()) {
  const double p1 = priors.p1().value();
  const double p2 = priors.p2().value();
  p11_ = std::max(p1 - e1.value(), 0.0);
  p12_ = e1.value();
  p21_ = e2.value();
  p22_ = std::max(p2 - e2.value(), 0.0);
}

JointSetting make_setting(const Priors& priors, Probability e1, Probability e2) {
  const double p1 = priors.p1().value();
  const double p2 = priors.p2().value();
  if (e1.value() > p1 + kInputSlack) {
    throw DomainError("class-1 error mass " + describe(e1.value()) + " exceeds prior p1 = " + describe(p1));
  }
  if (e2.value() > p2 + kInputSlack) {
    throw DomainError("class-2 error mass " + describe(e2.value()) + " exceeds prior p2 = " + describe(p2));
  }
  return JointSetting(priors, Probability(std::min(e1.value(), p1)), Probability(std::min(e2.value(), p2)));
}

JointSetting make_setting_from_table(double p11, double p12, double p21, double p22) {
  for (const double cell : {p11, p12, p21, p22}) {
    if (!(cell >= -kInputSlack)) {
      throw DomainError("joint table cell is negative: " + describe(cell));
    }
  }
  const double total = p11 + p12 + p21 + p22;
  if (std::abs(total - 1.0) > kInputSlack) {
    throw DomainError("joint table does not sum to one: " + describe(total));
  }
  const auto priors = make_priors(std::max(p11, 0.0) + std::max(p12, 0.0));
  return make_setting(priors, Probability(std::max(p12, 0.0)), Probability(std::max(p21, 0.0)));
}

std::string_view to_string(ErrorKind kind) noexcept {
  return kind == ErrorKind::Bayes ? "Bayes" : "NonBayes";
}

DiagramPoint::DiagramPoint(Bits h, Probability e, ErrorKind kind) : h_(h), e_(e), kind_(kind) {
  if (kind == ErrorKind::Bayes && e.value() > 0.5 + kInputSlack) {
    throw DomainError("a Bayes error cannot exceed 0.5: " + describe(e.value()));
  }
}

std::string_view to_string(CurveKind kind) noexcept {
  return kCurveNames[static_cast<std::size_t>(kind)];
}

std::optional<CurveKind> parse_curve_kind(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kCurveNames.size(); ++i) {
    if (kCurveNames[i] == name) {
      return static_cast<CurveKind>(i);
    }
  }
  return std::nullopt;
}

std::string format_real(double value) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12) << value;
  return os.str();
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "samples_checked: " << report.samples_checked << '\n'
     << "violations: " << report.violations << '\n'
     << "max_violation: " << format_real(report.max_violation) << '\n'
     << "tightness_min_ratio: " << format_real(report.tightness_min_ratio) << '\n';
  if (!report.notes.empty()) {
    os << report.notes;
    if (report.notes.back() != '\n') {
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace errbounds
