#include "errbounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errbounds/entropy.hpp"
#include "errbounds/numeric.hpp"

namespace errbounds {

namespace {

void validate_query(const BoundQuery& q) {
  if (q.m < 2) {
    throw DomainError("class count m must be at least 2");
  }
  if (q.error_kind == ErrorKind::Bayes && !q.priors) {
    throw DomainError("Bayes analysis requires known priors");
  }
  if (q.h.value() > std::log2(static_cast<double>(q.m)) + kInputSlack) {
    throw DomainError("conditional entropy exceeds log2(m)");
  }
}

double entropy_of(double e) { return binary_entropy(Probability(e)).value(); }

void require_p_min(Probability p_min) {
  if (!(p_min.value() > 0.0 && p_min.value() <= 0.5 + kInputSlack)) {
    throw DomainError("p_min must lie in (0, 0.5]");
  }
}

double analytical_error_limit(Probability p_min, ErrorKind kind) {
  return kind == ErrorKind::Bayes ? p_min.value() : 0.5;
}

double g2_inverse(double e, double p_min) {
  if (e <= 0.0) return 0.0;
  if (e == p_min) return 2.0 * p_min;
  const double total = e + p_min;
  return -p_min * std::log2(p_min / total) - e * std::log2(e / total);
}

double fano_lower_value(double h) {
  return binary_entropy_inverse(Bits(std::min(h, 1.0)), EntropyBranch::Lower).value();
}

struct Constraint {
  CurveKind kind;
  double slack;
};

}  // namespace

Probability fano_lower_bound(const BoundQuery& q) {
  validate_query(q);
  const double h = std::min(q.h.value(), std::log2(static_cast<double>(q.m)));
  if (q.m == 2) {
    return Probability(fano_lower_value(h));
  }
  const double e_max = static_cast<double>(q.m - 1) / static_cast<double>(q.m);
  if (h >= std::log2(static_cast<double>(q.m))) {
    return Probability(e_max);
  }
  const double log_alphabet = std::log2(static_cast<double>(q.m - 1));
  const auto fano = [log_alphabet](double e) { return entropy_of(e) + e * log_alphabet; };
  return Probability(numeric::bisect_increasing(fano, h, 0.0, e_max));
}

Probability kovalevskij_upper_bound(const BoundQuery& q) {
  validate_query(q);
  const double h = std::min(q.h.value(), std::log2(static_cast<double>(q.m)));
  if (q.m == 2) {
    return Probability(h / 2.0);
  }
  // Segment k covers [log2 k, log2(k + 1)]; an exact knot goes to the lower one.
  const double k = std::clamp(std::ceil(std::exp2(h)) - 1.0, 1.0, static_cast<double>(q.m - 1));
  const double slope = k * (k + 1.0) * std::log2((k + 1.0) / k);
  return Probability((k - 1.0) / k + (h - std::log2(k)) / slope);
}

Bits analytical_upper_inverse(Probability e, Probability p_min, ErrorKind kind) {
  require_p_min(p_min);
  if (e.value() > analytical_error_limit(p_min, kind) + kInputSlack) {
    throw DomainError(kind == ErrorKind::Bayes ? "Bayes error exceeds p_min"
                                               : "analytical bound is defined for errors up to 0.5");
  }
  const double clamped = std::min(e.value(), analytical_error_limit(p_min, kind));
  return Bits(g2_inverse(clamped, p_min.value()));
}

Bits analytical_upper_domain(Probability p_min, ErrorKind kind) {
  require_p_min(p_min);
  return Bits(g2_inverse(analytical_error_limit(p_min, kind), p_min.value()));
}

Probability analytical_upper(Bits h, Probability p_min, ErrorKind kind) {
  const double h_max = analytical_upper_domain(p_min, kind).value();
  if (h.value() > h_max + kInputSlack) {
    throw DomainError("conditional entropy lies past the end of the analytical upper bound");
  }
  const double pm = p_min.value();
  const auto curve = [pm](double e) { return g2_inverse(e, pm); };
  return Probability(numeric::bisect_increasing(curve, h.value(), 0.0, analytical_error_limit(p_min, kind)));
}

Probability capped_analytical_upper(Bits h, Probability p_min) {
  if (h.value() >= analytical_upper_domain(p_min).value()) {
    return p_min;
  }
  return Probability(std::min(p_min.value(), analytical_upper(h, p_min).value()));
}

Probability bayes_error_cap(const Priors& priors) { return priors.p_min(); }

Probability general_upper_bound(Bits h) {
  const BoundQuery q{.h = h, .m = 2, .priors = std::nullopt, .error_kind = ErrorKind::NonBayes};
  return Probability(1.0 - fano_lower_bound(q).value());
}

Probability mirrored_analytical_lower(Bits h, Probability p_min) {
  return Probability(1.0 - analytical_upper(h, p_min, ErrorKind::NonBayes).value());
}

Bits conditional_entropy_max(Probability p_min) {
  require_p_min(p_min);
  return binary_entropy(p_min);
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Inside:
      return "Inside";
    case Verdict::Boundary:
      return "Boundary";
    case Verdict::Outside:
      return "Outside";
  }
  return "?";
}

Membership classify_point(const DiagramPoint& pt, const std::optional<Priors>& priors) {
  if (pt.error_kind() == ErrorKind::Bayes && !priors) {
    throw DomainError("classifying a Bayes point requires priors");
  }
  const double h = pt.h().value();
  const double e = pt.e().value();
  const double fano = fano_lower_value(h);

  std::vector<Constraint> constraints;
  constraints.push_back({CurveKind::FanoLower, e - fano});

  if (pt.error_kind() == ErrorKind::Bayes) {
    const Probability p_min = priors->p_min();
    constraints.push_back({CurveKind::BayesErrorCap, p_min.value() - e});
    if (h <= analytical_upper_domain(p_min).value() + kInputSlack) {
      constraints.push_back({CurveKind::AnalyticalUpper, analytical_upper(pt.h(), p_min).value() - e});
    }
    constraints.push_back({CurveKind::EntropyCap, conditional_entropy_max(p_min).value() - h});
  } else {
    constraints.push_back({CurveKind::GeneralUpper, (1.0 - fano) - e});
    if (priors) {
      const Probability p_min = priors->p_min();
      if (h <= analytical_upper_domain(p_min, ErrorKind::NonBayes).value() + kInputSlack) {
        const double g2 = analytical_upper(pt.h(), p_min, ErrorKind::NonBayes).value();
        if (e <= 0.5) {
          constraints.push_back({CurveKind::AnalyticalUpper, g2 - e});
        } else {
          constraints.push_back({CurveKind::MirroredAnalytical, e - (1.0 - g2)});
        }
      }
      constraints.push_back({CurveKind::EntropyCap, conditional_entropy_max(p_min).value() - h});
    } else {
      constraints.push_back({CurveKind::EntropyCap, 1.0 - h});
    }
  }

  Membership result;
  result.slack = std::numeric_limits<double>::infinity();
  for (const auto& c : constraints) {
    result.slack = std::min(result.slack, c.slack);
    if (c.slack <= kBoundaryTolerance) {
      result.binding.push_back(c.kind);
    }
  }
  std::sort(result.binding.begin(), result.binding.end());
  if (result.slack < -kBoundaryTolerance) {
    result.verdict = Verdict::Outside;
  } else if (result.slack <= kBoundaryTolerance) {
    result.verdict = Verdict::Boundary;
  } else {
    result.verdict = Verdict::Inside;
  }
  return result;
}

BoundCurve curve_samples(CurveKind curve, std::optional<Probability> p_min, std::size_t n, ErrorKind kind) {
  if (n < 2) {
    throw DomainError("a curve needs at least two samples");
  }
  const bool needs_p_min = curve == CurveKind::AnalyticalUpper || curve == CurveKind::MirroredAnalytical ||
                           curve == CurveKind::BayesErrorCap || curve == CurveKind::EntropyCap;
  if (needs_p_min && !p_min) {
    throw DomainError(std::string(to_string(curve)) + " requires p_min");
  }
  if (p_min) require_p_min(*p_min);

  BoundCurve out{curve, {}, p_min};
  out.points.reserve(n);
  const auto fraction = [n](std::size_t i) { return static_cast<double>(i) / static_cast<double>(n - 1); };
  const auto lerp = [&](double from, double to, std::size_t i) {
    // Endpoints exactly, interior by linear interpolation.
    if (i == 0) return from;
    if (i == n - 1) return to;
    return from + (to - from) * fraction(i);
  };
  const auto push = [&](double h, double e, ErrorKind k) { out.points.emplace_back(Bits(h), Probability(e), k); };

  for (std::size_t i = 0; i < n; ++i) {
    switch (curve) {
      case CurveKind::FanoLower: {
        const double e = lerp(0.0, 0.5, i);
        push(entropy_of(e), e, ErrorKind::Bayes);
        break;
      }
      case CurveKind::KovalevskijUpper: {
        const double e = lerp(0.0, 0.5, i);
        push(2.0 * e, e, ErrorKind::Bayes);
        break;
      }
      case CurveKind::AnalyticalUpper: {
        const double e = lerp(0.0, analytical_error_limit(*p_min, kind), i);
        push(g2_inverse(e, p_min->value()), e, kind);
        break;
      }
      case CurveKind::BayesErrorCap: {
        const double corner = 2.0 * p_min->value();
        const double h = lerp(corner, std::max(corner, conditional_entropy_max(*p_min).value()), i);
        push(h, p_min->value(), ErrorKind::Bayes);
        break;
      }
      case CurveKind::GeneralUpper: {
        const double e = lerp(1.0, 0.5, i);
        push(entropy_of(e), e, ErrorKind::NonBayes);
        break;
      }
      case CurveKind::MirroredAnalytical: {
        const double e = lerp(1.0, 0.5, i);
        push(g2_inverse(1.0 - e, p_min->value()), e, ErrorKind::NonBayes);
        break;
      }
      case CurveKind::EntropyCap: {
        const double e = lerp(p_min->value(), 1.0 - p_min->value(), i);
        push(conditional_entropy_max(*p_min).value(), e, ErrorKind::NonBayes);
        break;
      }
    }
  }
  return out;
}

double curve_residual(CurveKind curve, const DiagramPoint& pt, std::optional<Probability> p_min) {
  const double h = pt.h().value();
  const double e = pt.e().value();
  const auto pm = [&] {
    if (!p_min) throw DomainError(std::string(to_string(curve)) + " requires p_min");
    require_p_min(*p_min);
    return p_min->value();
  };
  switch (curve) {
    case CurveKind::FanoLower:
    case CurveKind::GeneralUpper:
      return std::abs(h - entropy_of(e));
    case CurveKind::KovalevskijUpper:
      return std::abs(h - 2.0 * e);
    case CurveKind::AnalyticalUpper:
      return std::abs(h - g2_inverse(e, pm()));
    case CurveKind::MirroredAnalytical:
      return std::abs(h - g2_inverse(1.0 - e, pm()));
    case CurveKind::BayesErrorCap:
      return std::abs(e - pm());
    case CurveKind::EntropyCap:
      return std::abs(h - binary_entropy(Probability(pm())).value());
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace errbounds
