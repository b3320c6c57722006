// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "errbounds/bounds.hpp"
#include "errbounds/entropy.hpp"
#include "errbounds/settings.hpp"
#include "errbounds/verifier.hpp"

using namespace errbounds;

namespace {

Probability P(double v) { return Probability(v); }

double h_of(const JointSetting& s) { return conditional_entropy(s).value(); }

// Collects failed sub-checks with a short description of each.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol)) {
      std::ostringstream os;
      os.precision(12);
      os << what << ": got " << got << ", want " << want << " (tol " << tol << ")";
      failures_.push_back(os.str());
    }
  }
  [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

bool run_criterion(int id, const std::string& title, const std::function<std::string(Checker&)>& body) {
  Checker c;
  std::string summary;
  const auto start = std::chrono::steady_clock::now();
  try {
    summary = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = c.failures().empty();
  std::printf("[%s] criterion %d: %s (%s; %.2fs)\n", ok ? "PASS" : "FAIL", id, title.c_str(), summary.c_str(), secs);
  for (const auto& f : c.failures()) std::printf("       - %s\n", f.c_str());
  std::fflush(stdout);
  return ok;
}

std::string corner_coincidence(Checker& c) {
  const auto p_min = P(0.2);
  const auto kov = [](double h) {
    return kovalevskij_upper_bound({.h = Bits(h), .m = 2, .priors = std::nullopt, .error_kind = ErrorKind::NonBayes})
        .value();
  };
  for (const double h : {0.0, 0.4}) {
    c.near(capped_analytical_upper(Bits(h), p_min).value(), kov(h), 1e-9, "analytical vs Kovalevskij at h=" + std::to_string(h));
    c.near(kov(h), h / 2.0, 1e-15, "Kovalevskij value at h=" + std::to_string(h));
  }
  double worst_gap = INFINITY;
  for (int i = 1; i <= 400; ++i) {
    const double h = 0.4 * i / 401.0;
    const double gap = kov(h) - capped_analytical_upper(Bits(h), p_min).value();
    worst_gap = std::min(worst_gap, gap);
    c.expect(gap > 0.0, "analytical not strictly below h/2 at h=" + std::to_string(h));
  }
  std::ostringstream os;
  os << "smallest interior gap " << worst_gap;
  return os.str();
}

std::string min_oracle(Checker& c) {
  const auto priors = make_priors(0.8);
  double worst = 0.0;
  for (const double e : {0.02, 0.05, 0.1, 0.15, 0.2}) {
    const auto r = brute_force_min_h(priors, P(e), 10000);
    const double closed = analytical_upper_inverse(P(e), priors.p_min()).value();
    c.near(r.extremal_h.value(), closed, 1e-6, "min H(T|Y) at e=" + std::to_string(e));
    c.expect(r.argmax_or_argmin_e2.value() <= 1e-4, "argmin e2 not at 0 for e=" + std::to_string(e));
    worst = std::max(worst, std::abs(r.extremal_h.value() - closed));
  }
  std::ostringstream os;
  os << "max gap " << worst;
  return os.str();
}

std::string max_oracle(Checker& c) {
  const auto priors = make_priors(0.8);
  double worst = 0.0;
  for (const double e : {0.02, 0.05, 0.1, 0.15, 0.2, 0.3, 0.5, 0.8}) {
    const auto r = brute_force_max_h(priors, P(e), 10000);
    const double want = binary_entropy(P(std::min(e, 0.2))).value();
    c.near(r.extremal_h.value(), want, 1e-6, "max H(T|Y) at e=" + std::to_string(e));
    worst = std::max(worst, std::abs(r.extremal_h.value() - want));
  }
  c.near(binary_entropy(P(0.2)).value(), 0.721928, 1e-6, "H(0.2)");
  std::ostringstream os;
  os << "max gap " << worst;
  return os.str();
}

std::string monte_carlo(Checker& c) {
  const SamplerConfig cfg{.seed = 42, .n_samples = 1'000'000, .fixed_priors = std::nullopt, .tolerance = 1e-9};
  const auto single = certify_bounds(cfg, 1);
  const auto multi = certify_bounds(cfg, 4);
  c.expect(single.samples_checked == 1'000'000, "sample count");
  c.expect(single.violations == 0, "violations: " + std::to_string(single.violations));
  c.expect(to_text(single) == to_text(multi), "report differs between 1 and 4 workers");
  std::ostringstream os;
  os << single.samples_checked << " samples, " << single.violations << " violations, worst slack "
     << single.max_violation;
  return os.str();
}

std::string extremal_settings(Checker& c) {
  for (const double p1 : {0.55, 0.7, 0.8, 0.95}) {
    const auto p = make_priors(p1);
    for (int i = 0; i <= 20; ++i) {
      const double frac = i / 20.0;
      const auto family = fano_family_setting(p, P(p.p2().value() * frac));
      c.expect(mutual_information(family).value() <= 1e-12, "independence family has MI > 1e-12");

      const auto upper = upper_extremal_setting(p, P(p.p_min().value() * frac));
      c.expect(curve_residual(CurveKind::AnalyticalUpper, DiagramPoint(Bits(h_of(upper)), upper.e()), p.p_min()) <= 1e-10,
               "upper extremal setting off AnalyticalUpper");

      const auto noise = symmetric_noise_setting(P(0.5 * frac));
      c.expect(curve_residual(CurveKind::FanoLower, DiagramPoint(Bits(h_of(noise)), noise.e()), std::nullopt) <= 1e-10,
               "symmetric noise setting off FanoLower");

      const double e_high = 0.5 + 0.5 * frac;
      if (e_high > 0.5) {
        const auto mirrored = mirrored_extremal_setting(p, P(e_high));
        c.expect(curve_residual(CurveKind::MirroredAnalytical, DiagramPoint(Bits(h_of(mirrored)), mirrored.e()),
                                p.p_min()) <= 1e-10,
                 "mirrored setting off MirroredAnalytical at e=" + std::to_string(e_high));
      }
    }
  }

  int classified = 0;
  const auto boundary = [&](KeyPointKind kind, const Priors& p) {
    const auto s = key_point_setting(kind, p);
    const auto kind_of_error = s.e().value() <= s.priors().p_min().value() ? ErrorKind::Bayes : ErrorKind::NonBayes;
    const auto m = classify_point(DiagramPoint(Bits(h_of(s)), s.e(), kind_of_error), s.priors());
    c.expect(m.verdict == Verdict::Boundary, std::string(to_string(kind)) + " classifies as " +
                                                 std::string(to_string(m.verdict)));
    ++classified;
  };
  const auto skewed = make_priors(0.8);
  const auto balanced = make_priors(0.5);
  boundary(KeyPointKind::O, skewed);
  boundary(KeyPointKind::A_NoClassification1, balanced);
  boundary(KeyPointKind::A_NoClassification2, balanced);
  boundary(KeyPointKind::A_RandomGuess, balanced);
  boundary(KeyPointKind::D, skewed);
  boundary(KeyPointKind::BC, skewed);
  boundary(KeyPointKind::BCPrime_AllToOne, skewed);
  boundary(KeyPointKind::BCPrime_Symmetric, skewed);
  boundary(KeyPointKind::EF, skewed);
  boundary(KeyPointKind::APrime, skewed);
  return "4 families x 4 priors x 21 settings, " + std::to_string(classified) + " key points on the boundary";
}

std::string derivative(Checker& c) {
  const auto r = derivative_check(10);
  c.expect(r.samples_checked == 1000, "lattice size");
  c.expect(r.violations == 0, "violations: " + std::to_string(r.violations));
  std::ostringstream os;
  os << r.samples_checked << " lattice points, " << r.violations << " violations";
  return os.str();
}

std::string key_point_values(Checker& c) {
  const auto skewed = make_priors(0.8);
  const auto balanced = make_priors(0.5);
  struct Expected {
    KeyPointKind kind;
    Priors priors;
    double h;
    double e;
  };
  const std::vector<Expected> cases{
      {KeyPointKind::O, skewed, 0.0, 0.0},
      {KeyPointKind::A_NoClassification1, balanced, 1.0, 0.5},
      {KeyPointKind::A_NoClassification2, balanced, 1.0, 0.5},
      {KeyPointKind::A_RandomGuess, balanced, 1.0, 0.5},
      {KeyPointKind::D, skewed, 0.0, 1.0},
      {KeyPointKind::BC, skewed, 0.4, 0.2},
      {KeyPointKind::BCPrime_AllToOne, skewed, 0.721928, 0.2},
      {KeyPointKind::BCPrime_Symmetric, skewed, 0.721928, 0.2},
      {KeyPointKind::APrime, skewed, 0.604184, 0.5},
  };
  for (const auto& k : cases) {
    const auto s = key_point_setting(k.kind, k.priors);
    // H(T|Y) straight from the joint table, H(T,Y) - H(Y).
    double joint = 0.0, marginal = 0.0;
    for (const double v : {s.p11(), s.p12(), s.p21(), s.p22()}) {
      if (v > 0.0) joint -= v * std::log2(v);
    }
    for (const double v : {s.q1(), s.q2()}) {
      if (v > 0.0) marginal -= v * std::log2(v);
    }
    const std::string name(to_string(k.kind));
    c.near(joint - marginal, k.h, 1e-6, name + " h");
    c.near(h_of(s), k.h, 1e-6, name + " h (library)");
    c.near(s.e().value(), k.e, 1e-6, name + " e");
  }
  return std::to_string(cases.size()) + " key points";
}

std::string inversion(Checker& c) {
  constexpr int n = 1000;
  double worst = 0.0;
  const auto track = [&](double got, double want, const std::string& what) {
    worst = std::max(worst, std::abs(got - want));
    c.near(got, want, 1e-10, what);
  };
  const auto p_min = P(0.2);
  const double corner = analytical_upper_domain(p_min).value();
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    const double h = t;
    track(binary_entropy(binary_entropy_inverse(Bits(h), EntropyBranch::Lower)).value(), h, "H(H^-1 lower)");
    track(binary_entropy(binary_entropy_inverse(Bits(h), EntropyBranch::Upper)).value(), h, "H(H^-1 upper)");
    const double hg = corner * t;
    track(analytical_upper_inverse(analytical_upper(Bits(hg), p_min), p_min).value(), hg, "G2^-1(G2)");
    const double e = p_min.value() * t;
    track(analytical_upper(analytical_upper_inverse(P(e), p_min), p_min).value(), e, "G2(G2^-1)");
  }

  const auto kov4 = [](double h) {
    return kovalevskij_upper_bound({.h = Bits(h), .m = 4, .priors = std::nullopt, .error_kind = ErrorKind::NonBayes})
        .value();
  };
  double knot_jump = 0.0;
  for (const double knot : {1.0, std::log2(3.0)}) {
    const double at = kov4(knot);
    const double below = kov4(std::nextafter(knot, 0.0));
    const double above = kov4(std::nextafter(knot, 2.0));
    knot_jump = std::max({knot_jump, std::abs(at - below), std::abs(at - above)});
    c.near(below, at, 1e-12, "Kovalevskij m=4 left limit at knot " + std::to_string(knot));
    c.near(above, at, 1e-12, "Kovalevskij m=4 right limit at knot " + std::to_string(knot));
  }
  c.near(kov4(1.0), 0.5, 1e-12, "Kovalevskij m=4 at h=1");
  c.near(kov4(std::log2(3.0)), 2.0 / 3.0, 1e-12, "Kovalevskij m=4 at h=log2 3");
  c.near(kov4(2.0), 0.75, 1e-12, "Kovalevskij m=4 at h=2");

  std::ostringstream os;
  os << "worst round trip " << worst << ", worst knot jump " << knot_jump;
  return os.str();
}

}  // namespace

int main() {
  int failed = 0;
  failed += !run_criterion(1, "corner coincidence of analytical and Kovalevskij bounds", corner_coincidence);
  failed += !run_criterion(2, "brute-force minimum of H(T|Y) matches the analytical upper curve", min_oracle);
  failed += !run_criterion(3, "brute-force maximum of H(T|Y) matches the Fano envelope and H(p_min)", max_oracle);
  failed += !run_criterion(4, "Monte Carlo certification, 1e6 settings, thread-count independent", monte_carlo);
  failed += !run_criterion(5, "extremal settings lie on their curves, key points on the boundary", extremal_settings);
  failed += !run_criterion(6, "closed-form MI derivative vs finite differences, strictly negative", derivative);
  failed += !run_criterion(7, "key point coordinates from their joint tables", key_point_values);
  failed += !run_criterion(8, "inversion round trips and Kovalevskij knot continuity", inversion);
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
