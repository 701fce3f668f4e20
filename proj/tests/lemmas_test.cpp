#include <gtest/gtest.h>

#include <cmath>

#include "geocvx/hyperbolic.hpp"
#include "geocvx/lemmas.hpp"
#include "geocvx/spherical.hpp"

namespace {

using namespace geocvx;

const LemmaParams kGeneric{0.7, 0.6, 1.0, 2.0};

TEST(FHyp, SpecValues) {
  EXPECT_NEAR(f_hyp(kGeneric, 0.5), 0.46517654401030865, 1e-15);
  const LemmaParams lin{0.5, 0.5, 1.3, 1.3};
  for (double x : {0.01, 0.5, 3.0, 12.0}) EXPECT_NEAR(f_hyp(lin, x), 1.3 * x, 1e-12 * std::max(1.0, x));
  EXPECT_NEAR(f_hyp(kGeneric, 40.0), atanh_stable(1.0 / 1.3), 1e-15);
  EXPECT_THROW(f_hyp(kGeneric, 0.0), DomainError);
  EXPECT_THROW(f_hyp(LemmaParams{-1.0, 1.0, 1.0, 1.0}, 1.0), DomainError);
}

TEST(FSph, SpecValues) {
  EXPECT_NEAR(f_sph(kGeneric, 0.3), 0.30832235973922518, 1e-15);
  const LemmaParams lin{0.5, 0.5, 1.3, 1.3};
  EXPECT_NEAR(f_sph(lin, 0.4), 1.3 * 0.4, 1e-14);
  EXPECT_NEAR(f_sph(lin, lin.x_star()), kPi / 2, 1e-12);
  EXPECT_NEAR(kGeneric.x_star(), kPi / 4, 1e-15);
  EXPECT_THROW(f_sph(kGeneric, kPi / 4 + 1e-6), DomainError);
  EXPECT_THROW(f_sph(kGeneric, -0.1), DomainError);
}

TEST(Grid, LogSpacedAndBounded) {
  const auto xs = CurvatureGrid{}.abscissae();
  ASSERT_EQ(xs.size(), 512u);
  EXPECT_EQ(xs.front(), 1e-3);
  EXPECT_EQ(xs.back(), 20.0);
  EXPECT_NEAR(xs[1] / xs[0], xs[2] / xs[1], 1e-12);
  EXPECT_NEAR(default_grid(LemmaKind::sph, kGeneric).hi, kPi / 4 - 2e-4, 1e-15);
}

TEST(Certify, RandomParametersPass) {
  Rng rng(Seed{51});
  for (int i = 0; i < 40; ++i) {
    const auto p = random_lemma_params(rng, i % 4 == 0);
    ASSERT_TRUE(p.satisfies_hypothesis());
    const auto h = certify_curvature(LemmaKind::hyp, p);
    ASSERT_TRUE(h.pass) << "worst " << h.worst_value << " at " << h.worst_x;
    const auto s = certify_curvature(LemmaKind::sph, p);
    ASSERT_TRUE(s.pass) << "worst " << s.worst_value << " at " << s.worst_x;
  }
}

TEST(Certify, LinearAnchorHasZeroCurvature) {
  for (double u : {0.1, 0.5, 1.0, 1.7}) {
    const LemmaParams p{0.25, 0.75, u, u};
    EXPECT_LE(std::abs(certify_curvature(LemmaKind::hyp, p).worst_value), 1e-6);
    EXPECT_LE(std::abs(certify_curvature(LemmaKind::sph, p).worst_value), 1e-6);
  }
}

// k1 + k2 < 1: f_hyp blows up where the atanh argument reaches 1, so it turns
// convex just before; the grid is cut there.
TEST(Certify, HypothesisViolationFails) {
  const LemmaParams p{0.15, 0.15, 1.0, 1.5};
  EXPECT_FALSE(p.satisfies_hypothesis());
  double lo = 1e-3, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (0.15 * coth(mid) + 0.15 * coth(1.5 * mid) > 1.0 ? lo : hi) = mid;
  }
  CurvatureGrid g;
  g.hi = lo - 1e-2;
  const auto rep = certify_curvature(LemmaKind::hyp, p, g);
  EXPECT_FALSE(rep.hypothesis);
  EXPECT_FALSE(rep.pass);
  EXPECT_GT(rep.failures, 0u);
  EXPECT_GT(rep.worst_value, 1e-6);
  try {
    certify_curvature(LemmaKind::hyp, p);
    FAIL() << "expected an evaluation failure";
  } catch (const NonFiniteError& e) {
    EXPECT_NE(std::string(e.what()).find("x = "), std::string::npos);
  }
}

TEST(Certify, GridValidation) {
  CurvatureGrid g;
  g.lo = 1e-4;
  EXPECT_THROW(certify_curvature(LemmaKind::hyp, kGeneric, g), DomainError);
  g = CurvatureGrid{};
  g.hi = kGeneric.x_star();
  EXPECT_THROW(certify_curvature(LemmaKind::sph, kGeneric, g), DomainError);
}

// The lemma functions are the radial comparison in disguise.
TEST(Connection, MatchesRadialClosedForms) {
  Rng rng(Seed{52});
  for (int i = 0; i < 500; ++i) {
    const double t1 = rng.uniform(0, 1), t2 = rng.uniform(t1 + 0.2, 3.0), lam = rng.uniform(t1 + 0.05, t2 - 0.05);
    const double den = std::sin(t2 - t1);
    const double k1 = std::sin(t2 - lam) / den, k2 = std::sin(lam - t1) / den;
    ASSERT_GE(k1 + k2, 1.0 - 1e-15);
    const RadialComparison rc{rng.uniform(0.05, 2), rng.uniform(0.05, 2), t1, t2, lam, rng.uniform(0.05, 1.0)};
    const LemmaParams p{k1, k2, 2 * rc.gamma1, 2 * rc.gamma2};
    ASSERT_NEAR(f_hyp(p, rc.s), 2 * h_rho_closed_form(rc), 1e-12);
    SRadialComparison src{rng.uniform(0.05, kPi / 4), rng.uniform(0.05, kPi / 4), t1, t2, lam, 1.0};
    src.s = rng.uniform(0.05, src.s_star());
    const LemmaParams q{k1, k2, 2 * src.gamma1, 2 * src.gamma2};
    ASSERT_NEAR(f_sph(q, src.s), 2 * s_rho_closed_form(src), 1e-12);
  }
}

}  // namespace
