#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "robinc/discrepancy.hpp"
#include "robinc/error.hpp"
#include "robinc/point_generation.hpp"

using namespace robinc;

namespace {

PointConfiguration roots_of_unity(int n, double radius = 1.0) {
  PointConfiguration pc;
  for (int k = 0; k < n; ++k) pc.points.push_back(std::polar(radius, 2.0 * std::numbers::pi * k / n));
  return pc;
}

double trapezoid_log_max(Complex a, double r, int N = 200000) {
  double s = 0.0;
  for (int j = 0; j < N; ++j) s += std::log(std::max(r, std::abs(a + std::polar(r, 2.0 * std::numbers::pi * j / N))));
  return s / N;
}

}  // namespace

TEST(CircleMeans, LogMaxAgainstTrapezoid) {
  EXPECT_NEAR(circle_mean_log_max({0.0, 0.0}, 0.3), std::log(0.3), 1e-14);
  EXPECT_NEAR(circle_mean_log_max({1.0, 1.0}, 0.2), std::log(std::sqrt(2.0)), 1e-12);
  for (Complex a : {Complex(0.05, 0.0), Complex(0.1, 0.07), Complex(0.19, 0.0)})
    EXPECT_NEAR(circle_mean_log_max(a, 0.1), trapezoid_log_max(a, 0.1), 1e-7) << a;
}

TEST(CircleMeans, GreenOnDisk) {
  const auto disk = CompactSet::unit_disk();
  EXPECT_NEAR(circle_mean_green(disk, {0.0, 0.0}, 2.0), std::log(2.0), 1e-10);
  EXPECT_EQ(circle_mean_green(disk, {0.5, 0.0}, 0.3), 0.0);
  // circle centred on the boundary: half of it is outside
  const double ref = [&] {
    double s = 0.0;
    const int N = 200000;
    for (int j = 0; j < N; ++j) s += disk.green(Complex(1.0, 0.0) + std::polar(0.2, 2.0 * std::numbers::pi * j / N));
    return s / N;
  }();
  EXPECT_NEAR(circle_mean_green(disk, {1.0, 0.0}, 0.2), ref, 1e-7);
}

TEST(Discrepancy, LhsClosedForms) {
  const auto disk = CompactSet::unit_disk();
  const auto re2 = TestFunction::parse("re2", 1.0);
  EXPECT_NEAR(discrepancy_lhs(re2, roots_of_unity(7), disk), 0.0, 1e-12);
  const auto seg = CompactSet::segment(-1, 1);
  PointConfiguration pc{{{1.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {0.5, 0.0}}, ""};
  // mean x^2 = 2.25/4 against 1/2 for the arcsine law
  EXPECT_NEAR(discrepancy_lhs(re2, pc, seg), 0.0625, 1e-10);
}

TEST(Discrepancy, ITermsForRootsOfUnity) {
  const auto disk = CompactSet::unit_disk();
  const int n = 10;
  const auto t = i_terms(roots_of_unity(n), disk, 0.1);
  EXPECT_EQ(t.two_m_E, 0.0);
  EXPECT_NEAR(t.energy_excess, -std::log(double(n)) / n, 1e-12);
  EXPECT_NEAR(t.minus_log_r_over_n, std::log(10.0) / n, 1e-15);
  EXPECT_NEAR(t.green_band_term, 2.0 * std::log(1.2), 1e-10);
}

TEST(Discrepancy, CertificatesHoldAndAutoIsNoWorse) {
  const auto seg = CompactSet::segment(-1, 1);
  const auto phi = TestFunction::parse("abs2", seg.outer_radius());
  const auto pc = leja_points(seg, 32).config();
  const auto a = certificate(phi, pc, seg);
  EXPECT_TRUE(a.holds());
  for (double r : {1e-3, 1e-2, 0.1, 0.5}) {
    const auto c = certificate(phi, pc, seg, r);
    EXPECT_TRUE(c.holds()) << r;
    EXPECT_LE(a.rhs, c.rhs * (1 + 1e-12)) << r;
  }
  EXPECT_THROW(certificate(phi, pc, seg, -1.0), InvalidArgument);
}

TEST(Discrepancy, SmoothedEnergyInsideItsBound) {
  const auto L = CompactSet::lemniscate(Polynomial({-1.0, 0.0, 1.0}), 1.2);
  const auto pc = leja_points(L, 24).config();
  for (double r : {1e-2, 0.1, 0.5}) {
    const auto s = smoothed_energy(pc, L, r);
    EXPECT_GE(s.I_sigma, -1e-6);
    EXPECT_LE(s.I_sigma, s.bound_22 + 1e-6);
  }
}

TEST(Discrepancy, MomentAndLipschitzForms) {
  const auto disk = CompactSet::unit_disk();
  const auto m = moment_discrepancy(roots_of_unity(16), disk, 1);
  EXPECT_NEAR(m.value, 0.0, 1e-14);
  EXPECT_NEAR(m.rate, std::sqrt(std::log(16.0) / 16), 1e-15);
  EXPECT_THROW(moment_discrepancy(roots_of_unity(16, 1.1), disk, 1), InvalidArgument);
  const auto l = lipschitz_discrepancy(TestFunction::parse("re1"), roots_of_unity(16, 1.1), disk);
  EXPECT_FALSE(l.in_E);
  EXPECT_FALSE(l.C1_fitted.has_value());
  EXPECT_NEAR(l.rate, std::sqrt(std::log(16.0) / 16), 1e-12);
  EXPECT_NEAR(lipschitz_discrepancy(TestFunction::parse("re1"), roots_of_unity(64, 1.5), disk).rate,
              std::sqrt(std::log(1.5)), 1e-12);
}

TEST(Discrepancy, GrowthCheckOnRootsOfUnity) {
  // on |z| = e^{1/n}, |z^n - 1| ranges over [e - 1, e + 1]
  const auto disk = CompactSet::unit_disk();
  const int n = 32;
  const auto g = polynomial_growth_check(roots_of_unity(n), disk);
  const double defect = std::max(std::abs(std::log(std::exp(1.0) - 1.0) - 1.0), std::abs(std::log(std::exp(1.0) + 1.0) - 1.0)) / n;
  EXPECT_NEAR(g.max_abs_defect_on_Gamma_n, defect, 1e-6);
  EXPECT_NEAR(g.supnorm_log_excess, std::log(2.0), 1e-10);
  EXPECT_GE(g.energy_lower_slack, -1e-8);
  EXPECT_TRUE(g.near_fekete);
}

TEST(Discrepancy, NormRowsAndSlope) {
  const auto disk = CompactSet::unit_disk();
  const auto rows = norm_asymptotics({roots_of_unity(4), roots_of_unity(8)}, disk);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(rows[1].norm_root, std::pow(2.0, 1.0 / 8), 1e-12);
  EXPECT_TRUE(rows[0].lower_bound_ok);
  EXPECT_NEAR(loglog_slope({8, 16, 32, 64}, {1.0 / std::sqrt(8.0), 0.25, 1.0 / std::sqrt(32.0), 0.125}), -0.5, 1e-12);
  EXPECT_TRUE(std::isnan(loglog_slope({8, 16}, {1.0, 0.0})));
}
