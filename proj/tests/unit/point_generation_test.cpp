#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "robinc/error.hpp"
#include "robinc/point_generation.hpp"

using namespace robinc;

namespace {

// Fekete points of [-1, 1]: +-1 and the zeros of P'_N, N = n - 1. Inside the
// interval these are the zeros of q = x P_N - P_{N-1}, and q' = (N + 1) P_N.
std::vector<double> gauss_lobatto(int n) {
  std::vector<double> x(n);
  const int N = n - 1;
  for (int i = 0; i < n; ++i) {
    double t = -std::cos(std::numbers::pi * i / N);
    if (i == 0 || i == N) {
      x[i] = t;
      continue;
    }
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= N; ++k) {
        const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double q = t * p1 - p0;
      const double dq = (N + 1) * p1;
      const double step = q / dq;
      t -= step;
      if (std::abs(step) < 1e-16) break;
    }
    x[i] = t;
  }
  std::sort(x.begin(), x.end());
  return x;
}

std::vector<double> sorted_real(const PointConfiguration& pc) {
  std::vector<double> v;
  for (Complex z : pc.points) v.push_back(z.real());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Leja, DiskFromOneVisitsRootsOfUnity) {
  const auto disk = CompactSet::unit_disk();
  const auto seq = leja_points(disk, 8, Complex(1.0, 0.0));
  ASSERT_EQ(seq.points.size(), 8u);
  EXPECT_EQ(seq.points[0], Complex(1.0, 0.0));
  EXPECT_NEAR(std::abs(seq.points[1] + 1.0), 0.0, 1e-12);
  // every prefix of length 2^j is the set of 2^j-th roots of unity
  for (Complex z : seq.points) EXPECT_NEAR(std::abs(std::pow(z, 8) - 1.0), 0.0, 1e-9);
  EXPECT_NEAR(seq.log_norms[1], std::log(2.0), 1e-12);  // ||z^2 - 1|| = 2
  EXPECT_NEAR(seq.log_norms[3], std::log(2.0), 1e-12);
}

TEST(Leja, SegmentDefaultSeedAndSecondPoint) {
  const auto seg = CompactSet::segment(-1, 1);
  const auto seq = leja_points(seg, 3);
  EXPECT_EQ(seq.points[0], Complex(1.0, 0.0));
  EXPECT_NEAR(std::abs(seq.points[1] + 1.0), 0.0, 1e-12);
  // third point maximizes |1 - x^2| -> 0
  EXPECT_NEAR(std::abs(seq.points[2]), 0.0, 1e-9);
}

TEST(Leja, VandermondeIdentityAndCertificates) {
  for (const auto& set : {CompactSet::unit_disk(), CompactSet::segment(-1, 1)}) {
    const auto seq = leja_points(set, 60);
    double s = 0.0;
    for (double v : seq.log_norms) s += v;
    EXPECT_NEAR(log_vandermonde(seq.config()), s, 1e-9 * 60 * 60);
    const auto rep = verify_energy_certificates(seq, set);
    EXPECT_TRUE(rep.all_ok());
  }
}

TEST(Leja, RejectsBadInput) {
  const auto disk = CompactSet::unit_disk();
  EXPECT_THROW(leja_points(disk, 0), InvalidArgument);
  EXPECT_THROW(leja_points(disk, 4, Complex(3.0, 0.0)), InvalidArgument);
}

TEST(Fekete, SegmentMatchesGaussLobatto) {
  const auto seg = CompactSet::segment(-1, 1);
  for (int n : {3, 5, 8, 13}) {
    const auto sol = fekete_points(seg, n);
    const auto got = sorted_real(sol.config);
    const auto ref = gauss_lobatto(n);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(got[i], ref[i], 1e-7) << "n=" << n << " i=" << i;
    EXPECT_TRUE(sol.certificate.energy_le_robin);
  }
}

TEST(Fekete, SegmentDiameterAtSixtyFour) {
  const auto ref = gauss_lobatto(64);
  double s = 0.0;
  for (int j = 0; j < 64; ++j)
    for (int k = j + 1; k < 64; ++k) s += std::log(ref[k] - ref[j]);
  const double delta_ref = std::exp(2.0 * s / (64.0 * 63.0));
  EXPECT_NEAR(delta_ref, 0.540167993716489, 1e-12);
  EXPECT_NEAR(fekete_points(CompactSet::segment(-1, 1), 64).delta_n, delta_ref, 1e-10);
}

TEST(Fekete, DiskIsEquallySpaced) {
  const auto disk = CompactSet::unit_disk();
  for (int n : {5, 17, 40}) {
    const auto sol = fekete_points(disk, n);
    EXPECT_NEAR(sol.achieved_log_vandermonde, 0.5 * n * std::log(double(n)), 1e-6);
    EXPECT_NEAR(sol.delta_n, std::pow(double(n), 1.0 / (n - 1)), 1e-7);
    for (std::size_t i = 1; i < sol.history.size(); ++i) EXPECT_GE(sol.history[i], sol.history[i - 1] - 1e-9);
  }
}

TEST(Fekete, IterationCapRaisesWithBestIterate) {
  const auto seg = CompactSet::segment(-1, 1);
  try {
    fekete_points(seg, 30, {0, 1});
    FAIL() << "expected SolverFailure";
  } catch (const SolverFailure& e) {
    EXPECT_EQ(e.best_iterate().size(), 30u);
  }
}

TEST(Fekete, InteriorAuditAndNearFekete) {
  const auto L = CompactSet::lemniscate(Polynomial({-1.0, 0.0, 1.0}), 1.2);
  const auto sol = fekete_points(L, 24);
  EXPECT_TRUE(sol.certificate.energy_le_robin);
  EXPECT_TRUE(interior_candidate_audit(sol, L).ok);
  EXPECT_TRUE(near_fekete_check(sol.config, L, 1.0));
  PointConfiguration outside{{{5.0, 0.0}, {-5.0, 0.0}}, ""};
  EXPECT_THROW(near_fekete_check(outside, L, 1.0), InvalidArgument);
}
