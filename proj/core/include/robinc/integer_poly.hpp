#pragma once

// Primes, Chebyshev theta, and the prime-product family
// P_n(z) = prod_{m <= k} (z^{p_m} - 1) / (z - 1) on the unit disk.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "robinc/discrete_energy.hpp"

namespace robinc {

using BigInt = boost::multiprecision::cpp_int;

struct PrimeTable {
  std::int64_t limit = 0;
  std::vector<std::int64_t> primes;
};

inline constexpr std::int64_t kSieveLimitMax = 100'000'000;

/// Sieve of Eratosthenes up to limit (2 <= limit <= kSieveLimitMax).
PrimeTable sieve(std::int64_t limit);
std::vector<std::int64_t> first_k_primes(int k);
/// sum of log p over p <= x
double chebyshev_theta(double x);
/// exact prod p over p <= x
BigInt primorial(std::int64_t x);
/// trial-division primality (audit helper)
bool is_prime_trial(std::int64_t v);

/// log of a positive big integer without overflow.
double log_big(const BigInt& v);

inline constexpr int kMaxExampleK = 40;

struct CyclotomicProductPoly {
  int k = 0;
  std::vector<std::int64_t> primes_used;
  std::int64_t degree = 0;  // sum p_m - k
  BigInt supnorm_exact;     // prod p_m = P_n(1)

  /// e^{2 pi i j / p_m}, j = 1..p_m-1, m = 1..k
  std::vector<Complex> roots() const;
  PointConfiguration root_config() const;
  /// log|P_n(z)| evaluated factor by factor
  double log_abs_eval(Complex z) const;
  double log_supnorm() const;  // sum log p_m
};

CyclotomicProductPoly build_example_poly(int k);

/// discrete energy of the root set (k >= 2).
double example_energy(const CyclotomicProductPoly& poly);

struct DiscriminantBound {
  double energy_bound = 0.0;  // (2/n) log|a_n|
  double energy = 0.0;
  bool holds = false;
};

DiscriminantBound discriminant_energy_bound(const BigInt& leading, const PointConfiguration& roots);

/// Exact discriminant of an integer polynomial (ascending coefficients,
/// degree >= 1) through the Sylvester resultant of P and P'.
BigInt integer_discriminant(const std::vector<BigInt>& coeffs);

struct SchurReport {
  int k = 0;
  std::int64_t n = 0;
  BigInt supnorm_exact;
  double log_supnorm = 0.0;
  double sqrt_n_log_n = 0.0;
  double ratio_c1 = 0.0;
  double root_mean = 0.0;  // k / n
  double root_mean_numeric = 0.0;
  double ratio_c2 = 0.0;
  double energy = 0.0;
  double sampled_circle_max_log = 0.0;
};

std::vector<SchurReport> sharpness_report(int k_lo, int k_hi);

struct DegreeRow {
  int k = 0;
  std::int64_t n = 0;
  double ratio = 0.0;  // n / (k^2 log k / 2)
};

std::vector<DegreeRow> degree_asymptotic_check(int k_lo, int k_hi);

}  // namespace robinc
