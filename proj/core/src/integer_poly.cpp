#include "robinc/integer_poly.hpp"

#include <cmath>
#include <numbers>

#include "robinc/parallel.hpp"

namespace robinc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PrimeTable sieve(std::int64_t limit) {
  if (limit < 2 || limit > kSieveLimitMax) throw InvalidArgument("sieve: limit out of range");
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  PrimeTable t;
  t.limit = limit;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    t.primes.push_back(p);
    for (std::int64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return t;
}

std::vector<std::int64_t> first_k_primes(int k) {
  if (k < 1) throw InvalidArgument("first_k_primes: k must be at least 1");
  // p_k < k (log k + log log k) for k >= 6
  const double kk = k;
  std::int64_t limit = 15;
  if (k >= 6) limit = static_cast<std::int64_t>(kk * (std::log(kk) + std::log(std::log(kk)))) + 1;
  if (limit > kSieveLimitMax) throw InvalidArgument("first_k_primes: k too large for the sieve");
  auto t = sieve(limit);
  t.primes.resize(static_cast<std::size_t>(k));
  return t.primes;
}

double chebyshev_theta(double x) {
  if (!(x >= 2.0)) throw InvalidArgument("chebyshev_theta: x must be at least 2");
  if (x > static_cast<double>(kSieveLimitMax)) throw InvalidArgument("chebyshev_theta: x beyond the sieve limit");
  const auto t = sieve(static_cast<std::int64_t>(std::floor(x)));
  std::vector<double> logs(t.primes.size());
  for (std::size_t i = 0; i < logs.size(); ++i) logs[i] = std::log(static_cast<double>(t.primes[i]));
  return pairwise_sum(logs);
}

BigInt primorial(std::int64_t x) {
  BigInt acc = 1;
  if (x < 2) return acc;
  for (auto p : sieve(x).primes) acc *= p;
  return acc;
}

bool is_prime_trial(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

double log_big(const BigInt& v) {
  if (v <= 0) throw InvalidArgument("log_big: value must be positive");
  const std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 53) return std::log(v.convert_to<double>());
  const std::size_t shift = bits - 53;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

std::vector<Complex> CyclotomicProductPoly::roots() const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(degree));
  for (auto p : primes_used)
    for (std::int64_t j = 1; j < p; ++j) out.push_back(std::polar(1.0, kTwoPi * static_cast<double>(j) / p));
  return out;
}

PointConfiguration CyclotomicProductPoly::root_config() const {
  return {roots(), "prime-product k=" + std::to_string(k)};
}

double CyclotomicProductPoly::log_abs_eval(Complex z) const {
  double acc = 0.0;
  for (auto p : primes_used) {
    if (z == Complex(1.0, 0.0)) {
      acc += std::log(static_cast<double>(p));
      continue;
    }
    // (z^p - 1)/(z - 1) = 1 + z + ... + z^{p-1}
    Complex s = 0.0, w = 1.0;
    for (std::int64_t j = 0; j < p; ++j) {
      s += w;
      w *= z;
    }
    acc += std::log(std::abs(s));
  }
  return acc;
}

double CyclotomicProductPoly::log_supnorm() const {
  double acc = 0.0;
  for (auto p : primes_used) acc += std::log(static_cast<double>(p));
  return acc;
}

CyclotomicProductPoly build_example_poly(int k) {
  if (k < 1 || k > kMaxExampleK) throw InvalidArgument("build_example_poly: k must be in [1, 40]");
  CyclotomicProductPoly poly;
  poly.k = k;
  poly.primes_used = first_k_primes(k);
  poly.supnorm_exact = 1;
  std::int64_t sum = 0;
  for (auto p : poly.primes_used) {
    sum += p;
    poly.supnorm_exact *= p;
  }
  poly.degree = sum - k;
  return poly;
}

double example_energy(const CyclotomicProductPoly& poly) {
  if (poly.degree < 2) throw InvalidArgument("example_energy: degree must be at least 2 (k >= 2)");
  return discrete_energy(poly.root_config());
}

DiscriminantBound discriminant_energy_bound(const BigInt& leading, const PointConfiguration& roots) {
  if (leading == 0) throw InvalidArgument("discriminant_energy_bound: leading coefficient must be nonzero");
  if (roots.size() < 2) throw InvalidArgument("discriminant_energy_bound: need at least 2 roots");
  DiscriminantBound b;
  b.energy = discrete_energy(roots);
  if (std::isinf(b.energy)) throw InvalidArgument("discriminant_energy_bound: repeated roots");
  const BigInt a = leading < 0 ? BigInt(-leading) : leading;
  b.energy_bound = 2.0 / static_cast<double>(roots.size()) * log_big(a);
  b.holds = b.energy <= b.energy_bound + 1e-9;
  return b;
}

namespace {

// Bareiss fraction-free determinant.
BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

BigInt integer_discriminant(const std::vector<BigInt>& coeffs) {
  std::vector<BigInt> p = coeffs;
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  const std::size_t n = p.size() - 1;
  if (n < 1) throw InvalidArgument("integer_discriminant: degree must be at least 1");
  if (n == 1) return 1;
  std::vector<BigInt> dp(n);
  for (std::size_t i = 1; i <= n; ++i) dp[i - 1] = p[i] * static_cast<long long>(i);

  // Sylvester matrix of P (degree n) and P' (degree n-1), size 2n-1,
  // coefficients in descending order along each row
  const std::size_t size = 2 * n - 1;
  std::vector<std::vector<BigInt>> S(size, std::vector<BigInt>(size, BigInt(0)));
  for (std::size_t row = 0; row < n - 1; ++row)
    for (std::size_t i = 0; i <= n; ++i) S[row][row + i] = p[n - i];
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i < n; ++i) S[n - 1 + row][row + i] = dp[n - 1 - i];
  const BigInt res = bareiss_det(std::move(S));
  // Disc = (-1)^{n(n-1)/2} Res(P, P') / a_n
  BigInt disc = res / p[n];
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

std::vector<SchurReport> sharpness_report(int k_lo, int k_hi) {
  if (k_lo < 2 || k_hi > kMaxExampleK || k_lo > k_hi) throw InvalidArgument("sharpness_report: need 2 <= k_lo <= k_hi <= 40");
  const std::size_t count = static_cast<std::size_t>(k_hi - k_lo + 1);
  return parallel_map(count, [&](std::size_t i) {
    const auto poly = build_example_poly(k_lo + static_cast<int>(i));
    SchurReport r;
    r.k = poly.k;
    r.n = poly.degree;
    r.supnorm_exact = poly.supnorm_exact;
    r.log_supnorm = poly.log_supnorm();
    const double n = static_cast<double>(r.n);
    r.sqrt_n_log_n = std::sqrt(n * std::log(n));
    r.ratio_c1 = r.log_supnorm / r.sqrt_n_log_n;
    r.root_mean = static_cast<double>(r.k) / n;
    const auto cfg = poly.root_config();
    r.root_mean_numeric = std::abs(moment(cfg, 1));
    r.ratio_c2 = r.root_mean * r.sqrt_n_log_n;
    r.energy = discrete_energy(cfg);
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < 4096; ++j) best = std::max(best, poly.log_abs_eval(std::polar(1.0, kTwoPi * j / 4096)));
    r.sampled_circle_max_log = best;
    return r;
  });
}

std::vector<DegreeRow> degree_asymptotic_check(int k_lo, int k_hi) {
  if (k_lo < 2 || k_hi > kMaxExampleK || k_lo > k_hi) throw InvalidArgument("degree_asymptotic_check: need 2 <= k_lo <= k_hi <= 40");
  std::vector<DegreeRow> rows;
  for (int k = k_lo; k <= k_hi; ++k) {
    const auto poly = build_example_poly(k);
    const double kk = k;
    rows.push_back({k, poly.degree, static_cast<double>(poly.degree) / (kk * kk * std::log(kk) / 2.0)});
  }
  return rows;
}

}  // namespace robinc
