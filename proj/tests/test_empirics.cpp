#include "catch_amalgamated.hpp"
#include "satotate/satotate.hpp"
#include "oracles.hpp"

#include <boost/math/special_functions/expint.hpp>

#include <numbers>

using namespace satotate;

namespace {

constexpr double kPi = std::numbers::pi;

const CoefficientTable& table() {
  static const CoefficientTable t = delta_coefficients(2'500'000);
  return t;
}

const PrimeAngles& angles() {
  static const PrimeAngles a = PrimeAngles::build(table());
  return a;
}

const PhiConstants& pc() { return PhiConstants::standard(); }

std::vector<std::uint64_t> naive_primes(std::uint64_t hi) {
  std::vector<bool> composite(hi + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

double rel(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

TEST_CASE("sieve") {
  CHECK(sieve_primes(2, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve_primes(0, 1).empty());
  CHECK(sieve_primes(14, 16).empty());
  const auto all = sieve_primes(2, 1'000'000);
  CHECK(all.size() == 78498);
  CHECK(all == naive_primes(1'000'000));
  auto a = sieve_primes(2, 100'000);
  const auto b = sieve_primes(100'001, 200'000);
  a.insert(a.end(), b.begin(), b.end());
  CHECK(a == sieve_primes(2, 200'000));
  CHECK_THROWS_AS(sieve_primes(2, 1000, 999), ResourceLimitError);
}

TEST_CASE("compensated sums") {
  CompensatedSum s;
  s.add(1e16);
  for (int i = 0; i < 1000; ++i) s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1000.0);
}

TEST_CASE("logarithmic integral") {
  CHECK(log_integral(1e6) == Catch::Approx(oracle::kLiFrom2At1e6).epsilon(1e-11));
  CHECK(std::fabs(log_integral(1e6) - 78627) < 1);
  for (double x : {3.0, 100.0, 1e4, 1e7, 1e9}) {
    const double ref = boost::math::expint(std::log(x)) - boost::math::expint(std::log(2.0));
    CHECK(log_integral(x) == Catch::Approx(ref).epsilon(1e-10));
  }
  CHECK(log_integral(2.0) == 0.0);
  CHECK(log_integral(2.0, 10.0) == Catch::Approx(-log_integral(10.0)).epsilon(1e-10));
  CHECK_THROWS_AS(log_integral(0.5), std::invalid_argument);
}

TEST_CASE("angles table") {
  const auto& A = angles();
  CHECK(A.limit == 2'500'000);
  CHECK(A.primes.size() == sieve_primes(2, 2'500'000).size());
  CHECK(A.theta_of(2) == Catch::Approx(oracle::kTheta2).epsilon(1e-14));
  for (double t : A.theta) REQUIRE((t >= 0 && t <= kPi));
  CHECK_THROWS_AS(A.theta_of(4), std::invalid_argument);
}

TEST_CASE("census") {
  const auto full = sato_tate_census(1e6, Interval(0, kPi), angles());
  CHECK(full.count == 78498);
  CHECK(full.prime_count == 78498);
  CHECK(full.mu == Catch::Approx(1.0));
  const auto half = sato_tate_census(1e6, Interval(0, kPi / 2), angles());
  CHECK(half.fraction() >= 0.45);
  CHECK(half.fraction() <= 0.55);
  CHECK(half.expected == Catch::Approx(0.5 * oracle::kLiFrom2At1e6).epsilon(1e-10));
  CHECK(half.discrepancy == Catch::Approx(std::fabs(half.count - half.expected)));
  const auto a = sato_tate_census(1e6, Interval(0, 1.1), angles());
  const auto b = sato_tate_census(1e6, Interval(1.1, kPi), angles());
  CHECK(a.count + b.count >= 78498);  // shared endpoint only
  CHECK_THROWS_AS(sato_tate_census(3e6, Interval(0, 1), angles()), std::out_of_range);
}

TEST_CASE("harmonic sums") {
  const auto triv = trivial_character(1);
  const auto empty = harmonic_sum(1, triv, 0.7, angles(), pc());
  CHECK(empty.value == std::complex<double>(0, 0));
  CHECK(empty.terms == 0);

  const auto r0 = harmonic_sum(0, triv, 1e6, angles(), pc());
  CHECK(r0.main_term == Catch::Approx(oracle::kPhi1 * 1e6).epsilon(1e-10));
  CHECK(r0.satisfied);
  CHECK(r0.discrepancy == Catch::Approx(std::abs(r0.value - r0.main_term)));
  CHECK(r0.bound_used.kind == "prop33");
  // prime number theorem scale: the n = 0 sum is close to Phi(1) x
  CHECK(std::fabs(r0.value.real() / r0.main_term - 1) < 0.01);

  for (std::uint64_t q : {5ull, 7ull, 12ull}) {
    for (const auto& chi : characters(q)) {
      for (unsigned n : {0u, 1u, 3u}) {
        const auto a = harmonic_sum(n, chi, 1e5, angles(), pc());
        const auto b = harmonic_sum(n, chi.conj(), 1e5, angles(), pc());
        CHECK(rel(a.value, std::conj(b.value)) < 1e-12);
        CHECK(a.satisfied);
      }
    }
  }
  CHECK_THROWS_AS(harmonic_sum(0, triv, 1.1e6, angles(), pc()), std::out_of_range);
}

TEST_CASE("prime power sums") {
  const auto triv = trivial_character(1);
  constexpr double x = 1e6;
  for (unsigned n = 0; n <= 4; ++n) {
    const auto viaLambda = prime_power_sum(n, triv, x, table());
    const auto direct = prime_power_sum_direct(n, triv, x, angles());
    const auto h = harmonic_sum(n, triv, x, angles(), pc());
    CHECK(rel(viaLambda, direct.total()) < 1e-6);
    CHECK(rel(direct.primes, h.value) < 1e-12);
    CHECK(std::abs(viaLambda - h.value) <= 3.983 * (n + 1) * std::sqrt(x));
  }
  // n = 0 and chi trivial: sum of Lambda(j) phi_x(j)
  const std::uint64_t hi = 2'500'000;
  const auto spf = smallest_prime_factors(hi);
  CompensatedSum ref;
  for (std::uint64_t j = 500'001; j < hi; ++j) {
    const auto p = spf[j];
    std::uint64_t r = j;
    while (r % p == 0) r /= p;
    if (r == 1) ref.add(std::log(static_cast<double>(p)) * phi_x(static_cast<double>(j), x));
  }
  CHECK(prime_power_sum(0, triv, x, table()).real() == Catch::Approx(ref.value()).epsilon(1e-12));
  // higher powers p^m in the support need p <= sqrt(5x/2)
  const auto split = prime_power_sum_direct(0, triv, x, angles());
  CHECK(std::abs(split.higher) > 0);
  CHECK(std::abs(split.higher) <= std::log(std::sqrt(2.5 * x)) * phi_max() * 2 * std::sqrt(2.5 * x));
}

TEST_CASE("character expansion of progression sums") {
  const Interval I(0.4, 2.3);
  for (std::uint64_t q = 1; q <= 20; ++q) {
    for (std::uint64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const auto o = orthogonality_check(1e4, q, a, I, angles());
      INFO("q=" << q << " a=" << a);
      CHECK(std::fabs(o.decomposition.real() - o.progression) <= 1e-8 * std::max(1.0, o.progression));
      CHECK(std::fabs(o.decomposition.imag()) <= 1e-8 * std::max(1.0, o.progression));
    }
  }
  for (std::uint64_t q : {4ull, 9ull, 12ull, 45ull}) {
    for (const auto& chi : characters(q)) {
      const auto chip = chi.primitive();
      CompensatedComplexSum diff;
      const auto [b, e] = angles().range(0, 2.5e4);
      for (std::size_t i = b; i < e; ++i) {
        const auto p = static_cast<std::int64_t>(angles().primes[i]);
        const double w = std::log(static_cast<double>(p)) * phi_x(static_cast<double>(p), 1e4);
        diff.add((chi.value(p) - chip.value(p)) * w);
      }
      CHECK(std::abs(diff.value()) <= 2 * std::log(static_cast<double>(q)));
    }
    const auto o = orthogonality_check(1e4, q, 1, I, angles());
    CHECK(std::abs(o.decomposition - o.primitive) <= 2 * std::log(static_cast<double>(q)));
    CHECK(o.divisor_mass <= 2 * std::log(static_cast<double>(q)));
  }
  // a small x where prime divisors of q sit in the support
  const auto small = orthogonality_check(2.0, 6, 1, Interval(0, kPi), angles());
  CHECK(small.divisor_mass > 0);
  CHECK(std::abs(small.decomposition - small.primitive) <= 2 * std::log(6.0));
}

TEST_CASE("Rosser-Schoenfeld") {
  for (std::uint64_t y : {1000ull, 5000ull, 10000ull, 123456ull, 1000000ull, 3000000ull, 10000000ull}) {
    CHECK(psi_minus_theta(y) < rosser_schoenfeld_bound(static_cast<double>(y)));
  }
  CHECK(psi_minus_theta(10) == Catch::Approx(std::log(2.0) * 2 + std::log(3.0)));  // 4, 8, 9
}

TEST_CASE("theorem verification") {
  const auto r = verify_theorem(1e6, 3, 1, Interval(kPi / 3, 2 * kPi / 3), angles(), pc());
  CHECK(r.satisfied);
  CHECK_FALSE(r.bound_used.valid());  // below the theorem's threshold at this scale
  const double ip = r.bound_used.extra_value("int_phi").value();
  CHECK(ip == Catch::Approx(pc().Phi1).epsilon(1e-10));
  CHECK(r.main_term == Catch::Approx(1e6 / 2 * mu_st(Interval(kPi / 3, 2 * kPi / 3)) * ip));
  // q = 1 is the unrestricted sum
  std::vector<PrimeWeight> dump;
  const auto u = verify_theorem(1e5, 1, 0, Interval(0, kPi), angles(), pc(), &dump);
  const auto h = harmonic_sum(0, trivial_character(1), 1e5, angles(), pc());
  CHECK(u.value.real() == Catch::Approx(h.value.real()).epsilon(1e-12));
  CHECK(dump.size() == u.terms);
  CHECK_THROWS_AS(verify_theorem(1e6, 6, 3, Interval(0, 1), angles(), pc()), std::invalid_argument);
}
