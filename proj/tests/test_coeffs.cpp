#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "satotate/satotate.hpp"

#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

using namespace satotate;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const CoefficientTable& table10k() {
  static const auto t = delta_coefficients(10'000);
  return t;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("satotate_test_" + name);
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("small tau values") {
  const auto t = delta_coefficients(11);
  CHECK(t[1] == 1);
  CHECK(t[2] == -24);
  CHECK(t[3] == 252);
  CHECK(t[11] == 534612);
  CHECK(delta_coefficients(1)[1] == 1);
}

TEST_CASE("table agrees with the eta-product series") {
  constexpr std::size_t L = 300;
  const auto slow = oracle::tau_series(L);
  const auto& t = table10k();
  for (std::size_t n = 1; n <= L; ++n) {
    INFO("n = " << n);
    CHECK(t[n].str() == slow[n].str());
  }
}

TEST_CASE("tables of different sizes agree on their overlap") {
  const auto small = delta_coefficients(777);
  const auto& big = table10k();
  for (std::uint64_t n = 1; n <= 777; ++n) REQUIRE(small[n] == big[n]);
  const auto cut = truncate(big, 777);
  CHECK(cut.limit() == 777);
  CHECK(cut[777] == big[777]);
}

TEST_CASE("threaded construction is identical") {
  TableOptions opts;
  opts.threads = 3;
  const auto a = delta_coefficients(5000, opts);
  const auto& b = table10k();
  for (std::uint64_t n = 1; n <= 5000; ++n) REQUIRE(a[n] == b[n]);
}

TEST_CASE("table limits") {
  CHECK_THROWS_AS(delta_coefficients(0), std::invalid_argument);
  CHECK_THROWS_AS(delta_coefficients(kMaxTableLimit + 1), ResourceLimitError);
  TableOptions small;
  small.max_limit = 100;
  CHECK_THROWS_AS(delta_coefficients(101, small), ResourceLimitError);
  CHECK_THROWS_AS(table10k().at(0), std::out_of_range);
  CHECK_THROWS_AS(table10k().at(10'001), std::out_of_range);
}

TEST_CASE("Hecke multiplicativity on random coprime pairs") {
  const auto& t = table10k();
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::uint64_t> d(2, 5000);
  int tested = 0;
  while (tested < 1000) {
    const auto m = d(rng), n = d(rng);
    if (m * n > t.limit() || std::gcd(m, n) != 1) continue;
    REQUIRE(t[m * n] == t[m] * t[n]);
    ++tested;
  }
}

TEST_CASE("tau(n) = sigma_11(n) mod 691") {
  const auto& t = table10k();
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const oracle::cpp_int tau(t[n].str());
    oracle::cpp_int diff = (tau - oracle::sigma11(n)) % 691;
    REQUIRE(diff == 0);
  }
}

TEST_CASE("Deligne bound at every prime") {
  const auto& t = table10k();
  for (auto p : sieve_primes(2, t.limit())) {
    REQUIRE(within_deligne_bound(p, t[p], 12));
    // |tau(p)| <= floor(2 p^{11/2}), via tau^2 <= 4 p^11
    oracle::cpp_int tau(t[p].str());
    REQUIRE(tau * tau <= 4 * boost::multiprecision::pow(oracle::cpp_int(p), 11));
  }
  CHECK_FALSE(within_deligne_bound(2, Integer(91), 12));  // 2 * 2^5.5 = 90.5
  CHECK(within_deligne_bound(2, Integer(90), 12));
}

TEST_CASE("prime powers by the Hecke recurrence") {
  const auto& t = table10k();
  CHECK(tau_prime_power(2, 0, t) == 1);
  CHECK(tau_prime_power(2, 1, t) == -24);
  CHECK(tau_prime_power(2, 2, t) == -1472);
  CHECK(tau_prime_power(3, 2, t) == -113643);
  for (auto p : sieve_primes(2, 100)) {
    std::uint64_t pm = p;
    for (unsigned m = 1; pm <= t.limit(); ++m, pm *= p) {
      INFO("p = " << p << ", m = " << m);
      REQUIRE(tau_prime_power(p, m, t) == t[pm]);
    }
  }
  CHECK_THROWS_AS(tau_prime_power(4, 1, t), std::invalid_argument);
  CHECK_THROWS_AS(tau_prime_power(10'007, 1, t), std::out_of_range);
}

TEST_CASE("Sato-Tate angles") {
  const auto& t = table10k();
  const auto r = angle(2, t);
  CHECK_THAT(r.theta, WithinAbs(oracle::kTheta2, 1e-12));
  CHECK(r.precision <= kDefaultAngleEps);
  CHECK(angle_from_coefficient(101, Integer(0), 12).theta == std::numbers::pi / 2);
  CHECK_THROWS_AS(angle(4, t), std::invalid_argument);
  CHECK_THROWS_AS(angle(2, t, 0.0), std::invalid_argument);
  for (auto p : sieve_primes(2, 2000)) {
    const auto a = angle(p, t);
    const auto b = angle(p, t);
    REQUIRE(a.theta == b.theta);
    REQUIRE(a.theta >= 0.0);
    REQUIRE(a.theta <= std::numbers::pi);
    const double c = t[p].convert_to<double>() / (2.0 * std::pow(static_cast<double>(p), 5.5));
    REQUIRE_THAT(std::cos(a.theta), WithinAbs(c, 1e-12));
  }
}

TEST_CASE("angles near the ends escalate precision") {
  // p = 2: floor(2 * 2^5.5) = 90, cos theta = 90 / 90.50966799187809
  const auto r = angle_from_coefficient(2, Integer(90), 12);
  const double expect = std::acos(90.0L / (2.0L * std::pow(2.0L, 5.5L)));
  CHECK_THAT(r.theta, WithinAbs(expect, 1e-12));
  const auto s = angle_from_coefficient(2, Integer(-90), 12);
  CHECK_THAT(s.theta, WithinAbs(std::numbers::pi - expect, 1e-12));
  CHECK_THROWS_AS(angle_from_coefficient(2, Integer(91), 12), std::domain_error);
}

TEST_CASE("Chebyshev U values") {
  for (double th : {0.0, 0.3, 1.0, 2.5, std::numbers::pi}) CHECK(chebyshev_u(0, th) == 1.0);
  for (double th : {0.1, 1.0, 2.9}) CHECK_THAT(chebyshev_u(1, th), WithinAbs(2 * std::cos(th), 1e-14));
  CHECK_THAT(chebyshev_u(2, std::numbers::pi / 2), WithinAbs(-1.0, 1e-14));
  for (unsigned n = 0; n < 12; ++n) {
    CHECK_THAT(chebyshev_u(n, 0.0), WithinAbs(n + 1.0, 1e-12));
    CHECK_THAT(chebyshev_u(n, std::numbers::pi), WithinAbs((n % 2 ? -1.0 : 1.0) * (n + 1), 1e-12));
    CHECK_THAT(chebyshev_u(n, 1e-6), WithinAbs(n + 1.0, 1e-8));
  }
  CHECK_THROWS_AS(chebyshev_u(1, -0.1), std::domain_error);
  CHECK_THROWS_AS(chebyshev_u(1, 3.2), std::domain_error);
}

TEST_CASE("Lambda coefficients") {
  const auto& t = table10k();
  const auto triv = trivial_character(1);
  CHECK(lambda_coefficient(6, 3, triv, t) == std::complex<double>(0, 0));
  CHECK(lambda_coefficient(1, 0, triv, t) == std::complex<double>(0, 0));
  CHECK_THAT(lambda_coefficient(97, 0, triv, t).real(), WithinAbs(std::log(97.0), 1e-14));
  CHECK_THAT(lambda_coefficient(4, 1, triv, t).real(), WithinAbs(oracle::kLambda4n1, 1e-12));
  const auto chars5 = characters(5);
  for (const auto& chi : chars5) {
    CHECK(lambda_coefficient(25, 2, chi, t) == std::complex<double>(0, 0));
  }
  CHECK_THROWS_AS(lambda_coefficient(10'001, 0, triv, t), std::out_of_range);
}

TEST_CASE("Lambda at a ramified prime is rejected") {
  std::stringstream ss;
  const auto& t = table10k();
  for (std::uint64_t n = 1; n <= 50; ++n) ss << n << " " << t[n].str() << "\n";
  FormParams level2{2, 12, "level2-import"};
  const auto imported = load_coefficient_file(ss, level2);
  const auto triv = trivial_character(1);
  CHECK_THROWS_AS(lambda_coefficient(2, 1, triv, imported), std::domain_error);
  CHECK_THROWS_AS(lambda_coefficient(8, 1, triv, imported), std::domain_error);
  CHECK_NOTHROW(lambda_coefficient(3, 1, triv, imported));
}

TEST_CASE("coefficient file import") {
  const auto& t = table10k();
  std::stringstream good;
  good << "# tau\n";
  for (std::uint64_t n = 1; n <= 200; ++n) good << n << " " << t[n].str() << "  # ok\n";
  const auto imported = load_coefficient_file(good, FormParams::delta());
  REQUIRE(imported.limit() == 200);
  for (std::uint64_t n = 1; n <= 200; ++n) REQUIRE(imported[n] == t[n]);

  std::stringstream gap("1 1\n3 252\n");
  CHECK_THROWS_AS(load_coefficient_file(gap, FormParams::delta()), FormatError);
  std::stringstream deligne("1 1\n2 91\n");
  CHECK_THROWS_AS(load_coefficient_file(deligne, FormParams::delta()), FormatError);
  std::stringstream notnormal("1 2\n2 -24\n");
  CHECK_THROWS_AS(load_coefficient_file(notnormal, FormParams::delta()), FormatError);
  std::stringstream junk("1 1\n2 abc\n");
  CHECK_THROWS_AS(load_coefficient_file(junk, FormParams::delta()), FormatError);
  std::stringstream empty("# nothing\n");
  CHECK_THROWS_AS(load_coefficient_file(empty, FormParams::delta()), FormatError);
  std::stringstream s("1 1\n");
  CHECK_THROWS_AS(load_coefficient_file(s, FormParams{4, 12, "bad"}), std::invalid_argument);
  std::stringstream s2("1 1\n");
  CHECK_THROWS_AS(load_coefficient_file(s2, FormParams{1, 11, "bad"}), std::invalid_argument);
}

TEST_CASE("cache round trip") {
  const auto dir = scratch_dir("cache");
  const auto t = delta_coefficients(3000);
  const auto path = dir / "delta_3000.stct";
  write_cache(t, path);
  const auto back = read_cache(path);
  REQUIRE(back.limit() == 3000);
  CHECK(back.form() == FormParams::delta());
  for (std::uint64_t n = 1; n <= 3000; ++n) REQUIRE(back[n] == t[n]);

  {
    std::ifstream in(path, std::ios::binary);
    std::string head(4, '\0');
    in.read(head.data(), 4);
    CHECK(head == "STCT");
  }

  auto bytes = [&] {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }();
  auto corrupt = bytes;
  corrupt[corrupt.size() / 2] ^= 0x5a;
  const auto bad = dir / "bad.stct";
  std::ofstream(bad, std::ios::binary) << corrupt;
  CHECK_THROWS_AS(read_cache(bad), FormatError);
  auto wrong_magic = bytes;
  wrong_magic[0] = 'X';
  std::ofstream(bad, std::ios::binary | std::ios::trunc) << wrong_magic;
  CHECK_THROWS_AS(read_cache(bad), FormatError);
  std::ofstream(bad, std::ios::binary | std::ios::trunc) << bytes.substr(0, 10);
  CHECK_THROWS_AS(read_cache(bad), FormatError);
  CHECK_THROWS_AS(read_cache(dir / "missing.stct"), std::runtime_error);

  // Smaller request is served from the larger cached table.
  const auto reused = cached_delta_coefficients(1000, dir);
  CHECK(reused.limit() == 1000);
  CHECK(reused[997] == t[997]);
  CHECK_FALSE(std::filesystem::exists(dir / "delta_1000.stct"));
  const auto fresh = cached_delta_coefficients(4000, dir);
  CHECK(std::filesystem::exists(dir / "delta_4000.stct"));
  CHECK(fresh[4000] == table10k()[4000]);
  std::filesystem::remove_all(dir);
}

TEST_CASE("no vanishing tau(p) below 10^4") {
  const auto primes = sieve_primes(2, 10'000);
  const auto scan = vanishing_primes(10'000, primes);
  CHECK(scan.zeros.empty());
  CHECK(scan.primes_checked == primes.size());
  REQUIRE_FALSE(scan.residue_survivors.empty());
  CHECK(scan.residue_survivors.back() == 0);
}

TEST_CASE("form parameters") {
  CHECK_NOTHROW(FormParams::delta().validate());
  CHECK_THROWS(FormParams{0, 12, "x"}.validate());
  CHECK_THROWS(FormParams{12, 12, "x"}.validate());
  CHECK_THROWS(FormParams{1, 0, "x"}.validate());
  CHECK_NOTHROW(FormParams{6, 2, "x"}.validate());
}
