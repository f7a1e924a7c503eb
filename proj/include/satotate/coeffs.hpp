#pragma once

// Fourier coefficients of Delta, Sato-Tate angles and the coefficients of
// -L'/L(s, Sym^n f x chi).
//
// Delta = q prod (1 - q^n)^24 = q (eta^3 / q^{1/8})^8 and by Jacobi
// eta^3 / q^{1/8} = sum_k (-1)^k (2k+1) q^{k(k+1)/2}, so tau(n) is the
// coefficient of q^{n-1} in the eighth power of that sparse series. The
// square is formed directly (it is sparse), the remaining two squarings go
// through an NTT modulo each prime of a residue system large enough that
// |tau(n)| <= d(n) n^{11/2} <= 2 n^6 is recovered exactly by CRT.

#include "arith.hpp"
#include "characters.hpp"
#include "errors.hpp"
#include "modular.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace satotate {

struct FormParams {
  std::uint64_t level = 1;
  int weight = 12;
  std::string label = "Delta";

  static FormParams delta() { return {}; }

  void validate() const {
    if (level == 0 || !arith::is_squarefree(level)) {
      throw std::invalid_argument("FormParams: level must be a squarefree positive integer");
    }
    if (weight < 2 || weight % 2 != 0) {
      throw std::invalid_argument("FormParams: weight must be even and >= 2");
    }
  }

  bool operator==(const FormParams&) const = default;
};

// Largest table the NTT primes can produce (transform length 2^25 >= 2X).
inline constexpr std::uint64_t kMaxTableLimit = std::uint64_t{1} << (modular::kMaxTransformLog2 - 1);

struct TableOptions {
  unsigned threads = 1;
  std::uint64_t max_limit = kMaxTableLimit;
};

class CoefficientTable;
void write_cache(const CoefficientTable& table, const std::filesystem::path& path);
CoefficientTable read_cache(const std::filesystem::path& path);

// Immutable table n -> a_f(n), 1 <= n <= limit. Values live in a residue
// system and are reconstructed exactly on access.
class CoefficientTable {
 public:
  std::uint64_t limit() const { return limit_; }
  const FormParams& form() const { return form_; }

  Integer operator[](std::uint64_t n) const {
    const std::size_t k = basis_->moduli().size();
    return basis_->reconstruct(
        std::span<const modular::u32>(residues_.data() + (n - 1) * k, k));
  }

  Integer at(std::uint64_t n) const {
    if (n == 0 || n > limit_) {
      throw std::out_of_range("CoefficientTable: index " + std::to_string(n) +
                              " outside [1, " + std::to_string(limit_) + "]");
    }
    return (*this)[n];
  }

  // Residue of a_f(n) modulo the i-th basis prime; zero here for every
  // basis prime means a_f(n) = 0.
  modular::u32 residue(std::uint64_t n, std::size_t i) const {
    return residues_[(n - 1) * basis_->moduli().size() + i];
  }
  std::size_t basis_size() const { return basis_->moduli().size(); }

 private:
  CoefficientTable(FormParams form, std::uint64_t limit,
                   std::shared_ptr<const modular::CrtBasis> basis,
                   std::vector<modular::u32> residues)
      : form_(std::move(form)), limit_(limit), basis_(std::move(basis)),
        residues_(std::move(residues)) {}

  friend CoefficientTable delta_coefficients(std::uint64_t, const TableOptions&);
  friend CoefficientTable load_coefficient_file(std::istream&, const FormParams&);
  friend CoefficientTable truncate(const CoefficientTable&, std::uint64_t);
  friend void write_cache(const CoefficientTable&, const std::filesystem::path&);
  friend CoefficientTable read_cache(const std::filesystem::path&);

  FormParams form_;
  std::uint64_t limit_;
  std::shared_ptr<const modular::CrtBasis> basis_;
  std::vector<modular::u32> residues_;  // n-major: residues_[(n-1)*k + i]
};

namespace detail {

// Number of basis primes whose product exceeds 2B + 1 for B = 2 X^6.
inline std::size_t delta_basis_size(std::uint64_t limit) {
  const double need = 2.0 + 6.0 * std::log2(static_cast<double>(std::max<std::uint64_t>(limit, 2))) + 2.0;
  double have = 0;
  std::size_t k = 0;
  while (have <= need) {
    if (k == modular::kNttPrimes.size()) throw ResourceLimitError("delta_coefficients: basis exhausted");
    have += std::log2(static_cast<double>(modular::kNttPrimes[k].p) - 1.0);
    ++k;
  }
  return k;
}

// Coefficients of (sum_k (-1)^k (2k+1) q^{k(k+1)/2})^2 below q^len.
inline std::vector<std::int64_t> theta_cube_squared(std::uint64_t len) {
  std::vector<std::uint64_t> expo;
  std::vector<std::int64_t> coef;
  for (std::uint64_t k = 0;; ++k) {
    const std::uint64_t e = k * (k + 1) / 2;
    if (e >= len) break;
    expo.push_back(e);
    coef.push_back((k % 2 ? -1 : 1) * static_cast<std::int64_t>(2 * k + 1));
  }
  std::vector<std::int64_t> sq(len, 0);
  for (std::size_t a = 0; a < expo.size(); ++a) {
    for (std::size_t b = 0; b < expo.size() && expo[a] + expo[b] < len; ++b) {
      sq[expo[a] + expo[b]] += coef[a] * coef[b];
    }
  }
  return sq;
}

// tau(n) mod prime for 1 <= n <= limit, in normal (non-Montgomery) form.
inline std::vector<modular::u32> delta_residues(std::uint64_t limit,
                                                const std::vector<std::int64_t>& theta_sq,
                                                const modular::NttPrime& prime) {
  const int log2 = std::max(1, static_cast<int>(std::bit_width(2 * limit - 1)));
  modular::NttPlan plan(prime, log2);
  const auto& mont = plan.mont();
  const auto p = static_cast<std::int64_t>(prime.p);
  std::vector<modular::u32> s(limit);
  for (std::uint64_t i = 0; i < limit; ++i) {
    std::int64_t r = theta_sq[i] % p;
    if (r < 0) r += p;
    s[i] = mont.to_mont(static_cast<modular::u32>(r));
  }
  modular::square_truncated(s, plan);
  modular::square_truncated(s, plan);
  for (auto& x : s) x = mont.from_mont(x);
  return s;
}

}  // namespace detail

// Exact tau(n) for 1 <= n <= limit.
inline CoefficientTable delta_coefficients(std::uint64_t limit, const TableOptions& opts = {}) {
  if (limit == 0) throw std::invalid_argument("delta_coefficients: limit must be >= 1");
  if (limit > opts.max_limit || limit > kMaxTableLimit) {
    throw ResourceLimitError("delta_coefficients: limit " + std::to_string(limit) +
                             " exceeds budget " +
                             std::to_string(std::min(opts.max_limit, kMaxTableLimit)));
  }
  const std::size_t k = detail::delta_basis_size(limit);
  std::vector<modular::u32> moduli;
  for (std::size_t i = 0; i < k; ++i) moduli.push_back(modular::kNttPrimes[i].p);
  auto basis = std::make_shared<const modular::CrtBasis>(moduli);

  const auto theta_sq = detail::theta_cube_squared(limit);
  std::vector<modular::u32> residues(limit * k);
  auto work = [&](std::size_t i) {
    auto r = detail::delta_residues(limit, theta_sq, modular::kNttPrimes[i]);
    for (std::uint64_t n = 0; n < limit; ++n) residues[n * k + i] = r[n];
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(k)));
  if (threads == 1) {
    for (std::size_t i = 0; i < k; ++i) work(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < k; i += threads) work(i);
      });
    }
  }
  return CoefficientTable(FormParams::delta(), limit, std::move(basis), std::move(residues));
}

inline CoefficientTable truncate(const CoefficientTable& table, std::uint64_t limit) {
  if (limit == 0 || limit > table.limit_) throw std::invalid_argument("truncate: bad limit");
  const std::size_t k = table.basis_size();
  std::vector<modular::u32> r(table.residues_.begin(),
                              table.residues_.begin() + static_cast<std::ptrdiff_t>(limit * k));
  return CoefficientTable(table.form_, limit, table.basis_, std::move(r));
}

// a_f(p^m) from the Hecke recurrence
// a(p^{m+1}) = a(p) a(p^m) - p^{k-1} a(p^{m-1}).
inline Integer tau_prime_power(std::uint64_t p, unsigned m, const CoefficientTable& table) {
  if (p > table.limit()) throw std::out_of_range("tau_prime_power: p exceeds table limit");
  if (!arith::is_prime(p)) throw std::invalid_argument("tau_prime_power: p must be prime");
  if (m == 0) return 1;
  const Integer ap = table[p];
  Integer pk = 1;
  for (int i = 0; i < table.form().weight - 1; ++i) pk *= p;
  Integer prev = 1, cur = ap;
  for (unsigned i = 1; i < m; ++i) {
    Integer next = ap * cur - pk * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Deligne: a(p)^2 <= 4 p^{k-1}.
inline bool within_deligne_bound(std::uint64_t p, const Integer& ap, int weight) {
  WideInteger lhs = WideInteger(ap) * WideInteger(ap);
  WideInteger rhs = 4;
  for (int i = 0; i < weight - 1; ++i) rhs *= p;
  return lhs <= rhs;
}

struct AngleRecord {
  std::uint64_t p = 0;
  double theta = 0;      // in [0, pi]
  double precision = 0;  // absolute error bound on theta
};

inline constexpr double kDefaultAngleEps = 1e-12;

// theta with a = 2 p^{(k-1)/2} cos theta.
inline AngleRecord angle_from_coefficient(std::uint64_t p, const Integer& ap, int weight,
                                          double eps = kDefaultAngleEps) {
  constexpr double kRepresentation = 4.5e-16;  // half-ulp of pi in double
  if (!(eps > 0)) throw std::invalid_argument("angle: eps must be positive");
  if (eps < kRepresentation) throw std::invalid_argument("angle: eps below double resolution");
  if (!within_deligne_bound(p, ap, weight)) {
    throw std::domain_error("angle: coefficient violates the Deligne bound at p=" + std::to_string(p));
  }
  const long double a = ap.convert_to<long double>();
  const long double denom = 2.0L * std::pow(static_cast<long double>(p), (weight - 1) / 2.0L);
  const long double c = a / denom;
  const long double sin_theta = std::sqrt(std::max(0.0L, 1.0L - c * c));
  const double est = 2.2e-16 / std::max(static_cast<double>(sin_theta), 1e-300) + kRepresentation;
  AngleRecord rec{p, 0.0, est};
  if (std::fabs(static_cast<double>(c)) > 1.0 - 1e-8 || est > eps) {
    using Float50 = boost::multiprecision::cpp_bin_float_50;
    const Float50 c50 = Float50(ap) /
        (2 * boost::multiprecision::pow(Float50(p), Float50(weight - 1) / 2));
    rec.theta = static_cast<double>(acos(c50));
    rec.precision = kRepresentation;
  } else {
    rec.theta = static_cast<double>(std::acos(c));
  }
  rec.theta = std::clamp(rec.theta, 0.0, std::numbers::pi);
  return rec;
}

inline AngleRecord angle(std::uint64_t p, const CoefficientTable& table,
                         double eps = kDefaultAngleEps) {
  if (!arith::is_prime(p)) throw std::invalid_argument("angle: p must be prime");
  return angle_from_coefficient(p, table.at(p), table.form().weight, eps);
}

// Maps any real angle t to the angle in [0, pi] with the same cosine.
inline double reduce_angle(double t) {
  double r = std::fmod(std::fabs(t), 2 * std::numbers::pi);
  return r > std::numbers::pi ? 2 * std::numbers::pi - r : r;
}

// U_n(cos theta) = sin((n+1) theta) / sin theta, with the limits at 0 and pi.
inline double chebyshev_u(unsigned n, double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("chebyshev_u: theta outside [0, pi]");
  }
  const double s = std::sin(theta);
  if (std::fabs(s) < 1e-4) {
    const double x = theta < 1.0 ? std::cos(theta) : -std::cos(std::numbers::pi - theta);
    double prev = 1.0, cur = 2 * x;
    if (n == 0) return 1.0;
    for (unsigned i = 1; i < n; ++i) {
      const double next = 2 * x * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  return std::sin((n + 1) * theta) / s;
}

// Lambda_{Sym^n f x chi}(p^m) at an unramified prime given theta_p.
inline std::complex<double> lambda_from_angle(std::uint64_t p, unsigned m, double theta, unsigned n,
                                              const DirichletCharacter& chi) {
  std::int64_t j = 1;
  for (unsigned i = 0; i < m; ++i) j *= static_cast<std::int64_t>(p);
  return chebyshev_u(n, reduce_angle(m * theta)) * chi.value(j) *
         std::log(static_cast<double>(p));
}

inline std::complex<double> lambda_coefficient(std::uint64_t j, unsigned n,
                                               const DirichletCharacter& chi,
                                               const CoefficientTable& table) {
  if (j == 0 || j > table.limit()) throw std::out_of_range("lambda_coefficient: j outside table");
  auto [p, m] = arith::prime_power_decompose(j);
  if (p == 0) return {0.0, 0.0};
  if (table.form().level % p == 0) {
    throw std::domain_error("lambda_coefficient: ramified prime p | N is unsupported");
  }
  return lambda_from_angle(p, static_cast<unsigned>(m), angle(p, table).theta, n, chi);
}

// ---------------------------------------------------------------------------
// Desk-scale Lehmer scan.

struct VanishingScan {
  std::uint64_t limit = 0;
  std::uint64_t primes_checked = 0;
  std::vector<std::uint64_t> zeros;               // primes with tau(p) = 0
  std::vector<std::uint64_t> residue_survivors;  // survivors after each basis prime
  std::size_t moduli_used = 0;
};

// tau(p) != 0 as soon as one residue is nonzero; a prime is reported as a
// zero only when it vanishes modulo a basis whose product exceeds 2|tau|max.
inline VanishingScan vanishing_primes(std::uint64_t limit, const std::vector<std::uint64_t>& primes) {
  if (limit > kMaxTableLimit) throw ResourceLimitError("vanishing_primes: limit exceeds budget");
  VanishingScan scan;
  scan.limit = limit;
  scan.primes_checked = primes.size();
  std::vector<std::uint64_t> alive = primes;
  const std::size_t k = detail::delta_basis_size(limit);
  if (alive.empty()) return scan;
  const auto theta_sq = detail::theta_cube_squared(limit);
  for (std::size_t i = 0; i < k && !alive.empty(); ++i) {
    const auto r = detail::delta_residues(limit, theta_sq, modular::kNttPrimes[i]);
    std::vector<std::uint64_t> next;
    for (auto p : alive) {
      if (r[p - 1] == 0) next.push_back(p);
    }
    alive = std::move(next);
    scan.residue_survivors.push_back(alive.size());
    scan.moduli_used = i + 1;
  }
  scan.zeros = alive;
  return scan;
}

// ---------------------------------------------------------------------------
// Cache file: "STCT", u32 version, u64 X, payload, u64 FNV-1a trailer.
// Payload: u32 weight, u64 level, u32 label length, label bytes,
// u32 basis size k, k x u32 moduli, X*k x u32 residues (n-major).

inline constexpr std::uint32_t kCacheVersion = 1;

namespace detail {

inline std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

template <class T>
void put_le(std::string& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<char>(static_cast<std::uint64_t>(v) >> (8 * i) & 0xff));
  }
}

template <class T>
T get_le(const std::string& in, std::size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw FormatError("cache: truncated file");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  }
  pos += sizeof(T);
  return static_cast<T>(v);
}

}  // namespace detail

inline void write_cache(const CoefficientTable& table, const std::filesystem::path& path) {
  std::string out = "STCT";
  detail::put_le<std::uint32_t>(out, kCacheVersion);
  detail::put_le<std::uint64_t>(out, table.limit_);
  detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(table.form_.weight));
  detail::put_le<std::uint64_t>(out, table.form_.level);
  detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(table.form_.label.size()));
  out += table.form_.label;
  const auto& moduli = table.basis_->moduli();
  detail::put_le<std::uint32_t>(out, static_cast<std::uint32_t>(moduli.size()));
  for (auto m : moduli) detail::put_le<std::uint32_t>(out, m);
  out.reserve(out.size() + table.residues_.size() * 4 + 8);
  for (auto r : table.residues_) detail::put_le<std::uint32_t>(out, r);
  detail::put_le<std::uint64_t>(out, detail::fnv1a(out));

  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cache: cannot open " + tmp + " for writing");
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) throw std::runtime_error("cache: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

inline CoefficientTable read_cache(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cache: cannot open " + path.string());
  std::string in((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (in.size() < 4 + 4 + 8 + 8 || in.compare(0, 4, "STCT") != 0) {
    throw FormatError("cache: bad magic in " + path.string());
  }
  std::size_t tail = in.size() - 8;
  std::size_t tpos = tail;
  const auto stored = detail::get_le<std::uint64_t>(in, tpos);
  if (detail::fnv1a(in.substr(0, tail)) != stored) throw FormatError("cache: checksum mismatch");
  std::size_t pos = 4;
  if (detail::get_le<std::uint32_t>(in, pos) != kCacheVersion) {
    throw FormatError("cache: unsupported version");
  }
  const auto limit = detail::get_le<std::uint64_t>(in, pos);
  FormParams form;
  form.weight = static_cast<int>(detail::get_le<std::uint32_t>(in, pos));
  form.level = detail::get_le<std::uint64_t>(in, pos);
  const auto label_len = detail::get_le<std::uint32_t>(in, pos);
  if (pos + label_len > tail) throw FormatError("cache: truncated label");
  form.label = in.substr(pos, label_len);
  pos += label_len;
  const auto k = detail::get_le<std::uint32_t>(in, pos);
  if (k == 0 || k > 16) throw FormatError("cache: bad basis size");
  std::vector<modular::u32> moduli(k);
  for (auto& m : moduli) m = detail::get_le<std::uint32_t>(in, pos);
  if (tail - pos != limit * k * 4) throw FormatError("cache: payload size mismatch");
  std::vector<modular::u32> residues(limit * k);
  for (auto& r : residues) r = detail::get_le<std::uint32_t>(in, pos);
  return CoefficientTable(form, limit, std::make_shared<const modular::CrtBasis>(moduli),
                          std::move(residues));
}

// Loads delta_<X>.stct (or the smallest larger cached table) from `dir`,
// computing and storing it when absent.
inline CoefficientTable cached_delta_coefficients(std::uint64_t limit,
                                                  const std::filesystem::path& dir,
                                                  const TableOptions& opts = {}) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::uint64_t best = 0;
  fs::path best_path;
  if (fs::is_directory(dir, ec)) {
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
      const auto name = entry.path().filename().string();
      if (name.rfind("delta_", 0) != 0 || entry.path().extension() != ".stct") continue;
      std::uint64_t x = 0;
      try {
        x = std::stoull(name.substr(6));
      } catch (const std::exception&) {
        continue;
      }
      if (x >= limit && (best == 0 || x < best)) {
        best = x;
        best_path = entry.path();
      }
    }
  }
  if (best) {
    try {
      auto t = read_cache(best_path);
      if (t.form() == FormParams::delta() && t.limit() >= limit) {
        return t.limit() == limit ? t : truncate(t, limit);
      }
    } catch (const FormatError&) {
      // fall through and rebuild
    }
  }
  auto table = delta_coefficients(limit, opts);
  if (fs::is_directory(dir, ec)) {
    write_cache(table, dir / ("delta_" + std::to_string(limit) + ".stct"));
  }
  return table;
}

// ---------------------------------------------------------------------------
// Text import: one "n a_f(n)" pair per line for n = 1, 2, ..., ascending and
// contiguous; '#' starts a comment. Prime coefficients must satisfy Deligne.

inline CoefficientTable load_coefficient_file(std::istream& in, const FormParams& form) {
  form.validate();
  std::vector<Integer> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string ns, as;
    if (!(ls >> ns)) continue;
    if (!(ls >> as)) throw FormatError("coefficient file: missing value on line " + std::to_string(lineno));
    std::uint64_t n = 0;
    Integer a;
    try {
      n = std::stoull(ns);
      a = Integer(as);
    } catch (const std::exception&) {
      throw FormatError("coefficient file: malformed line " + std::to_string(lineno));
    }
    if (n != values.size() + 1) {
      throw FormatError("coefficient file: expected n=" + std::to_string(values.size() + 1) +
                        " on line " + std::to_string(lineno));
    }
    if (arith::is_prime(n) && !within_deligne_bound(n, a, form.weight)) {
      throw FormatError("coefficient file: a(" + std::to_string(n) + ") violates the Deligne bound");
    }
    values.push_back(a);
  }
  if (values.empty()) throw FormatError("coefficient file: no coefficients");
  if (values[0] != 1) throw FormatError("coefficient file: a(1) must be 1 for a normalized newform");

  Integer maxabs = 0;
  for (const auto& v : values) maxabs = std::max(maxabs, v < 0 ? Integer(-v) : v);
  const Integer need = 2 * maxabs + 1;
  std::vector<modular::u32> moduli;
  Integer prod = 1;
  for (const auto& p : modular::kNttPrimes) {
    moduli.push_back(p.p);
    prod *= p.p;
    if (prod > need) break;
  }
  if (prod <= need) throw ResourceLimitError("coefficient file: values too large for residue basis");
  auto basis = std::make_shared<const modular::CrtBasis>(moduli);
  const std::size_t k = moduli.size();
  std::vector<modular::u32> residues(values.size() * k);
  for (std::size_t n = 0; n < values.size(); ++n) {
    for (std::size_t i = 0; i < k; ++i) residues[n * k + i] = basis->residue(values[n], i);
  }
  return CoefficientTable(form, values.size(), std::move(basis), std::move(residues));
}

}  // namespace satotate
