#pragma once

// Independent reference computations and frozen high-precision values
// shared by the unit and acceptance tests.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace oracle {

using boost::multiprecision::cpp_int;

// tau(1..L) from q prod (1 - q^n)^24, schoolbook, no modular arithmetic.
inline std::vector<cpp_int> tau_series(std::size_t L) {
  std::vector<cpp_int> s(L, 0);  // coefficient of q^i in prod_{n}(1-q^n)^24, i < L
  s[0] = 1;
  for (std::size_t n = 1; n < L; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (std::size_t i = L - 1; i >= n; --i) {
        s[i] -= s[i - n];
        if (i == n) break;
      }
    }
  }
  std::vector<cpp_int> tau(L + 1, 0);
  for (std::size_t i = 0; i < L; ++i) tau[i + 1] = s[i];
  return tau;  // tau[n] for 1 <= n <= L
}

inline cpp_int sigma11(std::uint64_t n) {
  cpp_int s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += boost::multiprecision::pow(cpp_int(d), 11);
  }
  return s;
}

// mpmath / sympy values at 30+ digits.
inline constexpr double kTheta2 = 1.83917141540925226491;
inline constexpr double kLambda4n1 = -1.19134671658740600056;  // 2 cos(2 theta_2) log 2
inline constexpr double kPhi1 = 1.68436508583470776077;
inline constexpr double kPhi0 = 1.21652053543182690929;
inline constexpr double kPhiHalf = 1.41624095197448977713;
inline constexpr double kC0 = kPhiHalf;
inline constexpr double kC1 = 0.530841946552460449912;
inline constexpr double kC2 = 0.611145283268224489119;
inline constexpr double kPhiD1At1 = 1.777777777777777777777778;
inline constexpr double kPhiD2At6_5 = -3.597438325814387198363321;
inline constexpr double kPhiD3At4_5 = -40.25677982774863874238891;
inline constexpr double kPhiD4At21_10 = 164.4700466724444047105243;
inline constexpr double kPhiD2At3_2 = -2.791224850172179057256251;
inline constexpr double kLiFrom2At1e6 = 78626.5039956820644;
inline constexpr double kNegZetaLogDeriv2 = 0.569960993094532806;
inline constexpr double kGeometricTail = 0.0031723093832622;  // sum_{m>=1} (1e-5)^{m/2}
inline constexpr std::uint64_t kSerrePhiQ = 761497583616000ull;

}  // namespace oracle
