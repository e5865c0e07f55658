#ifndef LERCH_TEST_UTIL_HPP
#define LERCH_TEST_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <complex>

#include "lerch/numeric.hpp"

namespace oracle {

// Frozen reference values, 50-digit arithmetic in an independent system,
// rounded to 20 significant digits.
inline constexpr double zeta2 = 1.6449340668482264365;
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta5 = 1.0369277551433699263;
inline constexpr double zeta7 = 1.0083492773819228268;
inline constexpr double hurwitz3_quarter = 64.663869968768460167;
inline const lerch::Complex hurwitz4_b{-1.0853787009825725871, 0.92737379511781070424};  // zeta(4, 1/2 + 3i/4)
inline constexpr double catalan = 0.91596559417721901505;
inline constexpr double beta3 = 0.96894614625936938048;
inline constexpr double beta4 = 0.98894455174110533611;
inline constexpr double l1chi1 = 1.1107207345395915618;
inline constexpr double l1chi2 = 0.62322524014023051339;
inline constexpr double l2chi1 = 1.0647341710435033704;
inline constexpr double l3chi2 = 0.95838045456309456205;
inline const lerch::Complex phi_i_1_half{1.7339459746798220751, 0.48749549439936104836};
inline const lerch::Complex phi_i_2_half{3.8741843919967266243, 0.38475229217728685725};
inline const lerch::Complex phi_e3_3_quarter{64.183449772223022281, 0.50500959489306910966};  // a = e^{i pi/3}
inline const lerch::Complex phi_e3_1_1{0.9068996821171089253, 0.52359877559829887308};
inline constexpr double phi_half_2_1 = 1.1644810529300250118;
inline const lerch::Complex li2_i{-0.20561675835602830456, 0.91596559417721901505};
inline const lerch::Complex li3_e2pi3{-0.53424751251537523796, 0.76558707852592148581};
inline const lerch::Complex li1_epi4{0.26739999836978518526, 1.1780972450961724644};

// Partial sums to 400 terms in 60-digit arithmetic.
// sum_k B_k(1-b) (i phi)^k / (k! (k+n))
inline const lerch::Complex s1_1_pi4_1{0.98275845222151062578, -0.1963495408493620774};
inline const lerch::Complex s1_2_pi_half{0.62737363697652707741, 0.0};
inline const lerch::Complex s1_3_m2pi3_quarter{0.34268544203504912693, -0.14398761502245425256};
// 1/2 sum_k E_k(1-b) (i phi)^{k+1} / (k! (k+n+1))
inline const lerch::Complex s2_0_pi2_half{0.0, 0.88137358701954302523};
inline const lerch::Complex s2_3_mpi3_3quarter{0.030113079113444027924, -0.14067293850100162562};
inline const lerch::Complex s2_1_pi2_1{0.23654821778166490557, 0.39269908169872415481};

}  // namespace oracle

inline double rel_diff(lerch::Complex a, lerch::Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

#endif
