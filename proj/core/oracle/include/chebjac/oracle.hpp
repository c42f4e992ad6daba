#ifndef CHEBJAC_ORACLE_HPP
#define CHEBJAC_ORACLE_HPP

// Slow extended-precision references for tests and validation commands.
// Nothing here is tuned for speed.

#include <span>
#include <vector>

#include <boost/multiprecision/float128.hpp>

#include "chebjac/scalar_kernels.hpp"

namespace chebjac::oracle {

/// IEEE binary128: 113-bit significand, about 34 decimal digits.
using ExtendedReal = boost::multiprecision::float128;

ExtendedReal extended_pi();

/// P_n^{(alpha,beta)}(cos theta) by the three-term recurrence in extended
/// precision. The double overload converts theta exactly.
ExtendedReal oracle_jacobi_eval(const JacobiParameters& p, int n, ExtendedReal theta);
ExtendedReal oracle_jacobi_eval(const JacobiParameters& p, int n, double theta);

/// P_0..P_N at cos(theta).
std::vector<ExtendedReal> oracle_jacobi_all(const JacobiParameters& p, int N, ExtendedReal theta);

/// P_n(cos theta) at every angle, sharing one table of recurrence
/// coefficients across angles.
std::vector<ExtendedReal> oracle_jacobi_on_angles(const JacobiParameters& p, int n,
                                                  std::span<const double> thetas);

/// Gamma(z) for z > 0 (overflows to infinity above about z = 1750).
ExtendedReal oracle_gamma(double z);

/// Gamma(z) / (sqrt(2 pi) z^{z-1/2} e^{-z}), the exact Stirling factor, z > 0.
ExtendedReal oracle_stirling_factor(double z);

/// The first `count` Stirling series coefficients a_n, generated from the
/// Bernoulli numbers rather than from tabulated rationals.
std::vector<ExtendedReal> stirling_coefficients_extended(int count);

/// sum_{n < terms} a_n / z^n in extended precision.
ExtendedReal stirling_series_extended(double z, int terms);

/// Upper bound (1 + zeta(N)) Gamma(N) / ((2 pi)^{N+1} z^N) on the relative
/// error of the N-term Stirling series at z > 0. Requires N >= 2.
ExtendedReal stirling_remainder_bound(int terms, double z);

/// Chebyshev coefficients of sum_n c_n P_n^{(alpha,beta)}: the Jacobi
/// expansion is evaluated densely at the N+1 Lobatto angles and then
/// analysed, all in extended precision. O(N^2); N must not exceed 8192.
std::vector<double> oracle_forward(const JacobiParameters& p, std::span<const double> c);

/// Values sum_n c_n P_n(cos(pi j / N)), j = 0..N, in extended precision.
std::vector<ExtendedReal> oracle_expansion_values(const JacobiParameters& p,
                                                  std::span<const double> c);

/// c_{n,0..n} with P_n^{source}(x) = sum_k c_{n,k} P_k^{target}(x), from the
/// terminating 3F2 representation summed with ~150 significant digits.
/// Requires n <= 256.
std::vector<ExtendedReal> connection_coefficients(const JacobiParameters& source,
                                                  const JacobiParameters& target, int n);

/// Dense re-expansion of source-basis coefficients in the target basis using
/// connection_coefficients for every degree.
std::vector<double> oracle_connection_transform(const JacobiParameters& source,
                                                const JacobiParameters& target,
                                                std::span<const double> c);

/// integral of T_n(x) (1-x)^alpha (1+x)^beta over [-1, 1] by adaptive
/// double-exponential quadrature.
double oracle_modified_moment(const JacobiParameters& p, int n);

}  // namespace chebjac::oracle

#endif  // CHEBJAC_ORACLE_HPP
