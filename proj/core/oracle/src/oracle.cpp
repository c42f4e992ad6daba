#include "chebjac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <ios>
#include <numbers>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace chebjac::oracle {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;
// The 3F2 sums cancel by up to ~85 digits at n = 256.
using Huge = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>>;

template <class T>
ExtendedReal narrow(const T& x) {
  return ExtendedReal(x.str(40, std::ios_base::scientific));
}

struct ExtendedRecurrence {
  std::vector<ExtendedReal> A, B, C;
};

ExtendedRecurrence extended_recurrence(const JacobiParameters& p, int N) {
  const ExtendedReal a = p.alpha();
  const ExtendedReal b = p.beta();
  ExtendedRecurrence r;
  const auto size = static_cast<std::size_t>(std::max(N, 0)) + 1;
  r.A.resize(size);
  r.B.resize(size);
  r.C.resize(size);
  r.A[0] = (a + b + 2) / 2;
  r.B[0] = (a - b) / 2;
  r.C[0] = 0;
  for (int n = 1; n <= N; ++n) {
    const ExtendedReal nn = n;
    const ExtendedReal s = 2 * nn + a + b;
    const ExtendedReal d = 2 * (nn + 1) * (nn + a + b + 1);
    r.A[n] = (s + 1) * (s + 2) / d;
    r.B[n] = (a * a - b * b) * (s + 1) / (d * s);
    r.C[n] = 2 * (nn + a) * (nn + b) * (s + 2) / (d * s);
  }
  return r;
}

void check_oracle_size(std::size_t len) {
  if (len == 0) throw std::invalid_argument("oracle: empty coefficient vector");
  if (len - 1 > 8192) throw std::invalid_argument("oracle: N above 8192 is too slow");
}

// cos(pi m / N) for m = 0..2N-1.
std::vector<ExtendedReal> cosine_table(int N) {
  const ExtendedReal pi = extended_pi();
  std::vector<ExtendedReal> t(2 * static_cast<std::size_t>(N));
  for (int m = 0; m < 2 * N; ++m) t[m] = boost::multiprecision::cos(pi * m / N);
  return t;
}

std::vector<ExtendedReal> expansion_values(const JacobiParameters& p, std::span<const double> c,
                                           const std::vector<ExtendedReal>& cosines) {
  const int N = static_cast<int>(c.size()) - 1;
  const auto rec = extended_recurrence(p, N);
  std::vector<ExtendedReal> v(static_cast<std::size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) {
    const ExtendedReal x = cosines[j];
    ExtendedReal p0 = 1;
    ExtendedReal sum = ExtendedReal(c[0]);
    if (N >= 1) {
      ExtendedReal p1 = rec.A[0] * x + rec.B[0];
      sum += c[1] * p1;
      for (int n = 1; n < N; ++n) {
        const ExtendedReal p2 = (rec.A[n] * x + rec.B[n]) * p1 - rec.C[n] * p0;
        p0 = p1;
        p1 = p2;
        sum += c[n + 1] * p1;
      }
    }
    v[j] = sum;
  }
  return v;
}

}  // namespace

ExtendedReal extended_pi() { return boost::math::constants::pi<ExtendedReal>(); }

std::vector<ExtendedReal> oracle_jacobi_all(const JacobiParameters& p, int N, ExtendedReal theta) {
  if (N < 0) throw std::invalid_argument("oracle_jacobi_all: N < 0");
  const auto rec = extended_recurrence(p, N);
  const ExtendedReal x = boost::multiprecision::cos(theta);
  std::vector<ExtendedReal> out(static_cast<std::size_t>(N) + 1);
  out[0] = 1;
  if (N >= 1) out[1] = rec.A[0] * x + rec.B[0];
  for (int n = 1; n < N; ++n) out[n + 1] = (rec.A[n] * x + rec.B[n]) * out[n] - rec.C[n] * out[n - 1];
  return out;
}

ExtendedReal oracle_jacobi_eval(const JacobiParameters& p, int n, ExtendedReal theta) {
  return oracle_jacobi_all(p, n, theta).back();
}

ExtendedReal oracle_jacobi_eval(const JacobiParameters& p, int n, double theta) {
  return oracle_jacobi_eval(p, n, ExtendedReal(theta));
}

std::vector<ExtendedReal> oracle_jacobi_on_angles(const JacobiParameters& p, int n,
                                                  std::span<const double> thetas) {
  if (n < 0) throw std::invalid_argument("oracle_jacobi_on_angles: n < 0");
  const auto rec = extended_recurrence(p, n);
  std::vector<ExtendedReal> out;
  out.reserve(thetas.size());
  for (double theta : thetas) {
    const ExtendedReal x = boost::multiprecision::cos(ExtendedReal(theta));
    ExtendedReal p0 = 1;
    ExtendedReal p1 = n >= 1 ? rec.A[0] * x + rec.B[0] : p0;
    for (int k = 1; k < n; ++k) {
      const ExtendedReal p2 = (rec.A[k] * x + rec.B[k]) * p1 - rec.C[k] * p0;
      p0 = p1;
      p1 = p2;
    }
    out.push_back(p1);
  }
  return out;
}

ExtendedReal oracle_gamma(double z) {
  if (!(z > 0.0)) throw std::domain_error("oracle_gamma: z must be positive");
  return narrow(boost::math::tgamma(Wide(z)));
}

ExtendedReal oracle_stirling_factor(double z) {
  if (!(z > 0.0)) throw std::domain_error("oracle_stirling_factor: z must be positive");
  const Wide Z = z;
  const Wide two_pi = 2 * boost::math::constants::pi<Wide>();
  const Wide log_s = boost::math::lgamma(Z) - (Z - Wide(0.5)) * log(Z) + Z - log(two_pi) / 2;
  return narrow(exp(log_s));
}

std::vector<ExtendedReal> stirling_coefficients_extended(int count) {
  if (count <= 0) return {};
  // log S(z) = sum_k B_{2k} / (2k (2k-1) z^{2k-1}); exponentiate the power series.
  std::vector<Wide> l(static_cast<std::size_t>(count), Wide(0));
  for (int k = 1; 2 * k - 1 < count; ++k) {
    l[2 * k - 1] = boost::math::bernoulli_b2n<Wide>(k) / (Wide(2 * k) * Wide(2 * k - 1));
  }
  std::vector<Wide> a(static_cast<std::size_t>(count), Wide(0));
  a[0] = 1;
  for (int n = 1; n < count; ++n) {
    Wide s = 0;
    for (int k = 1; k <= n; ++k) s += Wide(k) * l[k] * a[n - k];
    a[n] = s / n;
  }
  std::vector<ExtendedReal> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(narrow(x));
  return out;
}

ExtendedReal stirling_series_extended(double z, int terms) {
  const auto a = stirling_coefficients_extended(terms);
  const ExtendedReal w = ExtendedReal(1) / ExtendedReal(z);
  ExtendedReal s = 0;
  for (int n = terms - 1; n >= 0; --n) s = s * w + a[n];
  return s;
}

ExtendedReal stirling_remainder_bound(int terms, double z) {
  if (terms < 2) throw std::invalid_argument("stirling_remainder_bound: need at least 2 terms");
  if (!(z > 0.0)) throw std::domain_error("stirling_remainder_bound: z must be positive");
  const Wide N = terms;
  const Wide two_pi = 2 * boost::math::constants::pi<Wide>();
  const Wide bound = (1 + boost::math::zeta(N)) * boost::math::tgamma(N) /
                     (pow(two_pi, N + 1) * pow(Wide(z), N));
  return narrow(bound);
}

std::vector<ExtendedReal> oracle_expansion_values(const JacobiParameters& p,
                                                  std::span<const double> c) {
  check_oracle_size(c.size());
  const int N = static_cast<int>(c.size()) - 1;
  if (N == 0) return {ExtendedReal(c[0])};
  return expansion_values(p, c, cosine_table(N));
}

std::vector<double> oracle_forward(const JacobiParameters& p, std::span<const double> c) {
  check_oracle_size(c.size());
  const int N = static_cast<int>(c.size()) - 1;
  if (N == 0) return {c[0]};
  const auto cosines = cosine_table(N);
  auto v = expansion_values(p, c, cosines);
  v.front() /= 2;
  v.back() /= 2;
  std::vector<double> out(static_cast<std::size_t>(N) + 1);
  const auto period = static_cast<std::size_t>(2 * N);
  for (int k = 0; k <= N; ++k) {
    ExtendedReal s = 0;
    for (int j = 0; j <= N; ++j) {
      s += v[j] * cosines[(static_cast<std::size_t>(j) * static_cast<std::size_t>(k)) % period];
    }
    s = s * 2 / N;
    if (k == 0 || k == N) s /= 2;
    out[k] = static_cast<double>(s);
  }
  return out;
}

std::vector<ExtendedReal> connection_coefficients(const JacobiParameters& source,
                                                  const JacobiParameters& target, int n) {
  if (n < 0 || n > 256) throw std::invalid_argument("connection_coefficients: need 0 <= n <= 256");
  const Huge g = source.alpha();
  const Huge d = source.beta();
  const Huge a = target.alpha();
  const Huge b = target.beta();
  std::vector<ExtendedReal> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    // (n+g+d+1)_k (k+g+1)_{n-k} / (n-k)! * (2k+a+b+1) / (k+a+b+1)_{k+1}
    Huge pref = 1;
    for (int i = 0; i < k; ++i) pref *= n + g + d + 1 + i;
    for (int i = 0; i < n - k; ++i) pref *= (k + g + 1 + i) / Huge(i + 1);
    if (k > 0) {
      Huge poch = 1;
      for (int i = 0; i <= k; ++i) poch *= k + a + b + 1 + i;
      pref *= (2 * k + a + b + 1) / poch;
    }
    // Terminating 3F2(k-n, n+k+g+d+1, k+a+1; k+g+1, 2k+a+b+2; 1).
    Huge term = 1;
    Huge sum = 1;
    for (int j = 0; j < n - k; ++j) {
      term *= Huge(k - n + j) * (n + k + g + d + 1 + j) * (k + a + 1 + j) /
              ((k + g + 1 + j) * (2 * k + a + b + 2 + j) * Huge(j + 1));
      sum += term;
    }
    out[k] = narrow(Huge(pref * sum));
  }
  return out;
}

std::vector<double> oracle_connection_transform(const JacobiParameters& source,
                                                const JacobiParameters& target,
                                                std::span<const double> c) {
  if (c.empty()) return {};
  const int N = static_cast<int>(c.size()) - 1;
  std::vector<ExtendedReal> acc(c.size(), ExtendedReal(0));
  for (int n = 0; n <= N; ++n) {
    if (c[n] == 0.0) continue;
    const auto row = connection_coefficients(source, target, n);
    for (int k = 0; k <= n; ++k) acc[k] += c[n] * row[k];
  }
  std::vector<double> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = static_cast<double>(acc[k]);
  return out;
}

double oracle_modified_moment(const JacobiParameters& p, int n) {
  if (n < 0) throw std::invalid_argument("oracle_modified_moment: n < 0");
  const double a = p.alpha();
  const double b = p.beta();
  // With x = cos t the integrand becomes
  //   2^{a+b+1} cos(n t) sin^{2a+1}(t/2) cos^{2b+1}(t/2),
  // which is bounded. It is integrated piecewise over half periods of cos(n t).
  auto f = [&](double t) {
    return std::cos(n * t) * std::pow(std::sin(t / 2), 2 * a + 1) *
           std::pow(std::sin((std::numbers::pi - t) / 2), 2 * b + 1);
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  const int pieces = std::max(1, n);
  const double h = std::numbers::pi / pieces;
  double sum = 0.0;
  for (int k = 0; k < pieces; ++k) {
    const double hi = k + 1 == pieces ? std::numbers::pi : (k + 1) * h;
    sum += integrator.integrate(f, k * h, hi, 1e-15);
  }
  return std::exp2(a + b + 1) * sum;
}

}  // namespace chebjac::oracle
