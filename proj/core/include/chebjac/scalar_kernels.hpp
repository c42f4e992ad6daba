#ifndef CHEBJAC_SCALAR_KERNELS_HPP
#define CHEBJAC_SCALAR_KERNELS_HPP

#include <array>
#include <cstddef>

namespace chebjac {

/// Jacobi weight exponents (alpha, beta) of w(x) = (1-x)^alpha (1+x)^beta.
///
/// Construction rejects alpha <= -1, beta <= -1 and non-finite values with
/// DomainError. The fast transforms additionally require the "core square"
/// (-1/2, 1/2]^2; other admissible pairs are reached by integer parameter
/// shifts.
class JacobiParameters {
 public:
  JacobiParameters(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  bool in_core_square() const noexcept;
  JacobiParameters swapped() const { return {beta_, alpha_}; }

  friend bool operator==(const JacobiParameters&, const JacobiParameters&) = default;

 private:
  double alpha_;
  double beta_;
};

/// True iff x lies in the half-open interval (-1/2, 1/2].
bool in_core_interval(double x) noexcept;

enum class Endpoint : int { minus_one = -1, plus_one = 1 };

/// Truncated Stirling series S(z) = sum_{n<N} a_n / z^n for Gamma(z), with
/// the term count N chosen per threshold so the truncation error relative to
/// S is below eps/20. Valid for z >= 9.
class StirlingEvaluator {
 public:
  static constexpr std::size_t kMaxTerms = 17;
  static constexpr double kFloor = 9.0;

  struct Threshold {
    double z_min;
    int terms;
  };

  StirlingEvaluator();

  /// Number of terms used at z (z >= kFloor).
  int terms_for(double z) const;
  double operator()(double z) const;

  const std::array<double, kMaxTerms>& coefficients() const noexcept { return coefficients_; }
  static const std::array<Threshold, 14>& thresholds() noexcept;

 private:
  std::array<double, kMaxTerms> coefficients_;
};

/// S_eps(z); throws std::domain_error for z < 9.
double stirling_factor(double z);

/// (1 + x)^y evaluated as exp(y * log1p(x)); throws std::domain_error if
/// 1 + x <= 0.
double one_plus_pow(double x, double y);

/// Gamma(a) / Gamma(b) for a, b > 0 without evaluating Gamma itself. Small
/// arguments are shifted up to the Stirling range by the functional equation.
double gamma_ratio(double a, double b);

/// A_n, B_n, C_n in P_{n+1} = (A_n x + B_n) P_n - C_n P_{n-1}.
struct RecurrenceCoefficients {
  double A;
  double B;
  double C;
};

/// n = 0 uses the limits A_0 = (alpha+beta+2)/2, B_0 = (alpha-beta)/2, C_0 = 0.
RecurrenceCoefficients recurrence_coefficients(const JacobiParameters& p, int n);

/// P_n^{(alpha,beta)}(+-1), i.e. binom(n+alpha, n) or (-1)^n binom(n+beta, n).
double endpoint_value(const JacobiParameters& p, int n, Endpoint end);

/// r_n^f(x0) = P_{n+1}(x0) / P_n(x0) at x0 = +-1.
double forward_ratio(const JacobiParameters& p, int n, Endpoint end);

/// r_n^b(x0) = v_{n+1}(x0) / v_n(x0) for the adjoint recurrence with v_0 = 0,
/// v_1 = 1. Requires n >= 1.
double backward_ratio(const JacobiParameters& p, int n, Endpoint end);

/// Coefficient C_{n,m}^{alpha,beta} of the interior (Hahn) asymptotic series.
///
/// For n + min(alpha, beta) >= 8 this uses the Stirling closed form; below
/// that, the closed form at n0 = 8 + ceil(|min(alpha, beta)|) is carried down
/// by the three-term ratio in n.
double asymptotic_coefficient(const JacobiParameters& p, int n, int m);

/// The squared weighted norm of P_n^{(alpha,beta)}.
double orthonormality_constant(const JacobiParameters& p, int n);

}  // namespace chebjac

#endif  // CHEBJAC_SCALAR_KERNELS_HPP
