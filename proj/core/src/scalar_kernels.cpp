#include "chebjac/scalar_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chebjac/errors.hpp"

namespace chebjac {

namespace {

// a_n = A001163(n) / A001164(n), the Stirling series coefficients for Gamma.
struct Rational {
  long double num;
  long double den;
};

constexpr std::array<Rational, StirlingEvaluator::kMaxTerms> kStirlingRationals = {{
    {1.0L, 1.0L},
    {1.0L, 12.0L},
    {1.0L, 288.0L},
    {-139.0L, 51840.0L},
    {-571.0L, 2488320.0L},
    {163879.0L, 209018880.0L},
    {5246819.0L, 75246796800.0L},
    {-534703531.0L, 902961561600.0L},
    {-4483131259.0L, 86684309913600.0L},
    {432261921612371.0L, 514904800886784000.0L},
    {6232523202521089.0L, 86504006548979712000.0L},
    {-25834629665134204969.0L, 13494625021640835072000.0L},
    {-1579029138854919086429.0L, 9716130015581401251840000.0L},
    {746590869962651602203151.0L, 116593560186976815022080000.0L},
    {1511513601028097903631961.0L, 2798245444487443560529920000.0L},
    {-8849272268392873147705987190261.0L, 299692087104605205332754432000000.0L},
    {-142801712490607530608130701097701.0L, 57540880724084199423888850944000000.0L},
}};

// Smallest term count N with R_N(z) / S_N(z) < eps / 20 for z >= z_min.
constexpr std::array<StirlingEvaluator::Threshold, 14> kStirlingThresholds = {{
    {3275.0, 4},
    {591.0, 5},
    {196.0, 6},
    {92.0, 7},
    {53.0, 8},
    {35.0, 9},
    {26.0, 10},
    {20.0, 11},
    {17.0, 12},
    {14.0, 13},
    {12.0, 14},
    {11.0, 15},
    {10.0, 16},
    {9.0, 17},
}};

const StirlingEvaluator& stirling() {
  static const StirlingEvaluator evaluator;
  return evaluator;
}

// Closed form for C_{n,m}; requires n >= 1 and n + min(alpha, beta) >= 8.
double asymptotic_coefficient_closed_form(double a, double b, double n, int m) {
  const double d = 2.0 * n + a + b + m + 2.0;
  const double front = std::exp(static_cast<double>(m)) /
                       (std::pow(4.0, m) * std::sqrt(std::numbers::pi));
  const double pa = one_plus_pow((a - b - m) / d, n + a + 0.5);
  const double pb = one_plus_pow((b - a - m) / d, n + b + 0.5);
  const double tail = std::pow(n, m + 0.5) * one_plus_pow((a + b + m + 2.0) / (2.0 * n), m + 0.5);
  const double s = (stirling_factor(n + a + 1.0) * stirling_factor(n + b + 1.0)) /
                   stirling_factor(2.0 * n + m + a + b + 2.0);
  return front * (pa * pb) / tail * s;
}

}  // namespace

JacobiParameters::JacobiParameters(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha <= -1.0 || beta <= -1.0) {
    throw DomainError("Jacobi parameters must satisfy alpha, beta > -1 (got " +
                      std::to_string(alpha) + ", " + std::to_string(beta) + ")");
  }
}

bool in_core_interval(double x) noexcept { return x > -0.5 && x <= 0.5; }

bool JacobiParameters::in_core_square() const noexcept {
  return in_core_interval(alpha_) && in_core_interval(beta_);
}

StirlingEvaluator::StirlingEvaluator() {
  for (std::size_t n = 0; n < kMaxTerms; ++n) {
    coefficients_[n] = static_cast<double>(kStirlingRationals[n].num / kStirlingRationals[n].den);
  }
}

const std::array<StirlingEvaluator::Threshold, 14>& StirlingEvaluator::thresholds() noexcept {
  return kStirlingThresholds;
}

int StirlingEvaluator::terms_for(double z) const {
  if (!(z >= kFloor)) {
    throw std::domain_error("Stirling series queried below z = 9");
  }
  for (const auto& t : kStirlingThresholds) {
    if (z >= t.z_min) return t.terms;
  }
  return static_cast<int>(kMaxTerms);
}

double StirlingEvaluator::operator()(double z) const {
  const int terms = terms_for(z);
  const double w = 1.0 / z;
  double s = 0.0;
  for (int n = terms - 1; n >= 0; --n) s = s * w + coefficients_[n];
  return s;
}

double stirling_factor(double z) { return stirling()(z); }

double one_plus_pow(double x, double y) {
  if (!(1.0 + x > 0.0)) {
    throw std::domain_error("one_plus_pow requires 1 + x > 0");
  }
  return std::exp(y * std::log1p(x));
}

double gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("gamma_ratio requires positive arguments");
  }
  double shift_product = 1.0;
  while (a < StirlingEvaluator::kFloor || b < StirlingEvaluator::kFloor) {
    // Gamma(a)/Gamma(b) = Gamma(a+1)/Gamma(b+1) * b/a
    shift_product *= b / a;
    a += 1.0;
    b += 1.0;
  }
  const double diff = a - b;
  return shift_product * std::exp(-diff) * one_plus_pow(diff / b, a - 0.5) *
         std::exp(diff * std::log(b)) * stirling_factor(a) / stirling_factor(b);
}

RecurrenceCoefficients recurrence_coefficients(const JacobiParameters& p, int n) {
  if (n < 0) throw std::invalid_argument("recurrence_coefficients: n < 0");
  const double a = p.alpha();
  const double b = p.beta();
  if (n == 0) {
    return {(a + b + 2.0) / 2.0, (a - b) / 2.0, 0.0};
  }
  const double nn = n;
  const double s = 2.0 * nn + a + b;
  const double A = (s + 1.0) * (s + 2.0) / (2.0 * (nn + 1.0) * (nn + a + b + 1.0));
  const double B = (a * a - b * b) * (s + 1.0) / (2.0 * (nn + 1.0) * (nn + a + b + 1.0) * s);
  const double C = (nn + a) * (nn + b) * (s + 2.0) / ((nn + 1.0) * (nn + a + b + 1.0) * s);
  return {A, B, C};
}

double endpoint_value(const JacobiParameters& p, int n, Endpoint end) {
  if (n < 0) throw std::invalid_argument("endpoint_value: n < 0");
  const double shift = end == Endpoint::plus_one ? p.alpha() : p.beta();
  double value = 1.0;
  for (int k = 1; k <= n; ++k) value *= (k + shift) / k;
  if (end == Endpoint::minus_one && (n % 2) == 1) value = -value;
  return value;
}

double forward_ratio(const JacobiParameters& p, int n, Endpoint end) {
  if (n < 0) throw std::invalid_argument("forward_ratio: n < 0");
  const double nn = n;
  if (end == Endpoint::plus_one) return (nn + p.alpha() + 1.0) / (nn + 1.0);
  return -(nn + p.beta() + 1.0) / (nn + 1.0);
}

double backward_ratio(const JacobiParameters& p, int n, Endpoint end) {
  if (n < 1) throw std::invalid_argument("backward_ratio: undefined for n = 0");
  const double nn = n;
  const double ab = p.alpha() + p.beta();
  const double common = (nn + 1.0) / nn * (ab + nn + 1.0) * (ab + 2.0 * nn) / (ab + 2.0 * nn + 2.0);
  if (end == Endpoint::plus_one) return common / (nn + p.beta());
  return -common / (nn + p.alpha());
}

double asymptotic_coefficient(const JacobiParameters& p, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("asymptotic_coefficient: negative index");
  const double a = p.alpha();
  const double b = p.beta();
  const double mn = std::min(a, b);
  if (n >= 1 && n + mn >= 8.0) return asymptotic_coefficient_closed_form(a, b, n, m);

  const int n0 = 8 + static_cast<int>(std::ceil(std::abs(mn)));
  double c = asymptotic_coefficient_closed_form(a, b, n0, m);
  const double h1 = (a + b + m + 1.0) / 2.0;
  const double h0 = (a + b + m) / 2.0;
  for (int k = n0; k > n; --k) {
    c *= (k + h1) * (k + h0) / ((k + a) * (k + b));
  }
  return c;
}

double orthonormality_constant(const JacobiParameters& p, int n) {
  if (n < 0) throw std::invalid_argument("orthonormality_constant: n < 0");
  const double a = p.alpha();
  const double b = p.beta();
  const double nn = n;
  const double scale = std::exp2(a + b + 1.0);
  if (nn + std::min({a, b, a + b, 0.0}) >= 8.0) {
    const double s = nn + a + b + 1.0;
    const double f1 = one_plus_pow(-b / s, nn / 2.0 + a + 0.25);
    const double f2 = one_plus_pow(-a / s, nn / 2.0 + b + 0.25);
    const double f3 = one_plus_pow(a / (nn + 1.0), nn / 2.0 + 0.25);
    const double f4 = one_plus_pow(b / (nn + 1.0), nn / 2.0 + 0.25);
    const double st = (stirling_factor(nn + a + 1.0) * stirling_factor(nn + b + 1.0)) /
                      (stirling_factor(nn + a + b + 1.0) * stirling_factor(nn + 1.0));
    return scale / (2.0 * nn + a + b + 1.0) * (f1 * f2) * (f3 * f4) * st;
  }
  if (n == 0) {
    return scale * (std::tgamma(a + 1.0) * std::tgamma(b + 1.0)) / std::tgamma(a + b + 2.0);
  }
  return scale * (std::tgamma(nn + a + 1.0) * std::tgamma(nn + b + 1.0)) /
         ((2.0 * nn + a + b + 1.0) * std::tgamma(nn + a + b + 1.0) * std::tgamma(nn + 1.0));
}

}  // namespace chebjac
