#include "chebjac/asymptotics.hpp"

#include <climits>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "chebjac/errors.hpp"
#include "chebjac/format.hpp"

namespace chebjac {

namespace {

constexpr double kPi = std::numbers::pi;

struct Term {
  int l;
  double weight;
  double sin_exp;  // exponent of sin(theta/2) in the denominator
  double cos_exp;  // exponent of cos(theta/2) in the denominator
};

// Nonzero summands of f_m: weight (1/2+a)_l (1/2-a)_l (1/2+b)_{m-l} (1/2-b)_{m-l} / (l! (m-l)!).
std::vector<Term> series_terms(const JacobiParameters& p, int m) {
  if (m < 0) throw std::invalid_argument("asymptotic series order must be >= 0");
  const double a = p.alpha();
  const double b = p.beta();
  std::vector<double> wa(static_cast<std::size_t>(m) + 1);
  std::vector<double> wb(static_cast<std::size_t>(m) + 1);
  wa[0] = wb[0] = 1.0;
  for (int k = 0; k < m; ++k) {
    wa[k + 1] = wa[k] * (0.5 + a + k) * (0.5 - a + k) / (k + 1.0);
    wb[k + 1] = wb[k] * (0.5 + b + k) * (0.5 - b + k) / (k + 1.0);
  }
  std::vector<Term> terms;
  for (int l = 0; l <= m; ++l) {
    const double w = wa[l] * wb[m - l];
    if (w == 0.0) continue;
    terms.push_back({l, w, l + a + 0.5, m - l + b + 0.5});
  }
  return terms;
}

double amplitude(const Term& t, double s, double c) {
  return t.weight / (std::pow(s, t.sin_exp) * std::pow(c, t.cos_exp));
}

// theta_{m,l} = (alpha + l + 1/2) pi/2 - (alpha + beta + m + 1) theta/2
double phase(const JacobiParameters& p, int m, int l, double theta) {
  return (p.alpha() + l + 0.5) * (kPi / 2.0) - (p.alpha() + p.beta() + m + 1.0) * (theta / 2.0);
}

void require_open_angle(double theta) {
  if (!(theta > 0.0 && theta < kPi)) {
    throw DomainError("angle must lie strictly inside (0, pi)");
  }
}

struct HalfAngle {
  double s;  // sin(theta/2)
  double c;  // cos(theta/2), taken as sin((pi - theta)/2)
};

HalfAngle half_angle(double theta) {
  return {std::sin(theta / 2.0), std::sin((kPi - theta) / 2.0)};
}

HalfAngle half_angle(const AngleGrid& grid, int j) {
  const int N = grid.degree();
  const double h = kPi / (2.0 * N);
  return {std::sin(h * j), std::sin(h * (N - j))};
}

ModulationValue modulation_at(const JacobiParameters& p, int m, const std::vector<Term>& terms,
                              double theta, HalfAngle ha) {
  ModulationValue out{0.0, 0.0};
  for (const auto& t : terms) {
    const double amp = amplitude(t, ha.s, ha.c);
    const double ph = phase(p, m, t.l, theta);
    out.u += amp * std::cos(ph);
    out.v += amp * std::sin(ph);
  }
  return out;
}

double envelope_at(const std::vector<Term>& terms, HalfAngle ha) {
  double g = 0.0;
  for (const auto& t : terms) g += std::abs(amplitude(t, ha.s, ha.c));
  return g;
}

// floor(exp(-log_bracket / (M + 1/2))), saturating at INT_MAX.
int floor_power(double log_bracket, int M) {
  const double x = std::exp(-log_bracket / (M + 0.5));
  if (!(x < static_cast<double>(INT_MAX))) return INT_MAX;
  return static_cast<int>(std::floor(x));
}

int n_from_envelope(double g, int M, double eps) {
  if (g == 0.0) return 0;
  const double log_bracket =
      std::log(eps) + (2.0 * M - 1.0) * std::numbers::ln2 + 0.5 * std::log(kPi) - std::log(g);
  return floor_power(log_bracket, M);
}

void require_partition_inputs(int M, double eps) {
  if (M < 2) throw std::invalid_argument("number of asymptotic terms M must be >= 2");
  if (!(eps > 0.0)) throw std::invalid_argument("tolerance eps must be positive");
}

}  // namespace

ModulationValue modulation(const JacobiParameters& p, int m, double theta) {
  require_open_angle(theta);
  return modulation_at(p, m, series_terms(p, m), theta, half_angle(theta));
}

ModulationPair modulation_on_grid(const JacobiParameters& p, int m, const AngleGrid& grid) {
  const auto terms = series_terms(p, m);
  const auto n = static_cast<std::size_t>(grid.size());
  ModulationPair out{m, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (int j = 1; j < grid.degree(); ++j) {
    const auto mv = modulation_at(p, m, terms, grid.angle(j), half_angle(grid, j));
    out.u[static_cast<std::size_t>(j)] = mv.u;
    out.v[static_cast<std::size_t>(j)] = mv.v;
  }
  return out;
}

double asymptotic_term(const JacobiParameters& p, int n, int m, double theta) {
  require_open_angle(theta);
  const auto ha = half_angle(theta);
  double f = 0.0;
  for (const auto& t : series_terms(p, m)) {
    const double th = (2.0 * n + p.alpha() + p.beta() + m + 1.0) * (theta / 2.0) -
                      (p.alpha() + t.l + 0.5) * (kPi / 2.0);
    f += amplitude(t, ha.s, ha.c) * std::cos(th);
  }
  return f;
}

double envelope(const JacobiParameters& p, int m, double theta) {
  require_open_angle(theta);
  return envelope_at(series_terms(p, m), half_angle(theta));
}

std::vector<double> envelope_on_grid(const JacobiParameters& p, int m, const AngleGrid& grid) {
  const auto terms = series_terms(p, m);
  std::vector<double> g(static_cast<std::size_t>(grid.size()),
                        std::numeric_limits<double>::infinity());
  for (int j = 1; j < grid.degree(); ++j) {
    g[static_cast<std::size_t>(j)] = envelope_at(terms, half_angle(grid, j));
  }
  return g;
}

double remainder_bound(const JacobiParameters& p, int n, int M, double theta) {
  if (!p.in_core_square()) {
    throw DomainError("remainder bound only holds for (alpha, beta) in (-1/2, 1/2]^2");
  }
  if (n < 2) throw std::invalid_argument("remainder bound requires n >= 2");
  if (M < 2) throw std::invalid_argument("remainder bound requires M >= 2");
  return 2.0 * asymptotic_coefficient(p, n, M) * envelope(p, M, theta);
}

int compute_n_M(const JacobiParameters& p, int M, double eps) {
  require_partition_inputs(M, eps);
  return n_from_envelope(envelope(p, M, kPi / 2.0), M, eps);
}

int partition_curve(const JacobiParameters& p, int M, double eps, double theta) {
  require_partition_inputs(M, eps);
  return n_from_envelope(envelope(p, M, theta), M, eps);
}

int PartitionLayout::recurrence_limit(int i) const noexcept {
  int limit = N + 1;
  for (const auto& b : blocks) {
    if (i < b.i1 || i > b.i2) break;
    limit = b.j;
  }
  return limit;
}

PartitionLayout compute_partition(const JacobiParameters& p, int N, int M, double eps) {
  if (!p.in_core_square()) {
    throw DomainError("partition requires (alpha, beta) in (-1/2, 1/2]^2");
  }
  require_partition_inputs(M, eps);
  if (N < 1) throw std::invalid_argument("partition requires N >= 1");

  PartitionLayout layout;
  layout.N = N;
  layout.M = M;
  layout.eps = eps;
  layout.n_M = compute_n_M(p, M, eps);

  // With n_M = 0 (a vanishing envelope) the logarithms below need a floor.
  const double n_floor = std::max(layout.n_M, 1);
  if (N <= layout.n_M || N < 2) return layout;
  const double L = std::log(N / n_floor);
  layout.alpha_N = L > 0.0 ? std::min(1.0 / L, 0.5) : 0.5;
  layout.K = L > 0.0 ? static_cast<int>(std::ceil(L / std::log(1.0 / layout.alpha_N))) : 0;

  const AngleGrid grid(N);
  const auto g = envelope_on_grid(p, M, grid);
  int bar = 1;
  for (int i = 2; i < N; ++i) {
    if (g[static_cast<std::size_t>(i)] < g[static_cast<std::size_t>(bar)]) bar = i;
  }
  layout.theta_bar_index = bar;

  for (int k = 1; k <= layout.K; ++k) {
    const int j = static_cast<int>(std::floor(std::pow(layout.alpha_N, k) * N));
    if (j <= layout.n_M || j < 2) break;
    const double c2 = 2.0 * asymptotic_coefficient(p, j, M);
    auto certified = [&](int i) { return c2 * g[static_cast<std::size_t>(i)] < eps; };
    if (!certified(bar)) break;
    int i1 = bar;
    int i2 = bar;
    while (i1 - 1 >= 1 && certified(i1 - 1)) --i1;
    while (i2 + 1 <= N - 1 && certified(i2 + 1)) ++i2;
    layout.blocks.push_back({k, j, i1, i2});
  }
  return layout;
}

void write_partition_csv(std::ostream& out, const PartitionLayout& layout) {
  out << "N,M,eps,n_M,alpha_N,K\n";
  out << layout.N << ',' << layout.M << ',' << shortest_repr(layout.eps) << ',' << layout.n_M
      << ',' << shortest_repr(layout.alpha_N) << ',' << layout.K << '\n';
  out << "k,j_k,i_k1,i_k2\n";
  for (const auto& b : layout.blocks) {
    out << b.k << ',' << b.j << ',' << b.i1 << ',' << b.i2 << '\n';
  }
}

double ultraspherical_coefficient(double lambda, int n, int m) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("ultraspherical parameter lambda must lie in (0, 1)");
  }
  if (n < 0 || m < 0) throw std::invalid_argument("ultraspherical_coefficient: negative index");
  double c = std::exp2(lambda) / std::sqrt(kPi) * gamma_ratio(n + lambda + 0.5, n + lambda + 1.0);
  for (int k = 1; k <= m; ++k) {
    c *= (lambda + k - 1.0) * (k - lambda) / (2.0 * k * (n + lambda + k));
  }
  return c;
}

int ultraspherical_n_M(double lambda, int M, double eps) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("ultraspherical parameter lambda must lie in (0, 1)");
  }
  if (M < 1) throw std::invalid_argument("ultraspherical_n_M requires M >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("tolerance eps must be positive");
  // log of eps sqrt(pi) 2^M M! / (2^{lambda+1} (lambda)_M (1-lambda)_M)
  const double log_poch = std::lgamma(lambda + M) - std::lgamma(lambda) +
                          std::lgamma(1.0 - lambda + M) - std::lgamma(1.0 - lambda);
  const double log_bracket = std::log(eps) + 0.5 * std::log(kPi) + M * std::numbers::ln2 +
                             std::lgamma(M + 1.0) - (lambda + 1.0) * std::numbers::ln2 - log_poch;
  return floor_power(log_bracket, M);
}

}  // namespace chebjac
