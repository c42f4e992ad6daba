#include "chebjac/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chebjac/errors.hpp"

namespace chebjac {

namespace {

int validated_grid_degree(Direction direction, const JacobiParameters& p, int N, int M,
                          double eps) {
  if (!p.in_core_square()) {
    throw DomainError(
        "transform plans need (alpha, beta) in (-1/2, 1/2]^2; shift the parameters by whole "
        "units first (increment/decrement or jacobi_to_jacobi)");
  }
  if (N < 1) throw std::invalid_argument("transform degree N must be >= 1");
  if (M < 2) throw std::invalid_argument("number of asymptotic terms M must be >= 2");
  if (!(eps > 0.0)) throw std::invalid_argument("tolerance eps must be positive");
  if (direction == Direction::inverse && N > (1 << 29)) {
    throw std::invalid_argument("transform degree too large");
  }
  return direction == Direction::forward ? N : 2 * N;
}

void require_length(std::span<const double> c, int N) {
  if (c.size() != static_cast<std::size_t>(N) + 1) {
    throw std::invalid_argument("coefficient vector length does not match the plan degree");
  }
}

void flip_odd(std::vector<double>& c) {
  for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
}

// Coefficients in basis (a, b) to basis (a, b + 1):
//   P_n^{(a,b)} = lo_n P_n^{(a,b+1)} + hi_n P_{n-1}^{(a,b+1)},
//   lo_n = (a+b+n+1)/(a+b+2n+1) (lo_0 = 1), hi_n = (a+n)/(a+b+2n+1).
double beta_lo(double a, double b, int n) {
  return n == 0 ? 1.0 : (a + b + n + 1.0) / (a + b + 2.0 * n + 1.0);
}
double beta_hi(double a, double b, int n) { return (a + n) / (a + b + 2.0 * n + 1.0); }

std::vector<double> beta_up(const std::vector<double>& c, double a, double b) {
  const int N = static_cast<int>(c.size()) - 1;
  std::vector<double> d(c.size());
  for (int n = 0; n <= N; ++n) {
    double v = beta_lo(a, b, n) * c[n];
    if (n < N) v += beta_hi(a, b, n + 1) * c[n + 1];
    d[n] = v;
  }
  return d;
}

// Inverse of beta_up: d holds (a, b + 1) coefficients, result is in (a, b).
std::vector<double> beta_down(const std::vector<double>& d, double a, double b) {
  const int N = static_cast<int>(d.size()) - 1;
  std::vector<double> c(d.size());
  c[N] = d[N] / beta_lo(a, b, N);
  for (int n = N - 1; n >= 0; --n) {
    c[n] = (d[n] - beta_hi(a, b, n + 1) * c[n + 1]) / beta_lo(a, b, n);
  }
  return c;
}

std::vector<double> alpha_up(std::vector<double> c, double a, double b) {
  flip_odd(c);
  auto d = beta_up(c, b, a);
  flip_odd(d);
  return d;
}

std::vector<double> alpha_down(std::vector<double> d, double a, double b) {
  flip_odd(d);
  auto c = beta_down(d, b, a);
  flip_odd(c);
  return c;
}

const JacobiParameters& jacobi_parameters(const CoefficientVector& c) { return c.parameters(); }

int integer_difference(double from, double to) {
  const double d = to - from;
  const double k = std::round(d);
  if (std::abs(d - k) > 1e-12 * std::max(1.0, std::abs(d))) {
    throw DomainError("Jacobi parameters differ by a non-integer amount; no shift connects them");
  }
  return static_cast<int>(k);
}

}  // namespace

CoefficientVector::CoefficientVector(Basis basis, std::vector<double> data)
    : basis_(std::move(basis)), data_(std::move(data)) {
  if (data_.empty()) throw std::invalid_argument("coefficient vector must not be empty");
  for (double x : data_) {
    if (!std::isfinite(x)) throw std::invalid_argument("coefficient vector has non-finite entry");
  }
}

const JacobiParameters& CoefficientVector::parameters() const {
  if (const auto* j = std::get_if<JacobiBasis>(&basis_)) return j->p;
  throw std::invalid_argument("expected coefficients in a Jacobi basis");
}

TransformWorkspace::TransformWorkspace(const TrigWorkspace& trig)
    : trig_(trig), z_(trig_.size()), y_(trig_.size()), s_(trig_.size()) {}

TransformPlan::TransformPlan(Direction direction, const JacobiParameters& p, int N, int M,
                             double eps)
    : direction_(direction),
      params_(p),
      N_(N),
      M_(M),
      eps_(eps),
      grid_(validated_grid_degree(direction, p, N, M, eps)),
      layout_(compute_partition(p, grid_.degree(), M, eps)),
      table_(p, N),
      trig_prototype_(std::make_shared<const TrigWorkspace>(grid_.degree())) {
  const int G = grid_.degree();
  recurrence_limit_.resize(static_cast<std::size_t>(G) + 1);
  for (int i = 0; i <= G; ++i) {
    recurrence_limit_[static_cast<std::size_t>(i)] = std::min(layout_.recurrence_limit(i), N + 1);
    points_.push_back(grid_.point(i));
    regions_.push_back(grid_.region(i));
  }
  for (int i = 0; i <= G;) {
    int last = i;
    while (last < G && recurrence_limit_[last + 1] == recurrence_limit_[i] &&
           regions_[last + 1] == regions_[i]) {
      ++last;
    }
    runs_.push_back({i, last});
    i = last + 1;
  }

  if (!layout_.pure_recurrence()) {
    modulations_.reserve(static_cast<std::size_t>(M));
    for (int m = 0; m < M; ++m) modulations_.push_back(modulation_on_grid(p, m, grid_));

    const double ab = p.alpha() + p.beta();
    const int lo = layout_.blocks.back().j;
    coefficients_.assign(static_cast<std::size_t>(M), std::vector<double>(N + 1, 0.0));
    for (int n = lo; n <= N; ++n) {
      double c = asymptotic_coefficient(p, n, 0);
      coefficients_[0][n] = c;
      for (int m = 1; m < M; ++m) {
        c /= 2.0 * (2.0 * n + ab + m + 1.0);
        coefficients_[m][n] = c;
      }
    }
  }

  if (direction == Direction::inverse) {
    TrigWorkspace ws(*trig_prototype_);
    weights_ = cc_weights(modified_moments(p, G), ws).w;
    inverse_norms_.resize(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) inverse_norms_[n] = 1.0 / orthonormality_constant(p, n);
  }
}

TransformWorkspace TransformPlan::make_workspace() const {
  return TransformWorkspace(*trig_prototype_);
}

std::vector<double> TransformPlan::execute(std::span<const double> c,
                                           TransformWorkspace& ws) const {
  if (ws.trig_.degree() != grid_.degree()) {
    throw std::invalid_argument("workspace was made for a different plan size");
  }
  return direction_ == Direction::forward ? execute_forward(c, ws) : execute_inverse(c, ws);
}

void TransformPlan::add_blocks_forward(std::span<const double> c, TransformWorkspace& ws,
                                       std::span<double> values) const {
  auto& z = ws.z_;
  auto& y = ws.y_;
  auto& s = ws.s_;
  for (std::size_t b = 0; b < layout_.blocks.size(); ++b) {
    const auto& blk = layout_.blocks[b];
    const int lo = blk.j;
    const int hi = layout_.block_last_degree(b);
    for (int m = 0; m < M_; ++m) {
      const auto& cm = coefficients_[static_cast<std::size_t>(m)];
      std::fill(z.begin(), z.end(), 0.0);
      for (int n = lo; n <= hi; ++n) z[n] = cm[n] * c[n];
      ws.trig_.dct1(z, y);
      ws.trig_.dst1_bordered(z, s);
      const auto& mod = modulations_[static_cast<std::size_t>(m)];
      for (int i = blk.i1; i <= blk.i2; ++i) values[i] += mod.u[i] * y[i] + mod.v[i] * s[i];
    }
  }
}

void TransformPlan::add_blocks_transposed(std::span<const double> g, TransformWorkspace& ws,
                                          std::span<double> h) const {
  auto& z = ws.z_;
  auto& y = ws.y_;
  auto& s = ws.s_;
  for (std::size_t b = 0; b < layout_.blocks.size(); ++b) {
    const auto& blk = layout_.blocks[b];
    const int lo = blk.j;
    const int hi = std::min(layout_.block_last_degree(b), N_);
    if (lo > hi) continue;
    for (int m = 0; m < M_; ++m) {
      const auto& mod = modulations_[static_cast<std::size_t>(m)];
      std::fill(z.begin(), z.end(), 0.0);
      for (int i = blk.i1; i <= blk.i2; ++i) z[i] = mod.u[i] * g[i];
      ws.trig_.dct1(z, y);
      for (int i = blk.i1; i <= blk.i2; ++i) z[i] = mod.v[i] * g[i];
      ws.trig_.dst1_bordered(z, s);
      const auto& cm = coefficients_[static_cast<std::size_t>(m)];
      for (int n = lo; n <= hi; ++n) h[n] += cm[n] * (y[n] + s[n]);
    }
  }
}

void TransformPlan::add_recurrence_forward(std::span<const double> c,
                                           std::span<double> values) const {
  constexpr int L = RecurrenceTable::kLanes;
  double lane_out[L];
  for (const auto& run : runs_) {
    const auto limit = static_cast<std::size_t>(recurrence_limit_[run.first]);
    if (limit == 0) continue;
    const auto cs = c.first(limit);
    const auto region = regions_[run.first];
    int i = run.first;
    for (; i + L - 1 <= run.last; i += L) {
      table_.evaluate_lanes(cs, &points_[i], region, lane_out);
      for (int l = 0; l < L; ++l) values[i + l] += lane_out[l];
    }
    for (; i <= run.last; ++i) values[i] += table_.evaluate(cs, points_[i], region);
  }
}

void TransformPlan::add_recurrence_transposed(std::span<const double> g,
                                              std::span<double> h) const {
  constexpr int L = RecurrenceTable::kLanes;
  for (const auto& run : runs_) {
    const auto limit = static_cast<std::size_t>(recurrence_limit_[run.first]);
    if (limit == 0) continue;
    const auto hs = h.first(limit);
    const auto region = regions_[run.first];
    int i = run.first;
    for (; i + L - 1 <= run.last; i += L) {
      table_.accumulate_lanes(&points_[i], region, &g[i], hs);
    }
    for (; i <= run.last; ++i) table_.accumulate(points_[i], region, g[i], hs);
  }
}

std::vector<double> TransformPlan::execute_forward(std::span<const double> c,
                                                   TransformWorkspace& ws) const {
  require_length(c, N_);
  const int G = grid_.degree();
  std::vector<double> values(static_cast<std::size_t>(G) + 1, 0.0);
  add_blocks_forward(c, ws, values);
  add_recurrence_forward(c, values);
  return chebyshev_analysis(ws.trig_, values);
}

std::vector<double> TransformPlan::execute_inverse(std::span<const double> c,
                                                   TransformWorkspace& ws) const {
  require_length(c, N_);
  const int G = grid_.degree();
  auto& z = ws.z_;
  std::fill(z.begin(), z.end(), 0.0);
  std::copy(c.begin(), c.end(), z.begin());
  std::vector<double> g(static_cast<std::size_t>(G) + 1);
  ws.trig_.dct1(z, g);
  for (int i = 0; i <= G; ++i) g[i] *= weights_[i];

  std::vector<double> h(static_cast<std::size_t>(N_) + 1, 0.0);
  add_blocks_transposed(g, ws, h);
  add_recurrence_transposed(g, h);
  for (int n = 0; n <= N_; ++n) h[n] *= inverse_norms_[n];
  return h;
}

TransformPlan make_plan(Direction direction, const JacobiParameters& p, int N, int M,
                        double eps) {
  return TransformPlan(direction, p, N, M, eps);
}

std::vector<double> forward(const TransformPlan& plan, std::span<const double> c,
                            TransformWorkspace& ws) {
  if (plan.direction() != Direction::forward) {
    throw std::invalid_argument("forward transform needs a forward plan");
  }
  return plan.execute(c, ws);
}

std::vector<double> forward(const TransformPlan& plan, std::span<const double> c) {
  auto ws = plan.make_workspace();
  return forward(plan, c, ws);
}

CoefficientVector forward(const TransformPlan& plan, const CoefficientVector& c) {
  if (c.is_chebyshev() || !(c.parameters() == plan.parameters())) {
    throw std::invalid_argument("forward transform input must be in the plan's Jacobi basis");
  }
  return CoefficientVector(ChebyshevBasis{}, forward(plan, std::span<const double>(c.data())));
}

std::vector<double> inverse(const TransformPlan& plan, std::span<const double> c,
                            TransformWorkspace& ws) {
  if (plan.direction() != Direction::inverse) {
    throw std::invalid_argument("inverse transform needs an inverse plan");
  }
  return plan.execute(c, ws);
}

std::vector<double> inverse(const TransformPlan& plan, std::span<const double> c) {
  auto ws = plan.make_workspace();
  return inverse(plan, c, ws);
}

CoefficientVector inverse(const TransformPlan& plan, const CoefficientVector& c) {
  if (!c.is_chebyshev()) {
    throw std::invalid_argument("inverse transform input must be Chebyshev coefficients");
  }
  return CoefficientVector(JacobiBasis{plan.parameters()},
                           inverse(plan, std::span<const double>(c.data())));
}

CoefficientVector increment_beta(const CoefficientVector& c) {
  const auto& p = jacobi_parameters(c);
  return CoefficientVector(JacobiBasis{{p.alpha(), p.beta() + 1.0}},
                           beta_up(c.data(), p.alpha(), p.beta()));
}

CoefficientVector decrement_beta(const CoefficientVector& c) {
  const auto& p = jacobi_parameters(c);
  if (!(p.beta() - 1.0 > -1.0)) {
    throw DomainError("decrementing beta would leave the admissible range beta > -1");
  }
  return CoefficientVector(JacobiBasis{{p.alpha(), p.beta() - 1.0}},
                           beta_down(c.data(), p.alpha(), p.beta() - 1.0));
}

CoefficientVector increment_alpha(const CoefficientVector& c) {
  const auto& p = jacobi_parameters(c);
  return CoefficientVector(JacobiBasis{{p.alpha() + 1.0, p.beta()}},
                           alpha_up(c.data(), p.alpha(), p.beta()));
}

CoefficientVector decrement_alpha(const CoefficientVector& c) {
  const auto& p = jacobi_parameters(c);
  if (!(p.alpha() - 1.0 > -1.0)) {
    throw DomainError("decrementing alpha would leave the admissible range alpha > -1");
  }
  return CoefficientVector(JacobiBasis{{p.alpha() - 1.0, p.beta()}},
                           alpha_down(c.data(), p.alpha() - 1.0, p.beta()));
}

CoefficientVector shift_parameters(const CoefficientVector& c, const JacobiParameters& target) {
  const auto& p = jacobi_parameters(c);
  int remaining_b = integer_difference(p.beta(), target.beta());
  int remaining_a = integer_difference(p.alpha(), target.alpha());
  auto data = c.data();
  // Intermediate parameters are expressed from the target so the last step
  // lands on it exactly.
  const double a0 = p.alpha();
  for (; remaining_b > 0; --remaining_b) {
    data = beta_up(data, a0, target.beta() - remaining_b);
  }
  for (; remaining_b < 0; ++remaining_b) {
    data = beta_down(data, a0, target.beta() - remaining_b - 1.0);
  }
  for (; remaining_a > 0; --remaining_a) {
    data = alpha_up(data, target.alpha() - remaining_a, target.beta());
  }
  for (; remaining_a < 0; ++remaining_a) {
    data = alpha_down(data, target.alpha() - remaining_a - 1.0, target.beta());
  }
  return CoefficientVector(JacobiBasis{target}, std::move(data));
}

double core_representative(double x) { return x - std::ceil(x - 0.5); }

CoefficientVector jacobi_to_jacobi(const CoefficientVector& c, const JacobiParameters& target,
                                   int M) {
  const auto& source = jacobi_parameters(c);
  const JacobiParameters source_core(core_representative(source.alpha()),
                                     core_representative(source.beta()));
  const JacobiParameters target_core(core_representative(target.alpha()),
                                     core_representative(target.beta()));
  if (c.degree() == 0) return CoefficientVector(JacobiBasis{target}, c.data());
  auto shifted = shift_parameters(c, source_core);
  if (source_core == target_core) return shift_parameters(shifted, target);

  const int N = c.degree();
  const auto fwd = make_plan(Direction::forward, source_core, N, M);
  const auto inv = make_plan(Direction::inverse, target_core, N, M);
  const auto cheb = forward(fwd, std::span<const double>(shifted.data()));
  auto jac = inverse(inv, std::span<const double>(cheb));
  return shift_parameters(CoefficientVector(JacobiBasis{target_core}, std::move(jac)), target);
}

}  // namespace chebjac
