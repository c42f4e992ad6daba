#include "chebjac/recurrences.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace chebjac {

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

EvaluationRegion classify_angle(double theta) noexcept {
  if (theta < kPi / 4.0) return EvaluationRegion::near_plus_one;
  if (theta > 3.0 * kPi / 4.0) return EvaluationRegion::near_minus_one;
  return EvaluationRegion::interior;
}

AnglePoint AnglePoint::from_angle(double theta) noexcept {
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  return {std::cos(theta), -2.0 * s * s, 2.0 * c * c};
}

AngleGrid::AngleGrid(int N) : N_(N) {
  if (N < 1) throw std::invalid_argument("AngleGrid: N must be >= 1");
}

double AngleGrid::angle(int j) const noexcept { return kPi * j / N_; }

AnglePoint AngleGrid::point(int j) const noexcept {
  const double theta = kPi * j / N_;
  const double phi = kPi * (N_ - j) / N_;
  const double s = std::sin(theta / 2.0);
  const double c = std::sin(phi / 2.0);
  const double x = 2 * j <= N_ ? std::cos(theta) : -std::cos(phi);
  return {x, -2.0 * s * s, 2.0 * c * c};
}

EvaluationRegion AngleGrid::region(int j) const noexcept {
  const std::int64_t four_j = 4 * static_cast<std::int64_t>(j);
  if (four_j < N_) return EvaluationRegion::near_plus_one;
  if (four_j > 3 * static_cast<std::int64_t>(N_)) return EvaluationRegion::near_minus_one;
  return EvaluationRegion::interior;
}

RecurrenceTable::RecurrenceTable(const JacobiParameters& p, int max_degree)
    : params_(p), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("RecurrenceTable: negative degree");
  const auto n_ab = static_cast<std::size_t>(max_degree) + 2;
  A_.resize(n_ab);
  B_.resize(n_ab);
  C_.resize(n_ab);
  for (std::size_t n = 0; n < n_ab; ++n) {
    const auto rc = recurrence_coefficients(p, static_cast<int>(n));
    A_[n] = rc.A;
    B_[n] = rc.B;
    C_[n] = rc.C;
  }
  const auto n_r = static_cast<std::size_t>(max_degree) + 1;
  rf_plus_.resize(n_r);
  rf_minus_.resize(n_r);
  rb_plus_.assign(n_r, 0.0);
  rb_minus_.assign(n_r, 0.0);
  for (std::size_t n = 0; n < n_r; ++n) {
    const int k = static_cast<int>(n);
    rf_plus_[n] = forward_ratio(p, k, Endpoint::plus_one);
    rf_minus_[n] = forward_ratio(p, k, Endpoint::minus_one);
    if (k >= 1) {
      rb_plus_[n] = backward_ratio(p, k, Endpoint::plus_one);
      rb_minus_[n] = backward_ratio(p, k, Endpoint::minus_one);
    }
  }
  auto reciprocal = [](const std::vector<double>& r) {
    std::vector<double> inv(r.size(), 0.0);
    for (std::size_t n = 0; n < r.size(); ++n) inv[n] = r[n] != 0.0 ? 1.0 / r[n] : 0.0;
    return inv;
  };
  rf_plus_inv_ = reciprocal(rf_plus_);
  rf_minus_inv_ = reciprocal(rf_minus_);
  rb_plus_inv_ = reciprocal(rb_plus_);
  rb_minus_inv_ = reciprocal(rb_minus_);
}

void RecurrenceTable::require_degree(std::size_t count) const {
  if (count > static_cast<std::size_t>(max_degree_) + 1) {
    throw std::out_of_range("RecurrenceTable: degree exceeds table size");
  }
}

void RecurrenceTable::forward(const AnglePoint& pt, std::span<double> out) const {
  if (out.empty()) return;
  require_degree(out.size());
  const double x = pt.x;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = A_[0] * x + B_[0];
  for (std::size_t n = 1; n + 1 < out.size(); ++n) {
    out[n + 1] = (A_[n] * x + B_[n]) * out[n] - C_[n] * out[n - 1];
  }
}

void RecurrenceTable::forward_reinsch(const AnglePoint& pt, Endpoint end,
                                      std::span<double> out) const {
  if (out.empty()) return;
  require_degree(out.size());
  const double dx = pt.offset(end);
  const bool plus = end == Endpoint::plus_one;
  const auto& r = plus ? rf_plus_ : rf_minus_;
  const auto& r_inv = plus ? rf_plus_inv_ : rf_minus_inv_;
  double p = 1.0;
  double d = 0.0;
  out[0] = p;
  for (std::size_t n = 0; n + 1 < out.size(); ++n) {
    d = (A_[n] * dx * p + C_[n] * d) * r_inv[n];
    p = (p + d) * r[n];
    out[n + 1] = p;
  }
}

double RecurrenceTable::clenshaw(std::span<const double> c, const AnglePoint& pt) const {
  if (c.empty()) return 0.0;
  require_degree(c.size());
  const double x = pt.x;
  double u1 = 0.0;  // u_{n+1}
  double u2 = 0.0;  // u_{n+2}
  for (std::size_t k = c.size(); k-- > 0;) {
    const double u = (A_[k] * x + B_[k]) * u1 - C_[k + 1] * u2 + c[k];
    u2 = u1;
    u1 = u;
  }
  return u1;
}

double RecurrenceTable::clenshaw_reinsch(std::span<const double> c, const AnglePoint& pt,
                                         Endpoint end) const {
  if (c.empty()) return 0.0;
  require_degree(c.size());
  const double dx = pt.offset(end);
  const bool plus = end == Endpoint::plus_one;
  const auto& r = plus ? rb_plus_ : rb_minus_;
  const auto& r_inv = plus ? rb_plus_inv_ : rb_minus_inv_;
  double u = 0.0;  // u_{n+1}
  double d = 0.0;  // d_{n+1}
  for (std::size_t n = c.size() - 1; n >= 1; --n) {
    d = (A_[n] * dx * u + C_[n + 1] * d + c[n]) * r[n];
    u = (u + d) * r_inv[n];
  }
  return A_[0] * dx * u + C_[1] * d + c[0];
}

double RecurrenceTable::evaluate(std::span<const double> c, const AnglePoint& pt,
                                 EvaluationRegion region) const {
  switch (region) {
    case EvaluationRegion::near_plus_one:
      return clenshaw_reinsch(c, pt, Endpoint::plus_one);
    case EvaluationRegion::near_minus_one:
      return clenshaw_reinsch(c, pt, Endpoint::minus_one);
    case EvaluationRegion::interior:
      break;
  }
  return clenshaw(c, pt);
}

void RecurrenceTable::accumulate(const AnglePoint& pt, EvaluationRegion region, double weight,
                                 std::span<double> h) const {
  if (h.empty()) return;
  require_degree(h.size());
  if (region == EvaluationRegion::interior) {
    const double x = pt.x;
    double p0 = 1.0;
    h[0] += weight;
    if (h.size() == 1) return;
    double p1 = A_[0] * x + B_[0];
    h[1] += weight * p1;
    for (std::size_t n = 1; n + 1 < h.size(); ++n) {
      const double p2 = (A_[n] * x + B_[n]) * p1 - C_[n] * p0;
      h[n + 1] += weight * p2;
      p0 = p1;
      p1 = p2;
    }
    return;
  }
  const bool plus = region == EvaluationRegion::near_plus_one;
  const double dx = pt.offset(plus ? Endpoint::plus_one : Endpoint::minus_one);
  const auto& r = plus ? rf_plus_ : rf_minus_;
  const auto& r_inv = plus ? rf_plus_inv_ : rf_minus_inv_;
  double p = 1.0;
  double d = 0.0;
  h[0] += weight;
  for (std::size_t n = 0; n + 1 < h.size(); ++n) {
    d = (A_[n] * dx * p + C_[n] * d) * r_inv[n];
    p = (p + d) * r[n];
    h[n + 1] += weight * p;
  }
}

void RecurrenceTable::evaluate_lanes(std::span<const double> c, const AnglePoint* pts,
                                     EvaluationRegion region, double* out) const {
  constexpr int L = kLanes;
  if (c.empty()) {
    for (int l = 0; l < L; ++l) out[l] = 0.0;
    return;
  }
  require_degree(c.size());
  if (region == EvaluationRegion::interior) {
    double x[L], u1[L], u2[L];
    for (int l = 0; l < L; ++l) {
      x[l] = pts[l].x;
      u1[l] = 0.0;
      u2[l] = 0.0;
    }
    for (std::size_t k = c.size(); k-- > 0;) {
      const double a = A_[k], b = B_[k], cc = C_[k + 1], ck = c[k];
      for (int l = 0; l < L; ++l) {
        const double u = (a * x[l] + b) * u1[l] - cc * u2[l] + ck;
        u2[l] = u1[l];
        u1[l] = u;
      }
    }
    for (int l = 0; l < L; ++l) out[l] = u1[l];
    return;
  }
  const bool plus = region == EvaluationRegion::near_plus_one;
  const Endpoint end = plus ? Endpoint::plus_one : Endpoint::minus_one;
  const auto& r = plus ? rb_plus_ : rb_minus_;
  const auto& r_inv = plus ? rb_plus_inv_ : rb_minus_inv_;
  double dx[L], u[L], d[L];
  for (int l = 0; l < L; ++l) {
    dx[l] = pts[l].offset(end);
    u[l] = 0.0;
    d[l] = 0.0;
  }
  for (std::size_t n = c.size() - 1; n >= 1; --n) {
    const double a = A_[n], cc = C_[n + 1], cn = c[n], rn = r[n], rin = r_inv[n];
    for (int l = 0; l < L; ++l) {
      d[l] = (a * dx[l] * u[l] + cc * d[l] + cn) * rn;
      u[l] = (u[l] + d[l]) * rin;
    }
  }
  for (int l = 0; l < L; ++l) out[l] = A_[0] * dx[l] * u[l] + C_[1] * d[l] + c[0];
}

namespace {

// Pairwise sum of the lanes: three dependent adds instead of seven.
inline double lane_sum(const double* v) {
  static_assert(RecurrenceTable::kLanes == 8);
  return ((v[0] + v[1]) + (v[2] + v[3])) + ((v[4] + v[5]) + (v[6] + v[7]));
}

}  // namespace

void RecurrenceTable::accumulate_lanes(const AnglePoint* pts, EvaluationRegion region,
                                       const double* weights, std::span<double> h) const {
  constexpr int L = kLanes;
  if (h.empty()) return;
  require_degree(h.size());
  h[0] += lane_sum(weights);
  if (h.size() == 1) return;
  // The recurrences are linear, so each lane carries w_l P_n(x_l) directly.
  if (region == EvaluationRegion::interior) {
    double x[L], p0[L], p1[L];
    for (int l = 0; l < L; ++l) {
      x[l] = pts[l].x;
      p0[l] = weights[l];
      p1[l] = (A_[0] * x[l] + B_[0]) * weights[l];
    }
    h[1] += lane_sum(p1);
    for (std::size_t n = 1; n + 1 < h.size(); ++n) {
      const double a = A_[n], b = B_[n], cc = C_[n];
      for (int l = 0; l < L; ++l) {
        const double p2 = (a * x[l] + b) * p1[l] - cc * p0[l];
        p0[l] = p1[l];
        p1[l] = p2;
      }
      h[n + 1] += lane_sum(p1);
    }
    return;
  }
  const bool plus = region == EvaluationRegion::near_plus_one;
  const Endpoint end = plus ? Endpoint::plus_one : Endpoint::minus_one;
  const auto& r = plus ? rf_plus_ : rf_minus_;
  const auto& r_inv = plus ? rf_plus_inv_ : rf_minus_inv_;
  double dx[L], p[L], d[L];
  for (int l = 0; l < L; ++l) {
    dx[l] = pts[l].offset(end);
    p[l] = weights[l];
    d[l] = 0.0;
  }
  for (std::size_t n = 0; n + 1 < h.size(); ++n) {
    const double a = A_[n], cc = C_[n], rn = r[n], rin = r_inv[n];
    for (int l = 0; l < L; ++l) {
      d[l] = (a * dx[l] * p[l] + cc * d[l]) * rin;
      p[l] = (p[l] + d[l]) * rn;
    }
    h[n + 1] += lane_sum(p);
  }
}

std::vector<double> jacobi_forward(const JacobiParameters& p, int N, double theta) {
  RecurrenceTable table(p, N);
  std::vector<double> out(static_cast<std::size_t>(N) + 1);
  table.forward(AnglePoint::from_angle(theta), out);
  return out;
}

std::vector<double> jacobi_forward_reinsch(const JacobiParameters& p, int N, double theta,
                                           Endpoint end) {
  RecurrenceTable table(p, N);
  std::vector<double> out(static_cast<std::size_t>(N) + 1);
  table.forward_reinsch(AnglePoint::from_angle(theta), end, out);
  return out;
}

double clenshaw_smith(const JacobiParameters& p, std::span<const double> c, double theta) {
  if (c.empty()) return 0.0;
  RecurrenceTable table(p, static_cast<int>(c.size()) - 1);
  return table.clenshaw(c, AnglePoint::from_angle(theta));
}

double clenshaw_smith_reinsch(const JacobiParameters& p, std::span<const double> c, double theta,
                              Endpoint end) {
  if (c.empty()) return 0.0;
  RecurrenceTable table(p, static_cast<int>(c.size()) - 1);
  return table.clenshaw_reinsch(c, AnglePoint::from_angle(theta), end);
}

std::vector<double> evaluate_expansion(const JacobiParameters& p, std::span<const double> c,
                                       const AngleGrid& grid) {
  std::vector<double> values(static_cast<std::size_t>(grid.size()), 0.0);
  if (c.empty()) return values;
  RecurrenceTable table(p, static_cast<int>(c.size()) - 1);
  for (int j = 0; j < grid.size(); ++j) {
    values[static_cast<std::size_t>(j)] = table.evaluate(c, grid.point(j), grid.region(j));
  }
  return values;
}

}  // namespace chebjac
