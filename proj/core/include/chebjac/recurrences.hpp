#ifndef CHEBJAC_RECURRENCES_HPP
#define CHEBJAC_RECURRENCES_HPP

#include <span>
#include <vector>

#include "chebjac/scalar_kernels.hpp"

namespace chebjac {

/// Where an angle sits relative to the breakpoints pi/4 and 3pi/4. The
/// breakpoints themselves belong to the interior.
enum class EvaluationRegion { interior, near_plus_one, near_minus_one };

EvaluationRegion classify_angle(double theta) noexcept;

/// x = cos(theta) together with x - 1 and x + 1, each computed from a half
/// angle identity so that they keep full relative accuracy near the ends.
struct AnglePoint {
  double x;
  double x_minus_one;
  double x_plus_one;

  static AnglePoint from_angle(double theta) noexcept;
  double offset(Endpoint end) const noexcept {
    return end == Endpoint::plus_one ? x_minus_one : x_plus_one;
  }
};

/// N+1 equally spaced angles theta_j = pi j / N, j = 0..N. cos(theta_j) are
/// the Chebyshev-Lobatto points in decreasing order.
class AngleGrid {
 public:
  explicit AngleGrid(int N);

  int degree() const noexcept { return N_; }
  int size() const noexcept { return N_ + 1; }
  double angle(int j) const noexcept;

  /// Grid point j; quantities near theta = pi come from the complementary
  /// angle pi (N - j) / N, which is exact in relative terms.
  AnglePoint point(int j) const noexcept;

  /// Region of grid index j, decided exactly on the integers 4j vs N and 3N.
  EvaluationRegion region(int j) const noexcept;

 private:
  int N_;
};

/// Three-term recurrence data for one parameter pair up to a maximum degree:
/// A_n, B_n, C_n and the endpoint ratios r_n^f(+-1), r_n^b(+-1). Immutable
/// once built; all evaluation methods are const and thread-safe.
class RecurrenceTable {
 public:
  RecurrenceTable(const JacobiParameters& p, int max_degree);

  const JacobiParameters& parameters() const noexcept { return params_; }
  int max_degree() const noexcept { return max_degree_; }

  /// P_0..P_{out.size()-1} at x by the plain forward recurrence.
  void forward(const AnglePoint& pt, std::span<double> out) const;

  /// Same values by Reinsch's modified forward recurrence anchored at `end`.
  void forward_reinsch(const AnglePoint& pt, Endpoint end, std::span<double> out) const;

  /// sum_n c_n P_n(x) by the Clenshaw-Smith algorithm.
  double clenshaw(std::span<const double> c, const AnglePoint& pt) const;

  /// sum_n c_n P_n(x) by Reinsch's modified Clenshaw-Smith algorithm.
  double clenshaw_reinsch(std::span<const double> c, const AnglePoint& pt, Endpoint end) const;

  /// Clenshaw-Smith with the variant chosen by region.
  double evaluate(std::span<const double> c, const AnglePoint& pt, EvaluationRegion region) const;

  /// h[n] += weight * P_n(x) for n < h.size(), with the forward recurrence
  /// variant chosen by region.
  void accumulate(const AnglePoint& pt, EvaluationRegion region, double weight,
                  std::span<double> h) const;

  /// Number of points handled together by the *_lanes methods.
  static constexpr int kLanes = 8;

  /// evaluate() at kLanes points sharing one region; out[l] receives the sum
  /// at pts[l]. Interleaving independent recurrences hides their latency.
  void evaluate_lanes(std::span<const double> c, const AnglePoint* pts, EvaluationRegion region,
                      double* out) const;

  /// accumulate() for kLanes points sharing one region and degree range.
  void accumulate_lanes(const AnglePoint* pts, EvaluationRegion region, const double* weights,
                        std::span<double> h) const;

 private:
  void require_degree(std::size_t count) const;

  JacobiParameters params_;
  int max_degree_;
  // Indexed by n = 0..max_degree + 1.
  std::vector<double> A_, B_, C_;
  // r^f indexed n = 0..max_degree; r^b indexed n = 1..max_degree (slot 0 unused).
  // The *_inv_ tables hold reciprocals so the inner loops never divide.
  std::vector<double> rf_plus_, rf_minus_, rb_plus_, rb_minus_;
  std::vector<double> rf_plus_inv_, rf_minus_inv_, rb_plus_inv_, rb_minus_inv_;
};

/// P_0..P_N at cos(theta).
std::vector<double> jacobi_forward(const JacobiParameters& p, int N, double theta);

std::vector<double> jacobi_forward_reinsch(const JacobiParameters& p, int N, double theta,
                                           Endpoint end);

double clenshaw_smith(const JacobiParameters& p, std::span<const double> c, double theta);

double clenshaw_smith_reinsch(const JacobiParameters& p, std::span<const double> c, double theta,
                              Endpoint end);

/// Values of sum_n c_n P_n on every grid angle, Reinsch-modified near the ends.
std::vector<double> evaluate_expansion(const JacobiParameters& p, std::span<const double> c,
                                       const AngleGrid& grid);

}  // namespace chebjac

#endif  // CHEBJAC_RECURRENCES_HPP
