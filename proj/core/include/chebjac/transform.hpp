#ifndef CHEBJAC_TRANSFORM_HPP
#define CHEBJAC_TRANSFORM_HPP

#include <limits>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "chebjac/asymptotics.hpp"
#include "chebjac/quadrature.hpp"
#include "chebjac/recurrences.hpp"
#include "chebjac/scalar_kernels.hpp"
#include "chebjac/trig_transforms.hpp"

namespace chebjac {

struct ChebyshevBasis {
  friend bool operator==(const ChebyshevBasis&, const ChebyshevBasis&) = default;
};

struct JacobiBasis {
  JacobiParameters p;
  friend bool operator==(const JacobiBasis&, const JacobiBasis&) = default;
};

using Basis = std::variant<ChebyshevBasis, JacobiBasis>;

/// Coefficients c_0..c_N of a polynomial in one basis. Entries must be finite.
class CoefficientVector {
 public:
  CoefficientVector(Basis basis, std::vector<double> data);

  const Basis& basis() const noexcept { return basis_; }
  const std::vector<double>& data() const noexcept { return data_; }
  std::vector<double>& data() noexcept { return data_; }
  int degree() const noexcept { return static_cast<int>(data_.size()) - 1; }

  bool is_chebyshev() const noexcept { return std::holds_alternative<ChebyshevBasis>(basis_); }
  /// Parameters of a Jacobi basis; throws std::invalid_argument for Chebyshev.
  const JacobiParameters& parameters() const;

 private:
  Basis basis_;
  std::vector<double> data_;
};

enum class Direction { forward, inverse };

/// Scratch state for executing one plan: trig workspace of the grid size plus
/// work vectors. One per concurrent execution.
class TransformWorkspace;

/// Immutable precomputation for one (direction, N, alpha, beta, M, eps).
///
/// The forward plan works on the N+1 Lobatto angles, the inverse plan on the
/// 2N+1 angles of the doubled grid. Executing a plan never modifies it, so a
/// plan may be shared between threads, each with its own workspace.
class TransformPlan {
 public:
  Direction direction() const noexcept { return direction_; }
  const JacobiParameters& parameters() const noexcept { return params_; }
  int degree() const noexcept { return N_; }
  int grid_degree() const noexcept { return grid_.degree(); }
  int terms() const noexcept { return M_; }
  double tolerance() const noexcept { return eps_; }
  const PartitionLayout& layout() const noexcept { return layout_; }
  bool pure_recurrence() const noexcept { return layout_.pure_recurrence(); }

  /// Inverse plans only: quadrature weights on the doubled grid.
  const std::vector<double>& quadrature_weights() const noexcept { return weights_; }
  /// Inverse plans only: 1 / A_n for n = 0..N.
  const std::vector<double>& inverse_norms() const noexcept { return inverse_norms_; }

  TransformWorkspace make_workspace() const;

  /// Runs the plan's direction on c (length N+1).
  std::vector<double> execute(std::span<const double> c, TransformWorkspace& ws) const;

  TransformPlan(Direction direction, const JacobiParameters& p, int N, int M, double eps);

 private:
  std::vector<double> execute_forward(std::span<const double> c, TransformWorkspace& ws) const;
  std::vector<double> execute_inverse(std::span<const double> c, TransformWorkspace& ws) const;
  void add_blocks_forward(std::span<const double> c, TransformWorkspace& ws,
                          std::span<double> values) const;
  void add_blocks_transposed(std::span<const double> g, TransformWorkspace& ws,
                             std::span<double> h) const;
  void add_recurrence_forward(std::span<const double> c, std::span<double> values) const;
  void add_recurrence_transposed(std::span<const double> g, std::span<double> h) const;

  Direction direction_;
  JacobiParameters params_;
  int N_;
  int M_;
  double eps_;
  AngleGrid grid_;
  PartitionLayout layout_;
  RecurrenceTable table_;
  // Per grid row: first degree taken by the asymptotic blocks (capped at N+1).
  std::vector<int> recurrence_limit_;
  std::vector<AnglePoint> points_;
  std::vector<EvaluationRegion> regions_;
  // Maximal runs [first, last] of rows sharing recurrence limit and region.
  struct RowRun {
    int first;
    int last;
  };
  std::vector<RowRun> runs_;
  // u_m, v_m on the grid and C_{n,m} for n = 0..N (zero outside the blocks).
  std::vector<ModulationPair> modulations_;
  std::vector<std::vector<double>> coefficients_;
  std::vector<double> weights_;
  std::vector<double> inverse_norms_;
  std::shared_ptr<const TrigWorkspace> trig_prototype_;
};

class TransformWorkspace {
 public:
  explicit TransformWorkspace(const TrigWorkspace& trig);

 private:
  friend class TransformPlan;

  TrigWorkspace trig_;
  std::vector<double> z_;
  std::vector<double> y_;
  std::vector<double> s_;
};

/// Plans require (alpha, beta) in (-1/2, 1/2]^2 (DomainError otherwise: use
/// the parameter shifts to reach other pairs), N >= 1 and M >= 2.
TransformPlan make_plan(Direction direction, const JacobiParameters& p, int N, int M = 7,
                        double eps = std::numeric_limits<double>::epsilon());

/// Jacobi coefficients c_0..c_N to Chebyshev coefficients of the same polynomial.
std::vector<double> forward(const TransformPlan& plan, std::span<const double> c,
                            TransformWorkspace& ws);
std::vector<double> forward(const TransformPlan& plan, std::span<const double> c);
CoefficientVector forward(const TransformPlan& plan, const CoefficientVector& c);

/// Chebyshev coefficients c_0..c_N to Jacobi coefficients of the same polynomial.
std::vector<double> inverse(const TransformPlan& plan, std::span<const double> c,
                            TransformWorkspace& ws);
std::vector<double> inverse(const TransformPlan& plan, std::span<const double> c);
CoefficientVector inverse(const TransformPlan& plan, const CoefficientVector& c);

/// Exact re-expansions between neighbouring Jacobi bases in O(N):
/// increment_beta maps (alpha, beta) coefficients to (alpha, beta + 1), and
/// decrement_beta undoes it. The alpha versions act through the reflection
/// P_n^{(a,b)}(-x) = (-1)^n P_n^{(b,a)}(x).
CoefficientVector increment_beta(const CoefficientVector& c);
CoefficientVector decrement_beta(const CoefficientVector& c);
CoefficientVector increment_alpha(const CoefficientVector& c);
CoefficientVector decrement_alpha(const CoefficientVector& c);

/// Shift a Jacobi expansion by whole units until its parameters equal `target`.
/// The parameter differences must be integers.
CoefficientVector shift_parameters(const CoefficientVector& c, const JacobiParameters& target);

/// The representative of x in (-1/2, 1/2] differing from it by an integer.
double core_representative(double x);

/// Re-expand Jacobi(gamma, delta) coefficients in the Jacobi(alpha, beta) basis
/// by shifting into the core square, transforming through Chebyshev
/// coefficients, and shifting out again.
CoefficientVector jacobi_to_jacobi(const CoefficientVector& c, const JacobiParameters& target,
                                   int M = 7);

}  // namespace chebjac

#endif  // CHEBJAC_TRANSFORM_HPP
