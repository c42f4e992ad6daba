#ifndef CHEBJAC_QUADRATURE_HPP
#define CHEBJAC_QUADRATURE_HPP

#include <vector>

#include "chebjac/scalar_kernels.hpp"
#include "chebjac/trig_transforms.hpp"

namespace chebjac {

/// mu_n = integral of T_n(x) (1-x)^alpha (1+x)^beta over [-1, 1], n = 0..N.
struct ModifiedMoments {
  JacobiParameters p;
  int N;
  std::vector<double> mu;
};

/// Forward three-term recurrence for the moments. Stable only in the core
/// square; other parameters throw DomainError.
ModifiedMoments modified_moments(const JacobiParameters& p, int N);

/// Clenshaw-Curtis weights on the N+1 Lobatto points cos(pi j / N) for the
/// Jacobi weight: sum_j w_j f(x_j) integrates every degree-N polynomial f
/// exactly.
struct QuadratureWeights {
  int N;
  std::vector<double> w;
};

QuadratureWeights cc_weights(const ModifiedMoments& moments, TrigWorkspace& ws);
QuadratureWeights cc_weights(const JacobiParameters& p, int N);

}  // namespace chebjac

#endif  // CHEBJAC_QUADRATURE_HPP
