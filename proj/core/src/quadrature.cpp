#include "chebjac/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "chebjac/errors.hpp"

namespace chebjac {

ModifiedMoments modified_moments(const JacobiParameters& p, int N) {
  if (!p.in_core_square()) {
    throw DomainError("modified moment recurrence requires (alpha, beta) in (-1/2, 1/2]^2");
  }
  if (N < 0) throw std::invalid_argument("modified_moments: N < 0");
  const double a = p.alpha();
  const double b = p.beta();
  ModifiedMoments out{p, N, std::vector<double>(static_cast<std::size_t>(N) + 1)};
  auto& mu = out.mu;
  // 2^{a+b+1} B(a+1, b+1); the arguments are small so tgamma is exact enough.
  mu[0] = std::exp2(a + b + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) /
          std::tgamma(a + b + 2.0);
  // Mean of x under the weight: heavier near +1 when beta > alpha.
  if (N >= 1) mu[1] = (b - a) / (a + b + 2.0) * mu[0];
  for (int n = 1; n < N; ++n) {
    mu[n + 1] = -(2.0 * (a - b) * mu[n] + (a + b - n + 2.0) * mu[n - 1]) / (a + b + n + 2.0);
  }
  return out;
}

QuadratureWeights cc_weights(const ModifiedMoments& moments, TrigWorkspace& ws) {
  const int N = moments.N;
  if (N < 1) throw std::invalid_argument("cc_weights: N must be >= 1");
  if (ws.degree() != N) throw std::invalid_argument("cc_weights: workspace size mismatch");
  // w_n = h_n / N (mu_0 + (-1)^n mu_N + 2 sum_{k=1}^{N-1} mu_k cos(pi k n / N)),
  // h_0 = h_N = 1/2 and h_n = 1 otherwise.
  std::vector<double> z(moments.mu);
  for (int k = 1; k < N; ++k) z[static_cast<std::size_t>(k)] *= 2.0;
  QuadratureWeights out{N, std::vector<double>(z.size())};
  ws.dct1(z, out.w);
  const double scale = 1.0 / N;
  for (auto& w : out.w) w *= scale;
  out.w.front() *= 0.5;
  out.w.back() *= 0.5;
  return out;
}

QuadratureWeights cc_weights(const JacobiParameters& p, int N) {
  TrigWorkspace ws(N);
  return cc_weights(modified_moments(p, N), ws);
}

}  // namespace chebjac
