#ifndef CHEBJAC_TRIG_TRANSFORMS_HPP
#define CHEBJAC_TRIG_TRANSFORMS_HPP

#include <memory>
#include <span>
#include <vector>

namespace chebjac {

class TrigKernel;

/// Planned DCT-I / bordered DST-I of one size N (vectors of length N+1).
///
/// Conventions are unnormalized, with no endpoint halving:
///   dct1:          y_j = sum_{k=0}^{N} cos(pi j k / N) x_k
///   dst1_bordered: y_j = sum_{k=0}^{N} sin(pi j k / N) x_k  (y_0 = y_N = 0)
///
/// The planned kernels are immutable and shared between copies; each copy owns
/// its own scratch buffers, so one workspace must not be used by two threads at
/// once but copies may run concurrently. Execution does not allocate.
class TrigWorkspace {
 public:
  explicit TrigWorkspace(int N);
  TrigWorkspace(const TrigWorkspace& other);
  TrigWorkspace& operator=(const TrigWorkspace& other);
  TrigWorkspace(TrigWorkspace&&) noexcept;
  TrigWorkspace& operator=(TrigWorkspace&&) noexcept;
  ~TrigWorkspace();

  int degree() const noexcept;
  std::size_t size() const noexcept { return static_cast<std::size_t>(degree()) + 1; }

  /// x and y may alias.
  void dct1(std::span<const double> x, std::span<double> y);
  void dst1_bordered(std::span<const double> x, std::span<double> y);

 private:
  struct Buffer;
  void check(std::span<const double> x, std::span<double> y) const;

  std::shared_ptr<const TrigKernel> kernel_;
  std::unique_ptr<Buffer> buffer_;
};

std::vector<double> dct1(TrigWorkspace& w, std::span<const double> x);
std::vector<double> dst1_bordered(TrigWorkspace& w, std::span<const double> x);

/// Values sum_n c_n T_n(x_j) at the Lobatto points of the workspace size.
/// c may be shorter than N+1 (implicitly zero-padded).
std::vector<double> chebyshev_synthesis(TrigWorkspace& w, std::span<const double> c);

/// Inverse of chebyshev_synthesis: c = (2/N) H dct1(H v), H = diag(1/2, 1, ..., 1, 1/2).
std::vector<double> chebyshev_analysis(TrigWorkspace& w, std::span<const double> v);

}  // namespace chebjac

#endif  // CHEBJAC_TRIG_TRANSFORMS_HPP
