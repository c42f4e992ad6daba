#include "chebjac/trig_transforms.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace chebjac {

namespace {

// The FFTW planner is not thread-safe; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(double* p) const noexcept { fftw_free(p); }
};
using FftwArray = std::unique_ptr<double[], FftwFree>;

FftwArray fftw_array(std::size_t n) {
  auto* p = fftw_alloc_real(std::max<std::size_t>(n, 1));
  if (p == nullptr) throw std::bad_alloc();
  return FftwArray(p);
}

}  // namespace

class TrigKernel {
 public:
  explicit TrigKernel(int N) : N_(N) {
    if (N < 1) throw std::invalid_argument("TrigWorkspace: N must be >= 1");
    const auto n = static_cast<std::size_t>(N) + 1;
    auto in = fftw_array(n);
    auto out = fftw_array(n);
    std::lock_guard lock(planner_mutex());
    dct_ = fftw_plan_r2r_1d(N + 1, in.get(), out.get(), FFTW_REDFT00, FFTW_ESTIMATE);
    if (N >= 2) {
      dst_ = fftw_plan_r2r_1d(N - 1, in.get(), out.get(), FFTW_RODFT00, FFTW_ESTIMATE);
    }
    if (dct_ == nullptr || (N >= 2 && dst_ == nullptr)) {
      throw std::runtime_error("FFTW planning failed");
    }
  }

  TrigKernel(const TrigKernel&) = delete;
  TrigKernel& operator=(const TrigKernel&) = delete;

  ~TrigKernel() {
    std::lock_guard lock(planner_mutex());
    if (dct_ != nullptr) fftw_destroy_plan(dct_);
    if (dst_ != nullptr) fftw_destroy_plan(dst_);
  }

  int degree() const noexcept { return N_; }

  // New-array execution; buffers come from fftw_alloc_real so alignment
  // matches the planning arrays.
  void run_dct(double* in, double* out) const { fftw_execute_r2r(dct_, in, out); }
  void run_dst(double* in, double* out) const {
    if (dst_ != nullptr) fftw_execute_r2r(dst_, in, out);
  }

 private:
  int N_;
  fftw_plan dct_ = nullptr;
  fftw_plan dst_ = nullptr;
};

struct TrigWorkspace::Buffer {
  explicit Buffer(std::size_t n) : in(fftw_array(n)), out(fftw_array(n)) {}
  FftwArray in;
  FftwArray out;
};

TrigWorkspace::TrigWorkspace(int N)
    : kernel_(std::make_shared<const TrigKernel>(N)),
      buffer_(std::make_unique<Buffer>(static_cast<std::size_t>(N) + 1)) {}

TrigWorkspace::TrigWorkspace(const TrigWorkspace& other)
    : kernel_(other.kernel_), buffer_(std::make_unique<Buffer>(other.size())) {}

TrigWorkspace& TrigWorkspace::operator=(const TrigWorkspace& other) {
  if (this != &other) {
    kernel_ = other.kernel_;
    buffer_ = std::make_unique<Buffer>(other.size());
  }
  return *this;
}

TrigWorkspace::TrigWorkspace(TrigWorkspace&&) noexcept = default;
TrigWorkspace& TrigWorkspace::operator=(TrigWorkspace&&) noexcept = default;
TrigWorkspace::~TrigWorkspace() = default;

int TrigWorkspace::degree() const noexcept { return kernel_->degree(); }

void TrigWorkspace::check(std::span<const double> x, std::span<double> y) const {
  if (x.size() != size() || y.size() != size()) {
    throw std::invalid_argument("TrigWorkspace: vector length does not match plan size");
  }
}

void TrigWorkspace::dct1(std::span<const double> x, std::span<double> y) {
  check(x, y);
  const std::size_t N = size() - 1;
  double* in = buffer_->in.get();
  // FFTW's REDFT00 doubles interior terms.
  in[0] = x[0];
  for (std::size_t k = 1; k < N; ++k) in[k] = 0.5 * x[k];
  in[N] = x[N];
  kernel_->run_dct(in, buffer_->out.get());
  std::copy_n(buffer_->out.get(), N + 1, y.begin());
}

void TrigWorkspace::dst1_bordered(std::span<const double> x, std::span<double> y) {
  check(x, y);
  const std::size_t N = size() - 1;
  if (N < 2) {
    std::fill(y.begin(), y.end(), 0.0);
    return;
  }
  double* in = buffer_->in.get();
  double* out = buffer_->out.get();
  for (std::size_t k = 1; k < N; ++k) in[k - 1] = 0.5 * x[k];
  kernel_->run_dst(in, out);
  y[0] = 0.0;
  std::copy_n(out, N - 1, y.begin() + 1);
  y[N] = 0.0;
}

std::vector<double> dct1(TrigWorkspace& w, std::span<const double> x) {
  std::vector<double> y(w.size());
  w.dct1(x, y);
  return y;
}

std::vector<double> dst1_bordered(TrigWorkspace& w, std::span<const double> x) {
  std::vector<double> y(w.size());
  w.dst1_bordered(x, y);
  return y;
}

std::vector<double> chebyshev_synthesis(TrigWorkspace& w, std::span<const double> c) {
  if (c.size() > w.size()) {
    throw std::invalid_argument("chebyshev_synthesis: more coefficients than grid points");
  }
  std::vector<double> padded(w.size(), 0.0);
  std::copy(c.begin(), c.end(), padded.begin());
  w.dct1(padded, padded);
  return padded;
}

std::vector<double> chebyshev_analysis(TrigWorkspace& w, std::span<const double> v) {
  const std::size_t N = w.size() - 1;
  if (v.size() != N + 1) {
    throw std::invalid_argument("chebyshev_analysis: vector length does not match plan size");
  }
  std::vector<double> c(v.begin(), v.end());
  c.front() *= 0.5;
  c.back() *= 0.5;
  w.dct1(c, c);
  const double scale = 2.0 / static_cast<double>(N);
  for (auto& ck : c) ck *= scale;
  c.front() *= 0.5;
  c.back() *= 0.5;
  return c;
}

}  // namespace chebjac
