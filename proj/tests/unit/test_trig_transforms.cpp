#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "chebjac/trig_transforms.hpp"

using namespace chebjac;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_vector(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = u(rng);
  return v;
}

std::vector<double> naive(const std::vector<double>& x, bool sine) {
  const int N = static_cast<int>(x.size()) - 1;
  std::vector<double> y(x.size(), 0.0);
  for (int j = 0; j <= N; ++j) {
    long double s = 0.0L;
    for (int k = 0; k <= N; ++k) {
      // Reduce jk mod 2N so the argument stays small and exact.
      const long double arg = kPi * static_cast<long double>((static_cast<long>(j) * k) % (2 * N)) / N;
      s += (sine ? std::sin(arg) : std::cos(arg)) * x[k];
    }
    y[j] = static_cast<double>(s);
  }
  return y;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST(Dct1, SmallExample) {
  TrigWorkspace ws(2);
  const auto y = dct1(ws, std::vector<double>{1.0, 2.0, 3.0});
  EXPECT_NEAR(y[0], 6.0, 1e-15);
  EXPECT_NEAR(y[1], -2.0, 1e-15);
  EXPECT_NEAR(y[2], 2.0, 1e-15);
}

TEST(Dct1, SizeOne) {
  TrigWorkspace ws(1);
  const auto y = dct1(ws, std::vector<double>{3.0, 1.0});
  EXPECT_DOUBLE_EQ(y[0], 4.0);
  EXPECT_DOUBLE_EQ(y[1], 2.0);
}

TEST(Dct1, MatchesNaiveSum) {
  for (int N : {1, 2, 3, 7, 16, 99, 256}) {
    TrigWorkspace ws(N);
    const auto x = random_vector(N + 1, N);
    const auto y = dct1(ws, x);
    const auto ref = naive(x, false);
    for (int j = 0; j <= N; ++j) EXPECT_NEAR(y[j], ref[j], 1e-13 * (N + 1)) << N << " " << j;
  }
}

TEST(Dct1, IsItsOwnInverseUpToScale) {
  const int N = 1000;
  TrigWorkspace ws(N);
  auto x = random_vector(N + 1, 3);
  // With halved endpoints, applying the transform twice gives N/2 times the input.
  auto h = x;
  h.front() *= 0.5;
  h.back() *= 0.5;
  auto y = dct1(ws, h);
  y.front() *= 0.5;
  y.back() *= 0.5;
  const auto z = dct1(ws, y);
  for (int j = 0; j <= N; ++j) EXPECT_NEAR(z[j] * 2.0 / N, x[j], 1e-13) << j;
}

TEST(Dst1Bordered, MatchesNaiveSum) {
  for (int N : {1, 2, 5, 64, 129}) {
    TrigWorkspace ws(N);
    const auto x = random_vector(N + 1, 100 + N);
    const auto y = dst1_bordered(ws, x);
    const auto ref = naive(x, true);
    EXPECT_EQ(y.front(), 0.0);
    EXPECT_EQ(y.back(), 0.0);
    for (int j = 1; j < N; ++j) EXPECT_NEAR(y[j], ref[j], 1e-13 * (N + 1)) << N << " " << j;
  }
}

TEST(TrigWorkspace, InPlaceAndSizeChecks) {
  TrigWorkspace ws(8);
  auto x = random_vector(9, 1);
  const auto ref = dct1(ws, x);
  ws.dct1(x, x);
  for (int j = 0; j <= 8; ++j) EXPECT_DOUBLE_EQ(x[j], ref[j]);
  std::vector<double> bad(8);
  EXPECT_THROW(ws.dct1(bad, bad), std::invalid_argument);
  EXPECT_THROW(TrigWorkspace(0), std::invalid_argument);
}

TEST(TrigWorkspace, CopiesRunConcurrently) {
  const int N = 4096;
  TrigWorkspace proto(N);
  const auto x = random_vector(N + 1, 8);
  const auto ref = dct1(proto, x);
  std::vector<std::vector<double>> out(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      TrigWorkspace local(proto);
      for (int r = 0; r < 5; ++r) out[t] = dct1(local, x);
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& y : out) EXPECT_EQ(y, ref);
}

TEST(Chebyshev, SynthesisOfMonomials) {
  const int N = 4;
  TrigWorkspace ws(N);
  // T_2 at the Lobatto points cos(pi j / 4).
  const auto v = chebyshev_synthesis(ws, std::vector<double>{0.0, 0.0, 1.0});
  const double expect[] = {1.0, 0.0, -1.0, 0.0, 1.0};
  for (int j = 0; j <= N; ++j) EXPECT_NEAR(v[j], expect[j], 1e-15) << j;
  EXPECT_THROW(chebyshev_synthesis(ws, std::vector<double>(6, 1.0)), std::invalid_argument);
}

TEST(Chebyshev, AnalysisInvertsSynthesis) {
  for (int N : {1, 2, 33, 1024, 5000}) {
    TrigWorkspace ws(N);
    const auto c = random_vector(N + 1, 40 + N);
    const auto back = chebyshev_analysis(ws, chebyshev_synthesis(ws, c));
    for (int k = 0; k <= N; ++k) EXPECT_NEAR(back[k], c[k], 1e-13) << N << " " << k;
  }
}

TEST(Chebyshev, AnalysisOfSmoothFunction) {
  // exp(x) = I_0(1) T_0 + 2 sum I_k(1) T_k.
  const int N = 32;
  TrigWorkspace ws(N);
  std::vector<double> v(N + 1);
  for (int j = 0; j <= N; ++j) v[j] = std::exp(std::cos(kPi * j / N));
  const auto c = chebyshev_analysis(ws, v);
  EXPECT_NEAR(c[0], std::cyl_bessel_i(0.0, 1.0), 1e-15);
  for (int k = 1; k <= 10; ++k) EXPECT_NEAR(c[k], 2 * std::cyl_bessel_i(double(k), 1.0), 1e-15);
  EXPECT_LT(max_abs(std::vector<double>(c.begin() + 20, c.end())), 4e-16);
}
