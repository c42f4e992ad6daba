#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "chebjac/errors.hpp"
#include "chebjac/oracle.hpp"
#include "chebjac/transform.hpp"

using namespace chebjac;

namespace {

constexpr double kEps = 2.220446049250313e-16;
const JacobiParameters kP(0.125, 0.375);

std::vector<double> random_vector(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = u(rng);
  return v;
}

double norm1(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double max_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(CoefficientVector, Validation) {
  EXPECT_THROW(CoefficientVector(ChebyshevBasis{}, {}), std::invalid_argument);
  EXPECT_THROW(CoefficientVector(ChebyshevBasis{}, {1.0, NAN}), std::invalid_argument);
  const CoefficientVector c(JacobiBasis{kP}, {1.0, 2.0});
  EXPECT_EQ(c.degree(), 1);
  EXPECT_FALSE(c.is_chebyshev());
  EXPECT_EQ(c.parameters(), kP);
  EXPECT_THROW(CoefficientVector(ChebyshevBasis{}, {1.0}).parameters(), std::invalid_argument);
}

TEST(Plan, Validation) {
  EXPECT_THROW(make_plan(Direction::forward, {0.75, 0.0}, 16), DomainError);
  EXPECT_THROW(make_plan(Direction::forward, {-0.5, 0.0}, 16), DomainError);
  EXPECT_THROW(make_plan(Direction::forward, kP, 0), std::invalid_argument);
  EXPECT_THROW(make_plan(Direction::forward, kP, 16, 1), std::invalid_argument);
  EXPECT_THROW(make_plan(Direction::forward, kP, 16, 7, 0.0), std::invalid_argument);
  const auto fwd = make_plan(Direction::forward, kP, 16);
  EXPECT_EQ(fwd.grid_degree(), 16);
  EXPECT_EQ(make_plan(Direction::inverse, kP, 16).grid_degree(), 32);
  EXPECT_THROW(forward(fwd, std::vector<double>(16, 0.0)), std::invalid_argument);
  EXPECT_THROW(inverse(fwd, std::vector<double>(17, 0.0)), std::invalid_argument);
  EXPECT_THROW(forward(fwd, CoefficientVector(JacobiBasis{{0.0, 0.0}}, std::vector<double>(17))),
               std::invalid_argument);
  auto other = make_plan(Direction::forward, kP, 8).make_workspace();
  EXPECT_THROW(forward(fwd, std::vector<double>(17, 0.0), other), std::invalid_argument);
}

TEST(Forward, LegendreP2) {
  const auto plan = make_plan(Direction::forward, {0.0, 0.0}, 2);
  const auto t = forward(plan, std::vector<double>{0.0, 0.0, 1.0});
  EXPECT_NEAR(t[0], 0.25, 4 * kEps);
  EXPECT_NEAR(t[1], 0.0, 4 * kEps);
  EXPECT_NEAR(t[2], 0.75, 4 * kEps);
}

TEST(Forward, ConstantIsItself) {
  const auto plan = make_plan(Direction::forward, kP, 5);
  const auto t = forward(plan, std::vector<double>{2.0, 0, 0, 0, 0, 0});
  EXPECT_NEAR(t[0], 2.0, 4 * kEps);
  for (int k = 1; k <= 5; ++k) EXPECT_NEAR(t[k], 0.0, 4 * kEps);
}

TEST(Forward, MatchesOracle) {
  for (const JacobiParameters p : {kP, JacobiParameters(-0.45, 0.5), JacobiParameters(0.0, 0.0),
                                   JacobiParameters(0.5, 0.5)}) {
    for (int N : {1, 3, 64, 500, 2048}) {
      const auto c = random_vector(N + 1, 7 * N);
      const auto plan = make_plan(Direction::forward, p, N);
      const auto t = forward(plan, c);
      const auto ref = oracle::oracle_forward(p, c);
      EXPECT_LT(max_diff(t, ref), 4 * kEps * norm1(c)) << p.alpha() << "," << p.beta() << " N=" << N;
    }
  }
}

TEST(Forward, AsymptoticPathIsUsed) {
  const auto plan = make_plan(Direction::forward, kP, 1 << 12);
  EXPECT_FALSE(plan.pure_recurrence());
  EXPECT_TRUE(make_plan(Direction::forward, kP, 64).pure_recurrence());
}

TEST(Forward, OtherTermCounts) {
  const int N = 4096;
  const auto c = random_vector(N + 1, 3);
  const auto ref = oracle::oracle_forward(kP, c);
  for (int M : {3, 10, 13}) {
    const auto t = forward(make_plan(Direction::forward, kP, N, M), c);
    EXPECT_LT(max_diff(t, ref), 4 * kEps * norm1(c)) << M;
  }
}

TEST(Inverse, RecoversJacobiCoefficients) {
  for (const JacobiParameters p : {kP, JacobiParameters(-0.3, -0.45), JacobiParameters(0.5, 0.0)}) {
    for (int N : {1, 2, 100, 3000}) {
      const auto c = random_vector(N + 1, N + 11);
      const auto t = forward(make_plan(Direction::forward, p, N), c);
      const auto back = inverse(make_plan(Direction::inverse, p, N), t);
      // Error model for unit-size coefficients: 100 N^{1 + max(alpha, beta)} eps.
      const double envelope = 100.0 * std::pow(N, 1.0 + std::max(p.alpha(), p.beta())) * kEps;
      EXPECT_LT(max_diff(back, c), envelope) << N;
    }
  }
}

TEST(Inverse, ChebyshevOneIsJacobiOne) {
  const auto plan = make_plan(Direction::inverse, kP, 6);
  const auto c = inverse(plan, std::vector<double>{1, 0, 0, 0, 0, 0, 0});
  EXPECT_NEAR(c[0], 1.0, 8 * kEps);
  for (int n = 1; n <= 6; ++n) EXPECT_NEAR(c[n], 0.0, 8 * kEps);
}

TEST(Inverse, MatchesConnectionOracle) {
  // T_k is proportional to P_k^{(-1/2,-1/2)}; the connection oracle gives the
  // exact re-expansion, scaled by T_k = P_k^{(-1/2,-1/2)} / P_k^{(-1/2,-1/2)}(1).
  const int N = 40;
  const auto t = random_vector(N + 1, 77);
  std::vector<double> cheb_as_jacobi(N + 1);
  for (int k = 0; k <= N; ++k) {
    cheb_as_jacobi[k] = t[k] / endpoint_value({-0.5, -0.5}, k, Endpoint::plus_one);
  }
  const auto ref = oracle::oracle_connection_transform({-0.5, -0.5}, kP, cheb_as_jacobi);
  const auto got = inverse(make_plan(Direction::inverse, kP, N), t);
  EXPECT_LT(max_diff(got, ref), 1e-13);
}

TEST(Plan, SharedAcrossThreads) {
  const int N = 5000;
  const auto plan = make_plan(Direction::forward, kP, N);
  const auto c = random_vector(N + 1, 1);
  const auto ref = forward(plan, c);
  std::vector<std::vector<double>> out(3);
  std::vector<std::thread> threads;
  for (int i = 0; i < 3; ++i) {
    threads.emplace_back([&, i] {
      auto ws = plan.make_workspace();
      out[i] = forward(plan, c, ws);
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& y : out) EXPECT_EQ(y, ref);
}

TEST(Plan, ExposesInverseData) {
  const auto plan = make_plan(Direction::inverse, kP, 10);
  EXPECT_EQ(plan.quadrature_weights().size(), 21u);
  ASSERT_EQ(plan.inverse_norms().size(), 11u);
  EXPECT_NEAR(plan.inverse_norms()[3], 1.0 / orthonormality_constant(kP, 3),
              4 * kEps * plan.inverse_norms()[3]);
}

TEST(ParameterShift, IncrementMatchesOracle) {
  const int N = 30;
  const auto c = random_vector(N + 1, 5);
  const CoefficientVector v(JacobiBasis{kP}, c);
  const auto up_b = increment_beta(v);
  EXPECT_EQ(up_b.parameters(), JacobiParameters(0.125, 1.375));
  EXPECT_LT(max_diff(up_b.data(), oracle::oracle_connection_transform(kP, {0.125, 1.375}, c)), 1e-14);
  const auto up_a = increment_alpha(v);
  EXPECT_LT(max_diff(up_a.data(), oracle::oracle_connection_transform(kP, {1.125, 0.375}, c)), 1e-14);
}

TEST(ParameterShift, DecrementUndoesIncrement) {
  const auto c = random_vector(200, 6);
  const CoefficientVector v(JacobiBasis{{-0.2, 0.3}}, c);
  EXPECT_LT(max_diff(decrement_beta(increment_beta(v)).data(), c), 1e-14);
  EXPECT_LT(max_diff(decrement_alpha(increment_alpha(v)).data(), c), 1e-14);
  EXPECT_THROW(decrement_alpha(v), DomainError);
  EXPECT_NO_THROW(decrement_beta(v));
  EXPECT_THROW(decrement_beta(CoefficientVector(JacobiBasis{{0.0, -0.3}}, c)), DomainError);
  EXPECT_THROW(increment_beta(CoefficientVector(ChebyshevBasis{}, c)), std::invalid_argument);
}

TEST(ParameterShift, ShiftToTarget) {
  const auto c = random_vector(25, 8);
  const CoefficientVector v(JacobiBasis{kP}, c);
  const JacobiParameters target(2.125, -0.625);
  const auto s = shift_parameters(v, target);
  EXPECT_EQ(s.parameters(), target);
  EXPECT_LT(max_diff(s.data(), oracle::oracle_connection_transform(kP, target, c)), 1e-13);
  EXPECT_THROW(shift_parameters(v, {0.3, 0.375}), DomainError);
}

TEST(CoreRepresentative, Values) {
  EXPECT_EQ(core_representative(0.5), 0.5);
  EXPECT_EQ(core_representative(-0.5), 0.5);
  EXPECT_EQ(core_representative(1.25), 0.25);
  EXPECT_EQ(core_representative(-0.75), 0.25);
  EXPECT_EQ(core_representative(3.0), 0.0);
}

TEST(JacobiToJacobi, MatchesConnectionOracle) {
  const int N = 60;
  const auto c = random_vector(N + 1, 12);
  const JacobiParameters source(1.25, -0.75);
  const JacobiParameters target(-0.1, 2.4);
  const auto got = jacobi_to_jacobi(CoefficientVector(JacobiBasis{source}, c), target);
  EXPECT_EQ(got.parameters(), target);
  const auto ref = oracle::oracle_connection_transform(source, target, c);
  EXPECT_LT(max_diff(got.data(), ref), 1e-10 * norm1(ref));
}

TEST(JacobiToJacobi, SameCoreUsesShiftsOnly) {
  const auto c = random_vector(12, 3);
  const auto got = jacobi_to_jacobi(CoefficientVector(JacobiBasis{kP}, c), {1.125, 0.375});
  EXPECT_LT(max_diff(got.data(), oracle::oracle_connection_transform(kP, {1.125, 0.375}, c)), 1e-14);
  const auto scalar = jacobi_to_jacobi(CoefficientVector(JacobiBasis{kP}, {3.0}), {0.0, 0.0});
  EXPECT_EQ(scalar.data(), std::vector<double>{3.0});
}
