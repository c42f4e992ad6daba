#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chebjac/oracle.hpp"
#include "chebjac/scalar_kernels.hpp"

using chebjac::JacobiParameters;
using namespace chebjac::oracle;

namespace {

// Reference values below were produced independently with mpmath at 45
// digits and are frozen here.
ExtendedReal q(const char* s) { return ExtendedReal(s); }

double rel(const ExtendedReal& a, const ExtendedReal& b) {
  return static_cast<double>(abs(a - b) / abs(b));
}

}  // namespace

TEST(OracleJacobi, FrozenValues) {
  EXPECT_LT(rel(oracle_jacobi_eval({0.125, 0.375}, 50, 1.0),
                q("0.123361586202556395333572297358820954")),
            1e-30);
  EXPECT_LT(rel(oracle_jacobi_eval({-0.4, 0.5}, 1000, 0.01),
                q("-0.0276717071006220023329805965773272554")),
            1e-29);
  EXPECT_LT(rel(oracle_jacobi_eval({0.5, -0.25}, 7, 2.5),
                q("0.0662154577300337485538881732854253267")),
            1e-31);
  // Reference point for the n = 10^4 recurrence error study.
  EXPECT_LT(rel(oracle_jacobi_eval({0.0, 0.0}, 10000, std::numbers::pi / 3),
                q("-0.00606250380832410621862616747615971116")),
            1e-26);
}

TEST(OracleJacobi, LegendreP2AtZero) {
  const auto v = oracle_jacobi_eval({0.0, 0.0}, 2, extended_pi() / 2);
  EXPECT_LT(static_cast<double>(abs(v + ExtendedReal(0.5))), 1e-32);
}

TEST(OracleJacobi, EndpointValues) {
  const JacobiParameters p(0.3, -0.2);
  for (int n : {0, 1, 5, 40}) {
    const double ref = chebjac::endpoint_value(p, n, chebjac::Endpoint::plus_one);
    EXPECT_NEAR(static_cast<double>(oracle_jacobi_eval(p, n, 0.0)), ref, 4e-15 * std::abs(ref));
  }
}

TEST(OracleJacobi, BatchedMatchesSingle) {
  const JacobiParameters p(-0.3, 0.2);
  const std::vector<double> thetas{0.0, 0.3, 1.7, 3.0};
  const auto batch = oracle_jacobi_on_angles(p, 33, thetas);
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    EXPECT_EQ(batch[i], oracle_jacobi_eval(p, 33, thetas[i]));
  }
}

TEST(OracleGamma, KnownValues) {
  EXPECT_EQ(oracle_gamma(1.0), ExtendedReal(1));
  EXPECT_LT(static_cast<double>(abs(oracle_gamma(10.0) - ExtendedReal(362880)) / 362880), 1e-32);
  EXPECT_LT(rel(oracle_gamma(0.5), q("1.77245385090551602729816748334114518")), 1e-30);
  EXPECT_LT(rel(oracle_gamma(0.5), sqrt(extended_pi())), 1e-30);
  EXPECT_LT(rel(oracle_gamma(170.5), q("5.56209241455999961070580965935774287e+305")), 1e-30);
  EXPECT_THROW(oracle_gamma(0.0), std::domain_error);
  EXPECT_THROW(oracle_gamma(-1.5), std::domain_error);
}

TEST(OracleGamma, StirlingCoefficientsAreTheKnownRationals) {
  const auto a = stirling_coefficients_extended(5);
  ASSERT_EQ(a.size(), 5u);
  EXPECT_EQ(a[0], ExtendedReal(1));
  EXPECT_LT(static_cast<double>(abs(a[1] - ExtendedReal(1) / 12)), 1e-33);
  EXPECT_LT(static_cast<double>(abs(a[2] - ExtendedReal(1) / 288)), 1e-33);
  EXPECT_LT(static_cast<double>(abs(a[3] + ExtendedReal(139) / 51840)), 1e-33);
  EXPECT_LT(static_cast<double>(abs(a[4] + ExtendedReal(571) / 2488320)), 1e-33);
}

TEST(OracleForward, SmallCases) {
  EXPECT_EQ(oracle_forward({0.1, 0.2}, std::vector<double>{1.0}), std::vector<double>{1.0});
  const auto e0 = oracle_forward({0.1, 0.2}, std::vector<double>{1.0, 0.0, 0.0});
  EXPECT_NEAR(e0[0], 1.0, 1e-16);
  EXPECT_NEAR(e0[1], 0.0, 1e-16);
  EXPECT_NEAR(e0[2], 0.0, 1e-16);
  const auto e2 = oracle_forward({0.0, 0.0}, std::vector<double>{0.0, 0.0, 1.0});
  EXPECT_NEAR(e2[0], 0.25, 1e-16);
  EXPECT_NEAR(e2[1], 0.0, 1e-16);
  EXPECT_NEAR(e2[2], 0.75, 1e-16);
  EXPECT_THROW(oracle_forward({0.0, 0.0}, std::vector<double>(8194, 0.0)), std::invalid_argument);
}

TEST(OracleConnection, IdentityAndIncrement) {
  const JacobiParameters p(0.2, -0.3);
  for (int n : {0, 3, 9}) {
    const auto c = connection_coefficients(p, p, n);
    for (int k = 0; k <= n; ++k) {
      EXPECT_LT(static_cast<double>(abs(c[k] - ExtendedReal(k == n ? 1 : 0))), 1e-30);
    }
  }
  const auto c = connection_coefficients({0.0, 0.0}, {0.0, 1.0}, 1);
  EXPECT_LT(static_cast<double>(abs(c[0] - ExtendedReal(1) / 3)), 1e-32);
  EXPECT_LT(static_cast<double>(abs(c[1] - ExtendedReal(2) / 3)), 1e-32);
}

TEST(OracleConnection, FrozenLegendreToJacobi) {
  const auto c = connection_coefficients({0.0, 0.0}, {0.25, -0.25}, 5);
  const char* ref[] = {"-0.026123046875", "0.0498046875", "-0.123697916666666666666666666667",
                       "0.109375", "-0.45", "1"};
  for (int k = 0; k <= 5; ++k) {
    EXPECT_LT(static_cast<double>(abs(c[k] - q(ref[k]))), 1e-29) << "k = " << k;
  }
}

TEST(OracleConnection, ChebyshevWeightOfLegendreP2) {
  // P_2 = T_0 / 4 + 3 T_2 / 4, and T_k is proportional to P_k^{(-1/2,-1/2)}.
  const auto c = connection_coefficients({0.0, 0.0}, {-0.5, -0.5}, 2);
  EXPECT_LT(static_cast<double>(abs(c[0] - ExtendedReal(1) / 4)), 1e-32);
  EXPECT_LT(static_cast<double>(abs(c[1])), 1e-32);
}

TEST(OracleConnection, ExpansionReproducesSourcePolynomial) {
  const JacobiParameters source(0.1, 0.4);
  const JacobiParameters target(-0.35, 0.45);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  for (int n : {1, 17, 64}) {
    const auto c = connection_coefficients(source, target, n);
    for (int t = 0; t < 10; ++t) {
      const ExtendedReal theta = angle(rng);
      const auto pk = oracle_jacobi_all(target, n, theta);
      ExtendedReal sum = 0;
      for (int k = 0; k <= n; ++k) sum += c[k] * pk[k];
      const auto ref = oracle_jacobi_eval(source, n, theta);
      EXPECT_LT(static_cast<double>(abs(sum - ref)), 1e-20) << "n = " << n;
    }
  }
}

TEST(OracleMoments, FrozenValues) {
  const JacobiParameters p(0.125, 0.375);
  EXPECT_NEAR(oracle_modified_moment(p, 0), 1.7811503961133099674, 1e-14);
  EXPECT_NEAR(oracle_modified_moment(p, 1), 0.17811503961133099674, 1e-14);
  EXPECT_NEAR(oracle_modified_moment(p, 5), -0.029359621913955658803, 1e-14);
  EXPECT_NEAR(oracle_modified_moment(p, 20), -0.0016165434200460757235, 1e-14);
}

TEST(OracleStirling, RemainderBoundMatchesClosedForm) {
  // (1 + zeta(4)) 3! / ((2 pi)^5 3275^4) evaluated independently.
  const double z = 3275.0;
  const double ref = (1.0 + std::pow(std::numbers::pi, 4) / 90.0) * 6.0 /
                     (std::pow(2.0 * std::numbers::pi, 5) * std::pow(z, 4));
  EXPECT_NEAR(static_cast<double>(stirling_remainder_bound(4, z)), ref, 1e-14 * ref);
  EXPECT_THROW(stirling_remainder_bound(1, z), std::invalid_argument);
}
