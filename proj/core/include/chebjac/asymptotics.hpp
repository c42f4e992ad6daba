#ifndef CHEBJAC_ASYMPTOTICS_HPP
#define CHEBJAC_ASYMPTOTICS_HPP

#include <iosfwd>
#include <vector>

#include "chebjac/recurrences.hpp"
#include "chebjac/scalar_kernels.hpp"

namespace chebjac {

/// u_m(theta), v_m(theta): the factors of cos(n theta) and sin(n theta) in the
/// m-th term of the interior asymptotic series,
///   P_n(cos theta) ~ sum_m C_{n,m} (u_m cos n theta + v_m sin n theta).
struct ModulationValue {
  double u;
  double v;
};

/// Modulations of order m at one angle in (0, pi). Terms whose Pochhammer
/// weight vanishes are skipped, so alpha = 1/2 or beta = 1/2 evaluate the
/// single surviving term only.
ModulationValue modulation(const JacobiParameters& p, int m, double theta);

/// u_m and v_m sampled on every grid angle. Entries at j = 0 and j = N are
/// set to zero; the asymptotic blocks never touch them.
struct ModulationPair {
  int m;
  std::vector<double> u;
  std::vector<double> v;
};

ModulationPair modulation_on_grid(const JacobiParameters& p, int m, const AngleGrid& grid);

/// The m-th term f_m(theta) itself (without C_{n,m}), for degree n.
double asymptotic_term(const JacobiParameters& p, int n, int m, double theta);

/// Envelope g_m(theta) >= |f_m(theta)| on (0, pi).
double envelope(const JacobiParameters& p, int m, double theta);

/// g_m at every grid angle; j = 0 and j = N are +infinity.
std::vector<double> envelope_on_grid(const JacobiParameters& p, int m, const AngleGrid& grid);

/// 2 C_{n,M} g_M(theta): a bound on the truncation error after M terms.
/// Only valid in the core square with n >= 2 and M >= 2; other inputs throw
/// DomainError (parameters) or std::invalid_argument (n, M).
double remainder_bound(const JacobiParameters& p, int n, int M, double theta);

/// floor((eps 2^{2M-1} sqrt(pi) / g_M(pi/2))^{-1/(M+1/2)}), or 0 when
/// g_M(pi/2) = 0.
int compute_n_M(const JacobiParameters& p, int M, double eps);

/// Same floor formula with g_M(theta) in place of g_M(pi/2).
int partition_curve(const JacobiParameters& p, int M, double eps, double theta);

struct PartitionBlock {
  int k;   ///< 1-based block index
  int j;   ///< j_k: first degree (column) of the block
  int i1;  ///< first grid row
  int i2;  ///< last grid row (inclusive)
};

/// Rectangles of the (angle, degree) plane where the truncated asymptotic
/// series is certified below eps. Block k covers rows [i1, i2] and degrees
/// [j_k, j_{k-1} - 1], with j_0 - 1 read as N. Row ranges are nested:
/// rows(k) is contained in rows(k - 1).
struct PartitionLayout {
  int N = 0;
  int M = 0;
  double eps = 0.0;
  int n_M = 0;
  double alpha_N = 0.5;
  int K = 0;
  int theta_bar_index = 0;
  std::vector<PartitionBlock> blocks;

  bool pure_recurrence() const noexcept { return blocks.empty(); }

  /// Last degree (inclusive) of block number `index` (0-based into blocks).
  int block_last_degree(std::size_t index) const noexcept {
    return index == 0 ? N : blocks[index - 1].j - 1;
  }

  /// First degree handled by the asymptotic blocks on row i, or N + 1 if the
  /// row lies outside every block. The recurrence covers degrees below it.
  int recurrence_limit(int i) const noexcept;
};

/// Partition for an N-point grid of angles pi j / N.
PartitionLayout compute_partition(const JacobiParameters& p, int N, int M, double eps);

/// CSV dump: a `N,M,eps,n_M,alpha_N,K` header and value row, then a
/// `k,j_k,i_k1,i_k2` header and one row per block.
void write_partition_csv(std::ostream& out, const PartitionLayout& layout);

/// C_{n,m}^lambda of the ultraspherical interior series, lambda in (0, 1).
double ultraspherical_coefficient(double lambda, int n, int m);

/// n_M^lambda for the ultraspherical series, lambda in (0, 1), M >= 1.
int ultraspherical_n_M(double lambda, int M, double eps);

}  // namespace chebjac

#endif  // CHEBJAC_ASYMPTOTICS_HPP
