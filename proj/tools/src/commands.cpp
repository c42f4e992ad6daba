#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "chebjac/asymptotics.hpp"
#include "chebjac/errors.hpp"
#include "chebjac/format.hpp"
#include "chebjac/oracle.hpp"
#include "chebjac/recurrences.hpp"
#include "chebjac/transform.hpp"
#include "coefficient_file.hpp"

namespace chebjac::cli {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::uint64_t kDefaultSeed = 20240601;

CoefficientFile load(const std::string& path) {
  if (path == "-") return read_coefficient_file(std::cin);
  return read_coefficient_file(path);
}

// Results are rendered in memory first so a failing command never leaves a
// truncated output file behind.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::invalid_argument("error writing '" + path + "'");
}

JacobiParameters core_parameters(double alpha, double beta) {
  JacobiParameters p(alpha, beta);
  if (!p.in_core_square()) {
    throw DomainError("(alpha, beta) = (" + shortest_repr(alpha) + ", " + shortest_repr(beta) +
                      ") lies outside (-1/2, 1/2]^2; move the coefficients into the core square "
                      "with `chebjac shift` first");
  }
  return p;
}

struct TransformOptions {
  std::string input;
  std::string output;
  std::optional<double> alpha;
  std::optional<double> beta;
  int M = 7;
  double eps = kEps;
};

void add_transform_options(CLI::App* cmd, TransformOptions& o) {
  cmd->add_option("input", o.input, "coefficient file ('-' for stdin)")->required();
  cmd->add_option("-o,--output", o.output, "output file (default stdout)");
  cmd->add_option("--alpha", o.alpha, "Jacobi alpha");
  cmd->add_option("--beta", o.beta, "Jacobi beta");
  cmd->add_option("-M,--terms", o.M, "asymptotic terms")->check(CLI::Range(2, 64));
  cmd->add_option("--eps", o.eps, "tolerance")->check(CLI::PositiveNumber);
}

std::string cmd_forward(const TransformOptions& o) {
  auto file = load(o.input);
  if (file.basis != FileBasis::jac) {
    throw std::invalid_argument("forward expects a 'jac' coefficient file");
  }
  if ((o.alpha && *o.alpha != file.alpha) || (o.beta && *o.beta != file.beta)) {
    throw std::invalid_argument("--alpha/--beta disagree with the file header (" +
                                shortest_repr(file.alpha) + ", " + shortest_repr(file.beta) + ")");
  }
  const auto p = core_parameters(file.alpha, file.beta);
  CoefficientFile result{FileBasis::cheb, file.alpha, file.beta, file.values};
  if (file.degree() >= 1) {
    const auto plan = make_plan(Direction::forward, p, file.degree(), o.M, o.eps);
    result.values = forward(plan, file.values);
  }
  std::ostringstream s;
  write_coefficient_file(s, result);
  return s.str();
}

std::string cmd_inverse(const TransformOptions& o) {
  auto file = load(o.input);
  if (file.basis != FileBasis::cheb) {
    throw std::invalid_argument("inverse expects a 'cheb' coefficient file");
  }
  // The target pair is a choice for Chebyshev input, so flags win.
  const double alpha = o.alpha.value_or(file.alpha);
  const double beta = o.beta.value_or(file.beta);
  const auto p = core_parameters(alpha, beta);
  CoefficientFile result{FileBasis::jac, alpha, beta, file.values};
  if (file.degree() >= 1) {
    const auto plan = make_plan(Direction::inverse, p, file.degree(), o.M, o.eps);
    result.values = inverse(plan, file.values);
  }
  std::ostringstream s;
  write_coefficient_file(s, result);
  return s.str();
}

struct ShiftOptions {
  std::string input;
  std::string output;
  double alpha = 0.0;
  double beta = 0.0;
  int M = 7;
};

std::string cmd_shift(const ShiftOptions& o) {
  auto file = load(o.input);
  if (file.basis != FileBasis::jac) throw std::invalid_argument("shift expects a 'jac' file");
  const JacobiParameters source(file.alpha, file.beta);
  const JacobiParameters target(o.alpha, o.beta);
  const auto c = jacobi_to_jacobi(CoefficientVector(JacobiBasis{source}, file.values), target, o.M);
  std::ostringstream s;
  write_coefficient_file(s, {FileBasis::jac, o.alpha, o.beta, c.data()});
  return s.str();
}

struct PartitionOptions {
  std::string output;
  double alpha = 0.0;
  double beta = 0.0;
  int N = 0;
  int M = 7;
  double eps = kEps;
};

std::string cmd_partition(const PartitionOptions& o) {
  const auto p = core_parameters(o.alpha, o.beta);
  std::ostringstream s;
  write_partition_csv(s, compute_partition(p, o.N, o.M, o.eps));
  return s.str();
}

struct RecurrenceErrorOptions {
  std::string output;
  double alpha = 0.0;
  double beta = 0.0;
  int n = 0;
  int grid = 0;
  double theta_max = std::numbers::pi;
};

std::string cmd_recurrence_error(const RecurrenceErrorOptions& o) {
  const JacobiParameters p(o.alpha, o.beta);
  std::vector<double> thetas(static_cast<std::size_t>(o.grid));
  for (int i = 0; i < o.grid; ++i) {
    thetas[i] = o.grid == 1 ? 0.0 : o.theta_max * i / (o.grid - 1);
  }
  const auto exact = oracle::oracle_jacobi_on_angles(p, o.n, thetas);
  const RecurrenceTable table(p, o.n);
  std::vector<double> buf(static_cast<std::size_t>(o.n) + 1);
  std::vector<double> e_n(static_cast<std::size_t>(o.n) + 1, 0.0);
  e_n.back() = 1.0;
  auto rel = [](double approx, const oracle::ExtendedReal& ref) {
    const oracle::ExtendedReal diff = abs(oracle::ExtendedReal(approx) - ref);
    return static_cast<double>(ref == 0 ? diff : diff / abs(ref));
  };

  std::ostringstream s;
  s << "# alpha=" << shortest_repr(o.alpha) << " beta=" << shortest_repr(o.beta) << " n=" << o.n
    << '\n';
  s << "theta,forward,forward_reinsch_plus,forward_reinsch_minus,clenshaw,"
       "clenshaw_reinsch_plus,clenshaw_reinsch_minus\n";
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const auto pt = AnglePoint::from_angle(thetas[i]);
    double v[6];
    table.forward(pt, buf);
    v[0] = buf.back();
    table.forward_reinsch(pt, Endpoint::plus_one, buf);
    v[1] = buf.back();
    table.forward_reinsch(pt, Endpoint::minus_one, buf);
    v[2] = buf.back();
    v[3] = table.clenshaw(e_n, pt);
    v[4] = table.clenshaw_reinsch(e_n, pt, Endpoint::plus_one);
    v[5] = table.clenshaw_reinsch(e_n, pt, Endpoint::minus_one);
    s << shortest_repr(thetas[i]);
    for (double x : v) s << ',' << shortest_repr(rel(x, exact[i]));
    s << '\n';
  }
  return s.str();
}

struct RoundtripOptions {
  std::string output;
  int r = 0;
  double alpha = 0.0;
  double beta = 0.0;
  int M = 7;
  std::vector<int> sizes;
  int trials = 10;
  std::uint64_t seed = kDefaultSeed;
};

std::string cmd_roundtrip(const RoundtripOptions& o) {
  const auto p = core_parameters(o.alpha, o.beta);
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::ostringstream s;
  s << "# seed=" << o.seed << '\n';
  s << "# r=" << o.r << " alpha=" << shortest_repr(o.alpha) << " beta=" << shortest_repr(o.beta)
    << " M=" << o.M << " trials=" << o.trials << '\n';
  s << "N,max_abs_err\n";
  for (int N : o.sizes) {
    const auto fwd = make_plan(Direction::forward, p, N, o.M);
    const auto inv = make_plan(Direction::inverse, p, N, o.M);
    auto fws = fwd.make_workspace();
    auto iws = inv.make_workspace();
    std::vector<double> c(static_cast<std::size_t>(N) + 1);
    double total = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      for (int n = 0; n <= N; ++n) {
        const double u = unit(rng);
        if (o.r == 0) {
          c[n] = u;
        } else {
          const double k = std::max(n, 1);
          c[n] = (2.0 * u - 1.0) / (k * k);
        }
      }
      const auto back = inverse(inv, forward(fwd, c, fws), iws);
      double err = 0.0;
      for (int n = 0; n <= N; ++n) err = std::max(err, std::abs(back[n] - c[n]));
      total += err;
    }
    if (o.trials > 0) s << N << ',' << shortest_repr(total / o.trials) << '\n';
  }
  return s.str();
}

struct BenchOptions {
  std::string output;
  std::vector<int> terms{7};
  std::vector<int> sizes;
  int trials = 3;
  std::uint64_t seed = kDefaultSeed;
};

std::string cmd_bench(const BenchOptions& o) {
  using clock = std::chrono::steady_clock;
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::ostringstream s;
  s << "# seed=" << o.seed << " trials=" << o.trials << " (execution time only, mean)\n";
  s << "direction,M,N,seconds\n";
  for (int M : o.terms) {
    for (int N : o.sizes) {
      double seconds[2] = {0.0, 0.0};
      for (int t = 0; t < o.trials; ++t) {
        // 1/2 - U[0, 1) lands in the half-open core interval.
        const JacobiParameters p(0.5 - unit(rng), 0.5 - unit(rng));
        std::vector<double> c(static_cast<std::size_t>(N) + 1);
        for (auto& x : c) x = 2.0 * unit(rng) - 1.0;
        for (int d = 0; d < 2; ++d) {
          const auto plan = make_plan(d == 0 ? Direction::forward : Direction::inverse, p, N, M);
          auto ws = plan.make_workspace();
          const auto t0 = clock::now();
          const auto y = plan.execute(c, ws);
          seconds[d] += std::chrono::duration<double>(clock::now() - t0).count();
          if (!std::isfinite(y[0])) throw std::runtime_error("non-finite transform output");
        }
      }
      if (o.trials == 0) continue;
      s << "forward," << M << ',' << N << ',' << shortest_repr(seconds[0] / o.trials) << '\n';
      s << "inverse," << M << ',' << N << ',' << shortest_repr(seconds[1] / o.trials) << '\n';
    }
  }
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fast Chebyshev-Jacobi transforms and diagnostics"};
  app.name("chebjac");
  app.require_subcommand(1, 1);
  std::function<std::string()> action;
  std::string output;

  TransformOptions fwd_opts;
  auto* fwd = app.add_subcommand("forward", "Jacobi coefficients to Chebyshev coefficients");
  add_transform_options(fwd, fwd_opts);
  fwd->callback([&] {
    output = fwd_opts.output;
    action = [&] { return cmd_forward(fwd_opts); };
  });

  TransformOptions inv_opts;
  auto* inv = app.add_subcommand("inverse", "Chebyshev coefficients to Jacobi coefficients");
  add_transform_options(inv, inv_opts);
  inv->callback([&] {
    output = inv_opts.output;
    action = [&] { return cmd_inverse(inv_opts); };
  });

  ShiftOptions shift_opts;
  auto* shift = app.add_subcommand("shift", "re-expand Jacobi coefficients in another Jacobi basis");
  shift->add_option("input", shift_opts.input, "jac coefficient file ('-' for stdin)")->required();
  shift->add_option("-o,--output", shift_opts.output, "output file (default stdout)");
  shift->add_option("--alpha", shift_opts.alpha, "target alpha")->required();
  shift->add_option("--beta", shift_opts.beta, "target beta")->required();
  shift->add_option("-M,--terms", shift_opts.M, "asymptotic terms")->check(CLI::Range(2, 64));
  shift->callback([&] {
    output = shift_opts.output;
    action = [&] { return cmd_shift(shift_opts); };
  });

  PartitionOptions part_opts;
  auto* part = app.add_subcommand("partition", "dump the asymptotic block layout as CSV");
  part->add_option("-o,--output", part_opts.output, "output file (default stdout)");
  part->add_option("--alpha", part_opts.alpha, "Jacobi alpha")->required();
  part->add_option("--beta", part_opts.beta, "Jacobi beta")->required();
  part->add_option("-N,--degree", part_opts.N, "transform degree")
      ->required()
      ->check(CLI::PositiveNumber);
  part->add_option("-M,--terms", part_opts.M, "asymptotic terms")->check(CLI::Range(2, 64));
  part->add_option("--eps", part_opts.eps, "tolerance")->check(CLI::PositiveNumber);
  part->callback([&] {
    output = part_opts.output;
    action = [&] { return cmd_partition(part_opts); };
  });

  RecurrenceErrorOptions rec_opts;
  auto* rec = app.add_subcommand("recurrence-error",
                                 "relative error of the six recurrence variants for P_n(cos theta)");
  rec->add_option("-o,--output", rec_opts.output, "output file (default stdout)");
  rec->add_option("--alpha", rec_opts.alpha, "Jacobi alpha");
  rec->add_option("--beta", rec_opts.beta, "Jacobi beta");
  rec->add_option("-n,--degree", rec_opts.n, "polynomial degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  rec->add_option("--grid", rec_opts.grid, "number of equispaced angles on [0, theta-max]")
      ->required()
      ->check(CLI::PositiveNumber);
  rec->add_option("--theta-max", rec_opts.theta_max, "largest angle (default pi)")
      ->check(CLI::Range(0.0, std::numbers::pi));
  rec->callback([&] {
    output = rec_opts.output;
    action = [&] { return cmd_recurrence_error(rec_opts); };
  });

  RoundtripOptions rt_opts;
  auto* rt = app.add_subcommand("roundtrip", "inverse(forward(c)) error sweep over N");
  rt->add_option("-o,--output", rt_opts.output, "output file (default stdout)");
  rt->add_option("--r", rt_opts.r, "coefficient decay: 0 for U(0,1), 2 for U(-1,1)/n^2")
      ->check(CLI::IsMember({0, 2}));
  rt->add_option("--alpha", rt_opts.alpha, "Jacobi alpha");
  rt->add_option("--beta", rt_opts.beta, "Jacobi beta");
  rt->add_option("-M,--terms", rt_opts.M, "asymptotic terms")->check(CLI::Range(2, 64));
  rt->add_option("-N,--degrees", rt_opts.sizes, "transform degrees")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  rt->add_option("--trials", rt_opts.trials, "random trials per N")->check(CLI::NonNegativeNumber);
  rt->add_option("--seed", rt_opts.seed, "random seed");
  rt->callback([&] {
    output = rt_opts.output;
    action = [&] { return cmd_roundtrip(rt_opts); };
  });

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "time forward and inverse execution");
  bench->add_option("-o,--output", bench_opts.output, "output file (default stdout)");
  bench->add_option("-M,--terms", bench_opts.terms, "asymptotic term counts")
      ->delimiter(',')
      ->check(CLI::Range(2, 64));
  bench->add_option("-N,--degrees", bench_opts.sizes, "transform degrees")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--trials", bench_opts.trials, "trials per (M, N)")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", bench_opts.seed, "random seed");
  bench->callback([&] {
    output = bench_opts.output;
    action = [&] { return cmd_bench(bench_opts); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    emit(output, action(), out);
    return kExitOk;
  } catch (const std::domain_error& e) {
    err << "chebjac: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "chebjac: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "chebjac: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "chebjac: internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace chebjac::cli
