// Times the serial reference against the OpenMP kernel for the two
// data-parallel workloads: the pairwise instance check and the exhaustive
// table search. Both policies must agree on the result; this binary also
// asserts that while timing.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "rbmono/search.hpp"

using namespace rbmono;

namespace {

template <typename F>
double time_once(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  Exp degree = 220;
  if (argc > 1) degree = static_cast<Exp>(std::strtoull(argv[1], nullptr, 10));

  std::printf("%-28s %11s %11s %9s\n", "workload", "serial", "parallel",
              "speedup");

  {
    const MonomialOperator op =
        construct_weight0({1, {1}, {Rational(1)}});
    RBReport serial_report, parallel_report;
    const double ts = time_once([&] {
      serial_report = check_rb(op, Rational(0), degree, ExecPolicy::serial);
    });
    const double tp = time_once([&] {
      parallel_report =
          check_rb(op, Rational(0), degree, ExecPolicy::parallel);
    });
    if (serial_report.verdict != parallel_report.verdict ||
        serial_report.checked_pairs != parallel_report.checked_pairs) {
      std::fprintf(stderr, "policy mismatch in check_rb\n");
      return 1;
    }
    row("check_rb pass (integration)", ts, tp);
  }

  {
    // A failing run: the witness hunt must agree as well.
    MonomialOperator base = construct_weight0({1, {1}, {Rational(1)}});
    MonomialOperator table = base.tabulate(3 * degree);
    auto beta = table.as_table()->beta;
    auto theta = table.as_table()->theta;
    beta[degree / 2] = Rational(7);
    const MonomialOperator mutated =
        MonomialOperator::from_table(std::move(beta), std::move(theta));
    RBReport serial_report, parallel_report;
    const double ts = time_once([&] {
      serial_report =
          check_rb(mutated, Rational(0), degree, ExecPolicy::serial);
    });
    const double tp = time_once([&] {
      parallel_report =
          check_rb(mutated, Rational(0), degree, ExecPolicy::parallel);
    });
    if (serial_report.verdict != parallel_report.verdict ||
        serial_report.witness->m != parallel_report.witness->m ||
        serial_report.witness->n != parallel_report.witness->n) {
      std::fprintf(stderr, "policy mismatch in failing check_rb\n");
      return 1;
    }
    row("check_rb fail (mutated)", ts, tp);
  }

  {
    SearchParams params;
    params.lambda = Rational(1);
    params.n_table = 4;
    params.theta_bound = 4;
    params.alphabet = {Rational(0), Rational(-1), Rational(2),
                       Rational(BigInt(-1), BigInt(2))};
    params.check_degree = 2;
    std::vector<Survivor> serial_out, parallel_out;
    const double ts = time_once(
        [&] { serial_out = search_exhaustive(params, ExecPolicy::serial); });
    const double tp = time_once(
        [&] { parallel_out = search_exhaustive(params, ExecPolicy::parallel); });
    if (serial_out.size() != parallel_out.size()) {
      std::fprintf(stderr, "policy mismatch in search\n");
      return 1;
    }
    row("search (1M candidates)", ts, tp);
  }

  return 0;
}
