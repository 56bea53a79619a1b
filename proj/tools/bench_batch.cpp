// Benchmark of the batch evaluation kernels: serial reference vs OpenMP.
// Also verifies that both produce identical reports before timing them.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <vector>

#include "opeff/batch.hpp"

namespace {

using namespace opeff;
using Clock = std::chrono::steady_clock;

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

std::vector<LumpedOperation> synth_lumped(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> time_u(0.0, 10.0);
  std::vector<LumpedOperation> ops;
  ops.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = log_uniform(rng, 0.1, 100.0);
    const double k = log_uniform(rng, 1.01, 5.0);
    const double t_r = time_u(rng);
    const double t_op = log_uniform(rng, 0.1, 10.0);
    ops.push_back(make_lumped(re, re * k, t_r, t_r + t_op));
  }
  return ops;
}

std::vector<FlowOperation> synth_flows(std::size_t n) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> time_u(0.0, 10.0);
  std::vector<FlowOperation> flows;
  flows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = log_uniform(rng, 0.1, 100.0);
    const double k = log_uniform(rng, 1.05, 5.0);
    const double t_r = time_u(rng);
    const double t_op = log_uniform(rng, 0.1, 10.0);
    flows.push_back(make_flow({{t_r, -re}, {t_r + t_op, re * k}}));
  }
  return flows;
}

template <typename Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    fn();
    const std::chrono::duration<double, std::milli> dt = Clock::now() - start;
    best = std::min(best, dt.count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
  const AssessmentConfig cfg;
  const DaughterSpec dspec;

  std::cout << "batch evaluation benchmark: n=" << n
            << ", threads=" << batch_threads() << "\n";

  const auto ops = synth_lumped(n);
  const auto serial = evaluate_all(ops, cfg, dspec, ExecPolicy::Serial);
  const auto parallel = evaluate_all(ops, cfg, dspec, ExecPolicy::Parallel);
  if (serial != parallel) {
    std::cerr << "FAIL: lumped kernels disagree\n";
    return 1;
  }
  const double s_ms = best_of(3, [&] {
    (void)evaluate_all(ops, cfg, dspec, ExecPolicy::Serial);
  });
  const double p_ms = best_of(3, [&] {
    (void)evaluate_all(ops, cfg, dspec, ExecPolicy::Parallel);
  });
  std::cout << "lumped  serial " << s_ms << " ms, parallel " << p_ms
            << " ms, speedup " << s_ms / p_ms << ", identical: yes\n";

  const auto flows = synth_flows(n / 10 + 1);
  const auto fserial = evaluate_all(flows, cfg, dspec, ExecPolicy::Serial);
  const auto fparallel = evaluate_all(flows, cfg, dspec, ExecPolicy::Parallel);
  bool same = fserial.size() == fparallel.size();
  for (std::size_t i = 0; same && i < fserial.size(); ++i)
    same = fserial[i].report == fparallel[i].report &&
           fserial[i].error == fparallel[i].error;
  if (!same) {
    std::cerr << "FAIL: flow kernels disagree\n";
    return 1;
  }
  const double fs_ms = best_of(3, [&] {
    (void)evaluate_all(flows, cfg, dspec, ExecPolicy::Serial);
  });
  const double fp_ms = best_of(3, [&] {
    (void)evaluate_all(flows, cfg, dspec, ExecPolicy::Parallel);
  });
  std::cout << "flow    serial " << fs_ms << " ms, parallel " << fp_ms
            << " ms, speedup " << fs_ms / fp_ms << ", identical: yes\n";
  return 0;
}
