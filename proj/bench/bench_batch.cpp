// Serial versus OpenMP classification of seeded metric batches.
// Usage: bench_batch [samples-per-entry] [seed]

#include "acs/catalog.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

using namespace acs;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same(const MetricReport& a, const MetricReport& b) {
  return a.gauduchon == b.gauduchon && a.strongly_gauduchon == b.strongly_gauduchon &&
         a.integral_condition == b.integral_condition && a.orthogonality == b.orthogonality && a.d_omega == b.d_omega;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t samples = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
  std::printf("threads: %d, samples per entry: %zu, seed: %llu\n", omp_get_max_threads(), samples,
              static_cast<unsigned long long>(seed));
  std::printf("%-18s %10s %10s %8s %s\n", "entry", "serial s", "parallel s", "speedup", "agree");
  bool all_agree = true;
  for (const auto& name : builtin_names()) {
    const ManifoldDescriptor d = builtin(name);
    const auto acs = build_structure(d);
    const auto metrics = sample_metrics(acs->n(), samples, seed);

    auto start = std::chrono::steady_clock::now();
    const auto serial = classify_batch(acs, d.omega_scale, metrics, Execution::Serial);
    const double t_serial = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const auto parallel = classify_batch(acs, d.omega_scale, metrics, Execution::Parallel);
    const double t_parallel = seconds_since(start);

    bool agree = serial.size() == parallel.size();
    for (std::size_t i = 0; agree && i < serial.size(); ++i) agree = same(serial[i], parallel[i]);
    all_agree = all_agree && agree;
    std::printf("%-18s %10.3f %10.3f %7.2fx %s\n", name.c_str(), t_serial, t_parallel, t_serial / t_parallel,
                agree ? "yes" : "NO");
  }
  return all_agree ? 0 : 1;
}
