// Timings of the OpenMP kernels against their serial reference
// implementations: state materialization, full-sum gradients and dense
// Hamiltonian assembly.
#include <chrono>
#include <cstdio>

#include "nqs/dense.hpp"
#include "nqs/rbm.hpp"
#include "nqs/sampler.hpp"

using namespace nqs;

namespace {

template <class Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s < best) best = s;
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial * 1e3, parallel * 1e3,
              serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", par::max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    const RbmState s = RbmState::random(14, 28, 0.3, 1);
    volatile double sink = 0.0;
    const double ser = time_best_of(3, [&] { sink += materialize(s, Exec::kSerial).norm(); });
    const double par = time_best_of(3, [&] { sink += materialize(s, Exec::kParallel).norm(); });
    row("materialize n=14 m=28", ser, par);
  }
  {
    const auto h = build_tfim(12, 1.0, 1.0, Boundary::kPeriodic);
    const RbmState s = RbmState::random(12, 24, 0.05, 2, SpinConvention::kPlusMinusOne,
                                        SpinConvention::kPlusMinusOne);
    volatile double sink = 0.0;
    const double ser =
        time_best_of(3, [&] { sink += full_sum_gradient(s, h, std::nullopt, Exec::kSerial).gradient.norm(); });
    const double par =
        time_best_of(3, [&] { sink += full_sum_gradient(s, h, std::nullopt, Exec::kParallel).gradient.norm(); });
    row("full-sum gradient n=12", ser, par);
  }
  {
    const auto h = build_afh(10, 1.0, Boundary::kPeriodic);
    volatile double sink = 0.0;
    const double ser = time_best_of(3, [&] { sink += dense_matrix(h, Exec::kSerial).norm(); });
    const double par = time_best_of(3, [&] { sink += dense_matrix(h, Exec::kParallel).norm(); });
    row("dense assembly n=10", ser, par);
  }
  {
    const auto h = build_tfim(10, 1.0, 1.0, Boundary::kPeriodic);
    const RbmState s = RbmState::random(10, 20, 0.05, 3, SpinConvention::kPlusMinusOne,
                                        SpinConvention::kPlusMinusOne);
    SamplerOptions opt;
    opt.n_chains = 4;
    volatile double sink = 0.0;
    const double multi =
        time_best_of(3, [&] { sink += estimate_energy(s, h, 20000, 9, opt).mean.real(); });
    SamplerOptions one;
    const double single =
        time_best_of(3, [&] { sink += estimate_energy(s, h, 20000, 9, one).mean.real(); });
    row("sampling 20k (1 vs 4 ch)", single, multi);
  }
  return 0;
}
