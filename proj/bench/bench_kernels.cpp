// Serial vs OpenMP kernels, plus the F_2 fast sweep vs the reference.
#include <benchmark/benchmark.h>

#include <random>

#include "torslab/kernels.hpp"
#include "torslab/stability.hpp"

using namespace torslab;

namespace {

const Catalogue& kronecker() {
  static const Catalogue cat = Catalogue::enumerate(
      std::make_shared<const Algebra>(load_algebra_file(std::string(TORSLAB_DATA) + "/kronecker.alg", 0)), {3, 3});
  return cat;
}

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_HomTable(benchmark::State& state) {
  kronecker();
  for (auto _ : state) benchmark::DoNotOptimize(hom_dim_table(kronecker(), exec_of(state)));
}
BENCHMARK(BM_HomTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& state) {
  const auto thetas = lattice_grid(2, -6, 6);
  for (auto _ : state) benchmark::DoNotOptimize(membership_sweep(kronecker(), thetas, Which::Tbar, exec_of(state)));
}
BENCHMARK(BM_Membership)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

std::vector<LinearFamily> families() {
  std::mt19937 rng(5);
  std::vector<LinearFamily> out;
  for (int x = 0; x < 40; ++x) {
    LinearFamily fam;
    fam.rows = 6;
    fam.cols = 4;
    for (int j = 0; j < 10; ++j) {
      Matrix m(fam.rows, fam.cols);
      for (auto& e : m.data()) e = static_cast<Elem>(rng() % 2);
      fam.w.push_back(std::move(m));
    }
    out.push_back(std::move(fam));
  }
  return out;
}

void BM_FullRank(benchmark::State& state) {
  const Fp f(2);
  const auto fams = families();
  for (auto _ : state) benchmark::DoNotOptimize(full_rank_sweep(f, 10, fams, exec_of(state)));
}
BENCHMARK(BM_FullRank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FullRankReference(benchmark::State& state) {
  const Fp f(2);
  const auto fams = families();
  for (auto _ : state) benchmark::DoNotOptimize(full_rank_sweep_reference(f, 10, fams));
}
BENCHMARK(BM_FullRankReference)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
