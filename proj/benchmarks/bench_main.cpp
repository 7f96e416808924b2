#include <benchmark/benchmark.h>

#include "mumford/acceptance.hpp"
#include "mumford/moduli.hpp"

namespace {

using namespace mumford;

void BM_SmithNormalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = (i * 7 + j * 3) % 11 - 5;
  for (auto _ : state) {
    auto d = smith_normal_form(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateHoms(benchmark::State& state) {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  int genus = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto homs = enumerate_homs(genus, s3);
    benchmark::DoNotOptimize(homs);
  }
  state.SetItemsProcessed(state.iterations() * commutator_convolution_count(s3, genus));
}
BENCHMARK(BM_EnumerateHoms)->Arg(1)->Arg(2);

void BM_SecondCohomology(benchmark::State& state) {
  std::vector<MatrixCell> cells = matrix_cells();
  const MatrixCell& cell = cells[static_cast<size_t>(state.range(0))];
  for (auto _ : state) {
    H2 h2(cell.sigma);
    benchmark::DoNotOptimize(h2.order());
  }
  state.SetLabel(cell.name);
}
BENCHMARK(BM_SecondCohomology)->Arg(6)->Arg(7); // V4-Z2-trivial, S3-Z2^3-permute

void BM_BuildCover(benchmark::State& state) {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  SurfaceRep rep = surjective_homs(2, s3).front();
  for (auto _ : state) {
    CoverPresentation c(s3, rep);
    benchmark::DoNotOptimize(c.relator_matrix());
  }
}
BENCHMARK(BM_BuildCover);

void BM_CoverInvariants(benchmark::State& state) {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GAction sigma = GAction::coordinate_permutation(s3, FinAbGroup({2, 2, 2}));
  CoverPresentation c(s3, surjective_homs(2, s3).front());
  for (auto _ : state) {
    auto inv = invariants_subgroup(c, sigma);
    benchmark::DoNotOptimize(inv.order());
  }
}
BENCHMARK(BM_CoverInvariants);

void BM_VerifyFiberTheorem(benchmark::State& state) {
  GAction sigma = GAction::trivial(FiniteGroup::cyclic(2), FinAbGroup({2}));
  H2 h2(sigma);
  CoverPresentation c(FiniteGroup::cyclic(2), SurfaceRep{1, {1, 0}});
  Extension e = Extension::from_cocycle(sigma, h2.representative({1}));
  for (auto _ : state) {
    FiberReport r = verify_fiber_theorem(c, e, h2);
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_VerifyFiberTheorem);

void BM_DihedralSuite(benchmark::State& state) {
  for (auto _ : state) {
    DihedralReport r = dihedral_suite(1, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_DihedralSuite)->Arg(3)->Arg(5);

} // namespace

BENCHMARK_MAIN();
