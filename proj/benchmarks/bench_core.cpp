#include <benchmark/benchmark.h>

#include "semisplit/exactness.hpp"
#include "semisplit/fixture.hpp"
#include "semisplit/kwitness.hpp"
#include "semisplit/nilcat.hpp"
#include "semisplit/random.hpp"
#include "semisplit/vcclass.hpp"

using namespace semisplit;

namespace {

RingTag base(const char* name) {
  return {RingKind::GroupRingF, resolve_fixture(name, default_fixture_dir()), CoeffRing::integers()};
}

void BM_GroupMul(benchmark::State& st) {
  const AmalgamPtr G = resolve_fixture("FIX-S", default_fixture_dir());
  Rng rng(1, "bench-mul");
  const GroupWord a = random_word(rng, *G, 16), b = random_word(rng, *G, 16);
  for (auto _ : st) benchmark::DoNotOptimize(G->mul(a, b));
}
BENCHMARK(BM_GroupMul);

void BM_MatrixMul(benchmark::State& st) {
  const RingTag T = base("FIX-N").with_kind(RingKind::GroupRingG);
  Rng rng(2, "bench-mat");
  const auto n = static_cast<std::size_t>(st.range(0));
  const RingMatrix A = random_matrix(rng, T, n, n), B = random_matrix(rng, T, n, n);
  for (auto _ : st) benchmark::DoNotOptimize(A * B);
}
BENCHMARK(BM_MatrixMul)->Arg(2)->Arg(4)->Arg(8);

void BM_SigmaADiagonalization(benchmark::State& st) {
  const RingTag T = base("FIX-S");
  Rng rng(3, "bench-sigma");
  std::vector<NilA> xs;
  for (int i = 0; i < 32; ++i) xs.push_back(random_nilA(rng, T, Order::B1B2));
  std::size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(verify_sigmaA_diagonalization(xs[i++ % xs.size()]));
}
BENCHMARK(BM_SigmaADiagonalization);

void BM_Exactness(benchmark::State& st) {
  const RingTag T = base("FIX-N");
  Rng rng(4, "bench-exact");
  const NilA x = random_nilA(rng, T, Order::B1B2);
  const auto seqs = proof_sequences(build_proof_objects(x));
  for (auto _ : st) benchmark::DoNotOptimize(check_exact(seqs[0]));
}
BENCHMARK(BM_Exactness);

void BM_Psl2Enumerate(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(psl2::enumerate_maximal_vc(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_Psl2Enumerate)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
