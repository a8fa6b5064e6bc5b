#include <benchmark/benchmark.h>

#include "aisr/catalog.hpp"
#include "aisr/enumerate.hpp"
#include "aisr/oracles.hpp"
#include "aisr/satisfaction.hpp"

namespace {

const aisr::Registry& registry() {
  static const aisr::Registry reg = aisr::Registry::builtin();
  return reg;
}

void BM_SatisfiesWideIdentity(benchmark::State& state) {
  const aisr::Semiring& s = registry().get("S_(4,357)");
  const aisr::Identity id = aisr::parse_identity(
      "x1x2 + x2x3 + x4x5^2x6 + x7x8x9 = x1x2 + x2x3 + x4x5^2x6 + x7x8x9 + x5x8");
  for (auto _ : state) benchmark::DoNotOptimize(aisr::satisfies(s, id).holds);
}
BENCHMARK(BM_SatisfiesWideIdentity);

void BM_EnumerateSharedTable(benchmark::State& state) {
  const aisr::CayleyTable add = aisr::figure_add();
  for (auto _ : state) benchmark::DoNotOptimize(aisr::enumerate_ai_semirings(add).size());
}
BENCHMARK(BM_EnumerateSharedTable)->Unit(benchmark::kMillisecond);

void BM_InclusionOracleFamily(benchmark::State& state) {
  const aisr::GeneratorBounds bounds{2, 3, 2, false};
  const std::vector<aisr::Term> terms = aisr::term_universe(bounds);
  const std::vector<aisr::Word> words = aisr::word_universe(bounds);
  for (auto _ : state) {
    int holds = 0;
    for (const auto& u : terms)
      for (const auto& q : words)
        holds += aisr::inclusion_oracle(aisr::Lemma::S2, u, q).result ==
                 aisr::OracleResult::Holds;
    benchmark::DoNotOptimize(holds);
  }
}
BENCHMARK(BM_InclusionOracleFamily);

void BM_RandomIdentityStream(benchmark::State& state) {
  aisr::RandomTermStream stream(aisr::GeneratorBounds{4, 5, 4, false}, 20260816);
  for (auto _ : state) benchmark::DoNotOptimize(stream.next_identity().lhs.size());
}
BENCHMARK(BM_RandomIdentityStream);

void BM_Congruences(benchmark::State& state) {
  const aisr::Semiring& s = registry().get("S_(4,357)");
  for (auto _ : state) benchmark::DoNotOptimize(aisr::congruences(s).size());
}
BENCHMARK(BM_Congruences);

}  // namespace

BENCHMARK_MAIN();
