#include <random>

#include "benchmark/benchmark.h"
#include "fcext/algebra.hpp"

using namespace fcext;

namespace {

std::vector<std::pair<MilnorBasisElt, MilnorBasisElt>> random_pairs(int deg, int count)
{
    std::mt19937_64 rng(deg * 1000 + count);
    std::vector<MilnorBasisElt> basis;
    {
        // all elements of the given degree
        std::vector<uint32_t> cur;
        auto dfs = [&](auto&& self, int k, int rest) -> void {
            if (rest == 0) {
                MilnorBasisElt m{cur};
                m.trim();
                basis.push_back(std::move(m));
                return;
            }
            int dk = (1 << k) - 1;
            if (dk > rest)
                return;
            for (int v = 0; v * dk <= rest; ++v) {
                cur.push_back((uint32_t)v);
                self(self, k + 1, rest - v * dk);
                cur.pop_back();
            }
        };
        dfs(dfs, 1, deg);
    }
    std::vector<std::pair<MilnorBasisElt, MilnorBasisElt>> pairs;
    for (int k = 0; k < count; ++k)
        pairs.push_back({basis[rng() % basis.size()], basis[rng() % basis.size()]});
    return pairs;
}

void BM_MilnorProduct(benchmark::State& state)
{
    int deg = (int)state.range(0);
    auto pairs = random_pairs(deg, 64);
    TruncationBound trunc{2 * deg};
    size_t k = 0;
    for (auto _ : state) {
        auto& [a, b] = pairs[k++ % pairs.size()];
        benchmark::DoNotOptimize(milnor_product(a, b, trunc));
    }
}
BENCHMARK(BM_MilnorProduct)->Arg(16)->Arg(24)->Arg(32)->Arg(48);

void BM_BasisConversionRoundTrip(benchmark::State& state)
{
    int deg = (int)state.range(0);
    Algebra alg(2 * deg);
    auto pairs = random_pairs(deg, 16);
    MilnorElt x;
    for (auto& [a, b] : pairs)
        x = add(x, milnor_product(a, b, alg.trunc_bound()));
    for (auto _ : state) {
        AlgElt conv = alg.to_pst(x);
        benchmark::DoNotOptimize(alg.to_milnor(conv));
    }
}
BENCHMARK(BM_BasisConversionRoundTrip)->Arg(12)->Arg(20);

}  // namespace
