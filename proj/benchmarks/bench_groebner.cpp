#include "benchmark/benchmark.h"
#include "fcext/groebner.hpp"

using namespace fcext;

namespace {

FreeElt ideal_elt(const Algebra& alg, uint32_t sq, int slot)
{
    AlgElt a = alg.to_pst(MilnorElt::single(MilnorBasisElt::sq(sq)));
    std::vector<ModMono> terms;
    for (const Mono& t : a.terms)
        terms.push_back(ModMono{t, slot});
    sort_terms(terms);
    return FreeElt{std::move(terms)};
}

void BM_BuchbergerIdeal(benchmark::State& state)
{
    int cap = (int)state.range(0);
    for (auto _ : state) {
        Algebra alg(cap);
        Groebner gb = buchberger(alg, {0}, {ideal_elt(alg, 1, 0), ideal_elt(alg, 2, 0)}, cap);
        benchmark::DoNotOptimize(gb.num_entries());
    }
}
BENCHMARK(BM_BuchbergerIdeal)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SyzygyRows(benchmark::State& state)
{
    int cap = (int)state.range(0);
    for (auto _ : state) {
        Algebra alg(cap);
        auto rows = syzygy_of_generators(alg, {0}, {ideal_elt(alg, 1, 0), ideal_elt(alg, 2, 0)}, cap);
        benchmark::DoNotOptimize(rows.size());
    }
}
BENCHMARK(BM_SyzygyRows)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
