#include "benchmark/benchmark.h"
#include "fcext/resolution.hpp"

using namespace fcext;

namespace {

ModulePresentation sphere(const Algebra& alg, int t_max)
{
    ModulePresentation p;
    p.gen_degrees = {0};
    for (uint32_t n = 1; (int)n <= t_max; n *= 2) {
        AlgElt a = alg.to_pst(MilnorElt::single(MilnorBasisElt::sq(n)));
        std::vector<ModMono> terms;
        for (const Mono& m : a.terms)
            terms.push_back(ModMono{m, 0});
        sort_terms(terms);
        p.relations.push_back(FreeElt{std::move(terms)});
    }
    return p;
}

void BM_SphereResolution(benchmark::State& state)
{
    int T = (int)state.range(0);
    for (auto _ : state) {
        auto alg = std::make_shared<Algebra>(T);
        ResolveOptions opt;
        opt.s_max = T;
        Resolution res(alg, minimize_presentation(*alg, sphere(*alg, T)), opt);
        res.extend(T);
        benchmark::DoNotOptimize(res.total_gens());
    }
}
BENCHMARK(BM_SphereResolution)->Arg(12)->Arg(20)->Arg(28)->Unit(benchmark::kMillisecond);

}  // namespace
