#include "fcext/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "fcext/f2linear.hpp"

namespace fcext {

namespace {

int degree_of(const std::vector<int>& slot_degs, const FreeElt& x)
{
    int d = -1;
    for (const ModMono& t : x.terms) {
        int td = t.m.deg + slot_degs[t.slot];
        FCEXT_CHECK(d < 0 || td == d, "inhomogeneous relation");
        d = td;
    }
    return d;
}

}  // namespace

ModulePresentation minimize_presentation(const Algebra& alg, const ModulePresentation& p)
{
    const int r = p.rank();
    for (const FreeElt& x : p.relations)
        degree_of(p.gen_degrees, x);

    // unit-coefficient part of each relation
    BitMatrix y((int)p.relations.size(), r);
    for (size_t i = 0; i < p.relations.size(); ++i)
        for (const ModMono& t : p.relations[i].terms)
            if (t.m.is_unit())
                y.set(i, t.slot);

    RowReduceResult rr = row_reduce(y);
    if (rr.pivots.empty())
        return p;

    // replay the identical row operations on the full relations
    std::vector<FreeElt> xs = p.relations;
    for (const RowOp& op : rr.transform.ops) {
        if (op.kind == RowOp::swap)
            std::swap(xs[op.a], xs[op.b]);
        else
            xs[op.a] = add(xs[op.a], xs[op.b]);
    }

    std::vector<char> redundant(r, 0);
    std::vector<FreeElt> rule(r);  // e_c -> rule[c], for redundant c
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        int c = (int)rr.pivots[i];
        redundant[c] = 1;
        rule[c] = add(xs[i], FreeElt{{ModMono{Mono{}, c}}});  // x'_i minus the pivot term
    }

    // substitute until no rule mentions a redundant generator
    auto substitute = [&](FreeElt v) {
        for (;;) {
            std::vector<ModMono> keep;
            std::vector<std::pair<Mono, int>> subst;
            for (const ModMono& t : v.terms) {
                if (redundant[t.slot])
                    subst.push_back({t.m, t.slot});
                else
                    keep.push_back(t);
            }
            if (subst.empty())
                return v;
            FreeElt acc{std::move(keep)};
            for (auto& [m, c] : subst)
                acc = add(acc, alg.mul(m, rule[c]));
            v = std::move(acc);
        }
    };
    for (int c = 0; c < r; ++c)
        if (redundant[c])
            rule[c] = substitute(rule[c]);

    std::vector<int> new_slot(r, -1);
    ModulePresentation out;
    for (int c = 0; c < r; ++c) {
        if (!redundant[c]) {
            new_slot[c] = (int)out.gen_degrees.size();
            out.gen_degrees.push_back(p.gen_degrees[c]);
        }
    }
    for (FreeElt& x : xs) {
        FreeElt v = substitute(std::move(x));
        if (v.is_zero())
            continue;
        for (ModMono& t : v.terms)
            t.slot = new_slot[t.slot];
        out.relations.push_back(std::move(v));
    }
    return out;
}

std::vector<FreeElt> minimal_generators(const Algebra& alg, std::vector<int> slot_degs,
                                        const std::vector<FreeElt>& xs, int deg_cap, GroebnerOptions opt)
{
    std::vector<int> order(xs.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> degs(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        FCEXT_CHECK(!xs[i].is_zero(), "minimal_generators: zero element");
        degs[i] = degree_of(slot_degs, xs[i]);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degs[a] < degs[b]; });

    Groebner gb(alg, std::move(slot_degs), opt);
    std::vector<FreeElt> kept;
    for (int i : order) {
        if (degs[i] > deg_cap)
            continue;
        gb.advance(degs[i]);
        FreeElt rem = gb.reduce_full(xs[i]).rem;
        if (!rem.is_zero()) {
            gb.add_input(std::move(rem));
            kept.push_back(xs[i]);
        }
    }
    return kept;
}

}  // namespace fcext
