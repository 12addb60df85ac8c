#include "fcext/groebner.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "fcext/parallel.hpp"
#include "fcext/termheap.hpp"

namespace fcext {

namespace {

int pv_kind_rank(const Provenance& p)
{
    return p.kind == Provenance::step1 ? 0 : p.kind == Provenance::spair ? 1 : 2;
}

bool pv_less(const Provenance& a, const Provenance& b)
{
    if (pv_kind_rank(a) != pv_kind_rank(b))
        return pv_kind_rank(a) < pv_kind_rank(b);
    if (a.a != b.a)
        return a.a < b.a;
    if (a.b != b.b)
        return a.b < b.b;
    return a.exp2 < b.exp2;
}

std::string pv_str(const Provenance& p)
{
    switch (p.kind) {
        case Provenance::input:
            return "input:" + std::to_string(p.a);
        case Provenance::spair:
            return "pair:" + std::to_string(p.a) + "," + std::to_string(p.b);
        default:
            return "step1:" + std::to_string(p.a) + ",g" + std::to_string(p.b) + (p.exp2 ? "^2" : "");
    }
}

}  // namespace

Groebner::Groebner(const Algebra& alg, std::vector<int> slot_degs, GroebnerOptions opt)
    : alg_(&alg), slot_degs_(std::move(slot_degs)), opt_(opt), lead_by_slot_(slot_degs_.size())
{
}

int Groebner::degree_of(const FreeElt& x) const
{
    FCEXT_CHECK(!x.is_zero(), "degree_of: zero element");
    int d = -1;
    for (const ModMono& t : x.terms) {
        FCEXT_CHECK(t.slot >= 0 && t.slot < (int)slot_degs_.size(), "slot out of range");
        int td = t.m.deg + slot_degs_[t.slot];
        FCEXT_CHECK(d < 0 || td == d, "inhomogeneous element");
        d = td;
    }
    return d;
}

int Groebner::find_divisor(const ModMono& t, int limit) const
{
    for (const auto& [mask, e] : lead_by_slot_[t.slot]) {
        if (e >= limit)
            break;
        if ((mask & ~t.m.bits) == 0)
            return e;
    }
    return -1;
}

ReductionResult Groebner::reduce_limit(FreeElt a, int limit, bool want_steps) const
{
    ReductionResult res;
    std::vector<ModMono> done;
    TermMerger tm;
    tm.push_free(a);  // a stays alive below
    ModMono t;
    while (tm.pop(t)) {
        int e = find_divisor(t, limit);
        if (e < 0) {
            done.push_back(t);
            continue;
        }
        Mono q = quotient(t.m, entries_[e].lead.m);
        // cancel t against the lead of q~ h and stream in the rest
        tm.push_singleton(t);
        for (const ModMono& hm : entries_[e].elt.terms)
            tm.push_alg(alg_->mul_mono_mono(q, hm.m), hm.slot);
        if (want_steps)
            res.steps.push_back({q, e});
    }
    res.rem = FreeElt{std::move(done)};
    return res;
}

ReductionResult Groebner::reduce_full(FreeElt a, bool want_steps) const
{
    return reduce_limit(std::move(a), num_entries(), want_steps);
}

FreeElt Groebner::steps_in_inputs(const std::vector<ReductionStep>& steps) const
{
    std::vector<FreeElt> parts;
    parts.reserve(steps.size());
    for (const ReductionStep& s : steps)
        parts.push_back(alg_->mul(s.q, q_[s.entry]));
    TermMerger tm;
    for (const FreeElt& p : parts)
        tm.push_free(p);
    return FreeElt{tm.drain()};
}

void Groebner::add_slot(int deg)
{
    slot_degs_.push_back(deg);
    lead_by_slot_.emplace_back();
}

Groebner Groebner::restore(const Algebra& alg, std::vector<int> slot_degs, GroebnerOptions opt,
                           std::vector<GBEntry> entries, std::vector<FreeElt> q_rows,
                           std::vector<int> input_degs, int deg_done)
{
    Groebner gb(alg, std::move(slot_degs), opt);
    gb.entries_ = std::move(entries);
    gb.q_ = std::move(q_rows);
    gb.input_degs_ = std::move(input_degs);
    gb.n_inputs_ = (int)gb.input_degs_.size();
    FCEXT_CHECK(gb.entries_.size() == gb.q_.size(), "restore: entry/Q size mismatch");
    for (int n = 0; n < gb.num_entries(); ++n) {
        const ModMono& lead = gb.entries_[n].lead;
        FCEXT_CHECK(lead.slot >= 0 && lead.slot < (int)gb.slot_degs_.size(), "restore: slot out of range");
        FCEXT_CHECK(!gb.entries_[n].elt.is_zero() && leading(gb.entries_[n].elt) == lead, "restore: bad lead");
        gb.lead_by_slot_[lead.slot].push_back({lead.m.bits, n});
        gb.schedule_pairs(n);
    }
    gb.deg_done_ = deg_done;
    while (!gb.queue_.empty() && gb.queue_.top().deg <= deg_done) {
        if (gb.queue_.top().pv.kind == Provenance::spair)
            gb.processed_.push_back({gb.queue_.top().pv.a, gb.queue_.top().pv.b});
        gb.queue_.pop();
    }
    return gb;
}

int Groebner::add_input(FreeElt x)
{
    FCEXT_CHECK(!x.is_zero(), "add_input: zero generator");
    int d = degree_of(x);
    FCEXT_CHECK(d >= deg_done_, "add_input: degree already completed");
    int idx = n_inputs_++;
    input_degs_.push_back(d);
    FreeElt qrow{{ModMono{Mono{}, idx}}};
    ModMono lead = leading(x);
    entries_.push_back(GBEntry{std::move(x), lead, Provenance{Provenance::input, idx, -1, false}});
    q_.push_back(std::move(qrow));
    lead_by_slot_[lead.slot].push_back({lead.m.bits, (int32_t)entries_.size() - 1});
    schedule_pairs((int)entries_.size() - 1);
    return idx;
}

void Groebner::append_entry(FreeElt elt, Provenance pv, FreeElt q_row)
{
    ModMono lead = leading(elt);
    // the staircase must strictly grow on every pair-derived append
    FCEXT_CHECK(find_divisor(lead, num_entries()) < 0, "append_entry: lead already in staircase");
    entries_.push_back(GBEntry{std::move(elt), lead, pv});
    q_.push_back(std::move(q_row));
    lead_by_slot_[lead.slot].push_back({lead.m.bits, (int32_t)entries_.size() - 1});
    schedule_pairs((int)entries_.size() - 1);
}

void Groebner::push_pair(int deg, Provenance pv)
{
    if (deg > alg_->trunc())
        return;
    queue_.push(Pair{deg, seq_++, pv});
}

void Groebner::schedule_pairs(int n)
{
    const GBEntry& en = entries_[n];
    int en_deg = en.lead.m.deg + slot_degs_[en.lead.slot];
    const GenTable& table = alg_->gens();
    // step (1): (entry, g) with g = (P^i_j)^2.  When P^i_j divides the lead
    // the quotient is P^i_j itself; the remaining g only matter in literal mode.
    for (uint64_t b = en.lead.m.bits; b; b &= b - 1) {
        int r = std::countr_zero(b);
        push_pair(en_deg + table[r].deg, Provenance{Provenance::step1, n, r, false});
    }
    if (opt_.literal_step1) {
        for (int r = 0; r < table.size(); ++r) {
            if (en.lead.m.bits >> r & 1)
                continue;
            if (en_deg + 2 * table[r].deg > alg_->trunc())
                continue;
            if (alg_->gen_square(r).is_zero())
                continue;  // zero quotient lift, nothing to reduce
            push_pair(en_deg + 2 * table[r].deg, Provenance{Provenance::step1, n, r, true});
        }
    }
    // step (2): pairs sharing the e_i factor
    for (const auto& [mask, m] : lead_by_slot_[en.lead.slot]) {
        if (m == n)
            continue;
        Mono l = lcm(alg_->gens(), entries_[m].lead.m, en.lead.m);
        push_pair(l.deg + slot_degs_[en.lead.slot], Provenance{Provenance::spair, m, n, false});
    }
}

FreeElt Groebner::pair_element(const Provenance& pv) const
{
    if (pv.kind == Provenance::step1) {
        if (pv.exp2)
            return alg_->mul(alg_->gen_square(pv.b), entries_[pv.a].elt);
        return alg_->mul(mono_gen(alg_->gens(), pv.b), entries_[pv.a].elt);
    }
    const GBEntry& ha = entries_[pv.a];
    const GBEntry& hb = entries_[pv.b];
    Mono l = lcm(alg_->gens(), ha.lead.m, hb.lead.m);
    return add(alg_->mul(quotient(l, ha.lead.m), ha.elt), alg_->mul(quotient(l, hb.lead.m), hb.elt));
}

FreeElt Groebner::pair_combo(const Provenance& pv, const std::vector<ReductionStep>& steps) const
{
    FreeElt acc = steps_in_inputs(steps);
    if (pv.kind == Provenance::step1) {
        if (pv.exp2)
            acc = add(acc, alg_->mul(alg_->gen_square(pv.b), q_[pv.a]));
        else
            acc = add(acc, alg_->mul(mono_gen(alg_->gens(), pv.b), q_[pv.a]));
    }
    else {
        const GBEntry& ha = entries_[pv.a];
        const GBEntry& hb = entries_[pv.b];
        Mono l = lcm(alg_->gens(), ha.lead.m, hb.lead.m);
        acc = add(acc, alg_->mul(quotient(l, ha.lead.m), q_[pv.a]));
        acc = add(acc, alg_->mul(quotient(l, hb.lead.m), q_[pv.b]));
    }
    return acc;
}

bool Groebner::triple_redundant(const Provenance& pv) const
{
    if (pv.kind != Provenance::spair)
        return false;
    auto key = [](int i, int j) { return (uint64_t)std::min(i, j) << 32 | (uint32_t)std::max(i, j); };
    std::unordered_set<uint64_t> done;
    for (auto& p : processed_)
        done.insert(key(p.first, p.second));
    const GBEntry& ha = entries_[pv.a];
    const GBEntry& hb = entries_[pv.b];
    Mono l = lcm(alg_->gens(), ha.lead.m, hb.lead.m);
    for (const auto& [mask, k] : lead_by_slot_[ha.lead.slot]) {
        if (k == pv.a || k == pv.b)
            continue;
        if ((mask & ~l.bits) == 0 && done.count(key(pv.a, k)) && done.count(key(pv.b, k)))
            return true;
    }
    return false;
}

std::vector<FreeElt> Groebner::advance(int t, bool capture)
{
    std::vector<FreeElt> kernel_out;
    while (!queue_.empty() && queue_.top().deg <= t) {
        int d = queue_.top().deg;
        std::vector<Pair> batch;
        while (!queue_.empty() && queue_.top().deg == d) {
            batch.push_back(queue_.top());
            queue_.pop();
        }
        if (opt_.triple_criterion && !capture) {
            std::vector<Pair> kept;
            for (const Pair& p : batch) {
                if (triple_redundant(p.pv))
                    processed_.push_back({p.pv.a, p.pv.b});
                else
                    kept.push_back(p);
            }
            batch = std::move(kept);
        }
        // phase A: reduce every pair element against the frozen snapshot
        int snap = num_entries();
        std::vector<ReductionResult> red(batch.size());
        bool concurrent = opt_.threads > 1 && batch.size() > 1;
        if (concurrent)
            alg_->set_concurrent(true);
        parallel_for((int)batch.size(), opt_.threads,
                     [&](int k) { red[k] = reduce_limit(pair_element(batch[k].pv), snap, true); });
        if (concurrent)
            alg_->set_concurrent(false);
        // phase B: serialize appends in canonical order
        std::vector<int> order(batch.size());
        for (size_t k = 0; k < order.size(); ++k)
            order[k] = (int)k;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            bool zx = red[x].rem.is_zero(), zy = red[y].rem.is_zero();
            if (zx != zy)
                return zy;
            if (!zx) {
                auto c = cmp(leading(red[x].rem), leading(red[y].rem));
                if (c != 0)
                    return c < 0;
            }
            return pv_less(batch[x].pv, batch[y].pv);
        });
        for (int k : order) {
            ReductionResult& r = red[k];
            if (!r.rem.is_zero() && num_entries() > snap) {
                ReductionResult more = reduce_full(std::move(r.rem), true);
                r.rem = std::move(more.rem);
                r.steps.insert(r.steps.end(), more.steps.begin(), more.steps.end());
            }
            if (r.rem.is_zero()) {
                if (capture) {
                    FreeElt combo = pair_combo(batch[k].pv, r.steps);
                    if (!combo.is_zero())
                        kernel_out.push_back(std::move(combo));
                }
            }
            else {
                FreeElt combo = pair_combo(batch[k].pv, r.steps);
                append_entry(std::move(r.rem), batch[k].pv, std::move(combo));
            }
            if (batch[k].pv.kind == Provenance::spair)
                processed_.push_back({batch[k].pv.a, batch[k].pv.b});
        }
    }
    deg_done_ = std::max(deg_done_, t);
    return kernel_out;
}

int64_t Groebner::staircase_dim(int deg) const
{
    int64_t count = 0;
    for (int slot = 0; slot < (int)slot_degs_.size(); ++slot) {
        int mdeg = deg - slot_degs_[slot];
        if (mdeg < 0)
            continue;
        for (const Mono& m : monomials_of_degree(alg_->gens(), mdeg)) {
            bool divisible = false;
            for (const auto& [mask, e] : lead_by_slot_[slot]) {
                if ((mask & ~m.bits) == 0) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible)
                ++count;
        }
    }
    return count;
}

std::vector<SyzygyRecord> Groebner::syzygy_generators() const
{
    FCEXT_CHECK(queue_.empty() || queue_.top().deg > deg_done_, "syzygy_generators: pair queue nonempty");
    std::vector<SyzygyRecord> out;
    const GenTable& table = alg_->gens();
    auto reduce_to_sigma = [&](const Provenance& pv) {
        ReductionResult r = reduce_full(pair_element(pv), true);
        FCEXT_CHECK(r.rem.is_zero(), "syzygy_generators: pair element does not reduce to zero");
        std::vector<ModMono> sigma;
        if (pv.kind == Provenance::step1) {
            if (pv.exp2) {
                for (const Mono& m : alg_->gen_square(pv.b).terms)
                    sigma.push_back(ModMono{m, pv.a});
            }
            else {
                sigma.push_back(ModMono{mono_gen(table, pv.b), pv.a});
            }
        }
        else {
            Mono l = lcm(table, entries_[pv.a].lead.m, entries_[pv.b].lead.m);
            sigma.push_back(ModMono{quotient(l, entries_[pv.a].lead.m), pv.a});
            sigma.push_back(ModMono{quotient(l, entries_[pv.b].lead.m), pv.b});
        }
        for (const ReductionStep& s : r.steps)
            sigma.push_back(ModMono{s.q, s.entry});
        sort_terms(sigma);
        out.push_back(SyzygyRecord{pv, FreeElt{std::move(sigma)}});
    };
    for (int n = 0; n < num_entries(); ++n) {
        const GBEntry& en = entries_[n];
        int en_deg = en.lead.m.deg + slot_degs_[en.lead.slot];
        for (uint64_t b = en.lead.m.bits; b; b &= b - 1) {
            int r = std::countr_zero(b);
            if (en_deg + table[r].deg <= deg_done_)
                reduce_to_sigma(Provenance{Provenance::step1, n, r, false});
        }
        if (opt_.literal_step1) {
            for (int r = 0; r < table.size(); ++r) {
                if (en.lead.m.bits >> r & 1)
                    continue;
                if (en_deg + 2 * table[r].deg > deg_done_ || alg_->gen_square(r).is_zero())
                    continue;
                reduce_to_sigma(Provenance{Provenance::step1, n, r, true});
            }
        }
    }
    for (int i = 0; i < num_entries(); ++i) {
        for (int j = i + 1; j < num_entries(); ++j) {
            if (entries_[i].lead.slot != entries_[j].lead.slot)
                continue;
            Mono l = lcm(table, entries_[i].lead.m, entries_[j].lead.m);
            if (l.deg + slot_degs_[entries_[i].lead.slot] <= deg_done_)
                reduce_to_sigma(Provenance{Provenance::spair, i, j, false});
        }
    }
    return out;
}

std::string Groebner::dump() const
{
    std::ostringstream os;
    for (const GBEntry& e : entries_) {
        os << "lead=" << to_string(alg_->gens(), e.lead) << " terms=" << e.elt.terms.size()
           << " origin=" << pv_str(e.origin) << "\n";
    }
    return os.str();
}

Groebner buchberger(const Algebra& alg, std::vector<int> slot_degs, const std::vector<FreeElt>& gens,
                    int deg_cap, GroebnerOptions opt)
{
    Groebner gb(alg, std::move(slot_degs), opt);
    for (const FreeElt& x : gens)
        gb.add_input(x);
    gb.advance(deg_cap);
    return gb;
}

std::vector<FreeElt> syzygy_of_generators(const Algebra& alg, std::vector<int> slot_degs,
                                          const std::vector<FreeElt>& gens, int deg_cap, GroebnerOptions opt)
{
    Groebner gb = buchberger(alg, std::move(slot_degs), gens, deg_cap, opt);
    std::vector<FreeElt> rows;
    for (const SyzygyRecord& s : gb.syzygy_generators()) {
        std::vector<ModMono> acc;
        for (const ModMono& t : s.vector.terms) {
            FreeElt part = alg.mul(t.m, gb.q_row(t.slot));
            acc.insert(acc.end(), part.terms.begin(), part.terms.end());
        }
        sort_terms(acc);
        if (!acc.empty())
            rows.push_back(FreeElt{std::move(acc)});
    }
    return rows;
}

}  // namespace fcext
