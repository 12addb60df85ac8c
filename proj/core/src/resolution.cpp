#include "fcext/resolution.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace fcext {

Resolution::Resolution(std::shared_ptr<const Algebra> alg, ModulePresentation minimized, ResolveOptions opt)
    : alg_(std::move(alg)), pres_(std::move(minimized)), opt_(opt)
{
    FCEXT_CHECK(opt_.s_max >= 1, "s_max must be positive");
    for (int d : pres_.gen_degrees)
        FCEXT_CHECK(d >= 0, "generator degrees must be non-negative");
    stages_.reserve(opt_.s_max);
    for (int s = 1; s <= opt_.s_max; ++s) {
        std::vector<int> degs = (s == 1) ? pres_.gen_degrees : std::vector<int>{};
        stages_.push_back(Stage{{}, {}, Groebner(*alg_, std::move(degs), opt_.gb)});
    }
}

Resolution::Resolution(std::shared_ptr<const Algebra> alg, ModulePresentation minimized, ResolveOptions opt,
                       std::vector<StageData> stages, int t_done)
    : alg_(std::move(alg)), pres_(std::move(minimized)), opt_(opt), t_done_(t_done)
{
    FCEXT_CHECK((int)stages.size() == opt_.s_max, "stage count mismatch");
    stages_.reserve(opt_.s_max);
    for (int s = 1; s <= opt_.s_max; ++s) {
        StageData& sd = stages[s - 1];
        std::vector<int> slot_degs = (s == 1) ? pres_.gen_degrees : stages_[s - 2].gen_degs;
        Groebner gb = Groebner::restore(*alg_, std::move(slot_degs), opt_.gb, std::move(sd.gb_entries),
                                        std::move(sd.gb_q_rows), sd.gen_degs, sd.gb_deg_done);
        stages_.push_back(Stage{std::move(sd.gen_degs), std::move(sd.d_vals), std::move(gb)});
    }
}

void Resolution::add_generator(int s, int t, FreeElt value)
{
    for (const ModMono& term : value.terms)
        FCEXT_CHECK(!term.m.is_unit(), "minimality violated: differential value has a unit coefficient");
    Stage& st = stages_[s - 1];
    st.gen_degs.push_back(t);
    st.d_vals.push_back(value);
    st.gb.add_input(std::move(value));
    if (s < opt_.s_max)
        stages_[s].gb.add_slot(t);
}

void Resolution::extend(int t_max, const ProgressFn& progress)
{
    FCEXT_CHECK(t_max <= alg_->trunc(), "t_max exceeds the algebra truncation");
    for (int t = t_done_ + 1; t <= t_max; ++t) {
        auto t0 = std::chrono::steady_clock::now();
        int new_gens = 0;
        std::vector<FreeElt> cands;
        for (const FreeElt& rel : pres_.relations) {
            if (stages_[0].gb.degree_of(rel) == t)
                cands.push_back(rel);
        }
        for (int s = 1; s <= opt_.s_max; ++s) {
            Stage& st = stages_[s - 1];
            // complete the basis through degree t first: the membership tests
            // below are only conclusive against a full Groebner basis, and
            // pairs created by the insertions all live above t
            std::vector<FreeElt> kernel = st.gb.advance(t, s < opt_.s_max);
            std::stable_sort(cands.begin(), cands.end(),
                             [](const FreeElt& a, const FreeElt& b) { return leading(a) < leading(b); });
            for (FreeElt& c : cands) {
                FCEXT_CHECK(st.gb.degree_of(c) == t, "kernel candidate at wrong degree");
                FreeElt rem = st.gb.reduce_full(std::move(c)).rem;
                if (!rem.is_zero()) {
                    add_generator(s, t, std::move(rem));
                    ++new_gens;
                }
            }
            cands = std::move(kernel);
        }
        t_done_ = t;
        if (progress) {
            int64_t entries = 0, pairs = 0;
            for (const Stage& st : stages_) {
                entries += st.gb.num_entries();
                pairs += st.gb.pending_pairs();
            }
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
            progress(ResolutionProgress{t, new_gens, (int)total_gens(), entries, pairs, ms.count()});
        }
    }
}

std::vector<ChartEntry> Resolution::chart() const
{
    std::vector<ChartEntry> out;
    for (size_t i = 0; i < pres_.gen_degrees.size(); ++i) {
        int k = 0;
        for (size_t j = 0; j < i; ++j)
            if (pres_.gen_degrees[j] == pres_.gen_degrees[i])
                ++k;
        out.push_back(ChartEntry{0, pres_.gen_degrees[i], k});
    }
    for (int s = 1; s <= opt_.s_max; ++s) {
        const std::vector<int>& degs = stages_[s - 1].gen_degs;
        int k = 0, prev = -1;
        for (int t : degs) {
            k = (t == prev) ? k + 1 : 0;
            prev = t;
            out.push_back(ChartEntry{s, t, k});
        }
    }
    return out;
}

int64_t Resolution::total_gens() const
{
    int64_t n = pres_.rank();
    for (const Stage& st : stages_)
        n += (int64_t)st.gen_degs.size();
    return n;
}

bool Resolution::trivial_module() const
{
    if (trivial_checked_t_ == t_done_)
        return trivial_;
    trivial_ = pres_.rank() == 1 && pres_.gen_degrees[0] == 0;
    for (int d = 1; d <= t_done_ && trivial_; ++d)
        trivial_ = stages_[0].gb.staircase_dim(d) == 0;
    trivial_checked_t_ = t_done_;
    return trivial_;
}

std::string Resolution::gen_name(int s, int t, int index) const
{
    if (trivial_module()) {
        if (s == 0 && t == 0 && index == 0)
            return "1";
        if (s == 1 && index == 0 && (t & (t - 1)) == 0) {
            int i = std::countr_zero((unsigned)t);
            return "h" + std::to_string(i);
        }
    }
    return std::to_string(s) + "_" + std::to_string(t) + "_" + std::to_string(index);
}

std::optional<ChartEntry> Resolution::find_gen(const std::string& name) const
{
    for (const ChartEntry& e : chart())
        if (gen_name(e.s, e.t, e.index) == name ||
            name == std::to_string(e.s) + "_" + std::to_string(e.t) + "_" + std::to_string(e.index))
            return e;
    return std::nullopt;
}

void Resolution::verify_complex() const
{
    for (int s = 2; s <= opt_.s_max; ++s) {
        const Stage& st = stages_[s - 1];
        const Stage& prev = stages_[s - 2];
        for (const FreeElt& dv : st.d_vals) {
            std::vector<std::vector<ModMono>> pieces;
            pieces.reserve(dv.terms.size());
            for (const ModMono& term : dv.terms)
                pieces.push_back(alg_->mul(term.m, prev.d_vals[term.slot]).terms);
            FCEXT_CHECK(merge_many(std::move(pieces)).empty(), "complex condition violated: d o d != 0");
        }
    }
}

void Resolution::verify_minimality() const
{
    for (const Stage& st : stages_)
        for (const FreeElt& dv : st.d_vals)
            for (const ModMono& term : dv.terms)
                FCEXT_CHECK(!term.m.is_unit(), "minimality violated");
}

Resolution::StageData Resolution::export_stage(int s) const
{
    const Stage& st = stages_[s - 1];
    StageData sd;
    sd.gen_degs = st.gen_degs;
    sd.d_vals = st.d_vals;
    for (int k = 0; k < st.gb.num_entries(); ++k) {
        sd.gb_entries.push_back(st.gb.entry(k));
        sd.gb_q_rows.push_back(st.gb.q_row(k));
    }
    sd.gb_deg_done = st.gb.deg_done();
    return sd;
}

}  // namespace fcext
