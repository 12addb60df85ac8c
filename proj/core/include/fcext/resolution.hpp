#ifndef FCEXT_RESOLUTION_HPP
#define FCEXT_RESOLUTION_HPP

#include <functional>
#include <memory>
#include <optional>

#include "fcext/presentation.hpp"

namespace fcext {

struct ResolveOptions {
    int s_max = 0;
    GroebnerOptions gb;
};

struct ChartEntry {
    int s, t, index;
};

struct ResolutionProgress {
    int t;
    int new_gens;
    int total_gens;
    int64_t gb_entries;
    int64_t pending_pairs;
    int64_t ms;
};

/* Minimal free resolution of N = A^r/M, built degree by degree.  Per
 * homological degree s >= 1 it keeps the generators of F_s, the values
 * d_s(v_{s,j}) in F_{s-1}, and the Groebner data of Im(d_s) whose pair
 * reductions stream out the kernel generators that seed stage s+1. */
class Resolution {
public:
    struct StageData {
        std::vector<int> gen_degs;
        std::vector<FreeElt> d_vals;
        std::vector<GBEntry> gb_entries;
        std::vector<FreeElt> gb_q_rows;
        int gb_deg_done = -1;
    };

    Resolution(std::shared_ptr<const Algebra> alg, ModulePresentation minimized, ResolveOptions opt);
    /* Resume from checkpointed stage data. */
    Resolution(std::shared_ptr<const Algebra> alg, ModulePresentation minimized, ResolveOptions opt,
               std::vector<StageData> stages, int t_done);

    const Algebra& algebra() const { return *alg_; }
    const ModulePresentation& presentation() const { return pres_; }
    int s_max() const { return opt_.s_max; }
    int t_done() const { return t_done_; }

    using ProgressFn = std::function<void(const ResolutionProgress&)>;
    void extend(int t_max, const ProgressFn& progress = nullptr);

    int stage_gens(int s) const { return (int)stages_[s - 1].gen_degs.size(); }
    const std::vector<int>& stage_degs(int s) const { return stages_[s - 1].gen_degs; }
    const FreeElt& d_value(int s, int j) const { return stages_[s - 1].d_vals[j]; }
    const Groebner& stage_gb(int s) const { return stages_[s - 1].gb; }
    Groebner& stage_gb(int s) { return stages_[s - 1].gb; }

    /* One entry per minimal generator, s = 0 rows included. */
    std::vector<ChartEntry> chart() const;
    int64_t total_gens() const;

    /* dim N_d = 0 for 0 < d <= t_done (then the h_i aliases apply). */
    bool trivial_module() const;

    std::string gen_name(int s, int t, int index) const;
    std::optional<ChartEntry> find_gen(const std::string& name) const;

    /* d_{s-1} o d_s = 0 for every generator, exact. */
    void verify_complex() const;
    /* no differential value carries a unit coefficient. */
    void verify_minimality() const;

    StageData export_stage(int s) const;

private:
    struct Stage {
        std::vector<int> gen_degs;
        std::vector<FreeElt> d_vals;
        Groebner gb;  // of Im(d_s), inputs the d-values, over F_{s-1}
    };

    void add_generator(int s, int t, FreeElt value);

    std::shared_ptr<const Algebra> alg_;
    ModulePresentation pres_;
    ResolveOptions opt_;
    std::vector<Stage> stages_;
    int t_done_ = -1;
    mutable int trivial_checked_t_ = -1;
    mutable bool trivial_ = false;
};

}  // namespace fcext

#endif
