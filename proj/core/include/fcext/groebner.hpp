#ifndef FCEXT_GROEBNER_HPP
#define FCEXT_GROEBNER_HPP

#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "fcext/algebra.hpp"

namespace fcext {

struct Provenance {
    enum Kind : uint8_t { input, spair, step1 } kind = input;
    int32_t a = -1;       // input index / first entry
    int32_t b = -1;       // second entry (spair) or generator rank (step1)
    bool exp2 = false;    // step1 quotient carries exponent two
};

struct GBEntry {
    FreeElt elt;
    ModMono lead;
    Provenance origin;
};

/* a -= q~ . H[entry], in cancellation order. */
struct ReductionStep {
    Mono q;
    int32_t entry;
};

struct ReductionResult {
    FreeElt rem;
    std::vector<ReductionStep> steps;
};

struct SyzygyRecord {
    Provenance kind;  // spair or step1
    FreeElt vector;   // over A^s, slot = entry index; vector . H^T = 0
};

struct GroebnerOptions {
    bool literal_step1 = false;   // schedule (entry, g) pairs for every g, not only divisors of the lead
    bool triple_criterion = false;
    int threads = 1;
};

/* Groebner data for a left submodule of A^r: ordered entries H with leading
 * monomials, a min-degree pair queue, and the matrix Q with H^T = Q X^T over
 * the input generators X (first block the identity).
 *
 * Pairs are processed degree by degree in rounds: each round reduces the
 * queued pairs of one degree against a frozen snapshot of H, then appends
 * the survivors in a canonical order.  Results are independent of the
 * worker-thread count. */
class Groebner {
public:
    Groebner(const Algebra& alg, std::vector<int> slot_degs, GroebnerOptions opt = {});

    const Algebra& algebra() const { return *alg_; }
    const std::vector<int>& slot_degs() const { return slot_degs_; }
    int num_inputs() const { return n_inputs_; }
    int num_entries() const { return (int)entries_.size(); }
    const GBEntry& entry(int k) const { return entries_[k]; }
    const FreeElt& q_row(int k) const { return q_[k]; }
    const std::vector<int>& input_degs() const { return input_degs_; }
    int deg_done() const { return deg_done_; }
    int pending_pairs() const { return (int)queue_.size(); }

    /* Homogeneous internal degree of x in A^r; error if inhomogeneous. */
    int degree_of(const FreeElt& x) const;

    /* Extend the ambient free module by one basis vector. */
    void add_slot(int deg);

    /* Append an input generator (0 not allowed).  Pairs of every degree are
     * scheduled; degrees below deg_done() must not appear. */
    int add_input(FreeElt x);

    /* Rebuild from checkpointed data: entries and Q rows verbatim, the pair
     * queue re-derived with everything of degree <= deg_done discarded. */
    static Groebner restore(const Algebra& alg, std::vector<int> slot_degs, GroebnerOptions opt,
                            std::vector<GBEntry> entries, std::vector<FreeElt> q_rows,
                            std::vector<int> input_degs, int deg_done);

    /* Process all pairs of degree <= t.  When capture is set, returns for
     * every pair that reduced to zero the corresponding syzygy row times Q,
     * an element of ker over A^{num_inputs}. */
    std::vector<FreeElt> advance(int t, bool capture = false);

    /* Reduction by the current H, largest reducible term first. */
    ReductionResult reduce_full(FreeElt a, bool want_steps = false) const;

    /* Rewrite a reduction record as coordinates over the inputs. */
    FreeElt steps_in_inputs(const std::vector<ReductionStep>& steps) const;

    /* dim_k of (A^r / M)_deg read off the leading-monomial staircase. */
    int64_t staircase_dim(int deg) const;

    /* The sigma_{i,g} and sigma_{i,j} generators of Syz(H) for the pairs in
     * the completed range.  Error if the queue still holds such pairs. */
    std::vector<SyzygyRecord> syzygy_generators() const;

    /* One entry per line: lead, term count, provenance.  Stable format. */
    std::string dump() const;

private:
    struct Pair {
        int deg;
        uint64_t seq;
        Provenance pv;
    };
    struct PairOrder {
        bool operator()(const Pair& a, const Pair& b) const
        {
            return a.deg != b.deg ? a.deg > b.deg : a.seq > b.seq;
        }
    };

    int find_divisor(const ModMono& t, int limit) const;
    ReductionResult reduce_limit(FreeElt a, int limit, bool want_steps) const;
    FreeElt pair_element(const Provenance& pv) const;
    /* sigma . Q for the pair with the given reduction record. */
    FreeElt pair_combo(const Provenance& pv, const std::vector<ReductionStep>& steps) const;
    void append_entry(FreeElt elt, Provenance pv, FreeElt q_row);
    void schedule_pairs(int n);
    void push_pair(int deg, Provenance pv);
    bool triple_redundant(const Provenance& pv) const;

    const Algebra* alg_;
    std::vector<int> slot_degs_;
    GroebnerOptions opt_;
    std::vector<GBEntry> entries_;
    std::vector<FreeElt> q_;  // Q rows over inputs
    std::vector<int> input_degs_;
    // (lead mask, entry index) per slot, in entry order; contiguous for the
    // divisibility scan in reductions
    std::vector<std::vector<std::pair<uint64_t, int32_t>>> lead_by_slot_;
    std::priority_queue<Pair, std::vector<Pair>, PairOrder> queue_;
    std::vector<std::pair<int32_t, int32_t>> processed_;  // discharged s-pairs
    uint64_t seq_ = 0;
    int n_inputs_ = 0;
    int deg_done_ = -1;
};

/* Expand X to a Groebner basis of the submodule it generates, processing
 * pairs of degree <= deg_cap.  0 must not occur in X. */
Groebner buchberger(const Algebra& alg, std::vector<int> slot_degs, const std::vector<FreeElt>& gens,
                    int deg_cap, GroebnerOptions opt = {});

/* Generators of Syz(X) up to deg_cap: the rows of S Q for the syzygy matrix
 * S of the expanded basis.  Every row annihilates X exactly. */
std::vector<FreeElt> syzygy_of_generators(const Algebra& alg, std::vector<int> slot_degs,
                                          const std::vector<FreeElt>& gens, int deg_cap,
                                          GroebnerOptions opt = {});

}  // namespace fcext

#endif
