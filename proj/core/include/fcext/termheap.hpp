#ifndef FCEXT_TERMHEAP_HPP
#define FCEXT_TERMHEAP_HPP

#include <deque>
#include <queue>

#include "fcext/fc_order.hpp"

namespace fcext {

/* Lazy merger of descending-sorted term streams over F_2.  Streams stay in
 * place (memoized product lists, basis elements); the heap only tracks
 * cursors, so draining costs O(total terms log streams) with no
 * intermediate merges.  Referenced term arrays must outlive the merger. */
class TermMerger {
public:
    /* terms of a, all placed in the given slot */
    void push_alg(const AlgElt& a, int32_t slot)
    {
        if (!a.terms.empty())
            heap_.push(Cur{ModMono{a.terms.front(), slot}, a.terms.data() + 1,
                           a.terms.data() + a.terms.size(), nullptr, nullptr, slot});
    }
    void push_free(const FreeElt& x)
    {
        if (!x.terms.empty())
            heap_.push(Cur{x.terms.front(), nullptr, nullptr, x.terms.data() + 1,
                           x.terms.data() + x.terms.size(), 0});
    }
    void push_singleton(const ModMono& t)
    {
        heap_.push(Cur{t, nullptr, nullptr, nullptr, nullptr, 0});
    }

    /* Largest term with odd multiplicity; false when drained. */
    bool pop(ModMono& out)
    {
        while (!heap_.empty()) {
            ModMono top = heap_.top().cur;
            size_t parity = 0;
            while (!heap_.empty() && heap_.top().cur == top) {
                Cur c = heap_.top();
                heap_.pop();
                ++parity;
                if (c.next_mono != c.mono_end) {
                    c.cur = ModMono{*c.next_mono++, c.slot};
                    heap_.push(c);
                }
                else if (c.next_mod != c.mod_end) {
                    c.cur = *c.next_mod++;
                    heap_.push(c);
                }
            }
            if (parity & 1) {
                out = top;
                return true;
            }
        }
        return false;
    }

    /* Drain everything into one descending list. */
    std::vector<ModMono> drain()
    {
        std::vector<ModMono> out;
        ModMono t;
        while (pop(t))
            out.push_back(t);
        return out;
    }

    bool empty() const { return heap_.empty(); }

private:
    struct Cur {
        ModMono cur;
        const Mono* next_mono;
        const Mono* mono_end;
        const ModMono* next_mod;
        const ModMono* mod_end;
        int32_t slot;
    };
    struct Less {
        bool operator()(const Cur& a, const Cur& b) const { return a.cur < b.cur; }
    };
    std::priority_queue<Cur, std::vector<Cur>, Less> heap_;
};

}  // namespace fcext

#endif
