#ifndef FCEXT_ORACLE_BRUTERES_HPP
#define FCEXT_ORACLE_BRUTERES_HPP

#include <map>

#include "fcext/f2linear.hpp"
#include "fcext/milnor.hpp"

namespace fcext::oracle {

/* Element of a free module, one Milnor-basis coefficient per slot. */
using BruteElt = std::vector<MilnorElt>;

/* dim_k of the degree-d piece of the submodule of A^r generated by gens,
 * computed by row-reducing the full span {P(B) x_i} over the Milnor basis. */
int64_t submodule_dim(const std::vector<int>& gen_degs, const std::vector<BruteElt>& gens, int d);

int64_t free_module_dim(const std::vector<int>& gen_degs, int d);

/* Naive minimal free resolution of A^r / (relations), built degree by degree
 * over explicit F_2 bases: kernels by bit-matrix elimination, new generators
 * as a complement of the span of the previously chosen ones. */
class BruteResolution {
public:
    BruteResolution(std::vector<int> gen_degs, std::vector<BruteElt> relations, int s_cap, int t_cap);

    int rank(int s, int t) const;  // minimal generators at (s,t); s = 0 counts presentation rows

private:
    std::map<std::pair<int, int>, int> ranks_;
};

}  // namespace fcext::oracle

#endif
