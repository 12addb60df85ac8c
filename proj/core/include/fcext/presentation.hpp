#ifndef FCEXT_PRESENTATION_HPP
#define FCEXT_PRESENTATION_HPP

#include "fcext/groebner.hpp"

namespace fcext {

/* N = A^r / M with M generated by the relations. */
struct ModulePresentation {
    std::vector<int> gen_degrees;   // deg of each basis vector of A^r
    std::vector<FreeElt> relations;

    int rank() const { return (int)gen_degrees.size(); }
};

/* Drop generators that other generators express: strip the A_+ part of each
 * relation, row-reduce the unit parts, replay the same row operations on the
 * full relations and rewrite the redundant generators away.  The result has
 * rank dim_k N/A_+N. */
ModulePresentation minimize_presentation(const Algebra& alg, const ModulePresentation& p);

/* The subset of xs that generates the same submodule minimally: reduce each
 * element (sorted by degree) against the basis of its predecessors and drop
 * the ones that vanish. */
std::vector<FreeElt> minimal_generators(const Algebra& alg, std::vector<int> slot_degs,
                                        const std::vector<FreeElt>& xs, int deg_cap,
                                        GroebnerOptions opt = {});

}  // namespace fcext

#endif
