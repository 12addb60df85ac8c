#ifndef FCEXT_PARSE_HPP
#define FCEXT_PARSE_HPP

#include <string>

#include "fcext/presentation.hpp"

namespace fcext {

/* Element syntax: sums of '+'-joined terms, each a '*'-joined product of
 * factors Sq(n), P(r1,r2,...), or 1; "0" is the zero element.  Products are
 * evaluated exactly (no truncation below the term's own degree). */
MilnorElt parse_milnor(const std::string& text);

/* "0", or '+'-joined terms, Sq(n) for P(n), 1 for P(). */
std::string print_milnor(const MilnorElt& x);
std::string print_milnor(const MilnorBasisElt& m);

/* Module relation: terms additionally end in a factor e<k>, 1-based. */
struct ModuleRelation {
    std::vector<MilnorElt> coeffs;  // per slot
};

/* Module definition file:
 *   rank <r>
 *   degrees <d1> ... <dr>      (optional, defaults to zeros)
 *   rel <expr>                 (one per line)
 * with '#' comments. */
struct ModuleFile {
    int rank = 0;
    std::vector<int> degrees;
    std::vector<ModuleRelation> relations;
};

ModuleFile parse_module_file(const std::string& text);

/* Convert to the lifted basis.  Relations of degree above the truncation
 * are dropped. */
ModulePresentation to_presentation(const Algebra& alg, const ModuleFile& mf);

std::string print_relation(const Algebra& alg, const FreeElt& x);

}  // namespace fcext

#endif
