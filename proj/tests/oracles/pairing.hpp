#ifndef FCEXT_ORACLE_PAIRING_HPP
#define FCEXT_ORACLE_PAIRING_HPP

#include <map>

#include "fcext/milnor.hpp"

namespace fcext::oracle {

/* All Milnor basis elements of the given degree, sorted. */
std::vector<MilnorBasisElt> milnor_basis(int deg);

/* psi(xi(E)) in the dual F_2[xi_1, xi_2, ...]: list of (left, right) monomial
 * exponent vectors, duplicates cancelled mod 2. */
std::vector<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>>
dual_coproduct(const std::vector<uint32_t>& exps);

/* Milnor products of one total degree read off the dual coproduct:
 * the coefficient of P(T) in P(R) P(S) is the coefficient of
 * xi(R) (x) xi(S) in psi(xi(T)). */
class PairingTable {
public:
    explicit PairingTable(int total_deg);
    MilnorElt product(const MilnorBasisElt& a, const MilnorBasisElt& b) const;

private:
    int deg_;
    std::map<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>, MilnorElt> table_;
};

}  // namespace fcext::oracle

#endif
