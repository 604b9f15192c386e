#pragma once

#include <vector>

#include "mdr/multipoly.hpp"

namespace mdr {

// Normal form of p modulo the (not necessarily reduced) basis by repeated
// leading-term reduction in graded-lex order.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);

// Reduced Groebner basis, graded-lex, Buchberger with the product and chain
// criteria. Basis elements come back monic and sorted.
std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens);

inline bool ideal_member(const MultiPoly& p, const std::vector<MultiPoly>& groebner) {
    return normal_form(p, groebner).is_zero();
}

bool ideal_is_unit(const std::vector<MultiPoly>& groebner);

}  // namespace mdr
