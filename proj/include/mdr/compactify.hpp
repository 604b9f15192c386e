#pragma once

#include "mdr/derham.hpp"
#include "mdr/trace.hpp"

namespace mdr {

// Closure of a prime correspondence between localized lines inside
// P1 x P1: the bihomogenized generator restricted to the four affine
// charts, certified finite and surjective over the source P1.
struct ClosedPrime {
    MultiPoly gen;        // affine chart (x, u)
    MultiPoly gen_xinf;   // chart (1/x, u)
    MultiPoly gen_uinf;   // chart (x, 1/u)
    MultiPoly gen_binf;   // chart (1/x, 1/u)
    long degx = 0, degu = 0;
    long degree_over_p1 = 0;  // counts boundary fibers too
};

struct ClosedCorrespondence {
    FiniteCorrespondence affine_part;
    std::vector<std::pair<ClosedPrime, long>> components;
};

ClosedCorrespondence extend_correspondence(const FiniteCorrespondence& gamma);

// Transfer of a 1-form with log poles along the target divisor, verified to
// have at worst log poles along the source divisor (pole order and
// rationality checks at every pole of the result).
Form log_transfer(const FiniteCorrespondence& gamma, const LogDivisor& source_divisor,
                  const LogDivisor& target_divisor, const Form& omega);

// Residues of a rational 1-form h(z) dz at a chart point / infinity; sum
// over all poles is zero on P1.
bool logform_on_divisor(const RationalFunction& h, const std::string& var,
                        const LogDivisor& divisor, std::string* why = nullptr);

}  // namespace mdr
