#pragma once

#include "mdr/correspondence.hpp"
#include "mdr/forms.hpp"

namespace mdr {

// B = A[t]/(f) finite over the coordinate ring A of a one-coordinate (or
// point) scheme, with f monic over Frac(A) and Res(f, f') != 0.
struct FiniteAlgebraExtension {
    AffineCurveScheme base;
    FuncField tower;  // basevar = base coordinate, tvar = extension variable

    static FiniteAlgebraExtension make(const AffineCurveScheme& base, const std::string& tvar,
                                       const El& minpoly);
};

// Trace of a form over B down to A: rewrite dt through d(f)(t) = 0, then
// apply the field trace coefficientwise. Degree 0 is the plain field trace.
Form trace_forms(const FiniteAlgebraExtension& ext, const Form& omega);

// Trace of a regular form, certified to land in the regular forms of the
// base (denominators invertible on the base after reduction).
Form check_trace_integrality(const FiniteAlgebraExtension& ext, const Form& omega);

// Whether a base-field coefficient is regular on the scheme.
bool regular_on_base(const RationalFunction& c, const AffineCurveScheme& base);

// The transfer attached to a finite correspondence: [Gamma] = Tr_{Gamma/X}
// after pullback along Gamma -> Y, extended Z-linearly over components.
// Input and output forms live on the one-coordinate schemes Y and X.
class Transfer {
  public:
    explicit Transfer(FiniteCorrespondence gamma);

    // omega on the target: degree 0 (function) or c(s) ds.
    Form apply(const Form& omega) const;

    const FiniteCorrespondence& correspondence() const { return gamma_; }

  private:
    struct ComponentData {
        FiniteAlgebraExtension ext;
        long mult;
    };
    FiniteCorrespondence gamma_;
    std::vector<ComponentData> comps_;
    std::string svar_;  // target coordinate
};

}  // namespace mdr
