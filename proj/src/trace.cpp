#include "mdr/trace.hpp"

#include "mdr/factor.hpp"

namespace mdr {

namespace {

// Evaluates a one-variable polynomial (a function on the target) at the
// tower generator.
El evaluate_poly_at_gen(const MultiPoly& p, const FuncField& k) {
    MultiPoly q = p.pruned();
    std::vector<std::string> vs = q.vars();
    if (vs.empty()) return El::constant(RationalFunction(q.constant_value()));
    require_invariant(vs.size() == 1, "target function uses several variables");
    auto cs = q.coeffs_in(vs[0]);
    El acc;
    for (size_t i = cs.size(); i-- > 0;) {
        acc = k.reduce(acc * El::x());
        acc = acc + El::constant(RationalFunction(cs[i].constant_value()));
    }
    return k.reduce(acc);
}

El pull_function(const RationalFunction& h, const FuncField& k) {
    El num = evaluate_poly_at_gen(h.num(), k);
    El den = evaluate_poly_at_gen(h.den(), k);
    return k.mul(num, k.inv(den));
}

}  // namespace

FiniteAlgebraExtension FiniteAlgebraExtension::make(const AffineCurveScheme& base,
                                                    const std::string& tvar, const El& minpoly) {
    base.validate();
    if (base.vars.size() > 1 || !base.equations.empty())
        fail(ErrKind::UnsupportedPresentation,
             "extension base must be a localization of Q or Q[x]");
    FiniteAlgebraExtension ext;
    ext.base = base;
    std::string bv = base.vars.empty() ? std::string() : base.vars[0];
    El f = minpoly.monic();
    // Separability certificate: Res(f, f') != 0 over Frac(A).
    RationalFunction disc = upoly_resultant(f, f.derivative());
    if (disc.is_zero())
        fail(ErrKind::Separability, "extension is not separable: Res(f, f') = 0");
    ext.tower = FuncField(bv, tvar, f);
    return ext;
}

Form trace_forms(const FiniteAlgebraExtension& ext, const Form& omega) {
    const FuncField& k = ext.tower;
    if (omega.degree > 1) fail(ErrKind::Precondition, "trace of a form of degree > 1");
    RationalFunction tr = k.trace(k.reduce(omega.coeff));
    return {omega.degree, El::constant(tr)};
}

bool regular_on_base(const RationalFunction& c, const AffineCurveScheme& base) {
    return invertible_on(c.den().pruned(), base);
}

Form check_trace_integrality(const FiniteAlgebraExtension& ext, const Form& omega) {
    Form tr = trace_forms(ext, omega);
    if (!tr.coeff.is_zero()) {
        require_invariant(tr.coeff.degree() <= 0, "trace did not land in the base");
        if (!regular_on_base(tr.coeff[0], ext.base))
            fail(ErrKind::InvariantViolation,
                 "trace of a regular form is not regular: " + tr.coeff[0].str());
    }
    return tr;
}

Transfer::Transfer(FiniteCorrespondence gamma) : gamma_(std::move(gamma)) {
    const AffineCurveScheme& x = gamma_.source;
    const AffineCurveScheme& y = gamma_.target;
    if (x.vars.size() > 1 || !x.equations.empty())
        fail(ErrKind::UnsupportedPresentation, "transfer source must be a localized line or point");
    if (y.vars.size() != 1 || !y.equations.empty())
        fail(ErrKind::UnsupportedPresentation, "transfer target must be a localized line");
    svar_ = y.vars[0];
    for (const auto& [p, m] : gamma_.components) {
        // Monogenic presentation: the target coordinate generates O(Gamma)
        // over O(X), with the fiber polynomial as minimal polynomial.
        ProductCoords pc = product_coords(x, y);
        comps_.push_back({FiniteAlgebraExtension::make(x, pc.target[0], p.fiber_poly()), m});
    }
}

Form Transfer::apply(const Form& omega) const {
    if (omega.degree > 1) fail(ErrKind::Precondition, "transfer of a form of degree > 1");
    const AffineCurveScheme& x = gamma_.source;
    FuncField basefield(x.vars.empty() ? std::string() : x.vars[0]);
    std::optional<Form> acc;
    for (const auto& comp : comps_) {
        const FuncField& k = comp.ext.tower;
        require_invariant(omega.coeff.degree() <= 0, "target form must live on the target");
        RationalFunction h = omega.coeff.is_zero() ? RationalFunction(0) : omega.coeff[0];
        Form pulled;
        if (omega.degree == 0) {
            pulled = Form::function(pull_function(h, k));
        } else {
            // pullback of h(s) ds is h(t) dt = h(t) theta dx
            pulled = Form::dx(k.mul(pull_function(h, k), k.dt_over_dx()));
        }
        Form traced = trace_forms(comp.ext, pulled);
        Form scaled = {traced.degree, traced.coeff.scaled(RationalFunction(Rational(comp.mult)))};
        acc = acc ? form_add(basefield, *acc, scaled) : scaled;
    }
    if (!acc) return Form::zero(omega.degree);
    return *acc;
}

}  // namespace mdr
