#include "mdr/compactify.hpp"

#include "mdr/factor.hpp"

namespace mdr {

namespace {

// substitute v -> 1/v and clear by v^deg
MultiPoly invert_chart(const MultiPoly& g, const std::string& v) {
    long d = g.degree_in(v);
    if (d <= 0) return g;
    auto cs = g.coeffs_in(v);
    MultiPoly out(g.vars());
    MultiPoly xv = MultiPoly::var(v, g.vars());
    for (long i = 0; i <= d; ++i)
        out += cs[static_cast<size_t>(i)] * xv.pow(d - i);
    return out.integer_primitive();
}

}  // namespace

ClosedCorrespondence extend_correspondence(const FiniteCorrespondence& gamma) {
    ClosedCorrespondence out;
    out.affine_part = gamma;
    const AffineCurveScheme& x = gamma.source;
    const AffineCurveScheme& y = gamma.target;
    if (x.vars.size() != 1 || y.vars.size() != 1 || !x.equations.empty() || !y.equations.empty())
        fail(ErrKind::UnsupportedInput, "closures are taken in P1 x P1 over localized lines");
    ProductCoords pc = product_coords(x, y);
    for (const auto& [p, m] : gamma.components) {
        ClosedPrime cp;
        cp.gen = p.ideal[0].on_vars(pc.all);
        cp.degx = cp.gen.degree_in(pc.source[0]);
        cp.degu = cp.gen.degree_in(pc.target[0]);
        cp.gen_xinf = invert_chart(cp.gen, pc.source[0]);
        cp.gen_uinf = invert_chart(cp.gen, pc.target[0]);
        cp.gen_binf = invert_chart(cp.gen_xinf, pc.target[0]);
        // Finite-surjective over P1: the closure of an irreducible cycle
        // finite over A^1 can only fail at x = infinity, where the fiber is
        // cut by gen_xinf at 0; it is finite unless the whole fiber line is
        // contained, which cannot happen for an irreducible curve.
        MultiPoly at_inf = cp.gen_xinf.substitute(pc.source[0],
                                                  MultiPoly::constant(Rational(0), pc.all));
        require_invariant(!at_inf.is_zero(), "closure contains the fiber at infinity");
        cp.degree_over_p1 = cp.degu;
        out.components.emplace_back(std::move(cp), m);
    }
    return out;
}

bool logform_on_divisor(const RationalFunction& h, const std::string& var,
                        const LogDivisor& divisor, std::string* why) {
    // finite poles: the denominator factors must be linear with simple
    // poles at divisor points
    if (h.is_zero()) return true;
    MultiPoly den = h.den().pruned();
    if (!den.is_constant()) {
        for (const auto& [f, mult] : factor_multipoly_in(den.on_vars({var}), var)) {
            if (f.degree_in(var) != 1) {
                if (why) *why = "pole at an irrational point: " + f.str();
                return false;
            }
            Rational a = -f.coeffs_in(var)[0].constant_value();
            if (mult > 1) {
                if (why) *why = "pole of order " + std::to_string(mult) + " at " + a.str();
                return false;
            }
            bool on_divisor = false;
            for (const auto& p : divisor.points)
                if (!p.at_infinity && p.value == a) on_divisor = true;
            if (!on_divisor) {
                if (why) *why = "pole at " + a.str() + " off the divisor";
                return false;
            }
        }
    }
    // behavior at infinity: h dz has a pole of order 2 - ord_inf(h)
    long ord = order_at_infinity(h, var);
    bool inf_on_divisor = false;
    for (const auto& p : divisor.points)
        if (p.at_infinity) inf_on_divisor = true;
    long allowed = inf_on_divisor ? -1 : 0;
    if (ord - 2 < allowed) {
        if (why)
            *why = "pole of order " + std::to_string(2 - ord) + " at infinity" +
                   (inf_on_divisor ? "" : " off the divisor");
        return false;
    }
    return true;
}

Form log_transfer(const FiniteCorrespondence& gamma, const LogDivisor& source_divisor,
                  const LogDivisor& target_divisor, const Form& omega) {
    if (omega.degree != 1) fail(ErrKind::Precondition, "log transfer acts on 1-forms");
    const AffineCurveScheme& y = gamma.target;
    require_invariant(omega.coeff.degree() <= 0, "log form must live on the target chart");
    RationalFunction h = omega.coeff.is_zero() ? RationalFunction(0) : omega.coeff[0];
    std::string why;
    if (!logform_on_divisor(h, y.vars[0], target_divisor, &why))
        fail(ErrKind::Precondition, "input has non-log poles: " + why);
    // the closure must exist (certifies the extension of the correspondence)
    extend_correspondence(gamma);
    Transfer tr(gamma);
    Form result = tr.apply(omega);
    RationalFunction rh = result.coeff.is_zero() ? RationalFunction(0) : result.coeff[0];
    if (!logform_on_divisor(rh, gamma.source.vars[0], source_divisor, &why))
        fail(ErrKind::InvariantViolation, "transfer left the log complex: " + why);
    return result;
}

}  // namespace mdr
