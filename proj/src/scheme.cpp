#include "mdr/scheme.hpp"

#include <algorithm>

#include "mdr/factor.hpp"

namespace mdr {

AffineCurveScheme AffineCurveScheme::spec_q(const std::string& label) {
    AffineCurveScheme s;
    s.label = label;
    return s;
}

AffineCurveScheme AffineCurveScheme::affine_line(const std::string& label,
                                                 const std::string& var) {
    AffineCurveScheme s;
    s.label = label;
    s.vars = {var};
    return s;
}

AffineCurveScheme AffineCurveScheme::gm(const std::string& label, const std::string& var) {
    AffineCurveScheme s;
    s.label = label;
    s.vars = {var};
    s.inverted = {MultiPoly::var(var, {var})};
    return s;
}

AffineCurveScheme AffineCurveScheme::punctured_line(const std::string& label,
                                                    const std::string& var,
                                                    const std::vector<Rational>& removed) {
    AffineCurveScheme s;
    s.label = label;
    s.vars = {var};
    for (const auto& a : removed)
        s.inverted.push_back(MultiPoly::var(var, {var}) - MultiPoly::constant(a, {var}));
    return s;
}

AffineCurveScheme AffineCurveScheme::etale(const std::string& label, const std::string& var,
                                           const MultiPoly& minpoly) {
    AffineCurveScheme s;
    s.label = label;
    s.vars = {var};
    s.equations = {minpoly.on_vars({var})};
    s.validate();
    return s;
}

AffineCurveScheme AffineCurveScheme::plane_curve(const std::string& label, const std::string& x,
                                                 const std::string& y,
                                                 const MultiPoly& equation) {
    AffineCurveScheme s;
    s.label = label;
    s.vars = {x, y};
    s.equations = {equation.on_vars({x, y})};
    s.validate();
    return s;
}

AffineCurveScheme AffineCurveScheme::product(const AffineCurveScheme& a,
                                             const AffineCurveScheme& b) {
    ProductCoords pc = product_coords(a, b);
    AffineCurveScheme s;
    s.label = a.label + "*" + b.label;
    s.vars = pc.all;
    auto rename_target = [&](MultiPoly e) {
        for (size_t j = 0; j < b.vars.size(); ++j)
            if (b.vars[j] != pc.target[j])
                e = e.substitute(b.vars[j], MultiPoly::var(pc.target[j], pc.all));
        return e.on_vars(pc.all);
    };
    for (const auto& e : a.equations) s.equations.push_back(e.on_vars(pc.all));
    for (const auto& e : b.equations) s.equations.push_back(rename_target(e));
    for (const auto& f : a.inverted) s.inverted.push_back(f.on_vars(pc.all));
    for (const auto& f : b.inverted) s.inverted.push_back(rename_target(f));
    s.ambient_only = true;
    return s;
}

bool AffineCurveScheme::is_connected() const { return component_count() == 1; }

long AffineCurveScheme::component_count() const {
    if (vars.empty() || equations.empty()) return 1;
    if (dim() == 0) {
        // etale algebra: one component per irreducible factor
        return static_cast<long>(factor_multipoly_in(equations[0], vars[0]).size());
    }
    return 1;  // plane curves in the supported class are integral (validated)
}

void AffineCurveScheme::validate() const {
    if (ambient_only) return;
    if (dim() < 0 || dim() > 1)
        fail(ErrKind::UnsupportedInput, label + ": dimension outside {0,1}");
    if (equations.size() > 1)
        fail(ErrKind::UnsupportedInput, label + ": more than one equation");
    for (const auto& f : inverted)
        if (f.is_zero()) fail(ErrKind::UnsupportedInput, label + ": inverting zero");

    if (equations.empty()) return;  // A^1, G_m, punctured line: smooth

    const MultiPoly& F = equations[0];
    if (vars.size() == 1) {
        // etale algebra: squarefree minimal polynomial
        std::vector<Rational> v;
        for (const auto& c : F.coeffs_in(vars[0])) v.push_back(c.constant_value());
        UniPoly<Rational> u(std::move(v));
        if (u.degree() < 1) fail(ErrKind::UnsupportedInput, label + ": constant equation");
        if (upoly_gcd(u, u.derivative()).degree() != 0)
            fail(ErrKind::UnsupportedInput, label + ": algebra is not etale (not squarefree)");
        return;
    }

    // Smooth plane curve: (F, dF/dx, dF/dy) together with the inverted
    // elements generates the unit ideal (Rabinowitsch variable for the
    // localization).
    const std::string &x = vars[0], &y = vars[1];
    std::vector<std::string> ext = {x, y, "_w"};
    std::vector<MultiPoly> gens{F.on_vars(ext), F.derivative(x).on_vars(ext),
                                F.derivative(y).on_vars(ext)};
    MultiPoly prod = MultiPoly::constant(Rational(1), ext);
    for (const auto& f : inverted) prod *= f.on_vars(ext);
    gens.push_back(MultiPoly::constant(Rational(1), ext) - prod * MultiPoly::var("_w", ext));
    if (!ideal_is_unit(groebner_basis(gens)))
        fail(ErrKind::UnsupportedInput, label + ": smoothness certificate failed");

    // Integrality: F irreducible as a bivariate polynomial.
    long dy = F.degree_in(y);
    if (dy < 1) fail(ErrKind::UnsupportedInput, label + ": equation does not involve " + y);
    MultiPoly cont(F.vars());
    for (const auto& c : F.coeffs_in(y))
        if (!c.is_zero()) cont = cont.is_zero() ? c : poly_gcd(cont, c);
    if (!cont.is_constant())
        fail(ErrKind::UnsupportedInput, label + ": equation has a vertical component");
    auto parts = factor_over_qs(as_unipoly_over_field(F, y), x);
    if (parts.size() != 1 || parts[0].mult != 1)
        fail(ErrKind::UnsupportedInput, label + ": equation is reducible");
}

ProductCoords product_coords(const AffineCurveScheme& x, const AffineCurveScheme& y) {
    ProductCoords pc;
    pc.source = x.vars;
    pc.all = x.vars;
    for (const auto& v : y.vars) {
        std::string name = v;
        int suffix = 0;
        while (std::find(pc.all.begin(), pc.all.end(), name) != pc.all.end())
            name = v + "_" + std::to_string(++suffix);
        pc.all.push_back(name);
        pc.target.push_back(name);
    }
    return pc;
}

bool invertible_on(const MultiPoly& den, const AffineCurveScheme& x) {
    if (den.is_zero()) return false;
    if (den.is_constant()) return true;
    if (x.vars.size() != 1 || !x.equations.empty()) return false;
    MultiPoly prod = MultiPoly::constant(Rational(1), {x.vars[0]});
    for (const auto& inv : x.inverted) prod *= inv.on_vars({x.vars[0]});
    if (prod.is_constant()) return false;
    for (const auto& [f, m] : factor_multipoly_in(den, x.vars[0]))
        if (!MultiPoly::exact_div(prod, f).has_value()) return false;
    return true;
}

}  // namespace mdr
