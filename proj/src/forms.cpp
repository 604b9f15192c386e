#include "mdr/forms.hpp"

namespace mdr {

FuncField::FuncField(std::string basevar, std::string tvar, El minpoly)
    : basevar_(std::move(basevar)), tvar_(std::move(tvar)), minpoly_(std::move(minpoly)) {
    if (tvar_.empty()) fail(ErrKind::Precondition, "tower variable must be named");
    if (minpoly_.degree() < 1) fail(ErrKind::Precondition, "tower needs a nonconstant minimal polynomial");
    if (!minpoly_.lc().is_one()) minpoly_ = minpoly_.monic();
}

El FuncField::reduce(const El& a) const {
    if (trivial()) {
        // only the constant coefficient survives; higher powers of an
        // absent generator are a misuse
        require_invariant(a.degree() <= 0, "nonconstant element of a trivial tower");
        return a;
    }
    return a.degree() < minpoly_.degree() ? a : a % minpoly_;
}

El FuncField::tgen() const {
    if (trivial()) fail(ErrKind::Precondition, "trivial tower has no generator");
    return reduce(El::x());
}

El FuncField::inv(const El& a) const {
    El r = reduce(a);
    if (r.is_zero()) fail(ErrKind::DegenerateInput, "inverse of zero");
    if (trivial() || r.degree() == 0)
        return El::constant(RationalFunction(1) / r[0]);
    auto [g, s, t] = upoly_xgcd(r, minpoly_);
    (void)t;
    if (g.degree() != 0)
        fail(ErrKind::DegenerateInput, "element is a zero divisor: gcd " + g.str());
    return reduce(s.scaled(RationalFunction(1) / g[0]));
}

Matrix<RationalFunction> FuncField::mult_matrix(const El& a) const {
    size_t n = static_cast<size_t>(degree());
    Matrix<RationalFunction> m(n, n);
    El cur = reduce(a);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) m(i, j) = cur[i];
        if (j + 1 < n) cur = reduce(cur * El::x());
    }
    return m;
}

RationalFunction FuncField::trace(const El& a) const { return mult_matrix(a).trace(); }

El FuncField::dt_over_dx() const {
    if (trivial() || basevar_.empty()) return El();
    // d f(t) = f'(t) dt + (coefficientwise d/dx f)(t) dx = 0
    El fprime_t = minpoly_.derivative();
    std::vector<RationalFunction> dcoeffs;
    for (const auto& c : minpoly_.coeffs()) dcoeffs.push_back(c.derivative(basevar_));
    El fx(std::move(dcoeffs));
    El denom = reduce(fprime_t);
    if (is_zero(denom)) fail(ErrKind::Separability, "derivative of the minimal polynomial vanishes");
    return mul(El() - reduce(fx), inv(denom));
}

El FuncField::d_coeff(const El& g) const {
    El gr = reduce(g);
    El base;
    if (!basevar_.empty()) {
        std::vector<RationalFunction> d;
        for (const auto& c : gr.coeffs()) d.push_back(c.derivative(basevar_));
        base = El(std::move(d));
    }
    if (trivial()) return reduce(base);
    return add(base, mul(gr.derivative(), dt_over_dx()));
}

El FuncField::map_coefficients(const El& a, const std::string& var,
                               const RationalFunction& image) const {
    std::vector<RationalFunction> out;
    for (const auto& c : a.coeffs()) out.push_back(c.substitute(var, image));
    return reduce(El(std::move(out)));
}

Form Form::dt(const FuncField& k, const El& c) {
    if (k.trivial()) fail(ErrKind::Precondition, "dt on a trivial tower");
    return Form::dx(k.mul(c, k.dt_over_dx()));
}

Form form_add(const FuncField& k, const Form& a, const Form& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree != b.degree) fail(ErrKind::Precondition, "adding forms of different degree");
    return {a.degree, k.add(a.coeff, b.coeff)};
}

Form form_scale(const FuncField& k, const El& s, const Form& a) {
    return {a.degree, k.mul(s, a.coeff)};
}

Form form_d(const FuncField& k, const Form& a) {
    if (a.degree == 0) return Form::dx(k.d_coeff(a.coeff));
    // d(c dx) = dc ^ dx = 0 on a curve
    return Form::zero(a.degree + 1);
}

Form form_wedge(const FuncField& k, const Form& a, const Form& b) {
    int deg = a.degree + b.degree;
    if (deg > 1) return Form::zero(deg);  // dx ^ dx = 0
    return {deg, k.mul(a.coeff, b.coeff)};
}

ProductForm product_d(const ProductForm& w, const std::string& x, const std::string& t) {
    // d(c0 + cx dx + ct dt) = c0_x dx + c0_t dt + (ct_x - cx_t) dx^dt
    ProductForm r;
    r.cx = w.c0.derivative(x);
    r.ct = w.c0.derivative(t);
    r.cxt = w.ct.derivative(x) - w.cx.derivative(t);
    return r;
}

std::pair<ProductForm, ProductForm> homotopy_reduce(const ProductForm& w, const std::string& x,
                                                    const std::string& t,
                                                    const AffineCurveScheme& base) {
    ProductForm dw = product_d(w, x, t);
    if (!dw.is_zero()) fail(ErrKind::Precondition, "form is not closed");
    auto integrate_t = [&](const RationalFunction& f) {
        if (f.den().depends_on(t))
            fail(ErrKind::Precondition, "coefficient not polynomial in the A^1 coordinate");
        std::vector<std::string> vars = merge_vars(f.num().vars(), {t});
        auto cs = f.num().on_vars(vars).coeffs_in(t);
        MultiPoly acc(vars);
        MultiPoly tv = MultiPoly::var(t, vars);
        for (size_t i = 0; i < cs.size(); ++i)
            acc += cs[i] * tv.pow(static_cast<long>(i) + 1).scaled(Rational(1, static_cast<long>(i) + 1));
        return RationalFunction(acc) / RationalFunction(f.den());
    };
    // eta kills the dt-part: eta0 = integral of ct dt; then
    // w - d(eta) has no dt component and no mixed component (closedness).
    ProductForm eta;
    eta.c0 = integrate_t(w.ct);
    // w1 = w - d eta
    ProductForm deta = product_d(eta, x, t);
    ProductForm w1;
    w1.c0 = w.c0;
    w1.cx = w.cx - deta.cx;
    w1.ct = w.ct - deta.ct;
    w1.cxt = w.cxt - deta.cxt;
    require_invariant(w1.ct.is_zero(), "dt component survived integration");
    // Also handle the mixed dx^dt part for 2-forms: integrate cxt in t into
    // an extra dx-piece of eta.
    if (!w1.cxt.is_zero()) {
        ProductForm eta2;
        eta2.cx = integrate_t(-w1.cxt);
        ProductForm deta2 = product_d(eta2, x, t);
        w1.cx = w1.cx - deta2.cx;
        w1.cxt = w1.cxt - deta2.cxt;
        eta.cx = eta.cx + eta2.cx;
        require_invariant(w1.cxt.is_zero(), "mixed component survived integration");
    }
    // Closedness of the remainder forces t-independence (char 0).
    if (w1.c0.num().depends_on(t) || w1.c0.den().depends_on(t) || w1.cx.num().depends_on(t) ||
        w1.cx.den().depends_on(t))
        fail(ErrKind::InvariantViolation, "reduced form still depends on the A^1 coordinate");
    (void)base;
    ProductForm w0;
    w0.c0 = w1.c0;
    w0.cx = w1.cx;
    return {w0, eta};
}

}  // namespace mdr
