#pragma once

#include <optional>
#include <string>

#include "mdr/matrix.hpp"
#include "mdr/ratfunc.hpp"
#include "mdr/scheme.hpp"
#include "mdr/unipoly.hpp"

namespace mdr {

// Element of a function-field tower K[t]/(f), K = Q(basevar): a residue
// class represented by a polynomial in t of degree < deg f with
// RationalFunction coefficients.
using El = UniPoly<RationalFunction>;

// A tower K[t]/(f) with K = Q or Q(basevar). The trivial tower (no t)
// models K itself; plane curves and finite extensions are the nontrivial
// case. f must be monic with f'(t) invertible (separability).
class FuncField {
  public:
    FuncField() = default;  // Q
    explicit FuncField(std::string basevar) : basevar_(std::move(basevar)) {}
    FuncField(std::string basevar, std::string tvar, El minpoly);

    const std::string& basevar() const { return basevar_; }
    const std::string& tvar() const { return tvar_; }
    bool trivial() const { return tvar_.empty(); }
    long degree() const { return trivial() ? 1 : minpoly_.degree(); }
    const El& minpoly() const { return minpoly_; }

    El reduce(const El& a) const;
    El from_function(const RationalFunction& f) const { return El::constant(f); }
    El tgen() const;
    El add(const El& a, const El& b) const { return reduce(a + b); }
    El sub(const El& a, const El& b) const { return reduce(a - b); }
    El mul(const El& a, const El& b) const { return reduce(a * b); }
    El inv(const El& a) const;
    bool is_zero(const El& a) const { return reduce(a).is_zero(); }

    // Field trace of multiplication by a, an element of K.
    RationalFunction trace(const El& a) const;
    Matrix<RationalFunction> mult_matrix(const El& a) const;

    // dt = theta * dx from d(minpoly)(t) = 0; zero in the trivial tower or
    // over Q. Errors with separability when f'(t) is not invertible.
    El dt_over_dx() const;
    // Coefficient of dx in d(g): base derivative plus the chain rule
    // through t.
    El d_coeff(const El& g) const;

    // Substitute a K-rational function of the base variable for `var`
    // inside the coefficients (pullback along a base map).
    El map_coefficients(const El& a, const std::string& var, const RationalFunction& image) const;

  private:
    std::string basevar_;
    std::string tvar_;
    El minpoly_;
};

// A differential form on a FuncField-presented smooth algebra, canonicalized
// so that 1-forms are c * d(basevar) with c in the tower (dt rewritten via
// the minimal polynomial). Degree-2 forms vanish on curves.
struct Form {
    int degree = 0;
    El coeff;  // the function, or the d(basevar)-coefficient

    static Form function(El f) { return {0, std::move(f)}; }
    static Form dx(El c) { return {1, std::move(c)}; }
    // c * dt, rewritten through the tower relation.
    static Form dt(const FuncField& k, const El& c);
    static Form zero(int degree) { return {degree, El()}; }

    bool is_zero() const { return coeff.is_zero(); }
};

Form form_add(const FuncField& k, const Form& a, const Form& b);
Form form_scale(const FuncField& k, const El& s, const Form& a);
// Exterior derivative; d of a 1-form on a curve is 0 after reduction.
Form form_d(const FuncField& k, const Form& a);
// Wedge product (degree sum <= 1 on curves is the interesting case).
Form form_wedge(const FuncField& k, const Form& a, const Form& b);

// ------------------------------------------------------------------------
// Forms on X x A^1 for a one-coordinate X: coefficients are rational
// functions in (x, t), polynomial in t on the supported inputs.
struct ProductForm {
    // components: c0 + cx dx + ct dt + cxt dx^dt
    RationalFunction c0, cx, ct, cxt;

    bool is_zero() const { return c0.is_zero() && cx.is_zero() && ct.is_zero() && cxt.is_zero(); }
};

ProductForm product_d(const ProductForm& w, const std::string& x, const std::string& t);

// Splits a closed form on X x A^1 as pr*(w0) + d(eta): returns (w0, eta)
// with the certificate checked exactly. The t-coefficients must be
// polynomial in t.
std::pair<ProductForm, ProductForm> homotopy_reduce(const ProductForm& w, const std::string& x,
                                                    const std::string& t,
                                                    const AffineCurveScheme& base);

}  // namespace mdr
