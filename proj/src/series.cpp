#include "mdr/series.hpp"

#include "mdr/unipoly.hpp"

namespace mdr {

long LaurentSeries::order() const {
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) return ord0 + static_cast<long>(i);
    return ord0 + static_cast<long>(coeffs.size());
}

namespace {

UniPoly<Rational> to_unipoly(const MultiPoly& p, const std::string& var) {
    std::vector<Rational> cs;
    for (const auto& c : p.coeffs_in(var)) {
        if (!c.is_constant())
            fail(ErrKind::UnsupportedPoint, "expansion needs a univariate function");
        cs.push_back(c.constant_value());
    }
    return UniPoly<Rational>(std::move(cs));
}

// f = num/den as power series data around 0 in the shifted variable.
LaurentSeries expand_shifted(UniPoly<Rational> num, UniPoly<Rational> den, long terms,
                             long pole_bound) {
    if (num.is_zero()) return {0, std::vector<Rational>(static_cast<size_t>(terms), Rational(0))};
    // Factor out powers of t from the denominator (and numerator).
    long vden = 0, vnum = 0;
    while (den[0].is_zero()) {
        std::vector<Rational> c(den.coeffs().begin() + 1, den.coeffs().end());
        den = UniPoly<Rational>(std::move(c));
        ++vden;
    }
    while (!num.is_zero() && num[0].is_zero()) {
        std::vector<Rational> c(num.coeffs().begin() + 1, num.coeffs().end());
        num = UniPoly<Rational>(std::move(c));
        ++vnum;
    }
    long ord = vnum - vden;
    if (ord < -pole_bound)
        fail(ErrKind::UnsupportedPoint,
             "pole order " + std::to_string(-ord) + " exceeds bound " + std::to_string(pole_bound));
    // Power series inverse of den up to `terms` coefficients.
    std::vector<Rational> inv(static_cast<size_t>(terms), Rational(0));
    inv[0] = Rational(1) / den[0];
    for (long k = 1; k < terms; ++k) {
        Rational acc(0);
        for (long i = 1; i <= k; ++i)
            acc += den[static_cast<size_t>(i)] * inv[static_cast<size_t>(k - i)];
        inv[static_cast<size_t>(k)] = -acc / den[0];
    }
    std::vector<Rational> out(static_cast<size_t>(terms), Rational(0));
    for (long k = 0; k < terms; ++k) {
        Rational acc(0);
        for (long i = 0; i <= k; ++i)
            acc += num[static_cast<size_t>(i)] * inv[static_cast<size_t>(k - i)];
        out[static_cast<size_t>(k)] = acc;
    }
    return {ord, std::move(out)};
}

}  // namespace

LaurentSeries expand_at(const RationalFunction& f, const std::string& var, const Rational& a,
                        long terms, long pole_bound) {
    std::vector<std::string> ctx{var};
    MultiPoly shift = MultiPoly::var(var, ctx) + MultiPoly::constant(a, ctx);
    UniPoly<Rational> num = to_unipoly(f.num().on_vars(ctx).substitute(var, shift), var);
    UniPoly<Rational> den = to_unipoly(f.den().on_vars(ctx).substitute(var, shift), var);
    if (den.is_zero()) fail(ErrKind::DegenerateInput, "zero denominator");
    return expand_shifted(std::move(num), std::move(den), terms, pole_bound);
}

LaurentSeries expand_at_infinity(const RationalFunction& f, const std::string& var, long terms,
                                 long pole_bound) {
    // var -> 1/w: p(1/w) = w^{-deg p} * reverse(p)(w)
    UniPoly<Rational> num = to_unipoly(f.num().on_vars({var}), var);
    UniPoly<Rational> den = to_unipoly(f.den().on_vars({var}), var);
    if (den.is_zero()) fail(ErrKind::DegenerateInput, "zero denominator");
    auto reverse = [](const UniPoly<Rational>& p) {
        std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
        return UniPoly<Rational>(std::move(c));
    };
    long shift = den.degree() - num.degree();  // w^shift * rev(num)/rev(den)
    LaurentSeries s = expand_shifted(reverse(num), reverse(den), terms, pole_bound + shift);
    s.ord0 += shift;
    if (s.order() < -pole_bound)
        fail(ErrKind::UnsupportedPoint, "pole order at infinity exceeds bound");
    return s;
}

Rational residue_at(const RationalFunction& f, const std::string& var, const Rational& a) {
    return expand_at(f, var, a).coeff(-1);
}

Rational residue_at_infinity(const RationalFunction& f, const std::string& var) {
    // f(z) dz = f(1/w) d(1/w) = -f(1/w)/w^2 dw
    LaurentSeries s = expand_at_infinity(f, var, kDefaultPoleBound + 3);
    return -s.coeff(1);
}

long order_at(const RationalFunction& f, const std::string& var, const Rational& a) {
    if (f.is_zero()) fail(ErrKind::DegenerateInput, "order of zero function");
    return expand_at(f, var, a).order();
}

long order_at_infinity(const RationalFunction& f, const std::string& var) {
    if (f.is_zero()) fail(ErrKind::DegenerateInput, "order of zero function");
    UniPoly<Rational> num = to_unipoly(f.num().on_vars({var}), var);
    UniPoly<Rational> den = to_unipoly(f.den().on_vars({var}), var);
    return den.degree() - num.degree();
}

}  // namespace mdr
