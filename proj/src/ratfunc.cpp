#include "mdr/ratfunc.hpp"

#include <ostream>

namespace mdr {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrKind::DegenerateInput, "rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(Rational(1), den_.vars());
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = poly_gcd(num_, den_);
        if (g.total_degree() > 0) {
            num_ = *MultiPoly::exact_div(num_, g);
            den_ = *MultiPoly::exact_div(den_, g);
        }
    }
    Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        den_ = den_.scaled(lc.inv());
        num_ = num_.scaled(lc.inv());
    }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) fail(ErrKind::DegenerateInput, "division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}
RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}
RationalFunction RationalFunction::inv() const {
    if (is_zero()) fail(ErrKind::DegenerateInput, "inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::derivative(const std::string& v) const {
    // (n/d)' = (n'd - nd') / d^2
    return RationalFunction(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RationalFunction RationalFunction::substitute(const std::string& v,
                                              const RationalFunction& value) const {
    // Substitute into numerator and denominator separately via Horner on
    // the fraction field.
    auto subst_poly = [&](const MultiPoly& p) {
        auto cs = p.coeffs_in(v);
        RationalFunction acc;
        for (size_t i = cs.size(); i-- > 0;)
            acc = acc * value + RationalFunction(cs[i]);
        return acc;
    };
    RationalFunction n = subst_poly(num_), d = subst_poly(den_);
    return n / d;
}

Rational RationalFunction::eval(const std::map<std::string, Rational>& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) fail(ErrKind::DegenerateInput, "pole: denominator vanishes at point");
    return num_.eval(point) / d;
}

namespace {
bool atomic_printed(const std::string& s) {
    if (s.empty()) return false;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '+' || c == '*' || c == '/' || (c == '-' && i > 0)) return false;
    }
    return true;
}
}  // namespace

std::string RationalFunction::str() const {
    std::string n = num_.str();
    if (den_.is_constant() && den_.constant_value().is_one()) return n;
    std::string d = den_.str();
    std::string lhs = atomic_printed(n) ? n : "(" + n + ")";
    std::string rhs = atomic_printed(d) ? d : "(" + d + ")";
    return lhs + "/" + rhs;
}

RationalFunction RationalFunction::parse(const std::string& text,
                                         const std::optional<std::vector<std::string>>& vars) {
    // Split at a top-level '/' that separates two polynomial expressions.
    // A '/' inside a rational literal (digits on both sides) binds tighter,
    // so first try the whole text as a polynomial.
    try {
        return RationalFunction(MultiPoly::parse(text, vars));
    } catch (const Error&) {
    }
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '/' && depth == 0) {
            try {
                MultiPoly n = MultiPoly::parse(text.substr(0, i), vars);
                MultiPoly d = MultiPoly::parse(text.substr(i + 1), vars);
                return RationalFunction(n, d);
            } catch (const Error&) {
                continue;  // the '/' belonged to a rational literal
            }
        }
    }
    fail(ErrKind::Parse, "bad rational function '" + text + "'");
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

}  // namespace mdr
