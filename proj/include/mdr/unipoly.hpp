#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mdr/error.hpp"

namespace mdr {

// Dense univariate polynomial with coefficients in a field F.
// F must provide F(), F(long), field arithmetic, ==, is_zero(), str().
template <typename F>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(F a) {
        UniPoly p;
        p.c_.push_back(std::move(a));
        p.trim();
        return p;
    }
    static UniPoly x() { return UniPoly(std::vector<F>{F(0), F(1)}); }
    static UniPoly monomial(F a, size_t deg) {
        std::vector<F> v(deg + 1, F(0));
        v[deg] = std::move(a);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const F& operator[](size_t i) const {
        static const F kZero{};
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<F>& coeffs() const { return c_; }
    const F& lc() const {
        if (c_.empty()) fail(ErrKind::DegenerateInput, "leading coefficient of zero");
        return c_.back();
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
        return UniPoly(std::move(v));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
        return UniPoly(std::move(v));
    }
    UniPoly operator-() const {
        std::vector<F> v(c_.size(), F(0));
        for (size_t i = 0; i < v.size(); ++i) v[i] = F(0) - c_[i];
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(v));
    }
    UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
    UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
    UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }
    UniPoly scaled(const F& s) const {
        std::vector<F> v(c_.size(), F(0));
        for (size_t i = 0; i < v.size(); ++i) v[i] = c_[i] * s;
        return UniPoly(std::move(v));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Quotient and remainder; b must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) fail(ErrKind::DegenerateInput, "polynomial division by zero");
        UniPoly r = a;
        std::vector<F> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, F(0));
        F inv = F(1) / b.lc();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            size_t shift = static_cast<size_t>(r.degree() - b.degree());
            F coef = r.lc() * inv;
            q[shift] = q[shift] + coef;
            for (size_t i = 0; i < b.c_.size(); ++i)
                r.c_[shift + i] = r.c_[shift + i] - coef * b.c_[i];
            r.trim();
        }
        return {UniPoly(std::move(q)), std::move(r)};
    }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(F(1) / lc());
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<F> v(c_.size() - 1, F(0));
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * F(static_cast<long>(i));
        return UniPoly(std::move(v));
    }

    F eval(const F& point) const {
        F acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
        return acc;
    }

    UniPoly compose(const UniPoly& inner) const {
        UniPoly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
        return acc;
    }

    UniPoly pow_mod(long e, const UniPoly& m) const {
        UniPoly acc = constant(F(1));
        UniPoly base = *this % m;
        while (e) {
            if (e & 1) acc = acc * base % m;
            base = base * base % m;
            e >>= 1;
        }
        return acc;
    }

    std::string str(const std::string& var = "T") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[i].str() + ")";
            if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

template <typename F>
UniPoly<F> upoly_gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <typename F>
std::tuple<UniPoly<F>, UniPoly<F>, UniPoly<F>> upoly_xgcd(const UniPoly<F>& a,
                                                          const UniPoly<F>& b) {
    UniPoly<F> r0 = a, r1 = b;
    UniPoly<F> s0 = UniPoly<F>::constant(F(1)), s1;
    UniPoly<F> t0, t1 = UniPoly<F>::constant(F(1));
    while (!r1.is_zero()) {
        auto [q, r] = UniPoly<F>::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly<F> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly<F> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = F(1) / r0.lc();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Yun's squarefree decomposition (characteristic 0): returns pairs
// (factor, multiplicity) with factors squarefree, pairwise coprime, monic,
// and product of factor^multiplicity * lc = input.
template <typename F>
std::vector<std::pair<UniPoly<F>, long>> squarefree_decomposition(const UniPoly<F>& f) {
    std::vector<std::pair<UniPoly<F>, long>> out;
    if (f.degree() <= 0) return out;
    UniPoly<F> a = f.monic();
    UniPoly<F> d = a.derivative();
    UniPoly<F> g = upoly_gcd(a, d);
    UniPoly<F> w = a / g;
    UniPoly<F> y = d / g;
    long mult = 1;
    while (w.degree() > 0) {
        UniPoly<F> z = y - w.derivative();
        UniPoly<F> h = upoly_gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h.monic(), mult);
        w = w / h;
        y = z / h;
        ++mult;
    }
    return out;
}

// Resultant over a field by the Euclidean remainder sequence.
template <typename F>
F upoly_resultant(UniPoly<F> a, UniPoly<F> b) {
    if (a.is_zero() || b.is_zero()) return F(0);
    F acc(1);
    bool negate = false;
    while (b.degree() > 0) {
        auto r = a % b;
        long da = a.degree(), db = b.degree(), dr = r.is_zero() ? -1 : r.degree();
        if ((da % 2) && (db % 2)) negate = !negate;
        if (r.is_zero()) return F(0);
        // res(a,b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
        F lcpow(1);
        for (long i = 0; i < da - dr; ++i) lcpow = lcpow * b.lc();
        acc = acc * lcpow;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant: res(a, c) = c^{deg a}
    F cpow(1);
    for (long i = 0; i < a.degree(); ++i) cpow = cpow * b.lc();
    acc = acc * cpow;
    return negate ? F(0) - acc : acc;
}

}  // namespace mdr
