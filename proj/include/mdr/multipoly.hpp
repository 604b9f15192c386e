#pragma once

#include <algorithm>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdr/error.hpp"
#include "mdr/rational.hpp"

namespace mdr {

using Exps = std::vector<int>;

// Descending graded-lexicographic order on exponent vectors: higher total
// degree first, ties broken lexicographically on the variable list order.
struct GrlexGreater {
    bool operator()(const Exps& a, const Exps& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over Q with an explicit ordered variable
// list. No zero coefficients are stored; the map is kept in descending
// graded-lex order so begin() is the leading term.
class MultiPoly {
  public:
    using TermMap = std::map<Exps, Rational, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(const Rational& c, std::vector<std::string> vars = {});
    static MultiPoly var(const std::string& name, const std::vector<std::string>& vars);
    // Parses the polynomial grammar: rationals `a` or `a/b`, variables,
    // operators + - * ^ with nonnegative integer exponents, parentheses,
    // no implicit multiplication. Unknown variables are rejected when a
    // context is given; with vars == nullopt the variables are collected
    // and ordered alphabetically.
    static MultiPoly parse(const std::string& text,
                           const std::optional<std::vector<std::string>>& vars = std::nullopt);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    long total_degree() const;  // -1 for zero
    long degree_in(const std::string& v) const;
    bool depends_on(const std::string& v) const { return degree_in(v) > 0; }

    const Rational& leading_coeff() const;
    const Exps& leading_exps() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(long e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(const std::string& v) const;
    MultiPoly substitute(const std::string& v, const MultiPoly& value) const;
    Rational eval(const std::map<std::string, Rational>& point) const;

    // Rewrites onto a variable list that must contain every used variable.
    MultiPoly on_vars(const std::vector<std::string>& vars) const;
    // Drops variables this polynomial does not use (keeps relative order).
    MultiPoly pruned() const;

    // Coefficients with respect to one variable, constants in the others
    // (each coefficient keeps the full variable list minus `v`).
    std::vector<MultiPoly> coeffs_in(const std::string& v) const;
    static MultiPoly from_coeffs_in(const std::string& v, const std::vector<MultiPoly>& cs,
                                    const std::vector<std::string>& vars);

    // Exact division; nullopt when b does not divide a.
    static std::optional<MultiPoly> exact_div(const MultiPoly& a, const MultiPoly& b);

    // Clears rational denominators and divides by the integer content;
    // the result has coprime integer coefficients with positive leading one.
    MultiPoly integer_primitive() const;
    MultiPoly monic() const;  // divides by the leading coefficient

    // Canonical printing: descending graded-lex, coefficient -1 as '-',
    // coefficient 1 elided on nonconstant terms, '*' between factors.
    std::string str() const;

    void set_term(const Exps& e, const Rational& c);

  private:
    static std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b);
    std::vector<std::string> vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Union of the two lists, keeping left order then unseen right variables.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

// Sylvester resultant eliminating `v`. Errors if both inputs are constant
// in `v`; if one is constant c with the other of degree d, returns c^d.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& v);

// Multivariate gcd by primitive PRS, normalized monic.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace mdr
