#pragma once

#include <iosfwd>
#include <string>

#include "mdr/multipoly.hpp"

namespace mdr {

// Fraction of multivariate polynomials over Q, kept reduced (gcd cleared)
// with a monic denominator in the canonical graded-lex order.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(MultiPoly::constant(Rational(1))) {}
    RationalFunction(long n)  // NOLINT: implicit by design
        : num_(MultiPoly::constant(Rational(n))), den_(MultiPoly::constant(Rational(1))) {}
    explicit RationalFunction(const Rational& q)
        : num_(MultiPoly::constant(q)), den_(MultiPoly::constant(Rational(1))) {}
    explicit RationalFunction(MultiPoly num)
        : num_(std::move(num)), den_(MultiPoly::constant(Rational(1), num_.vars())) {}
    RationalFunction(MultiPoly num, MultiPoly den);

    // "p" or "p/q" with each side in the polynomial grammar.
    static RationalFunction parse(const std::string& text,
                                  const std::optional<std::vector<std::string>>& vars = std::nullopt);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }
    RationalFunction inv() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    RationalFunction derivative(const std::string& v) const;
    RationalFunction substitute(const std::string& v, const RationalFunction& value) const;
    Rational eval(const std::map<std::string, Rational>& point) const;

    std::string str() const;

  private:
    void reduce();
    MultiPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace mdr
