#pragma once

#include <gmp.h>

#include <iosfwd>
#include <string>

#include "mdr/bigint.hpp"
#include "mdr/error.hpp"

namespace mdr {

// Exact rational number. Always stored reduced with positive denominator.
class Rational {
  public:
    Rational() { mpq_init(v_); }
    Rational(long n) {  // NOLINT: implicit by design
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(long num, long den) {
        if (den == 0) fail(ErrKind::DegenerateInput, "rational with zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }
    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) fail(ErrKind::DegenerateInput, "rational with zero denominator");
        mpq_init(v_);
        mpq_set_num(v_, num.raw());
        mpq_set_den(v_, den.raw());
        mpq_canonicalize(v_);
    }
    explicit Rational(const BigInt& num) {
        mpq_init(v_);
        mpq_set_z(v_, num.raw());
    }
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    // Parses "a" or "a/b" with optional sign.
    static Rational parse(const std::string& s);

    BigInt num() const {
        BigInt n;
        mpz_set(n.raw(), mpq_numref(v_));
        return n;
    }
    BigInt den() const {
        BigInt d;
        mpz_set(d.raw(), mpq_denref(v_));
        return d;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return apply(mpq_add, a, b); }
    friend Rational operator-(const Rational& a, const Rational& b) { return apply(mpq_sub, a, b); }
    friend Rational operator*(const Rational& a, const Rational& b) { return apply(mpq_mul, a, b); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail(ErrKind::DegenerateInput, "division by zero rational");
        return apply(mpq_div, a, b);
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }
    Rational& operator+=(const Rational& b) {
        mpq_add(v_, v_, b.v_);
        return *this;
    }
    Rational& operator-=(const Rational& b) {
        mpq_sub(v_, v_, b.v_);
        return *this;
    }
    Rational& operator*=(const Rational& b) {
        mpq_mul(v_, v_, b.v_);
        return *this;
    }
    Rational& operator/=(const Rational& b) {
        if (b.is_zero()) fail(ErrKind::DegenerateInput, "division by zero rational");
        mpq_div(v_, v_, b.v_);
        return *this;
    }

    Rational inv() const {
        if (is_zero()) fail(ErrKind::DegenerateInput, "inverse of zero");
        Rational r;
        mpq_inv(r.v_, v_);
        return r;
    }
    Rational abs() const {
        Rational r;
        mpq_abs(r.v_, v_);
        return r;
    }
    Rational pow(long e) const;

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(v_), 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

    double to_double() const { return mpq_get_d(v_); }

    // Canonical form: "a" when integral, else "a/b".
    std::string str() const;

    size_t hash() const;

  private:
    template <typename F>
    static Rational apply(F f, const Rational& a, const Rational& b) {
        Rational r;
        f(r.v_, a.v_, b.v_);
        return r;
    }
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace mdr
