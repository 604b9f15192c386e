#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace mdr {

// Arbitrary-precision signed integer, value semantics over GMP's mpz.
class BigInt {
  public:
    BigInt() { mpz_init(v_); }
    BigInt(long n) { mpz_init_set_si(v_, n); }  // NOLINT: implicit by design
    explicit BigInt(const std::string& dec) {
        if (mpz_init_set_str(v_, dec.c_str(), 10) != 0) {
            mpz_clear(v_);
            mpz_init(v_);
            throw std::invalid_argument("BigInt: bad decimal literal '" + dec + "'");
        }
    }
    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) { return apply(mpz_add, a, b); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return apply(mpz_sub, a, b); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return apply(mpz_mul, a, b); }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.v_, v_);
        return r;
    }
    BigInt& operator+=(const BigInt& b) {
        mpz_add(v_, v_, b.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& b) {
        mpz_sub(v_, v_, b.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& b) {
        mpz_mul(v_, v_, b.v_);
        return *this;
    }

    // Truncated toward zero, like C++ integer division.
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return apply(mpz_tdiv_q, a, b); }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return apply(mpz_tdiv_r, a, b); }

    // Euclidean remainder in [0, |b|).
    BigInt mod_euclid(const BigInt& b) const {
        BigInt r;
        mpz_mod(r.v_, v_, b.v_);
        return r;
    }

    bool divides(const BigInt& a) const { return mpz_divisible_p(a.v_, v_) != 0; }

    friend BigInt gcd(const BigInt& a, const BigInt& b) { return apply(mpz_gcd, a, b); }
    friend BigInt lcm(const BigInt& a, const BigInt& b) { return apply(mpz_lcm, a, b); }

    BigInt pow(unsigned long e) const {
        BigInt r;
        mpz_pow_ui(r.v_, v_, e);
        return r;
    }
    BigInt abs() const {
        BigInt r;
        mpz_abs(r.v_, v_);
        return r;
    }

    // Inverse of *this mod m; second component false when not invertible.
    std::pair<BigInt, bool> invert_mod(const BigInt& m) const {
        BigInt r;
        bool ok = mpz_invert(r.v_, v_, m.v_) != 0;
        return {std::move(r), ok};
    }

    BigInt mul_mod(const BigInt& b, const BigInt& m) const {
        BigInt r;
        mpz_mul(r.v_, v_, b.v_);
        mpz_mod(r.v_, r.v_, m.v_);
        return r;
    }

    BigInt pow_mod(const BigInt& e, const BigInt& m) const {
        BigInt r;
        mpz_powm(r.v_, v_, e.v_, m.v_);
        return r;
    }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool is_one() const { return mpz_cmp_si(v_, 1) == 0; }
    int sign() const { return mpz_sgn(v_); }
    bool is_probable_prime() const { return mpz_probab_prime_p(v_, 30) > 0; }
    BigInt next_prime() const {
        BigInt r;
        mpz_nextprime(r.v_, v_);
        return r;
    }
    // Truncated integer square root.
    BigInt isqrt() const {
        BigInt r;
        mpz_sqrt(r.v_, v_);
        return r;
    }
    size_t bit_length() const { return mpz_sizeinbase(v_, 2); }

    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const { return mpz_get_si(v_); }
    double to_double() const { return mpz_get_d(v_); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) >= 0; }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    const mpz_t& raw() const { return v_; }
    mpz_t& raw() { return v_; }

  private:
    template <typename F>
    static BigInt apply(F f, const BigInt& a, const BigInt& b) {
        BigInt r;
        f(r.v_, a.v_, b.v_);
        return r;
    }
    mpz_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& n);

}  // namespace mdr
