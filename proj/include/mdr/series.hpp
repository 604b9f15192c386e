#pragma once

#include <vector>

#include "mdr/ratfunc.hpp"

namespace mdr {

// Finite window of a Laurent expansion: coefficients of t^ord0 .. t^(ord0+n-1)
// in the local parameter.
struct LaurentSeries {
    long ord0 = 0;
    std::vector<Rational> coeffs;

    Rational coeff(long k) const {
        long i = k - ord0;
        if (i < 0 || i >= static_cast<long>(coeffs.size())) return Rational(0);
        return coeffs[static_cast<size_t>(i)];
    }
    long order() const;  // index of first nonzero coefficient; ord0+size when zero
};

inline constexpr long kDefaultPoleBound = 32;

// Expansion of a univariate rational function around var = a, in the local
// parameter (var - a). Errors when the pole order exceeds the bound.
LaurentSeries expand_at(const RationalFunction& f, const std::string& var, const Rational& a,
                        long terms = kDefaultPoleBound, long pole_bound = kDefaultPoleBound);

// Expansion around var = infinity in the parameter w = 1/var.
LaurentSeries expand_at_infinity(const RationalFunction& f, const std::string& var,
                                 long terms = kDefaultPoleBound,
                                 long pole_bound = kDefaultPoleBound);

// Residue of the 1-form f d(var) at var = a (coefficient of dz/z in the
// local expansion, z = var - a).
Rational residue_at(const RationalFunction& f, const std::string& var, const Rational& a);

// Residue of f d(var) at infinity: substitute var = 1/w.
Rational residue_at_infinity(const RationalFunction& f, const std::string& var);

// Order of vanishing of f at var = a (negative for poles).
long order_at(const RationalFunction& f, const std::string& var, const Rational& a);
long order_at_infinity(const RationalFunction& f, const std::string& var);

}  // namespace mdr
