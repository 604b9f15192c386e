#pragma once

#include <vector>

#include "mdr/ratfunc.hpp"
#include "mdr/unipoly.hpp"

namespace mdr {

template <typename F>
struct FactorPart {
    UniPoly<F> factor;  // monic irreducible
    long mult = 1;
};

// Irreducible factorization over Q: product of factor^mult times lc(f)
// reproduces f. Squarefree split, rational roots, then Hensel lifting of a
// mod-p factorization with subset recombination.
std::vector<FactorPart<Rational>> factor_over_q(const UniPoly<Rational>& f);

// Irreducible factorization over the rational function field Q(s); the
// coefficients may involve at most the one parameter variable. Clears
// denominators and factors the primitive bivariate part by lifting a
// specialization at a good rational point.
std::vector<FactorPart<RationalFunction>> factor_over_qs(const UniPoly<RationalFunction>& f,
                                                         const std::string& param);

// Convenience: MultiPoly univariate in `v` over Q.
std::vector<std::pair<MultiPoly, long>> factor_multipoly_in(const MultiPoly& f,
                                                            const std::string& v);

bool is_irreducible_over_q(const UniPoly<Rational>& f);

// View a bivariate polynomial as univariate in `main` over Q(param).
UniPoly<RationalFunction> as_unipoly_over_field(const MultiPoly& p, const std::string& main);
MultiPoly from_unipoly_over_field(const UniPoly<RationalFunction>& p, const std::string& main,
                                  const std::vector<std::string>& vars);

}  // namespace mdr
