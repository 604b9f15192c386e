#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdr/matrix.hpp"
#include "mdr/ratfunc.hpp"
#include "mdr/scheme.hpp"

namespace mdr {

// An integral closed subscheme of X x Y, finite and surjective over X.
// In the supported class (single-coordinate source and target) the cycle
// is cut out by a single irreducible bivariate generator; graphs into
// plane curves keep the full generator list with the morphism data.
struct PrimeCorrespondence {
    AffineCurveScheme source, target;
    std::vector<MultiPoly> ideal;  // generators in product coordinates
    long degree_over_source = 1;
    // Set for graphs: image of each target coordinate in Frac(O(X)).
    std::optional<std::vector<RationalFunction>> graph_images;

    // The generator as a monic polynomial in the target coordinate over
    // k(X); available for single-coordinate targets.
    UniPoly<RationalFunction> fiber_poly() const;
    std::string key() const;  // canonical printed ideal

    static PrimeCorrespondence from_generator(const AffineCurveScheme& source,
                                              const AffineCurveScheme& target,
                                              const MultiPoly& gen);

    // A prime lying over one connected component of a disconnected etale
    // source: the component's minimal polynomial joins the ideal.
    static PrimeCorrespondence over_component(const AffineCurveScheme& source,
                                              const AffineCurveScheme& target,
                                              const MultiPoly& component_minpoly,
                                              const MultiPoly& gen);
};

struct FiniteCorrespondence {
    AffineCurveScheme source, target;
    std::vector<std::pair<PrimeCorrespondence, long>> components;

    bool is_effective() const;
    bool is_zero() const { return components.empty(); }
    void normalize();  // merge equal components, drop zeros, sort by key
    FiniteCorrespondence scaled(long n) const;
    friend FiniteCorrespondence operator+(const FiniteCorrespondence& a,
                                          const FiniteCorrespondence& b);
    friend bool operator==(const FiniteCorrespondence& a, const FiniteCorrespondence& b);
    friend bool operator!=(const FiniteCorrespondence& a, const FiniteCorrespondence& b) {
        return !(a == b);
    }

    static FiniteCorrespondence zero(const AffineCurveScheme& s, const AffineCurveScheme& t);
    static FiniteCorrespondence single(PrimeCorrespondence p, long mult = 1);
};

// Graph of a morphism f: X -> Y presented by the images of Y's coordinates
// as rational functions on X. Fails with invalid-morphism when an image is
// not regular on X or does not satisfy Y's equations.
FiniteCorrespondence graph(const AffineCurveScheme& x, const AffineCurveScheme& y,
                           const std::vector<RationalFunction>& images);

FiniteCorrespondence identity_correspondence(const AffineCurveScheme& x);

// Composition beta after alpha via the generic fiber algebra
// Q = k(X)[middle, target]/(I_alpha + I_beta): components are keyed by the
// irreducible factors of the characteristic polynomial of the target
// coordinate acting on Q, with the exponent as pushforward multiplicity.
FiniteCorrespondence compose(const FiniteCorrespondence& alpha,
                             const FiniteCorrespondence& beta);

// External product of cycles on (X x Y) x (X' x Y').
FiniteCorrespondence external_tensor(const FiniteCorrespondence& a,
                                     const FiniteCorrespondence& b);

struct DegreeReport {
    bool connected = true;
    long total = 0;  // meaningful when connected
    std::vector<std::pair<std::string, long>> per_component;
};
DegreeReport degree_over_source(const FiniteCorrespondence& alpha);

// Transpose of a correspondence between single-coordinate schemes,
// certified finite over the new source.
FiniteCorrespondence transpose(const FiniteCorrespondence& alpha);

// ----------------------------------------------------------- zero cycles

struct ZeroCycle {
    AffineCurveScheme ambient;  // A^1 in the supported class
    // (monic irreducible minimal polynomial of the closed point, multiplicity)
    std::vector<std::pair<UniPoly<Rational>, long>> points;

    long total_degree() const;
    bool is_effective() const;
};

// The point of Sym^n(A^1) attached to an effective zero cycle of degree n:
// the n elementary symmetric functions of the root multiset, read off the
// coefficients of the product of minimal polynomials with multiplicity.
std::vector<Rational> sym_point(const ZeroCycle& gamma);

// A zero cycle as a correspondence Spec Q -> A^1.
FiniteCorrespondence cycle_to_correspondence(const ZeroCycle& gamma,
                                             const AffineCurveScheme& line);

}  // namespace mdr
