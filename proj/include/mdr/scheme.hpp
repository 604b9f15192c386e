#pragma once

#include <string>
#include <vector>

#include "mdr/groebner.hpp"
#include "mdr/multipoly.hpp"

namespace mdr {

// A presented smooth affine scheme of dimension <= 1 over Q: Spec of a
// finite etale Q-algebra, the affine line, G_m, the line minus rational
// points, or a smooth plane curve. Products of these occur only as the
// ambient of cycles and are flagged ambient_only.
struct AffineCurveScheme {
    std::string label;
    std::vector<std::string> vars;
    std::vector<MultiPoly> equations;  // 0 or 1 for the curve class
    std::vector<MultiPoly> inverted;   // elements formally inverted
    bool ambient_only = false;

    long dim() const { return static_cast<long>(vars.size()) - static_cast<long>(equations.size()); }
    bool is_point_scheme() const { return dim() == 0; }
    // Single-coordinate schemes (A^1-like or etale) admit the full
    // correspondence calculus.
    bool single_coordinate() const { return vars.size() <= 1 && equations.size() <= 1; }

    bool is_connected() const;
    long component_count() const;

    // Certifies the supported-class invariants: dimension, smoothness via
    // the Jacobian ideal being the unit ideal on the inverted locus,
    // integrality per connected component. Throws on failure.
    void validate() const;

    // Canonical constructions.
    static AffineCurveScheme spec_q(const std::string& label = "pt");
    static AffineCurveScheme affine_line(const std::string& label = "A1",
                                         const std::string& var = "x");
    static AffineCurveScheme gm(const std::string& label = "Gm", const std::string& var = "x");
    static AffineCurveScheme punctured_line(const std::string& label, const std::string& var,
                                            const std::vector<Rational>& removed);
    static AffineCurveScheme etale(const std::string& label, const std::string& var,
                                   const MultiPoly& minpoly);
    static AffineCurveScheme plane_curve(const std::string& label, const std::string& x,
                                         const std::string& y, const MultiPoly& equation);
    static AffineCurveScheme product(const AffineCurveScheme& a, const AffineCurveScheme& b);

    friend bool operator==(const AffineCurveScheme& a, const AffineCurveScheme& b) {
        return a.vars == b.vars && a.equations == b.equations && a.inverted == b.inverted;
    }
};

// Product coordinates for cycles in X x Y: source variables keep their
// names, colliding target variables get a numeric suffix.
struct ProductCoords {
    std::vector<std::string> all;
    std::vector<std::string> source;  // aliases in `all`
    std::vector<std::string> target;
};
ProductCoords product_coords(const AffineCurveScheme& x, const AffineCurveScheme& y);

// True when every irreducible factor of den divides one of the scheme's
// inverted elements (up to units), i.e. den is invertible on the scheme.
bool invertible_on(const MultiPoly& den, const AffineCurveScheme& x);

}  // namespace mdr
