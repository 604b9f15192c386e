#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mdr/complexes.hpp"
#include "mdr/forms.hpp"
#include "mdr/scheme.hpp"
#include "mdr/series.hpp"

namespace mdr {

// A boundary point of a compactified model: a rational point of the
// coordinate chart or the point at infinity.
struct BoundaryPoint {
    bool at_infinity = false;
    Rational value;

    static BoundaryPoint infinity() { return {true, Rational(0)}; }
    static BoundaryPoint at(const Rational& a) { return {false, a}; }
    std::string str() const { return at_infinity ? "inf" : value.str(); }
};

struct LogDivisor {
    std::string model = "P1";
    std::vector<BoundaryPoint> points;
};

// Per-degree cohomology data with Hodge and weight flags (dims of F^p and
// W_m as p and m run upward from 0).
struct DegreeData {
    long dim = 0;
    std::vector<std::string> basis;
    std::vector<long> F;  // F[p] = dim F^p H^n (decreasing in p)
    std::vector<long> W;  // W[m] = dim W_m H^n (increasing in m)
};

struct CohomologyRecord {
    std::map<long, DegreeData> h;
    long window = 0;

    long dim(long n) const {
        auto it = h.find(n);
        return it == h.end() ? 0 : it->second.dim;
    }
};

// --------------------------------------------------------- affine models

class SpanSolver;  // cached coordinates over a window basis

// Windowed global-sections model of the de Rham complex of an affine
// scheme in the supported class: an independent basis of functions and of
// 1-forms within the pole-order window, with the differential as a matrix.
struct AffineModel {
    AffineCurveScheme scheme;
    FuncField field;
    long window = 0;
    std::vector<El> fun_basis;
    std::vector<El> form_basis;  // dx-coefficients
    QMat d;                      // form_basis-coordinates of d(fun_basis[j])
    std::shared_ptr<const SpanSolver> fun_solver, form_solver;

    std::optional<QVec> fun_coords(const El& v) const;
    std::optional<QVec> form_coords(const El& v) const;
    BoundedComplex complex() const;  // degrees 0. 1
    // residues of a dx-coefficient at the scheme's boundary points
    QVec residue_vector(const El& form_coeff) const;
    std::vector<BoundaryPoint> boundary() const;
};

AffineModel build_affine_model(const AffineCurveScheme& x, long window);

// H^0/H^1 of the affine scheme with window-stability certification (the
// dimensions must be unchanged at window+1 and window+2).
CohomologyRecord affine_cohomology(const AffineCurveScheme& x, long window = 16);

// --------------------------------------------------------- Cech on P^1

// Two-chart Cech-de Rham hypercohomology of P^1 with log poles along the
// divisor. Returns the full record: dims, representatives, F from the
// stupid truncation, W from residues (Deligne-normalized weights).
CohomologyRecord cech_p1(const LogDivisor& divisor, long window = 16, bool use_log = true);

// ------------------------------------------------------- Mayer-Vietoris

struct MayerVietorisReport {
    bool exact = false;
    std::vector<std::string> slots;  // one line per exactness slot
    CohomologyRecord hx, hu, hv, huv;
};

// X covered by two affine opens U, V. X may be "P1" (the canonical chart
// cover) or an affine scheme containing U and V as localizations.
MayerVietorisReport mayer_vietoris_p1(long window = 16);
MayerVietorisReport mayer_vietoris_affine(const AffineCurveScheme& x,
                                          const AffineCurveScheme& u,
                                          const AffineCurveScheme& v, long window = 16);

// --------------------------------------------------------------- Kunneth

struct KunnethReport {
    bool dims_match = false;
    bool products_independent = false;
    std::map<long, long> product_dims;  // H^n(X x Y)
    CohomologyRecord hx, hy;
};
KunnethReport kunneth(const AffineCurveScheme& x, const AffineCurveScheme& y, long window = 12);

// H(X x A^1) =~ H(X) with explicit primitives (homotopy invariance); the
// reduction certificate for each tested form is validated exactly.
bool homotopy_invariance_check(const AffineCurveScheme& x, long window = 12,
                               std::string* why = nullptr);

// ------------------------------------------------------ realization hooks

// Programmatic access to the two-chart Cech model of P1, for assembling
// realizations of motive complexes.
struct P1CechData;
struct P1Model {
    std::shared_ptr<const P1CechData> impl;
    BoundedComplex total() const;
    bool has_block(long p, long q) const;
    long block_offset(long p, long q) const;
    long block_dim(long p, long q) const;
    // the constant-1 cochain in degree 0 (unit pullback from the point)
    QVec unit() const;
    // residues of the chart 1-form parts of a cochain at the divisor
    bool residues_nonzero(long n, const QVec& cochain) const;
};
P1Model build_p1_model(const LogDivisor& divisor, long window = 16, bool use_log = true);

// Tensor model of X x A^1 with the projection pullback.
struct ProductLineModel {
    TotalComplex tot;
    AffineModel base;  // the X factor
    QMat pull0, pull1;  // C^q(X) -> Tot^q along the projection
};
ProductLineModel build_product_line_model(const AffineCurveScheme& x, long window = 12);

}  // namespace mdr
