#pragma once

#include "mdr/compactify.hpp"
#include "mdr/derham.hpp"
#include "mdr/trace.hpp"

namespace mdr {

// One summand of a motive term: a supported affine scheme, its product with
// the affine line, or the projective line (realized through the two-chart
// log model).
struct MotiveObject {
    enum Kind { Affine, AffineTimesLine, ProjectiveLine } kind = Affine;
    AffineCurveScheme scheme;  // the affine (factor) scheme; unused for P1
    std::string label() const;
};

// A differential entry between summands. Correspondences act on affine
// terms through transfers; maps involving the other kinds are restricted to
// the genuine morphisms the realization needs.
struct MotiveEntry {
    enum Kind { Zero, Corr, ToPoint, LineProjection } kind = Zero;
    FiniteCorrespondence corr;  // for Kind::Corr
    long scale = 1;
};

struct MotiveComplex {
    std::map<long, std::vector<MotiveObject>> terms;
    // diff[d][j][i]: entry from terms[d][i] to terms[d+1][j]
    std::map<long, std::vector<std::vector<MotiveEntry>>> diff;
    long twist = 0;
    long shift = 0;  // [s]: degree n holds the old degree n + s

    static MotiveComplex single(MotiveObject obj);
    // the reduced motive of P^1 shifted by -2 (the Tate object Z(1))
    static MotiveComplex tate_object();
    // [X x A^1 -> X] (the homotopy-descent cone)
    static MotiveComplex line_cone(const AffineCurveScheme& x);
    // [U cap V -> U + V] for an affine cover (quasi-isomorphic to X)
    static MotiveComplex mayer_vietoris_cone(const AffineCurveScheme& intersection,
                                             const AffineCurveScheme& u,
                                             const AffineCurveScheme& v,
                                             const FiniteCorrespondence& ju,
                                             const FiniteCorrespondence& jv);

    void check_d_squared() const;  // entries compose to zero
};

struct RealizationResult {
    CohomologyRecord record;  // per total degree, with F and W flags
    long f_shift = 0;         // Tate twisting shifts the flag indexing
    long w_shift = 0;
    std::vector<std::string> provenance;

    long dim(long n) const { return record.dim(n); }
    // dim F^p H^n and dim W_m H^n with the twist shifts applied
    long fdim(long n, long p) const;
    long wdim(long n, long m) const;
    // the (pure) weight of H^n when it is concentrated: smallest m with
    // W_m = everything
    long weight_of(long n) const;
    long hodge_degree_of(long n) const;  // largest p with F^p = everything
};

RealizationResult realize(const MotiveComplex& m, long window = 12);

RealizationResult tate_twist(const RealizationResult& r, long n);

// Kunneth comparison of two single-term affine motives: dimensions convolve
// and the Hodge/weight steps of product generators are the sums of the
// factors' steps.
struct TensorReport {
    bool dims_match = false;
    bool products_independent = false;
    bool hodge_adds = false;
    bool weights_add = false;
    std::map<long, long> product_dims;
    std::map<long, std::vector<std::pair<long, long>>> generator_steps;  // n -> (p, w) list
};
TensorReport check_tensor(const AffineCurveScheme& x, const AffineCurveScheme& y,
                          long window = 10);

// The realization kills the homotopy-descent cone [X x A^1 -> X].
bool check_homotopy_descent(const AffineCurveScheme& x, long window = 10,
                            std::string* why = nullptr);

// The matrix of the transfer of a correspondence on H^1 of the windowed
// affine models (realization of a morphism at the cohomology level).
QMat transfer_h1_matrix(const FiniteCorrespondence& gamma, long window = 10);

}  // namespace mdr
