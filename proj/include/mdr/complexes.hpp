#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mdr/matrix.hpp"
#include "mdr/rational.hpp"

namespace mdr {

using QMat = Matrix<Rational>;
using QVec = std::vector<Rational>;
using Subspace = std::vector<QVec>;  // spanning vectors, not necessarily independent

// Bounded cochain complex of finite-dimensional rational vector spaces.
class BoundedComplex {
  public:
    BoundedComplex() = default;
    // dims[i] is the dimension in degree min_deg + i; diffs[i] maps degree
    // min_deg+i to min_deg+i+1 (one fewer entry than dims, or empty).
    BoundedComplex(long min_deg, std::vector<long> dims, std::vector<QMat> diffs);

    long min_deg() const { return min_deg_; }
    long max_deg() const { return min_deg_ + static_cast<long>(dims_.size()) - 1; }
    long dim(long n) const;
    QMat diff(long n) const;  // zero-sized appropriately outside range

    std::map<long, long> cohomology_dims() const;
    // Basis of ker(d^n) representing H^n together with the image subspace.
    Subspace cocycles(long n) const;
    Subspace coboundaries(long n) const;
    // Representatives of H^n: cocycles independent modulo coboundaries.
    Subspace cohomology_reps(long n) const;

    BoundedComplex shifted(long k) const;  // K[k]: degree n holds K^{n+k}

  private:
    long min_deg_ = 0;
    std::vector<long> dims_;
    std::vector<QMat> d_;
};

// A chain map between bounded complexes: matrices per degree.
struct ChainMap {
    const BoundedComplex* src = nullptr;
    const BoundedComplex* dst = nullptr;
    std::map<long, QMat> maps;  // degree -> matrix dim_dst(n) x dim_src(n)

    QMat at(long n) const;
    void check_commutes() const;  // d f = f d
};

// Decides f ~ g by solving f - g = dh + hd; returns the homotopy h
// (matrices h^n: src^n -> dst^{n-1}) when one exists.
std::optional<std::map<long, QMat>> chain_homotopy(const BoundedComplex& src,
                                                   const BoundedComplex& dst,
                                                   const std::map<long, QMat>& f,
                                                   const std::map<long, QMat>& g);

// Double complex with bounded support; dh: (p,q)->(p+1,q), dv: (p,q)->(p,q+1)
// commuting squares (the total differential applies the Koszul sign to dv).
struct DoubleComplex {
    std::map<std::pair<long, long>, long> dims;
    std::map<std::pair<long, long>, QMat> dh, dv;

    long dim(long p, long q) const;
    QMat horiz(long p, long q) const;
    QMat vert(long p, long q) const;
    void validate() const;
};

// Tot^n = sum over p+q=n, differential dh + (-1)^p dv.
// Returns the complex together with the offsets of each (p,q) block inside
// Tot^{p+q} so callers can address classes.
struct TotalComplex {
    BoundedComplex complex;
    std::map<std::pair<long, long>, long> offset;
};
TotalComplex total_complex(const DoubleComplex& dc);

// ------------------------------------------------------------ filtrations

// A decreasing filtration F of a complex: flags[n][p] spans F^p K^n.
// Indices run p = p_min .. p_max with F^{p_min} = everything and
// F^{p_max+1} = 0.
struct Filtration {
    long p_min = 0, p_max = 0;
    std::map<long, std::vector<Subspace>> flags;  // degree -> flags by p - p_min

    Subspace at(long n, long p, long ambient_dim) const;
    void check_respected(const BoundedComplex& k) const;  // d F^p subset F^p
};


struct SpectralPage {
    long r;
    // (p, q) -> dimension; entries absent are zero.
    std::map<std::pair<long, long>, long> dims;
    // The (Z, B) presentation of each entry as subquotients of K^{p+q}.
    std::map<std::pair<long, long>, std::pair<Subspace, Subspace>> presentation;
};

// Pages E_0..E_rmax of the spectral sequence of a filtered complex, by
// exact subquotient arithmetic, plus the E_infinity comparison with the
// graded pieces of H.
struct SpectralSequenceResult {
    std::vector<SpectralPage> pages;
    bool einf_matches_graded = false;
    std::map<long, long> h_dims;
};
SpectralSequenceResult spectral_sequence(const BoundedComplex& k, const Filtration& f,
                                         long r_max);

// Deligne decalage, in the decreasing convention:
// (Dec F)^p K^n = { x in F^{p+n} K^n : dx in F^{p+n+1} K^{n+1} }.
// With W_m = F^{-m} this is the usual (Dec W)_m K^n = { x in W_{m-n} : dx
// in W_{m-n-1} }. The E-page shift holds: E_1^{p,q}(Dec F) = E_2^{2p+q,-p}(F).
Filtration decalage(const BoundedComplex& k, const Filtration& f);

// ------------------------------------------------------------- subspaces

size_t subspace_rank(const Subspace& s);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b, size_t dim);
// { x : m x in target-span }
Subspace preimage(const QMat& m, const Subspace& target);
bool subspace_contains(const Subspace& big, const QVec& v);
bool subspace_leq(const Subspace& a, const Subspace& b);
Subspace apply_matrix(const QMat& m, const Subspace& s);

}  // namespace mdr
