#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "mdr/complexes.hpp"

namespace mdr {

// Finitely presented additive category: finite-dimensional rational Hom
// spaces with bilinear composition tables and chosen identities.
struct AdditiveCategory {
    std::vector<std::string> objects;
    std::vector<std::vector<size_t>> homdim;  // [src][dst]
    // comp[(a,b,c)]: matrix dim(a,c) x (dim(a,b)*dim(b,c)); the column
    // j_ab * dim(b,c) + j_bc holds the composite of basis elements.
    std::map<std::tuple<size_t, size_t, size_t>, QMat> comp;
    std::vector<QVec> identities;  // [a]: coefficients in hom(a,a)

    size_t dim(size_t a, size_t b) const { return homdim[a][b]; }
    QVec compose(size_t a, size_t b, size_t c, const QVec& f_ab, const QVec& g_bc) const;
    void validate() const;

    // Full subcategory of Q-vector spaces on the given ranks: hom(a,b) =
    // matrices, composition = matrix product.
    static AdditiveCategory matrix_category(const std::vector<long>& ranks);
};

// Object of the Karoubi envelope: a base object with an idempotent.
struct KaroubiObject {
    size_t base = 0;
    QVec idempotent;  // e in hom(base, base), e o e = e
};

// The Karoubi envelope on a chosen finite set of objects (A, e):
// hom((A,e),(B,f)) = f o Hom(A,B) o e as a subspace of hom(A,B).
class KaroubiEnvelope {
  public:
    KaroubiEnvelope(const AdditiveCategory& base, std::vector<KaroubiObject> objects);

    const AdditiveCategory& base() const { return *base_; }
    const std::vector<KaroubiObject>& objects() const { return objs_; }
    // Basis of the hom space, as vectors in the ambient hom(base_i, base_j).
    const Subspace& hom_basis(size_t i, size_t j) const { return hom_[i][j]; }
    QVec compose(size_t i, size_t j, size_t k, const QVec& f, const QVec& g) const;
    QVec identity(size_t i) const { return objs_[i].idempotent; }

    // Verifies e o e = e in the ambient algebra.
    static bool is_idempotent(const AdditiveCategory& c, size_t a, const QVec& e);

    // Exhaustive search for idempotent endomorphisms of object i whose
    // coefficients lie on the grid {-bound..bound}/1.
    std::vector<QVec> find_idempotents(size_t i, long bound) const;

    // Splits the idempotent u on object i: appends the object (base, u') and
    // returns (new object index, retraction r, section s) with s o r = u and
    // r o s = id of the new object. Both composites are verified.
    std::tuple<size_t, QVec, QVec> split_idempotent(size_t i, const QVec& u);

  private:
    const AdditiveCategory* base_;
    std::vector<KaroubiObject> objs_;
    std::vector<std::vector<Subspace>> hom_;
    void rebuild_hom();
};

}  // namespace mdr
