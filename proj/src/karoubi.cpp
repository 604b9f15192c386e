#include "mdr/karoubi.hpp"

namespace mdr {

QVec AdditiveCategory::compose(size_t a, size_t b, size_t c, const QVec& f_ab,
                               const QVec& g_bc) const {
    auto it = comp.find({a, b, c});
    size_t dab = dim(a, b), dbc = dim(b, c), dac = dim(a, c);
    if (f_ab.size() != dab || g_bc.size() != dbc)
        fail(ErrKind::Precondition, "composition operand dimension mismatch");
    QVec out(dac, Rational(0));
    if (it == comp.end()) {
        if (dab * dbc != 0 && dac != 0)
            fail(ErrKind::Precondition, "missing composition table entry");
        return out;
    }
    const QMat& m = it->second;
    for (size_t j1 = 0; j1 < dab; ++j1) {
        if (f_ab[j1].is_zero()) continue;
        for (size_t j2 = 0; j2 < dbc; ++j2) {
            if (g_bc[j2].is_zero()) continue;
            Rational scale = f_ab[j1] * g_bc[j2];
            for (size_t i = 0; i < dac; ++i)
                out[i] += m(i, j1 * dbc + j2) * scale;
        }
    }
    return out;
}

void AdditiveCategory::validate() const {
    size_t n = objects.size();
    if (homdim.size() != n || identities.size() != n)
        fail(ErrKind::Precondition, "additive category tables incomplete");
    // identity laws on basis elements
    for (size_t a = 0; a < n; ++a) {
        if (identities[a].size() != dim(a, a))
            fail(ErrKind::Precondition, "identity vector dimension mismatch");
        for (size_t b = 0; b < n; ++b) {
            for (size_t j = 0; j < dim(a, b); ++j) {
                QVec e(dim(a, b), Rational(0));
                e[j] = Rational(1);
                QVec left = compose(a, a, b, identities[a], e);
                QVec right = compose(a, b, b, e, identities[b]);
                if (left != e || right != e)
                    fail(ErrKind::Precondition, "identity law fails in additive category");
            }
        }
    }
    // associativity on basis triples
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                for (size_t d = 0; d < n; ++d)
                    for (size_t i = 0; i < dim(a, b); ++i)
                        for (size_t j = 0; j < dim(b, c); ++j)
                            for (size_t k = 0; k < dim(c, d); ++k) {
                                QVec f(dim(a, b), Rational(0)), g(dim(b, c), Rational(0)),
                                    h(dim(c, d), Rational(0));
                                f[i] = Rational(1);
                                g[j] = Rational(1);
                                h[k] = Rational(1);
                                QVec lhs = compose(a, c, d, compose(a, b, c, f, g), h);
                                QVec rhs = compose(a, b, d, f, compose(b, c, d, g, h));
                                if (lhs != rhs)
                                    fail(ErrKind::Precondition,
                                         "associativity fails in additive category");
                            }
}

AdditiveCategory AdditiveCategory::matrix_category(const std::vector<long>& ranks) {
    AdditiveCategory c;
    size_t n = ranks.size();
    for (size_t i = 0; i < n; ++i) c.objects.push_back("V" + std::to_string(ranks[i]));
    c.homdim.assign(n, std::vector<size_t>(n, 0));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            c.homdim[a][b] = static_cast<size_t>(ranks[a] * ranks[b]);
    // hom(a,b) = matrices of size ranks[b] x ranks[a], basis e_{rc} indexed
    // row-major: j = r * ranks[a] + c.
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t cc = 0; cc < n; ++cc) {
                size_t dab = c.homdim[a][b], dbc = c.homdim[b][cc], dac = c.homdim[a][cc];
                if (dab * dbc == 0) continue;
                QMat m(dac, dab * dbc);
                long ra = ranks[a], rb = ranks[b], rc = ranks[cc];
                for (long i = 0; i < rb; ++i)
                    for (long j = 0; j < ra; ++j)
                        for (long k = 0; k < rc; ++k)
                            for (long l = 0; l < rb; ++l) {
                                // (g o f) with f = e_{i,j}: b x a, g = e_{k,l}: c x b
                                // product e_{k,l} e_{i,j} = delta_{l,i} e_{k,j}
                                if (l != i) continue;
                                size_t col = (static_cast<size_t>(i) * ra + j) * dbc +
                                             (static_cast<size_t>(k) * rb + l);
                                size_t row = static_cast<size_t>(k) * ra + static_cast<size_t>(j);
                                m(row, col) = Rational(1);
                            }
                c.comp[{a, b, cc}] = std::move(m);
            }
    for (size_t a = 0; a < n; ++a) {
        QVec id(c.homdim[a][a], Rational(0));
        for (long i = 0; i < ranks[a]; ++i)
            id[static_cast<size_t>(i) * ranks[a] + i] = Rational(1);
        c.identities.push_back(std::move(id));
    }
    return c;
}

bool KaroubiEnvelope::is_idempotent(const AdditiveCategory& c, size_t a, const QVec& e) {
    return c.compose(a, a, a, e, e) == e;
}

KaroubiEnvelope::KaroubiEnvelope(const AdditiveCategory& base, std::vector<KaroubiObject> objects)
    : base_(&base), objs_(std::move(objects)) {
    base.validate();
    for (const auto& o : objs_)
        if (!is_idempotent(base, o.base, o.idempotent))
            fail(ErrKind::Precondition, "object endomorphism is not idempotent");
    rebuild_hom();
}

void KaroubiEnvelope::rebuild_hom() {
    size_t n = objs_.size();
    hom_.assign(n, std::vector<Subspace>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            size_t a = objs_[i].base, b = objs_[j].base;
            // image of h -> f o h o e on the ambient hom(a,b)
            Subspace image;
            for (size_t k = 0; k < base_->dim(a, b); ++k) {
                QVec h(base_->dim(a, b), Rational(0));
                h[k] = Rational(1);
                QVec he = base_->compose(a, a, b, objs_[i].idempotent, h);
                QVec fhe = base_->compose(a, b, b, he, objs_[j].idempotent);
                image.push_back(std::move(fhe));
            }
            // prune to a basis
            Subspace basis;
            for (auto& v : image) {
                basis.push_back(v);
                if (subspace_rank(basis) < basis.size()) basis.pop_back();
            }
            hom_[i][j] = std::move(basis);
        }
    }
}

QVec KaroubiEnvelope::compose(size_t i, size_t j, size_t k, const QVec& f, const QVec& g) const {
    return base_->compose(objs_[i].base, objs_[j].base, objs_[k].base, f, g);
}

std::vector<QVec> KaroubiEnvelope::find_idempotents(size_t i, long bound) const {
    // enumerate coefficient patterns over the hom basis of End((A,e))
    const Subspace& basis = hom_[i][i];
    std::vector<QVec> found;
    size_t k = basis.size();
    if (k == 0 || k > 4) return found;  // grid search only for small spaces
    std::vector<long> idx(k, -bound);
    size_t a = objs_[i].base;
    while (true) {
        QVec cand(base_->dim(a, a), Rational(0));
        for (size_t t = 0; t < k; ++t)
            for (size_t d = 0; d < cand.size(); ++d) cand[d] += basis[t][d] * Rational(idx[t]);
        if (is_idempotent(*base_, a, cand)) found.push_back(cand);
        size_t pos = 0;
        while (pos < k && idx[pos] == bound) {
            idx[pos] = -bound;
            ++pos;
        }
        if (pos == k) break;
        ++idx[pos];
    }
    return found;
}

std::tuple<size_t, QVec, QVec> KaroubiEnvelope::split_idempotent(size_t i, const QVec& u) {
    size_t a = objs_[i].base;
    if (!is_idempotent(*base_, a, u))
        fail(ErrKind::Precondition, "cannot split a non-idempotent");
    // u must lie in End((A,e)): e o u o e = u
    QVec eue = base_->compose(a, a, a, objs_[i].idempotent,
                              base_->compose(a, a, a, u, objs_[i].idempotent));
    if (eue != u) fail(ErrKind::Precondition, "endomorphism does not respect the idempotent");
    objs_.push_back({a, u});
    rebuild_hom();
    size_t ni = objs_.size() - 1;
    // r: (A,e) -> (A,u) and s: (A,u) -> (A,e) are both represented by u.
    QVec r = u, s_vec = u;
    QVec sr = compose(i, ni, i, r, s_vec);
    require_invariant(sr == u, "splitting composite s o r differs from u");
    QVec rs = compose(ni, i, ni, s_vec, r);
    require_invariant(rs == identity(ni), "splitting composite r o s is not the identity");
    return {ni, r, s_vec};
}

}  // namespace mdr
