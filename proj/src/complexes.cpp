#include "mdr/complexes.hpp"

#include <algorithm>

namespace mdr {

// ------------------------------------------------------------- subspaces

size_t subspace_rank(const Subspace& s) { return QMat::span_rank(s); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    Subspace r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b, size_t dim) {
    return span_intersection(a, b, dim);
}

Subspace preimage(const QMat& m, const Subspace& target) {
    // x with m x = sum c_i t_i: kernel of [m | -T] projected to x.
    size_t rows = m.rows(), cols = m.cols();
    QMat aug(rows, cols + target.size());
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
        for (size_t t = 0; t < target.size(); ++t) aug(i, cols + t) = -target[t][i];
    }
    Subspace out;
    for (const auto& k : aug.kernel_basis()) {
        QVec x(k.begin(), k.begin() + static_cast<long>(cols));
        out.push_back(std::move(x));
    }
    return out;
}

bool subspace_contains(const Subspace& big, const QVec& v) {
    Subspace s = big;
    size_t r = subspace_rank(s);
    s.push_back(v);
    return subspace_rank(s) == r;
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
    for (const auto& v : a)
        if (!subspace_contains(b, v)) return false;
    return true;
}

Subspace apply_matrix(const QMat& m, const Subspace& s) {
    Subspace out;
    for (const auto& v : s) out.push_back(m.apply(v));
    return out;
}

// --------------------------------------------------------- BoundedComplex

BoundedComplex::BoundedComplex(long min_deg, std::vector<long> dims, std::vector<QMat> diffs)
    : min_deg_(min_deg), dims_(std::move(dims)), d_(std::move(diffs)) {
    if (!dims_.empty() && d_.size() + 1 != dims_.size() && !d_.empty())
        fail(ErrKind::Precondition, "complex needs one differential per adjacent pair");
    if (d_.empty() && dims_.size() > 1) d_.assign(dims_.size() - 1, QMat());
    for (size_t i = 0; i < d_.size(); ++i) {
        if (d_[i].rows() == 0 && d_[i].cols() == 0)
            d_[i] = QMat(static_cast<size_t>(dims_[i + 1]), static_cast<size_t>(dims_[i]));
        if (d_[i].rows() != static_cast<size_t>(dims_[i + 1]) ||
            d_[i].cols() != static_cast<size_t>(dims_[i]))
            fail(ErrKind::Precondition, "differential shape mismatch at slot " + std::to_string(i));
    }
    for (size_t i = 0; i + 1 < d_.size(); ++i) {
        QMat sq = d_[i + 1] * d_[i];
        for (size_t r = 0; r < sq.rows(); ++r)
            for (size_t c = 0; c < sq.cols(); ++c)
                require_invariant(sq(r, c).is_zero(), "d^2 != 0 in complex");
    }
}

long BoundedComplex::dim(long n) const {
    long i = n - min_deg_;
    if (i < 0 || i >= static_cast<long>(dims_.size())) return 0;
    return dims_[static_cast<size_t>(i)];
}

QMat BoundedComplex::diff(long n) const {
    long i = n - min_deg_;
    if (i < 0 || i >= static_cast<long>(d_.size()))
        return QMat(static_cast<size_t>(dim(n + 1)), static_cast<size_t>(dim(n)));
    return d_[static_cast<size_t>(i)];
}

Subspace BoundedComplex::cocycles(long n) const {
    if (dim(n) == 0) return {};
    return diff(n).kernel_basis();
}

Subspace BoundedComplex::coboundaries(long n) const {
    if (dim(n) == 0 || dim(n - 1) == 0) return {};
    return diff(n - 1).image_basis();
}

Subspace BoundedComplex::cohomology_reps(long n) const {
    Subspace z = cocycles(n), b = coboundaries(n);
    Subspace reps;
    Subspace acc = b;
    size_t r = subspace_rank(acc);
    for (const auto& v : z) {
        acc.push_back(v);
        size_t r2 = subspace_rank(acc);
        if (r2 > r) {
            reps.push_back(v);
            r = r2;
        } else {
            acc.pop_back();
        }
    }
    return reps;
}

std::map<long, long> BoundedComplex::cohomology_dims() const {
    std::map<long, long> out;
    for (long n = min_deg_; n <= max_deg(); ++n) {
        if (dim(n) == 0) continue;
        long z = static_cast<long>(subspace_rank(cocycles(n)));
        long b = static_cast<long>(subspace_rank(coboundaries(n)));
        out[n] = z - b;
    }
    return out;
}

BoundedComplex BoundedComplex::shifted(long k) const {
    BoundedComplex r = *this;
    r.min_deg_ -= k;
    return r;
}

QMat ChainMap::at(long n) const {
    auto it = maps.find(n);
    if (it != maps.end()) return it->second;
    return QMat(static_cast<size_t>(dst->dim(n)), static_cast<size_t>(src->dim(n)));
}

void ChainMap::check_commutes() const {
    for (long n = src->min_deg() - 1; n <= src->max_deg() + 1; ++n) {
        QMat lhs = dst->diff(n) * at(n);
        QMat rhs = at(n + 1) * src->diff(n);
        require_invariant(lhs == rhs, "chain map does not commute with d");
    }
}

std::optional<std::map<long, QMat>> chain_homotopy(const BoundedComplex& src,
                                                   const BoundedComplex& dst,
                                                   const std::map<long, QMat>& f,
                                                   const std::map<long, QMat>& g) {
    // Unknowns: h^n: src^n -> dst^{n-1}. Equations per degree n:
    //   (f-g)^n = d_dst^{n-1} h^n + h^{n+1} d_src^n.
    auto get = [&](const std::map<long, QMat>& m, long n) -> QMat {
        auto it = m.find(n);
        if (it != m.end()) return it->second;
        return QMat(static_cast<size_t>(dst.dim(n)), static_cast<size_t>(src.dim(n)));
    };
    long lo = std::min(src.min_deg(), dst.min_deg());
    long hi = std::max(src.max_deg(), dst.max_deg()) + 1;
    // Index the unknown entries.
    std::map<long, std::pair<size_t, std::pair<size_t, size_t>>> layout;  // n -> (offset,(rows,cols))
    size_t total = 0;
    for (long n = lo; n <= hi; ++n) {
        size_t rows = static_cast<size_t>(dst.dim(n - 1)), cols = static_cast<size_t>(src.dim(n));
        layout[n] = {total, {rows, cols}};
        total += rows * cols;
    }
    std::vector<QVec> eqs;
    QVec rhs_all;
    for (long n = lo; n <= hi; ++n) {
        QMat target = get(f, n) - get(g, n);
        size_t R = target.rows(), C = target.cols();
        QMat dd = dst.diff(n - 1);             // dst^{n-1} -> dst^n
        QMat ds = src.diff(n);                 // src^n -> src^{n+1}
        auto [off_n, sz_n] = layout[n];
        auto [off_n1, sz_n1] = layout.count(n + 1) ? layout[n + 1]
                                                   : std::make_pair(total, std::make_pair<size_t, size_t>(0, 0));
        for (size_t i = 0; i < R; ++i) {
            for (size_t j = 0; j < C; ++j) {
                QVec row(total, Rational(0));
                // (d h^n)_{ij} = sum_k dd(i,k) h^n(k,j)
                for (size_t k = 0; k < sz_n.first; ++k)
                    if (!dd(i, k).is_zero()) row[off_n + k * sz_n.second + j] += dd(i, k);
                // (h^{n+1} ds)_{ij} = sum_k h^{n+1}(i,k) ds(k,j)
                for (size_t k = 0; k < sz_n1.second; ++k)
                    if (!ds(k, j).is_zero()) row[off_n1 + i * sz_n1.second + k] += ds(k, j);
                eqs.push_back(std::move(row));
                rhs_all.push_back(target(i, j));
            }
        }
    }
    if (eqs.empty()) return std::map<long, QMat>{};
    QMat sys = QMat::from_rows(eqs);
    auto sol = sys.solve(rhs_all);
    if (!sol) return std::nullopt;
    std::map<long, QMat> h;
    for (auto& [n, lay] : layout) {
        auto [off, sz] = lay;
        if (sz.first * sz.second == 0) continue;
        QMat m(sz.first, sz.second);
        for (size_t i = 0; i < sz.first; ++i)
            for (size_t j = 0; j < sz.second; ++j) m(i, j) = (*sol)[off + i * sz.second + j];
        h[n] = std::move(m);
    }
    return h;
}

// ---------------------------------------------------------- DoubleComplex

long DoubleComplex::dim(long p, long q) const {
    auto it = dims.find({p, q});
    return it == dims.end() ? 0 : it->second;
}

QMat DoubleComplex::horiz(long p, long q) const {
    auto it = dh.find({p, q});
    if (it != dh.end()) return it->second;
    return QMat(static_cast<size_t>(dim(p + 1, q)), static_cast<size_t>(dim(p, q)));
}

QMat DoubleComplex::vert(long p, long q) const {
    auto it = dv.find({p, q});
    if (it != dv.end()) return it->second;
    return QMat(static_cast<size_t>(dim(p, q + 1)), static_cast<size_t>(dim(p, q)));
}

void DoubleComplex::validate() const {
    for (const auto& [pq, n] : dims) {
        auto [p, q] = pq;
        QMat hh = horiz(p + 1, q) * horiz(p, q);
        QMat vv = vert(p, q + 1) * vert(p, q);
        QMat hv = horiz(p, q + 1) * vert(p, q);
        QMat vh = vert(p + 1, q) * horiz(p, q);
        auto zero = [](const QMat& m) {
            for (size_t i = 0; i < m.rows(); ++i)
                for (size_t j = 0; j < m.cols(); ++j)
                    if (!m(i, j).is_zero()) return false;
            return true;
        };
        require_invariant(zero(hh), "dh^2 != 0");
        require_invariant(zero(vv), "dv^2 != 0");
        require_invariant(hv == vh, "double complex squares do not commute");
    }
}

TotalComplex total_complex(const DoubleComplex& dc) {
    dc.validate();
    if (dc.dims.empty()) return {BoundedComplex(0, {0}, {}), {}};
    long nmin = 1 << 30, nmax = -(1 << 30);
    for (const auto& [pq, d] : dc.dims) {
        nmin = std::min(nmin, pq.first + pq.second);
        nmax = std::max(nmax, pq.first + pq.second);
    }
    std::map<std::pair<long, long>, long> offset;
    std::vector<long> dims;
    for (long n = nmin; n <= nmax; ++n) {
        long total = 0;
        for (const auto& [pq, d] : dc.dims) {
            if (pq.first + pq.second != n || d == 0) continue;
            offset[pq] = total;
            total += d;
        }
        dims.push_back(total);
    }
    std::vector<QMat> diffs;
    for (long n = nmin; n < nmax; ++n) {
        QMat m(static_cast<size_t>(dims[static_cast<size_t>(n + 1 - nmin)]),
               static_cast<size_t>(dims[static_cast<size_t>(n - nmin)]));
        for (const auto& [pq, d] : dc.dims) {
            auto [p, q] = pq;
            if (p + q != n || d == 0) continue;
            long src_off = offset[pq];
            // horizontal part
            if (dc.dim(p + 1, q) > 0) {
                QMat h = dc.horiz(p, q);
                long dst_off = offset.at({p + 1, q});
                for (size_t i = 0; i < h.rows(); ++i)
                    for (size_t j = 0; j < h.cols(); ++j)
                        m(static_cast<size_t>(dst_off) + i, static_cast<size_t>(src_off) + j) =
                            h(i, j);
            }
            // vertical part with Koszul sign (-1)^p
            if (dc.dim(p, q + 1) > 0) {
                QMat v = dc.vert(p, q);
                long dst_off = offset.at({p, q + 1});
                Rational sign = (p % 2 == 0) ? Rational(1) : Rational(-1);
                for (size_t i = 0; i < v.rows(); ++i)
                    for (size_t j = 0; j < v.cols(); ++j)
                        m(static_cast<size_t>(dst_off) + i, static_cast<size_t>(src_off) + j) =
                            v(i, j) * sign;
            }
        }
        diffs.push_back(std::move(m));
    }
    return {BoundedComplex(nmin, std::move(dims), std::move(diffs)), std::move(offset)};
}

// ------------------------------------------------------------ filtrations

Subspace Filtration::at(long n, long p, long ambient_dim) const {
    if (p <= p_min) {
        // everything
        Subspace full;
        for (long i = 0; i < ambient_dim; ++i) {
            QVec v(static_cast<size_t>(ambient_dim), Rational(0));
            v[static_cast<size_t>(i)] = Rational(1);
            full.push_back(std::move(v));
        }
        return full;
    }
    if (p > p_max) return {};
    auto it = flags.find(n);
    if (it == flags.end()) return {};
    const auto& fl = it->second;
    size_t idx = static_cast<size_t>(p - p_min);
    if (idx >= fl.size()) return {};
    return fl[idx];
}

void Filtration::check_respected(const BoundedComplex& k) const {
    for (long n = k.min_deg(); n <= k.max_deg(); ++n) {
        for (long p = p_min; p <= p_max; ++p) {
            Subspace fp = at(n, p, k.dim(n));
            Subspace img = apply_matrix(k.diff(n), fp);
            Subspace fp_next = at(n + 1, p, k.dim(n + 1));
            if (!subspace_leq(img, fp_next))
                fail(ErrKind::Precondition, "filtration not respected by d");
        }
    }
}


SpectralSequenceResult spectral_sequence(const BoundedComplex& k, const Filtration& f,
                                         long r_max) {
    f.check_respected(k);
    SpectralSequenceResult out;
    out.h_dims = k.cohomology_dims();

    auto F = [&](long n, long p) { return f.at(n, p, k.dim(n)); };
    // Z_r^{p,q} = F^p K^{p+q}  intersect  d^{-1} F^{p+r} K^{p+q+1}
    auto Z = [&](long r, long p, long q) -> Subspace {
        long n = p + q;
        if (k.dim(n) == 0) return {};
        Subspace zp = F(n, p);
        Subspace pre = preimage(k.diff(n), F(n + 1, p + r));
        return subspace_intersect(zp, pre, static_cast<size_t>(k.dim(n)));
    };
    long span = f.p_max - f.p_min + 2;

    for (long r = 0; r <= r_max; ++r) {
        SpectralPage page;
        page.r = r;
        for (long n = k.min_deg(); n <= k.max_deg(); ++n) {
            if (k.dim(n) == 0) continue;
            for (long p = f.p_min - 1; p <= f.p_max + 1; ++p) {
                long q = n - p;
                Subspace z = Z(r, p, q);
                Subspace b = subspace_sum(Z(r - 1, p + 1, q - 1),
                                          apply_matrix(k.diff(n - 1), Z(r - 1, p - r + 1, q + r - 2)));
                // dimension of z / (z cap b)
                size_t dz = subspace_rank(z);
                size_t dzb = subspace_rank(
                    subspace_intersect(z, b, static_cast<size_t>(k.dim(n))));
                long dim = static_cast<long>(dz) - static_cast<long>(dzb);
                if (dim > 0) {
                    page.dims[{p, q}] = dim;
                    page.presentation[{p, q}] = {z, b};
                }
            }
        }
        out.pages.push_back(std::move(page));
    }

    // E_infinity: stabilized page (r beyond filtration span + degree range).
    long r_inf = span + (k.max_deg() - k.min_deg()) + 2;
    std::map<std::pair<long, long>, long> einf;
    {
        for (long n = k.min_deg(); n <= k.max_deg(); ++n) {
            if (k.dim(n) == 0) continue;
            for (long p = f.p_min - 1; p <= f.p_max + 1; ++p) {
                long q = n - p;
                Subspace z = Z(r_inf, p, q);
                Subspace b = subspace_sum(
                    Z(r_inf - 1, p + 1, q - 1),
                    apply_matrix(k.diff(n - 1), Z(r_inf - 1, p - r_inf + 1, q + r_inf - 2)));
                size_t dz = subspace_rank(z);
                size_t dzb =
                    subspace_rank(subspace_intersect(z, b, static_cast<size_t>(k.dim(n))));
                if (dz > dzb) einf[{p, q}] = static_cast<long>(dz - dzb);
            }
        }
    }
    // Compare with graded pieces of H: dim Gr_F^p H^n via filtered cocycles.
    bool ok = true;
    for (long n = k.min_deg(); n <= k.max_deg(); ++n) {
        long hn = 0;
        auto it = out.h_dims.find(n);
        if (it != out.h_dims.end()) hn = it->second;
        long total = 0;
        for (long p = f.p_min - 1; p <= f.p_max + 1; ++p) {
            auto e = einf.find({p, n - p});
            if (e != einf.end()) total += e->second;
        }
        if (total != hn) ok = false;
    }
    out.einf_matches_graded = ok;
    return out;
}

Filtration decalage(const BoundedComplex& k, const Filtration& f) {
    Filtration dec;
    // Chosen so that Dec F is genuinely full at p_min and zero past p_max.
    dec.p_min = f.p_min - k.max_deg() - 1;
    dec.p_max = f.p_max - k.min_deg();
    for (long n = k.min_deg(); n <= k.max_deg(); ++n) {
        if (k.dim(n) == 0) {
            dec.flags[n] = {};
            continue;
        }
        std::vector<Subspace> fl;
        for (long p = dec.p_min; p <= dec.p_max; ++p) {
            Subspace src = f.at(n, p + n, k.dim(n));
            Subspace pre = preimage(k.diff(n), f.at(n + 1, p + n + 1, k.dim(n + 1)));
            fl.push_back(subspace_intersect(src, pre, static_cast<size_t>(k.dim(n))));
        }
        dec.flags[n] = std::move(fl);
    }
    return dec;
}

}  // namespace mdr
