#include "mdr/site.hpp"

#include <algorithm>

namespace mdr {

FiniteSite FiniteSite::make(std::vector<std::string> points,
                            const std::vector<std::pair<size_t, size_t>>& relations) {
    FiniteSite s;
    s.points = std::move(points);
    size_t n = s.points.size();
    if (n > 20) fail(ErrKind::UnsupportedInput, "site too large");
    s.leq.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) s.leq[i][i] = true;
    for (auto [a, b] : relations) {
        if (a >= n || b >= n) fail(ErrKind::Precondition, "relation out of range");
        s.leq[a][b] = true;
    }
    // transitive closure
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (s.leq[i][k] && s.leq[k][j]) s.leq[i][j] = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && s.leq[i][j] && s.leq[j][i])
                fail(ErrKind::Precondition, "not a poset: antisymmetry fails");
    for (uint32_t m = 0; m < (1u << n); ++m)
        if (s.is_open(m)) s.opens.push_back(m);
    return s;
}

bool FiniteSite::is_open(uint32_t mask) const {
    for (size_t x = 0; x < n(); ++x) {
        if (!(mask & (1u << x))) continue;
        for (size_t y = 0; y < n(); ++y)
            if (leq[x][y] && !(mask & (1u << y))) return false;
    }
    return true;
}

uint32_t FiniteSite::min_open(size_t point) const {
    uint32_t m = 0;
    for (size_t y = 0; y < n(); ++y)
        if (leq[point][y]) m |= (1u << y);
    return m;
}

std::vector<size_t> FiniteSite::members(uint32_t mask) const {
    std::vector<size_t> out;
    for (size_t x = 0; x < n(); ++x)
        if (mask & (1u << x)) out.push_back(x);
    return out;
}

std::vector<uint32_t> FiniteSite::components(uint32_t mask) const {
    auto pts = members(mask);
    std::vector<int> comp(n(), -1);
    int nc = 0;
    for (size_t seed : pts) {
        if (comp[seed] != -1) continue;
        // BFS over comparability within the open
        std::vector<size_t> stack{seed};
        comp[seed] = nc;
        while (!stack.empty()) {
            size_t x = stack.back();
            stack.pop_back();
            for (size_t y : pts) {
                if (comp[y] != -1) continue;
                if (leq[x][y] || leq[y][x]) {
                    comp[y] = nc;
                    stack.push_back(y);
                }
            }
        }
        ++nc;
    }
    std::vector<uint32_t> out(static_cast<size_t>(nc), 0);
    for (size_t x : pts) out[static_cast<size_t>(comp[x])] |= (1u << x);
    return out;
}

void FiniteSite::validate() const {
    for (uint32_t u : opens)
        if (!is_open(u)) fail(ErrKind::Precondition, "non-open listed");
}

long Presheaf::dim(uint32_t u) const {
    auto it = dims.find(u);
    return it == dims.end() ? 0 : it->second;
}

QMat Presheaf::restriction(uint32_t u, uint32_t v) const {
    if ((u | v) != u) fail(ErrKind::Precondition, "restriction target not contained in source");
    if (u == v) return QMat::identity(static_cast<size_t>(dim(u)));
    auto it = res.find({u, v});
    if (it != res.end()) return it->second;
    fail(ErrKind::Precondition, "missing restriction matrix");
}

void Presheaf::validate() const {
    for (uint32_t u : site->opens)
        for (uint32_t v : site->opens) {
            if ((u | v) != u) continue;
            for (uint32_t w : site->opens) {
                if ((v | w) != v) continue;
                QMat direct = restriction(u, w);
                QMat composed = restriction(v, w) * restriction(u, v);
                require_invariant(direct == composed, "restriction functoriality fails");
            }
        }
}

bool Presheaf::is_sheaf(std::string* why) const {
    for (uint32_t u : site->opens) {
        auto pts = site->members(u);
        if (pts.empty()) {
            if (dim(u) != 0) {
                if (why) *why = "sections over the empty open are nonzero";
                return false;
            }
            continue;
        }
        // F(U) -> prod_x F(U_x); image must be the compatible families.
        long total = 0;
        std::vector<long> offset;
        for (size_t x : pts) {
            offset.push_back(total);
            total += dim(site->min_open(x));
        }
        QMat germ(static_cast<size_t>(total), static_cast<size_t>(dim(u)));
        for (size_t xi = 0; xi < pts.size(); ++xi) {
            QMat r = restriction(u, site->min_open(pts[xi]));
            for (size_t i = 0; i < r.rows(); ++i)
                for (size_t j = 0; j < r.cols(); ++j)
                    germ(static_cast<size_t>(offset[xi]) + i, j) = r(i, j);
        }
        if (germ.kernel_basis().size() != 0) {
            if (why) *why = "sections not separated over open " + std::to_string(u);
            return false;
        }
        // compatibility subspace: s_y = res(s_x) whenever x <= y
        std::vector<QVec> rows;
        for (size_t xi = 0; xi < pts.size(); ++xi)
            for (size_t yi = 0; yi < pts.size(); ++yi) {
                size_t x = pts[xi], y = pts[yi];
                if (x == y || !site->leq[x][y]) continue;
                QMat r = restriction(site->min_open(x), site->min_open(y));
                // res(s_x) - s_y = 0
                for (size_t i = 0; i < r.rows(); ++i) {
                    QVec row(static_cast<size_t>(total), Rational(0));
                    for (size_t j = 0; j < r.cols(); ++j)
                        row[static_cast<size_t>(offset[xi]) + j] = r(i, j);
                    row[static_cast<size_t>(offset[yi]) + i] -= Rational(1);
                    rows.push_back(std::move(row));
                }
            }
        size_t compat_dim;
        if (rows.empty())
            compat_dim = static_cast<size_t>(total);
        else
            compat_dim = QMat::from_rows(rows).kernel_basis().size();
        if (compat_dim != static_cast<size_t>(dim(u))) {
            if (why)
                *why = "gluing fails over open " + std::to_string(u) + ": compatible dim " +
                       std::to_string(compat_dim) + " vs F(U) dim " + std::to_string(dim(u));
            return false;
        }
    }
    return true;
}

Presheaf Presheaf::constant_sheaf(const FiniteSite& s, long rank) {
    Presheaf f;
    f.site = &s;
    for (uint32_t u : s.opens) f.dims[u] = rank * static_cast<long>(s.components(u).size());
    for (uint32_t u : s.opens) {
        auto cu = s.components(u);
        for (uint32_t v : s.opens) {
            if ((u | v) != u || u == v) continue;
            auto cv = s.components(v);
            QMat m(static_cast<size_t>(f.dims[v]), static_cast<size_t>(f.dims[u]));
            for (size_t j = 0; j < cv.size(); ++j) {
                // component j of v lies inside a unique component of u
                size_t parent = cu.size();
                for (size_t i = 0; i < cu.size(); ++i)
                    if ((cu[i] | cv[j]) == cu[i]) parent = i;
                require_invariant(parent < cu.size(), "component not contained in parent open");
                for (long r = 0; r < rank; ++r)
                    m(j * static_cast<size_t>(rank) + static_cast<size_t>(r),
                      parent * static_cast<size_t>(rank) + static_cast<size_t>(r)) = Rational(1);
            }
            f.res[{u, v}] = std::move(m);
        }
    }
    return f;
}

Presheaf Presheaf::constant_presheaf(const FiniteSite& s, long rank) {
    Presheaf f;
    f.site = &s;
    for (uint32_t u : s.opens) f.dims[u] = u == 0 ? 0 : rank;
    for (uint32_t u : s.opens)
        for (uint32_t v : s.opens) {
            if ((u | v) != u || u == v) continue;
            if (v == 0) {
                f.res[{u, v}] = QMat(0, static_cast<size_t>(f.dims[u]));
            } else {
                f.res[{u, v}] = QMat::identity(static_cast<size_t>(rank));
            }
        }
    return f;
}

QMat PresheafMap::get(const Presheaf& src, const Presheaf& dst, uint32_t u) const {
    auto it = at.find(u);
    if (it != at.end()) return it->second;
    return QMat(static_cast<size_t>(dst.dim(u)), static_cast<size_t>(src.dim(u)));
}

void PresheafMap::check_natural(const Presheaf& src, const Presheaf& dst) const {
    for (uint32_t u : src.site->opens)
        for (uint32_t v : src.site->opens) {
            if ((u | v) != u || u == v) continue;
            QMat lhs = dst.restriction(u, v) * get(src, dst, u);
            QMat rhs = get(src, dst, v) * src.restriction(u, v);
            require_invariant(lhs == rhs, "presheaf map not natural");
        }
}

PresheafMap presheaf_map_compose(const Presheaf& a, const Presheaf& b, const Presheaf& c,
                                 const PresheafMap& f, const PresheafMap& g) {
    PresheafMap out;
    for (uint32_t u : a.site->opens) out.at[u] = g.get(b, c, u) * f.get(a, b, u);
    return out;
}

bool presheaf_map_equal(const Presheaf& src, const Presheaf& dst, const PresheafMap& f,
                        const PresheafMap& g) {
    for (uint32_t u : src.site->opens)
        if (!(f.get(src, dst, u) == g.get(src, dst, u))) return false;
    return true;
}

PresheafMap presheaf_identity(const Presheaf& f) {
    PresheafMap m;
    for (uint32_t u : f.site->opens) m.at[u] = QMat::identity(static_cast<size_t>(f.dim(u)));
    return m;
}

std::map<long, long> order_complex_cohomology(const FiniteSite& s) {
    // flags x0 < x1 < ... < xk of the poset
    std::vector<std::vector<std::vector<size_t>>> flags;  // by dimension
    flags.push_back({});
    for (size_t x = 0; x < s.n(); ++x) flags[0].push_back({x});
    while (true) {
        const auto& prev = flags.back();
        std::vector<std::vector<size_t>> next;
        for (const auto& f : prev)
            for (size_t y = 0; y < s.n(); ++y)
                if (y != f.back() && s.leq[f.back()][y]) {
                    auto g = f;
                    g.push_back(y);
                    next.push_back(std::move(g));
                }
        if (next.empty()) break;
        flags.push_back(std::move(next));
    }
    // coboundary matrices
    std::vector<long> dims;
    for (const auto& level : flags) dims.push_back(static_cast<long>(level.size()));
    std::vector<QMat> diffs;
    for (size_t k = 0; k + 1 < flags.size(); ++k) {
        std::map<std::vector<size_t>, size_t> index;
        for (size_t i = 0; i < flags[k].size(); ++i) index[flags[k][i]] = i;
        QMat d(flags[k + 1].size(), flags[k].size());
        for (size_t j = 0; j < flags[k + 1].size(); ++j) {
            const auto& f = flags[k + 1][j];
            for (size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<size_t> sub;
                for (size_t t = 0; t < f.size(); ++t)
                    if (t != drop) sub.push_back(f[t]);
                auto it = index.find(sub);
                require_invariant(it != index.end(), "face of a flag is not a flag");
                Rational sign = (drop % 2 == 0) ? Rational(1) : Rational(-1);
                d(j, it->second) += sign;
            }
        }
        diffs.push_back(std::move(d));
    }
    BoundedComplex cx(0, dims, diffs);
    return cx.cohomology_dims();
}

}  // namespace mdr
