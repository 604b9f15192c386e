#include "mdr/godement.hpp"

namespace mdr {

MonadPresentation identity_monad() {
    MonadPresentation m;
    m.obj = [](const Presheaf& f) { return f; };
    m.map = [](const Presheaf&, const Presheaf&, const PresheafMap& phi) { return phi; };
    m.unit = [](const Presheaf& f) { return presheaf_identity(f); };
    m.mult = [](const Presheaf& f) { return presheaf_identity(f); };
    return m;
}

namespace {

// Offsets of the per-point blocks inside GF(U) = prod_{x in U} F(U_x).
std::vector<long> block_offsets(const FiniteSite& s, const Presheaf& f, uint32_t u) {
    std::vector<long> off;
    long total = 0;
    for (size_t x : s.members(u)) {
        off.push_back(total);
        total += f.dim(s.min_open(x));
    }
    off.push_back(total);
    return off;
}

}  // namespace

MonadPresentation godement_monad(const FiniteSite& site) {
    const FiniteSite* s = &site;
    MonadPresentation m;
    m.obj = [s](const Presheaf& f) {
        Presheaf g;
        g.site = s;
        for (uint32_t u : s->opens) {
            long total = 0;
            for (size_t x : s->members(u)) total += f.dim(s->min_open(x));
            g.dims[u] = total;
        }
        for (uint32_t u : s->opens) {
            auto pu = s->members(u);
            auto offu = block_offsets(*s, f, u);
            for (uint32_t v : s->opens) {
                if ((u | v) != u || u == v) continue;
                auto pv = s->members(v);
                auto offv = block_offsets(*s, f, v);
                QMat r(static_cast<size_t>(g.dims[v]), static_cast<size_t>(g.dims[u]));
                for (size_t j = 0; j < pv.size(); ++j) {
                    // locate the same point inside u
                    size_t i = 0;
                    while (pu[i] != pv[j]) ++i;
                    long d = f.dim(s->min_open(pv[j]));
                    for (long k = 0; k < d; ++k)
                        r(static_cast<size_t>(offv[j] + k), static_cast<size_t>(offu[i] + k)) =
                            Rational(1);
                }
                g.res[{u, v}] = std::move(r);
            }
        }
        return g;
    };
    m.map = [s](const Presheaf& src, const Presheaf& dst, const PresheafMap& phi) {
        PresheafMap out;
        for (uint32_t u : s->opens) {
            auto pts = s->members(u);
            auto offs = block_offsets(*s, src, u);
            auto offd = block_offsets(*s, dst, u);
            QMat mtx(static_cast<size_t>(offd.back()), static_cast<size_t>(offs.back()));
            for (size_t i = 0; i < pts.size(); ++i) {
                QMat p = phi.get(src, dst, s->min_open(pts[i]));
                for (size_t r = 0; r < p.rows(); ++r)
                    for (size_t c = 0; c < p.cols(); ++c)
                        mtx(static_cast<size_t>(offd[i]) + r, static_cast<size_t>(offs[i]) + c) =
                            p(r, c);
            }
            out.at[u] = std::move(mtx);
        }
        return out;
    };
    m.unit = [s](const Presheaf& f) {
        PresheafMap out;
        for (uint32_t u : s->opens) {
            auto pts = s->members(u);
            auto off = block_offsets(*s, f, u);
            QMat mtx(static_cast<size_t>(off.back()), static_cast<size_t>(f.dim(u)));
            for (size_t i = 0; i < pts.size(); ++i) {
                QMat r = f.restriction(u, s->min_open(pts[i]));
                for (size_t a = 0; a < r.rows(); ++a)
                    for (size_t b = 0; b < r.cols(); ++b)
                        mtx(static_cast<size_t>(off[i]) + a, b) = r(a, b);
            }
            out.at[u] = std::move(mtx);
        }
        return out;
    };
    m.mult = [s, m](const Presheaf& f) {
        // mu: GGF(U) = prod_{x in U} GF(U_x) -> GF(U): take, in the block of
        // x, the inner component at the point x itself.
        PresheafMap out;
        Presheaf gf = m.obj(f);
        for (uint32_t u : s->opens) {
            auto pts = s->members(u);
            auto off_outer = block_offsets(*s, gf, u);  // blocks of GGF(U)
            auto off_target = block_offsets(*s, f, u);  // blocks of GF(U)
            QMat mtx(static_cast<size_t>(off_target.back()),
                     static_cast<size_t>(off_outer.back()));
            for (size_t i = 0; i < pts.size(); ++i) {
                size_t x = pts[i];
                uint32_t ux = s->min_open(x);
                // inside GF(U_x) = prod_{z in U_x} F(U_z), locate z = x
                auto inner_pts = s->members(ux);
                auto off_inner = block_offsets(*s, f, ux);
                size_t zi = 0;
                while (inner_pts[zi] != x) ++zi;
                long d = f.dim(ux);
                (void)d;
                long dx = f.dim(s->min_open(x));
                for (long k = 0; k < dx; ++k)
                    mtx(static_cast<size_t>(off_target[i] + k),
                        static_cast<size_t>(off_outer[i] + off_inner[zi] + k)) = Rational(1);
            }
            out.at[u] = std::move(mtx);
        }
        return out;
    };
    return m;
}

bool check_monad_laws(const MonadPresentation& m, const Presheaf& f, std::string* why) {
    Presheaf mf = m.obj(f);
    Presheaf mmf = m.obj(mf);
    Presheaf mmmf = m.obj(mmf);
    PresheafMap eta = m.unit(f);
    PresheafMap eta_mf = m.unit(mf);
    PresheafMap m_eta = m.map(f, mf, eta);
    PresheafMap mu = m.mult(f);
    PresheafMap mu_mf = m.mult(mf);
    PresheafMap m_mu = m.map(mmf, mf, mu);
    PresheafMap id_mf = presheaf_identity(mf);

    eta.check_natural(f, mf);
    mu.check_natural(mmf, mf);

    // mu o eta_{MF} = id and mu o M(eta) = id
    if (!presheaf_map_equal(mf, mf, presheaf_map_compose(mf, mmf, mf, eta_mf, mu), id_mf)) {
        if (why) *why = "left unit law fails";
        return false;
    }
    if (!presheaf_map_equal(mf, mf, presheaf_map_compose(mf, mmf, mf, m_eta, mu), id_mf)) {
        if (why) *why = "right unit law fails";
        return false;
    }
    // mu o M(mu) = mu o mu_{MF}
    PresheafMap lhs = presheaf_map_compose(mmmf, mmf, mf, m_mu, mu);
    PresheafMap rhs = presheaf_map_compose(mmmf, mmf, mf, mu_mf, mu);
    if (!presheaf_map_equal(mmmf, mf, lhs, rhs)) {
        if (why) *why = "associativity law fails";
        return false;
    }
    return true;
}

BarConstruction bar_construction(const MonadPresentation& m, const Presheaf& f, long depth) {
    std::string why;
    if (!check_monad_laws(m, f, &why)) fail(ErrKind::Precondition, "monad laws fail: " + why);
    BarConstruction bar;
    bar.tower.push_back(f);
    for (long k = 0; k < depth + 2; ++k) bar.tower.push_back(m.obj(bar.tower.back()));

    // coface[k][i] = M^i eta M^{k-i}: tower[k] -> tower[k+1]
    bar.coface.resize(bar.tower.size() - 1);
    for (size_t k = 0; k + 1 < bar.tower.size(); ++k) {
        for (size_t i = 0; i <= k; ++i) {
            PresheafMap step = m.unit(bar.tower[k - i]);  // eta at M^{k-i}F
            Presheaf src = bar.tower[k - i];
            Presheaf dst = bar.tower[k - i + 1];
            for (size_t lift = 0; lift < i; ++lift) {
                step = m.map(src, dst, step);
                src = m.obj(src);
                dst = m.obj(dst);
            }
            bar.coface[k].push_back(std::move(step));
        }
    }
    // codegen[k][i] = M^i mu M^{k-2-i}: tower[k] -> tower[k-1], k >= 2
    bar.codegen.resize(bar.tower.size());
    for (size_t k = 2; k < bar.tower.size(); ++k) {
        for (size_t i = 0; i + 2 <= k; ++i) {
            PresheafMap step = m.mult(bar.tower[k - 2 - i]);  // mu at M^{k-2-i}F
            Presheaf src = bar.tower[k - i];
            Presheaf dst = bar.tower[k - 1 - i];
            for (size_t lift = 0; lift < i; ++lift) {
                step = m.map(src, dst, step);
                src = m.obj(src);
                dst = m.obj(dst);
            }
            bar.codegen[k].push_back(std::move(step));
        }
    }
    return bar;
}

bool check_cosimplicial_identities(const BarConstruction& bar, std::string* why) {
    auto compose_up = [&](size_t k, size_t i, size_t j) {
        // coface[k+1][j] o coface[k][i]: tower[k] -> tower[k+2]
        return presheaf_map_compose(bar.tower[k], bar.tower[k + 1], bar.tower[k + 2],
                                    bar.coface[k][i], bar.coface[k + 1][j]);
    };
    for (size_t k = 0; k + 2 < bar.tower.size(); ++k) {
        if (k + 1 >= bar.coface.size()) break;
        for (size_t i = 0; i <= k; ++i)
            for (size_t j = i + 1; j <= k + 1; ++j) {
                // d_j d_i = d_i d_{j-1} for i < j
                PresheafMap lhs = compose_up(k, i, j);
                PresheafMap rhs = compose_up(k, j - 1, i);
                if (!presheaf_map_equal(bar.tower[k], bar.tower[k + 2], lhs, rhs)) {
                    if (why)
                        *why = "coface identity fails at level " + std::to_string(k) + " (i=" +
                               std::to_string(i) + ", j=" + std::to_string(j) + ")";
                    return false;
                }
            }
    }
    // codegeneracy identities s_j s_i = s_i s_{j+1} for i <= j,
    // as maps tower[k] -> tower[k-2]
    for (size_t k = 4; k < bar.tower.size(); ++k) {
        size_t cnt = bar.codegen[k].size();  // = k-1
        if (cnt < 2) continue;
        for (size_t i = 0; i + 1 < cnt - 0; ++i)
            for (size_t j = i; j + 1 < cnt; ++j) {
                PresheafMap lhs = presheaf_map_compose(bar.tower[k], bar.tower[k - 1],
                                                       bar.tower[k - 2], bar.codegen[k][j + 1],
                                                       bar.codegen[k - 1][i]);
                PresheafMap rhs = presheaf_map_compose(bar.tower[k], bar.tower[k - 1],
                                                       bar.tower[k - 2], bar.codegen[k][i],
                                                       bar.codegen[k - 1][j]);
                if (!presheaf_map_equal(bar.tower[k], bar.tower[k - 2], lhs, rhs)) {
                    if (why)
                        *why = "codegeneracy identity fails at level " + std::to_string(k);
                    return false;
                }
            }
    }
    // mixed identities: s_j d_i with the three cases
    for (size_t k = 1; k + 1 < bar.tower.size(); ++k) {
        if (k + 1 >= bar.codegen.size() || bar.codegen[k + 1].empty()) continue;
        size_t nd = bar.coface[k].size();       // i = 0..k
        size_t ns = bar.codegen[k + 1].size();  // j = 0..k-1
        for (size_t i = 0; i < nd; ++i)
            for (size_t j = 0; j < ns; ++j) {
                PresheafMap comp = presheaf_map_compose(bar.tower[k], bar.tower[k + 1],
                                                        bar.tower[k], bar.coface[k][i],
                                                        bar.codegen[k + 1][j]);
                PresheafMap expect;
                if (i == j || i == j + 1) {
                    expect = presheaf_identity(bar.tower[k]);
                } else if (i < j) {
                    // d_i s_{j-1}
                    expect = presheaf_map_compose(bar.tower[k], bar.tower[k - 1], bar.tower[k],
                                                  bar.codegen[k][j - 1], bar.coface[k - 1][i]);
                } else {
                    // i > j+1: d_{i-1} s_j
                    expect = presheaf_map_compose(bar.tower[k], bar.tower[k - 1], bar.tower[k],
                                                  bar.codegen[k][j], bar.coface[k - 1][i - 1]);
                }
                if (!presheaf_map_equal(bar.tower[k], bar.tower[k], comp, expect)) {
                    if (why)
                        *why = "mixed identity fails at level " + std::to_string(k) + " (i=" +
                               std::to_string(i) + ", j=" + std::to_string(j) + ")";
                    return false;
                }
            }
    }
    return true;
}

BoundedComplex bar_global_sections_complex(const BarConstruction& bar) {
    const FiniteSite& s = *bar.tower[0].site;
    uint32_t full = s.full();
    std::vector<long> dims;
    std::vector<QMat> diffs;
    // degree n holds Gamma(B^n) = tower[n+1](X)
    for (size_t k = 1; k < bar.tower.size(); ++k) dims.push_back(bar.tower[k].dim(full));
    for (size_t k = 1; k + 1 < bar.tower.size(); ++k) {
        QMat d(static_cast<size_t>(bar.tower[k + 1].dim(full)),
               static_cast<size_t>(bar.tower[k].dim(full)));
        for (size_t i = 0; i < bar.coface[k].size(); ++i) {
            QMat m = bar.coface[k][i].get(bar.tower[k], bar.tower[k + 1], full);
            Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
            d = d + m.scaled(sign);
        }
        diffs.push_back(std::move(d));
    }
    return BoundedComplex(0, dims, diffs);
}

std::map<long, long> cohomology_via_godement(const FiniteSite& site, const Presheaf& f) {
    std::string why;
    if (!f.is_sheaf(&why)) fail(ErrKind::Precondition, "input is not a sheaf: " + why);
    long depth = static_cast<long>(site.n()) + 1;
    BarConstruction bar = bar_construction(godement_monad(site), f, depth);
    BoundedComplex cx = bar_global_sections_complex(bar);
    auto dims = cx.cohomology_dims();
    // truncate at the point count; exactness beyond holds by flasqueness
    std::map<long, long> out;
    for (auto [n, d] : dims)
        if (n <= static_cast<long>(site.n())) out[n] = d;
    return out;
}

bool augmentation_stalkwise_quasi_iso(const FiniteSite& site, const Presheaf& f,
                                      std::string* why) {
    long depth = static_cast<long>(site.n()) + 1;
    BarConstruction bar = bar_construction(godement_monad(site), f, depth);
    for (size_t x = 0; x < site.n(); ++x) {
        uint32_t ux = site.min_open(x);
        // augmented complex F(U_x) -> B^0(U_x) -> B^1(U_x) -> ...
        std::vector<long> dims;
        std::vector<QMat> diffs;
        for (const auto& level : bar.tower) dims.push_back(level.dim(ux));
        for (size_t k = 0; k + 1 < bar.tower.size(); ++k) {
            QMat d(static_cast<size_t>(bar.tower[k + 1].dim(ux)),
                   static_cast<size_t>(bar.tower[k].dim(ux)));
            for (size_t i = 0; i < bar.coface[k].size(); ++i) {
                Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
                d = d + bar.coface[k][i].get(bar.tower[k], bar.tower[k + 1], ux).scaled(sign);
            }
            diffs.push_back(std::move(d));
        }
        BoundedComplex cx(0, dims, diffs);
        auto h = cx.cohomology_dims();
        for (auto [n, dimn] : h) {
            if (n == 0 && dimn != 0) {
                if (why) *why = "augmented stalk complex has H^0 != 0";
                return false;
            }
            if (n > 0 && n <= static_cast<long>(site.n()) && dimn != 0) {
                if (why)
                    *why = "augmented stalk complex at " + site.points[x] + " has H^" +
                           std::to_string(n) + " = " + std::to_string(dimn);
                return false;
            }
        }
    }
    return true;
}

bool godement_flasque(const FiniteSite& site, const Presheaf& f) {
    Presheaf gf = godement_monad(site).obj(f);
    for (uint32_t u : site.opens)
        for (uint32_t v : site.opens) {
            if ((u | v) != u || u == v) continue;
            QMat r = gf.restriction(u, v);
            if (r.rank() != static_cast<size_t>(gf.dim(v))) return false;
        }
    return true;
}

}  // namespace mdr
