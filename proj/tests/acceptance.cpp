// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "mdr/compactify.hpp"
#include "mdr/factor.hpp"
#include "mdr/godement.hpp"
#include "mdr/karoubi.hpp"
#include "mdr/motive.hpp"

#include "zigzag_oracle.hpp"

using namespace mdr;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
    long budget_ms = 0;  // 0: no stated budget
};

// ---------------------------------------------------------------- helpers

FiniteAlgebraExtension radical_ext(long n) {
    auto base = AffineCurveScheme::affine_line("A1", "z");
    std::vector<RationalFunction> cs(static_cast<size_t>(n) + 1, RationalFunction(0));
    cs[0] = RationalFunction::parse("-z");
    cs[static_cast<size_t>(n)] = RationalFunction(1);
    return FiniteAlgebraExtension::make(base, "t", El(std::move(cs)));
}

FiniteCorrespondence power_graph(const AffineCurveScheme& x, const AffineCurveScheme& y,
                                 long n) {
    return graph(x, y, {RationalFunction(MultiPoly::var(x.vars[0], x.vars).pow(n))});
}

FiniteCorrespondence power_transpose(const AffineCurveScheme& x, const AffineCurveScheme& y,
                                     long n) {
    ProductCoords pc = product_coords(x, y);
    MultiPoly gen =
        MultiPoly::var(pc.target[0], pc.all).pow(n) - MultiPoly::var(pc.source[0], pc.all);
    return FiniteCorrespondence::single(PrimeCorrespondence::from_generator(x, y, gen));
}

// 1. Trace table: Tr(t^m dt) over t^n = z for all n <= 5, m <= 12.
bool crit_trace_table(std::string& msg) {
    for (long n = 2; n <= 5; ++n) {
        auto ext = radical_ext(n);
        const FuncField& k = ext.tower;
        El tm = El::constant(RationalFunction(1));
        for (long m = 0; m <= 12; ++m) {
            if (m > 0) tm = k.mul(tm, k.tgen());
            Form tr = trace_forms(ext, Form::dt(k, tm));
            if ((m + 1) % n != 0) {
                if (!tr.is_zero()) {
                    msg = "expected zero trace at n=" + std::to_string(n) +
                          ", m=" + std::to_string(m);
                    return false;
                }
            } else {
                long e = (m - n + 1) / n;
                RationalFunction expect(MultiPoly::var("z", {"z"}).pow(e).scaled(Rational(n)));
                // trace of n conjugate branches: n * z^e / n = z^e times dz
                // scaled within the formula; the paper states z^{(m-n+1)/n} dz
                RationalFunction want(MultiPoly::var("z", {"z"}).pow(e));
                if (tr.is_zero() || tr.coeff.degree() > 0 || tr.coeff[0] != want) {
                    msg = "wrong trace at n=" + std::to_string(n) + ", m=" + std::to_string(m);
                    return false;
                }
            }
        }
    }
    msg = "Tr(t^m dt) matches for all n <= 5, m <= 12";
    return true;
}

// 2. H^2(P^1) is one-dimensional; signature (1,0,1) with F^1 H^2 = H^2.
bool crit_p1(std::string& msg) {
    LogDivisor empty;
    auto rec = cech_p1(empty, 12);
    bool ok = rec.dim(0) == 1 && rec.dim(1) == 0 && rec.dim(2) == 1;
    ok = ok && rec.h[2].F.size() >= 2 && rec.h[2].F[1] == 1;
    msg = "signature (" + std::to_string(rec.dim(0)) + "," + std::to_string(rec.dim(1)) + "," +
          std::to_string(rec.dim(2)) + "), F^1 H^2 = " +
          std::to_string(rec.h[2].F.size() >= 2 ? rec.h[2].F[1] : -1);
    return ok;
}

// 3. Tate normalization.
bool crit_tate(std::string& msg) {
    auto r = realize(MotiveComplex::tate_object(), 10);
    long total = 0;
    for (const auto& [n, d] : r.record.h) total += d.dim;
    bool ok = total == 1 && r.dim(0) == 1 && r.hodge_degree_of(0) == 1 && r.weight_of(0) == 2;
    msg = "one-dimensional: " + std::to_string(total == 1) +
          ", Hodge degree " + std::to_string(r.hodge_degree_of(0)) + ", weight " +
          std::to_string(r.weight_of(0));
    return ok;
}

// 4. Homotopy invariance with exact certificates.
bool crit_homotopy(std::string& msg) {
    std::vector<AffineCurveScheme> xs{
        AffineCurveScheme::spec_q(), AffineCurveScheme::affine_line("A1", "z"),
        AffineCurveScheme::gm("Gm", "z"),
        AffineCurveScheme::punctured_line("A1-01", "z", {Rational(0), Rational(1)})};
    for (auto& x : xs) {
        std::string why;
        if (!homotopy_invariance_check(x, 10, &why)) {
            msg = x.label + ": " + why;
            return false;
        }
        // H(X x A^1) = H(X) at the level of dimensions
        auto kn = kunneth(x, AffineCurveScheme::affine_line("A1f", "tt"), 10);
        auto hx = affine_cohomology(x, 10);
        for (long n = 0; n <= 2; ++n) {
            long a = kn.product_dims.count(n) ? kn.product_dims[n] : 0;
            if (a != hx.dim(n)) {
                msg = x.label + ": product dims differ in degree " + std::to_string(n);
                return false;
            }
        }
    }
    msg = "primitives reconstruct the input on point, A1, Gm, A1-{0,1}";
    return true;
}

// 5. Mayer-Vietoris exactness for three covers.
bool crit_mv(std::string& msg) {
    auto rep = mayer_vietoris_p1(10);
    if (!rep.exact) {
        msg = "P1 chart cover fails";
        return false;
    }
    auto X = AffineCurveScheme::affine_line("X", "z");
    auto U = AffineCurveScheme::punctured_line("U", "z", {Rational(0)});
    auto V = AffineCurveScheme::punctured_line("V", "z", {Rational(1)});
    auto rep2 = mayer_vietoris_affine(X, U, V, 10);
    if (!rep2.exact) {
        msg = "cover A1 = (A1-0) + (A1-1) fails";
        return false;
    }
    auto G = AffineCurveScheme::gm("G", "z");
    auto GU = G, GV = G;
    GU.label = "G-1";
    GU.inverted.push_back(MultiPoly::parse("z-1", {{"z"}}));
    GV.label = "G-2";
    GV.inverted.push_back(MultiPoly::parse("z-2", {{"z"}}));
    auto rep3 = mayer_vietoris_affine(G, GU, GV, 10);
    if (!rep3.exact) {
        msg = "cover Gm = (Gm-1) + (Gm-2) fails";
        return false;
    }
    msg = "exact at every slot for the chart cover and two affine covers";
    return true;
}

// 6. Transfer functoriality on >= 20 randomized composable pairs.
bool crit_transfer_functorial(std::string& msg) {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> pick(1, 4);
    auto gm1 = AffineCurveScheme::gm("G1", "s");
    auto gm2 = AffineCurveScheme::gm("G2", "t");
    auto gm3 = AffineCurveScheme::gm("G3", "u");
    auto a1 = AffineCurveScheme::affine_line("L1", "s");
    auto a2 = AffineCurveScheme::affine_line("L2", "t");
    auto a3 = AffineCurveScheme::affine_line("L3", "u");
    int done = 0;
    for (int trial = 0; trial < 40 && done < 20; ++trial) {
        int na = pick(rng), nb = pick(rng);
        bool ta = trial % 2, tb = (trial / 2) % 2;
        bool on_gm = (trial / 4) % 2;
        const auto &X = on_gm ? gm1 : a1, &Y = on_gm ? gm2 : a2, &Z = on_gm ? gm3 : a3;
        auto alpha = ta ? power_transpose(X, Y, na) : power_graph(X, Y, na);
        auto beta = tb ? power_transpose(Y, Z, nb) : power_graph(Y, Z, nb);
        auto comp = compose(alpha, beta);
        QMat lhs = transfer_h1_matrix(comp, 10);
        QMat rhs = transfer_h1_matrix(alpha, 10) * transfer_h1_matrix(beta, 10);
        if (!(lhs == rhs)) {
            msg = "matrix mismatch at trial " + std::to_string(trial);
            return false;
        }
        ++done;
    }
    msg = std::to_string(done) + " composable pairs checked on H^1, exact equality";
    return done >= 20;
}

// 7. Composition calculus: graph functoriality, associativity, degrees.
bool crit_composition(std::string& msg) {
    auto X = AffineCurveScheme::affine_line("X", "z");
    for (long n = 1; n <= 5; ++n)
        for (long m = 1; m <= 5; ++m)
            if (!(compose(power_graph(X, X, n), power_graph(X, X, m)) ==
                  power_graph(X, X, n * m))) {
                msg = "graph functoriality fails at " + std::to_string(n) + "," +
                      std::to_string(m);
                return false;
            }
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(1, 4);
    auto A = AffineCurveScheme::affine_line("A", "s");
    auto B = AffineCurveScheme::affine_line("B", "t");
    auto C = AffineCurveScheme::affine_line("C", "u");
    auto D = AffineCurveScheme::affine_line("D", "v");
    int done = 0;
    for (int trial = 0; trial < 400 && done < 50; ++trial) {
        int na = pick(rng), nb = pick(rng), nc = pick(rng);
        if (na * nb * nc > 12) continue;
        auto mk = [&](const AffineCurveScheme& s, const AffineCurveScheme& t2, int nn,
                      bool tr) { return tr ? power_transpose(s, t2, nn) : power_graph(s, t2, nn); };
        auto alpha = mk(A, B, na, trial % 2);
        auto beta = mk(B, C, nb, (trial / 2) % 2);
        auto gamma = mk(C, D, nc, (trial / 4) % 2);
        if (!(compose(compose(alpha, beta), gamma) == compose(alpha, compose(beta, gamma)))) {
            msg = "associativity fails at trial " + std::to_string(trial);
            return false;
        }
        long da = degree_over_source(alpha).total, db = degree_over_source(beta).total;
        if (degree_over_source(compose(alpha, beta)).total != da * db) {
            msg = "degree multiplicativity fails at trial " + std::to_string(trial);
            return false;
        }
        ++done;
    }
    msg = "graph functoriality (25 pairs), associativity (" + std::to_string(done) +
          " triples), degree multiplicativity";
    return done >= 50;
}

// 8. Sym^n: injective monoid map on effective cycles of degree <= 4.
bool crit_sym(std::string& msg) {
    auto line = AffineCurveScheme::affine_line("A1", "T");
    // corpus: cycles built from rational points {-1, 0, 1, 2} and the
    // irreducible quadratics T^2-2, T^2+1
    std::vector<UniPoly<Rational>> prime_ideals;
    for (long a : {-1L, 0L, 1L, 2L})
        prime_ideals.push_back(UniPoly<Rational>(std::vector<Rational>{Rational(-a), Rational(1)}));
    prime_ideals.push_back(UniPoly<Rational>(std::vector<Rational>{-2, 0, 1}));
    prime_ideals.push_back(UniPoly<Rational>(std::vector<Rational>{1, 0, 1}));

    // enumerate all effective cycles of degree <= 4
    std::vector<ZeroCycle> cycles;
    std::function<void(size_t, long, ZeroCycle&)> gen = [&](size_t i, long deg, ZeroCycle& cur) {
        if (deg <= 4 && !cur.points.empty()) cycles.push_back(cur);
        if (i >= prime_ideals.size()) return;
        for (size_t j = i; j < prime_ideals.size(); ++j) {
            long d = prime_ideals[j].degree();
            if (deg + d > 4) continue;
            ZeroCycle next = cur;
            bool merged = false;
            for (auto& [f, m] : next.points)
                if (f == prime_ideals[j]) {
                    ++m;
                    merged = true;
                }
            if (!merged) next.points.push_back({prime_ideals[j], 1});
            gen(j, deg + d, next);
        }
    };
    ZeroCycle seed;
    seed.ambient = line;
    gen(0, 0, seed);

    // injectivity within each degree, against the independent expansion
    std::map<long, std::set<std::string>> seen;
    for (const auto& g : cycles) {
        auto e = sym_point(g);
        // oracle: multiply the minimal polynomials directly and read the
        // signed coefficients
        UniPoly<Rational> prod = UniPoly<Rational>::constant(Rational(1));
        for (const auto& [f, m] : g.points)
            for (long i = 0; i < m; ++i) prod = prod * f;
        long n = prod.degree();
        if (static_cast<long>(e.size()) != n) {
            msg = "sym tuple has the wrong length";
            return false;
        }
        for (long k = 1; k <= n; ++k) {
            Rational c = prod[static_cast<size_t>(n - k)];
            if (e[static_cast<size_t>(k - 1)] != (k % 2 == 1 ? -c : c)) {
                msg = "sym tuple disagrees with the expansion oracle";
                return false;
            }
        }
        std::string key;
        for (const auto& c : e) key += c.str() + ";";
        if (!seen[n].insert(key).second) {
            msg = "sym map not injective in degree " + std::to_string(n);
            return false;
        }
        // monoid property on a sample: doubling the cycle squares the product
        ZeroCycle dbl = g;
        for (auto& [f, m] : dbl.points) m *= 2;
        if (2 * g.total_degree() <= 8) {
            auto e2 = sym_point(dbl);
            UniPoly<Rational> sq = prod * prod;
            for (long k = 1; k <= 2 * n; ++k) {
                Rational c = sq[static_cast<size_t>(2 * n - k)];
                if (e2[static_cast<size_t>(k - 1)] != (k % 2 == 1 ? -c : c)) {
                    msg = "monoid property fails";
                    return false;
                }
            }
        }
    }
    long total = 0;
    for (auto& [n, s] : seen) total += static_cast<long>(s.size());
    msg = std::to_string(total) + " effective cycles of degree <= 4, injective, oracle-exact";
    return true;
}

// 9. Localization oracle equivalence + S^X filteredness.
bool crit_localization(std::string& msg) {
    std::vector<std::pair<FiniteCategory, std::set<size_t>>> cases;
    {
        FiniteCategory c;
        c.objects = {"a", "b"};
        c.arrows = {{"ia", 0, 0}, {"ib", 1, 1}, {"s", 0, 1}};
        c.identity_of = {0, 1};
        c.comp[{0, 0}] = 0;
        c.comp[{1, 1}] = 1;
        c.comp[{2, 0}] = 2;
        c.comp[{1, 2}] = 2;
        c.validate();
        cases.push_back({c, {0, 1, 2}});
        cases.push_back({c, {0, 1}});
    }
    {
        // chain poset a -> b -> c (thin category)
        FiniteCategory c;
        c.objects = {"a", "b", "c"};
        c.arrows = {{"ia", 0, 0}, {"ib", 1, 1}, {"ic", 2, 2},
                    {"ab", 0, 1}, {"bc", 1, 2}, {"ac", 0, 2}};
        c.identity_of = {0, 1, 2};
        for (size_t f = 0; f < c.arrows.size(); ++f)
            for (size_t g = 0; g < c.arrows.size(); ++g) {
                if (c.arrows[f].dst != c.arrows[g].src) continue;
                for (size_t h = 0; h < c.arrows.size(); ++h)
                    if (c.arrows[h].src == c.arrows[f].src &&
                        c.arrows[h].dst == c.arrows[g].dst)
                        c.comp[{g, f}] = h;
            }
        c.validate();
        cases.push_back({c, {0, 1, 2, 3, 4, 5}});
        cases.push_back({c, {0, 1, 2, 3}});
        cases.push_back({c, {0, 1, 2}});
    }
    {
        // square poset with 4 objects (bottom, two middles, top)
        FiniteCategory c;
        c.objects = {"o", "l", "r", "t"};
        c.arrows = {{"io", 0, 0}, {"il", 1, 1}, {"ir", 2, 2}, {"it", 3, 3},
                    {"ol", 0, 1}, {"or", 0, 2}, {"lt", 1, 3}, {"rt", 2, 3}, {"ot", 0, 3}};
        c.identity_of = {0, 1, 2, 3};
        for (size_t f = 0; f < c.arrows.size(); ++f)
            for (size_t g = 0; g < c.arrows.size(); ++g) {
                if (c.arrows[f].dst != c.arrows[g].src) continue;
                for (size_t h = 0; h < c.arrows.size(); ++h)
                    if (c.arrows[h].src == c.arrows[f].src &&
                        c.arrows[h].dst == c.arrows[g].dst)
                        c.comp[{g, f}] = h;
            }
        c.validate();
        cases.push_back({c, {0, 1, 2, 3, 6, 7, 8}});
        cases.push_back({c, {0, 1, 2, 3}});
    }
    long compared = 0;
    for (auto& [c, s] : cases) {
        auto rep = check_right_multiplicative(c, s);
        if (!rep.all()) {
            msg = "system fails the axioms: " + rep.counterexample;
            return false;
        }
        for (size_t x = 0; x < c.objects.size(); ++x) {
            std::string why;
            if (!sx_filtered(c, s, x, &why)) {
                msg = "S^" + c.objects[x] + " not filtered: " + why;
                return false;
            }
        }
        mdr_test::ZigzagOracle oracle{c, s};
        for (size_t x = 0; x < c.objects.size(); ++x)
            for (size_t y = 0; y < c.objects.size(); ++y) {
                if (localized_hom(c, s, x, y).classes.size() != oracle.hom_classes(x, y)) {
                    msg = "roofs disagree with the zigzag closure at (" + c.objects[x] + "," +
                          c.objects[y] + ")";
                    return false;
                }
                ++compared;
            }
    }
    msg = std::to_string(compared) + " hom sets match the zigzag oracle; S^X filtered";
    return true;
}

// 10. Karoubi completeness: every idempotent found splits.
bool crit_karoubi(std::string& msg) {
    auto cat = AdditiveCategory::matrix_category({2, 1});
    KaroubiEnvelope env(cat, {{0, cat.identities[0]}, {1, cat.identities[1]}});
    long found = 0, split = 0;
    size_t base_objects = env.objects().size();
    for (size_t i = 0; i < base_objects; ++i) {
        for (const auto& u : env.find_idempotents(i, 1)) {
            ++found;
            bool zero = true;
            for (const auto& c : u) zero = zero && c.is_zero();
            if (zero) {
                ++split;  // the zero object splits it
                continue;
            }
            auto [ni, r, s] = env.split_idempotent(i, u);
            (void)ni;
            (void)r;
            (void)s;
            ++split;  // split_idempotent verifies both composites
        }
    }
    msg = std::to_string(found) + " idempotents found on the grid, " + std::to_string(split) +
          " split with verified composites";
    return found > 0 && found == split;
}

// 11. Godement resolution on all corpus sites (<= 6 points).
bool crit_godement(std::string& msg) {
    std::vector<FiniteSite> sites;
    sites.push_back(FiniteSite::make({"pt"}, {}));
    sites.push_back(FiniteSite::make({"g", "c"}, {{1, 0}}));
    sites.push_back(FiniteSite::make({"p", "q"}, {}));
    sites.push_back(FiniteSite::make({"a", "b", "c"}, {{0, 1}, {1, 2}}));
    sites.push_back(FiniteSite::make({"a", "b", "c", "d"}, {{2, 0}, {2, 1}, {3, 0}, {3, 1}}));
    sites.push_back(FiniteSite::make({"e0", "e1", "e2", "x0", "x1", "x2"},
                                     {{3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}}));
    for (const auto& s : sites) {
        auto f = Presheaf::constant_sheaf(s, 1);
        std::string why;
        if (!augmentation_stalkwise_quasi_iso(s, f, &why)) {
            msg = "stalkwise quasi-isomorphism fails: " + why;
            return false;
        }
        if (!godement_flasque(s, f)) {
            msg = "GF is not flasque";
            return false;
        }
        auto got = cohomology_via_godement(s, f);
        auto oracle = order_complex_cohomology(s);
        for (long n = 0; n <= static_cast<long>(s.n()); ++n) {
            long a = got.count(n) ? got[n] : 0;
            long b = oracle.count(n) ? oracle[n] : 0;
            if (a != b) {
                msg = "cohomology disagrees with the order-complex oracle in degree " +
                      std::to_string(n);
                return false;
            }
        }
    }
    // pinned pseudo-circle value
    auto pc = FiniteSite::make({"a", "b", "c", "d"}, {{2, 0}, {2, 1}, {3, 0}, {3, 1}});
    auto h = cohomology_via_godement(pc, Presheaf::constant_sheaf(pc, 1));
    if (h[1] != 1) {
        msg = "pseudo-circle H^1 != 1";
        return false;
    }
    msg = "6 sites: stalkwise quasi-iso, flasque, oracle-exact (pseudo-circle H^1 = 1)";
    return true;
}

// 12. Decalage page shift on >= 20 randomized filtered complexes.
bool crit_decalage(std::string& msg) {
    std::mt19937 rng(523);
    std::uniform_int_distribution<int> coeff(-2, 2);
    long done = 0;
    for (int trial = 0; trial < 200 && done < 20; ++trial) {
        // random 3-term complex with d^2 = 0 and total dimension <= 12
        long d0 = 1 + trial % 4, d1 = 1 + (trial / 2) % 4, d2 = 1 + (trial / 3) % 3;
        if (d0 + d1 + d2 > 12) continue;
        QMat m1(static_cast<size_t>(d1), static_cast<size_t>(d0));
        for (size_t i = 0; i < m1.rows(); ++i)
            for (size_t j = 0; j < m1.cols(); ++j) m1(i, j) = Rational(coeff(rng));
        // m2 rows orthogonal to the columns of m1
        auto leftker = m1.transpose().kernel_basis();
        QMat m2(static_cast<size_t>(d2), static_cast<size_t>(d1));
        for (size_t i = 0; i < m2.rows(); ++i) {
            if (leftker.empty()) break;
            const auto& v = leftker[(static_cast<size_t>(coeff(rng)) + 7 + i) % leftker.size()];
            Rational scale(coeff(rng));
            for (size_t j = 0; j < m2.cols(); ++j) m2(i, j) = v[j] * scale;
        }
        BoundedComplex k(0, {d0, d1, d2}, {m1, m2});
        // a two-step decreasing filtration closed under d: F^1 is generated
        // by random vectors together with their images
        Filtration f;
        f.p_min = 0;
        f.p_max = 1;
        std::map<long, Subspace> f1;
        for (long n = 0; n <= 2; ++n) {
            Subspace s;
            long dn = k.dim(n);
            for (long t2 = 0; t2 < dn / 2 + 1; ++t2) {
                QVec v(static_cast<size_t>(dn), Rational(0));
                for (long i = 0; i < dn; ++i) v[static_cast<size_t>(i)] = Rational(coeff(rng));
                s.push_back(std::move(v));
            }
            f1[n] = s;
        }
        for (long n = 0; n <= 1; ++n) {
            Subspace img = apply_matrix(k.diff(n), f1[n]);
            f1[n + 1] = subspace_sum(f1[n + 1], img);
        }
        for (long n = 0; n <= 2; ++n) {
            Subspace full;
            for (long i = 0; i < k.dim(n); ++i) {
                QVec v(static_cast<size_t>(k.dim(n)), Rational(0));
                v[static_cast<size_t>(i)] = Rational(1);
                full.push_back(std::move(v));
            }
            f.flags[n] = {full, f1[n]};
        }
        try {
            f.check_respected(k);
        } catch (const Error&) {
            continue;
        }
        auto dec = decalage(k, f);
        auto e_dec = spectral_sequence(k, dec, 1);
        auto e_f = spectral_sequence(k, f, 2);
        // dimension and subquotient (map-level) comparison under the
        // canonical reindexing E_1^{p,q}(Dec) = E_2^{2p+q,-p}(F)
        for (const auto& [pq, dim] : e_dec.pages[1].dims) {
            auto [p, q] = pq;
            auto it = e_f.pages[2].dims.find({2 * p + q, -p});
            long want = it == e_f.pages[2].dims.end() ? 0 : it->second;
            if (dim != want) {
                msg = "dimension mismatch at trial " + std::to_string(trial);
                return false;
            }
            // subquotient comparison: Z + B agree inside K^{p+q}
            const auto& [zd, bd] = e_dec.pages[1].presentation.at(pq);
            const auto& [zf, bf] = e_f.pages[2].presentation.at({2 * p + q, -p});
            size_t amb = static_cast<size_t>(k.dim(p + q));
            Subspace lhs = subspace_sum(zd, subspace_intersect(zf, bf, amb));
            Subspace rhs = subspace_sum(zf, subspace_intersect(zd, bd, amb));
            if (subspace_rank(lhs) != subspace_rank(rhs) ||
                !subspace_leq(zd, subspace_sum(zf, bf))) {
                msg = "canonical map is not an isomorphism at trial " + std::to_string(trial);
                return false;
            }
        }
        for (const auto& [pq, dim] : e_f.pages[2].dims) {
            auto [p, q] = pq;
            auto it = e_dec.pages[1].dims.find({-q, 2 * q + p});
            long got = it == e_dec.pages[1].dims.end() ? 0 : it->second;
            if (dim != got) {
                msg = "reverse dimension mismatch at trial " + std::to_string(trial);
                return false;
            }
        }
        ++done;
    }
    msg = std::to_string(done) + " filtered complexes: E_1(Dec W) = E_2(W), dims and maps";
    return done >= 20;
}

// 13. Kunneth for all pairs from the supported family.
bool crit_kunneth(std::string& msg) {
    std::vector<AffineCurveScheme> xs{
        AffineCurveScheme::spec_q(), AffineCurveScheme::affine_line("A1", "z"),
        AffineCurveScheme::gm("Gm", "z"),
        AffineCurveScheme::punctured_line("A1-01", "z", {Rational(0), Rational(1)})};
    for (const auto& x : xs)
        for (const auto& y : xs) {
            auto rep = check_tensor(x, y, 10);
            if (!rep.dims_match || !rep.products_independent) {
                msg = x.label + " x " + y.label + ": dims or products fail";
                return false;
            }
            if (!rep.hodge_adds || !rep.weights_add) {
                msg = x.label + " x " + y.label + ": filtration steps do not add";
                return false;
            }
        }
    msg = "16 pairs: dims convolve, products independent, F and W steps add";
    return true;
}

// 14. Window stability under +1 and +2.
bool crit_window(std::string& msg) {
    std::vector<AffineCurveScheme> xs{
        AffineCurveScheme::affine_line("A1", "z"), AffineCurveScheme::gm("Gm", "z"),
        AffineCurveScheme::punctured_line("A1-01", "z", {Rational(0), Rational(1)}),
        AffineCurveScheme::plane_curve("E", "x", "y", MultiPoly::parse("y^2-x^3-x"))};
    for (const auto& x : xs) {
        auto base = affine_cohomology(x, 8);  // enforces +1/+2 internally
        auto bigger = affine_cohomology(x, 11);
        for (long n = 0; n <= 1; ++n)
            if (base.dim(n) != bigger.dim(n)) {
                msg = x.label + ": dimension drifts with the window";
                return false;
            }
    }
    LogDivisor d;
    d.points = {BoundaryPoint::at(Rational(0)), BoundaryPoint::infinity()};
    auto c1 = cech_p1(d, 8);
    auto c2 = cech_p1(d, 11);
    for (long n = 0; n <= 2; ++n)
        if (c1.dim(n) != c2.dim(n)) {
            msg = "Cech dims drift with the window";
            return false;
        }
    msg = "all reported dimensions invariant under +1/+2 (and re-checked at +3)";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::string filter = argc > 1 ? argv[1] : "";
    std::vector<Criterion> criteria{
        {"1. trace table Tr(t^m dt), n <= 5, m <= 12", crit_trace_table, 1000},
        {"2. H^2(P^1) one-dimensional, signature (1,0,1)", crit_p1, 5000},
        {"3. Tate normalization of the reduced P^1 motive", crit_tate, 5000},
        {"4. homotopy invariance with exact certificates", crit_homotopy, 0},
        {"5. Mayer-Vietoris exactness for three covers", crit_mv, 0},
        {"6. transfer functoriality on H^1 (>= 20 pairs)", crit_transfer_functorial, 0},
        {"7. composition calculus (graphs, associativity, degrees)", crit_composition, 0},
        {"8. Sym^n monoid map on zero cycles (degree <= 4)", crit_sym, 0},
        {"9. localization agrees with the zigzag oracle", crit_localization, 0},
        {"10. Karoubi completeness (idempotents split)", crit_karoubi, 0},
        {"11. Godement resolution on sites <= 6 points", crit_godement, 10000},
        {"12. decalage page shift E_1(Dec W) = E_2(W)", crit_decalage, 0},
        {"13. Kunneth with additive filtration steps", crit_kunneth, 0},
        {"14. window stability under enlargement", crit_window, 0},
    };
    bool all = true;
    for (auto& c : criteria) {
        if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
        std::string msg;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        bool in_budget = c.budget_ms == 0 || ms <= c.budget_ms;
        all = all && ok && in_budget;
        std::cout << (ok && in_budget ? "[PASS] " : "[FAIL] ") << c.name << " (" << ms << " ms"
                  << (c.budget_ms ? ", budget " + std::to_string(c.budget_ms) + " ms" : "")
                  << ")\n        " << msg << "\n";
    }
    std::cout << (all ? "acceptance: all criteria pass\n" : "acceptance: FAILURES above\n");
    return all ? 0 : 1;
}
