#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mdr/complexes.hpp"
#include "mdr/fincat.hpp"
#include "mdr/karoubi.hpp"

#include "zigzag_oracle.hpp"

using namespace mdr;

namespace {

QMat qm(std::vector<std::vector<long>> rows) {
    QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
    return m;
}

// builds the arrow category a -> b with identities
FiniteCategory arrow_category() {
    FiniteCategory c;
    c.objects = {"a", "b"};
    c.arrows = {{"id_a", 0, 0}, {"id_b", 1, 1}, {"s", 0, 1}};
    c.identity_of = {0, 1};
    c.comp[{0, 0}] = 0;
    c.comp[{1, 1}] = 1;
    c.comp[{2, 0}] = 2;
    c.comp[{1, 2}] = 2;
    c.validate();
    return c;
}

// chain poset a -> b -> c with all arrows
FiniteCategory chain3() {
    FiniteCategory c;
    c.objects = {"a", "b", "c"};
    c.arrows = {{"ia", 0, 0}, {"ib", 1, 1}, {"ic", 2, 2}, {"ab", 0, 1}, {"bc", 1, 2}, {"ac", 0, 2}};
    c.identity_of = {0, 1, 2};
    auto id = [&](size_t i) { return i; };
    // composition in a thin category: determined by endpoints
    for (size_t f = 0; f < c.arrows.size(); ++f)
        for (size_t g = 0; g < c.arrows.size(); ++g) {
            if (c.arrows[f].dst != c.arrows[g].src) continue;
            size_t src = c.arrows[f].src, dst = c.arrows[g].dst;
            for (size_t h = 0; h < c.arrows.size(); ++h)
                if (c.arrows[h].src == src && c.arrows[h].dst == dst) c.comp[{g, f}] = h;
        }
    (void)id;
    c.validate();
    return c;
}

// coequalizer-style category where cancellation identifies parallel arrows
FiniteCategory cancel_category() {
    FiniteCategory c;
    c.objects = {"w", "x", "y", "z"};
    //           0:iw    1:ix    2:iy    3:iz    4:s     5:f     6:g     7:h=f s  8:t    9:k=t f  10:m
    c.arrows = {{"iw", 0, 0}, {"ix", 1, 1}, {"iy", 2, 2}, {"iz", 3, 3}, {"s", 0, 1},
                {"f", 1, 2},  {"g", 1, 2},  {"h", 0, 2},  {"t", 2, 3},  {"k", 1, 3},
                {"m", 0, 3}};
    c.identity_of = {0, 1, 2, 3};
    auto setc = [&](size_t g2, size_t f2, size_t r) { c.comp[{g2, f2}] = r; };
    // identities
    for (size_t a = 0; a < c.arrows.size(); ++a) {
        setc(a, c.identity_of[c.arrows[a].src], a);
        setc(c.identity_of[c.arrows[a].dst], a, a);
    }
    setc(5, 4, 7);   // f s = h
    setc(6, 4, 7);   // g s = h  (the equalized pair)
    setc(8, 5, 9);   // t f = k
    setc(8, 6, 9);   // t g = k
    setc(9, 4, 10);  // k s = m
    setc(8, 7, 10);  // t h = m
    c.validate();
    return c;
}

}  // namespace

TEST_CASE("bounded complexes and cohomology") {
    // 0 -> Q^2 -> Q -> 0 with d = (1 1)
    BoundedComplex k(0, {2, 1}, {qm({{1, 1}})});
    auto dims = k.cohomology_dims();
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 0);
    CHECK_THROWS_AS(BoundedComplex(0, {1, 1, 1}, {qm({{1}}), qm({{1}})}), Error);
}

TEST_CASE("chain homotopy decisions") {
    // acyclic complex [Q = Q]: identity ~ 0
    BoundedComplex k(0, {1, 1}, {qm({{1}})});
    std::map<long, QMat> f{{0, qm({{1}})}, {1, qm({{1}})}};
    std::map<long, QMat> zero;
    auto h = chain_homotopy(k, k, f, zero);
    REQUIRE(h.has_value());
    // f = g gives h = 0 (the zero solution always exists)
    auto h2 = chain_homotopy(k, k, f, f);
    REQUIRE(h2.has_value());
    // Q concentrated in degree 0: identity not homotopic to zero
    BoundedComplex single(0, {1}, {});
    CHECK(!chain_homotopy(single, single, {{0, qm({{1}})}}, {}).has_value());
}

TEST_CASE("total complex of a double complex") {
    // single row: the row itself
    DoubleComplex dc;
    dc.dims[{0, 0}] = 1;
    dc.dims[{1, 0}] = 1;
    dc.dh[{0, 0}] = qm({{2}});
    auto tot = total_complex(dc);
    CHECK(tot.complex.dim(0) == 1);
    CHECK(tot.complex.dim(1) == 1);
    auto dims = tot.complex.cohomology_dims();
    CHECK(dims[0] == 0);
    CHECK(dims[1] == 0);

    // two rows of zero complexes
    DoubleComplex z;
    z.dims[{0, 0}] = 0;
    z.dims[{0, 1}] = 0;
    auto tz = total_complex(z);
    CHECK(tz.complex.cohomology_dims().empty());

    // anticommutation sign: 2x2 square with identity maps has exact total
    DoubleComplex sq;
    sq.dims[{0, 0}] = sq.dims[{1, 0}] = sq.dims[{0, 1}] = sq.dims[{1, 1}] = 1;
    sq.dh[{0, 0}] = qm({{1}});
    sq.dh[{0, 1}] = qm({{1}});
    sq.dv[{0, 0}] = qm({{1}});
    sq.dv[{1, 0}] = qm({{1}});
    auto ts = total_complex(sq);
    auto hd = ts.complex.cohomology_dims();
    CHECK(hd[0] == 0);
    CHECK(hd[1] == 0);
    CHECK(hd[2] == 0);
}

TEST_CASE("spectral sequence of the trivial filtration") {
    BoundedComplex k(0, {2, 2}, {qm({{0, 0}, {1, 0}})});
    // one-step filtration: F^0 = all, F^1 = 0
    Filtration f;
    f.p_min = 0;
    f.p_max = 0;
    f.flags[0] = {};
    f.flags[1] = {};
    auto res = spectral_sequence(k, f, 2);
    CHECK(res.einf_matches_graded);
    // E_1^{0,q} = H^q
    auto h = k.cohomology_dims();
    for (auto [n, d] : h) {
        long got = 0;
        auto it = res.pages[1].dims.find({0, n});
        if (it != res.pages[1].dims.end()) got = it->second;
        CHECK(got == d);
    }
}

TEST_CASE("spectral sequence with a nontrivial d1") {
    // K: e1, e2 in degree 0; f1, f2 in degree 1; d(e1) = f2, d(e2) = 0.
    BoundedComplex k(0, {2, 2}, {qm({{0, 0}, {1, 0}})});
    // F^0 = all, F^1 = span(e2) + span(f2), F^2 = 0
    Filtration f;
    f.p_min = 0;
    f.p_max = 1;
    f.flags[0] = {{}, {QVec{Rational(0), Rational(1)}}};
    f.flags[1] = {{}, {QVec{Rational(0), Rational(1)}}};
    // the p_min slot is synthesized as "everything"; fill it explicitly
    f.flags[0][0] = {QVec{Rational(1), Rational(0)}, QVec{Rational(0), Rational(1)}};
    f.flags[1][0] = {QVec{Rational(1), Rational(0)}, QVec{Rational(0), Rational(1)}};
    auto res = spectral_sequence(k, f, 3);
    CHECK(res.einf_matches_graded);
    // E1 has four one-dimensional entries; E2 kills (0,0) and (1,0)
    CHECK(res.pages[1].dims.at({0, 0}) == 1);
    CHECK(res.pages[1].dims.at({1, 0}) == 1);
    CHECK(res.pages[2].dims.count({0, 0}) == 0);
    CHECK(res.pages[2].dims.count({1, 0}) == 0);
    CHECK(res.pages[2].dims.at({1, -1}) == 1);
    CHECK(res.pages[2].dims.at({0, 1}) == 1);
}

TEST_CASE("decalage: degenerate cases and the page shift") {
    // zero differential: (Dec F)^p K^n = F^{p+n} K^n
    BoundedComplex k(0, {1, 1}, {qm({{0}})});
    Filtration f;
    f.p_min = 0;
    f.p_max = 1;
    f.flags[0] = {{QVec{Rational(1)}}, {QVec{Rational(1)}}};
    f.flags[1] = {{QVec{Rational(1)}}, {}};
    auto dec = decalage(k, f);
    // degree 0: (Dec)^p = F^{p+0}: full at p<=0... F^1 K^0 = full too
    CHECK(subspace_rank(dec.at(0, 1, 1)) == 1);
    // degree 1: (Dec)^p = F^{p+1}: at p = 0 that is F^1 K^1 = 0
    CHECK(subspace_rank(dec.at(1, 0, 1)) == 0);

    // randomized page-shift comparison E_1(Dec F) = E_2(F)
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        long d0 = 1 + trial % 3, d1 = 1 + (trial / 3) % 3, d2 = 1 + (trial / 2) % 2;
        QMat m1(static_cast<size_t>(d1), static_cast<size_t>(d0));
        QMat m2(static_cast<size_t>(d2), static_cast<size_t>(d1));
        // build d with d2 m2 m1 = 0: choose m1 random, m2 on the kernel
        for (size_t i = 0; i < m1.rows(); ++i)
            for (size_t j = 0; j < m1.cols(); ++j) m1(i, j) = Rational(coeff(rng));
        // m2 rows chosen from kernel of m1^T... simplest: m2 = 0 half the time
        if (trial % 2 == 0) {
            BoundedComplex kk(0, {d0, d1, d2}, {m1, m2});
            // the filtration by "first basis vectors": F^1 spanned by a prefix
            Filtration ff;
            ff.p_min = 0;
            ff.p_max = 1;
            for (long n = 0; n <= 2; ++n) {
                long dn = kk.dim(n);
                Subspace full, half;
                for (long i = 0; i < dn; ++i) {
                    QVec v(static_cast<size_t>(dn), Rational(0));
                    v[static_cast<size_t>(i)] = Rational(1);
                    full.push_back(v);
                    if (i < dn / 2) half.push_back(v);
                }
                ff.flags[n] = {full, half};
            }
            // d must respect F: F^1 spans may fail; skip such draws
            bool ok = true;
            try {
                ff.check_respected(kk);
            } catch (const Error&) {
                ok = false;
            }
            if (!ok) continue;
            auto dec2 = decalage(kk, ff);
            auto e_dec = spectral_sequence(kk, dec2, 1);
            auto e_f = spectral_sequence(kk, ff, 2);
            // E_1^{p,q}(Dec) = E_2^{2p+q, -p}(F)
            for (const auto& [pq, dim] : e_dec.pages[1].dims) {
                auto [p, q] = pq;
                long want = 0;
                auto it = e_f.pages[2].dims.find({2 * p + q, -p});
                if (it != e_f.pages[2].dims.end()) want = it->second;
                CHECK(dim == want);
            }
            for (const auto& [pq, dim] : e_f.pages[2].dims) {
                auto [p, q] = pq;
                long want = 0;
                auto it = e_dec.pages[1].dims.find({-q, 2 * q + p});
                if (it != e_dec.pages[1].dims.end()) want = it->second;
                CHECK(dim == want);
            }
        }
    }
}

TEST_CASE("multiplicative systems: axioms") {
    auto c = arrow_category();
    std::set<size_t> ids{0, 1};
    auto rep = check_right_multiplicative(c, ids);
    CHECK(rep.all());

    std::set<size_t> with_s{0, 1, 2};
    auto rep2 = check_right_multiplicative(c, with_s);
    CHECK(rep2.all());

    std::set<size_t> no_ids{2};
    auto rep3 = check_right_multiplicative(c, no_ids);
    CHECK(!rep3.identities);

    // cancellation category: S = {ids, s, t} passes all axioms
    auto cc = cancel_category();
    std::set<size_t> s3{0, 1, 2, 3, 4, 8};
    auto rep4 = check_right_multiplicative(cc, s3);
    CHECK(rep4.all());
    // S^x filtered for every object
    for (size_t x = 0; x < cc.objects.size(); ++x) CHECK(sx_filtered(cc, s3, x));
}

TEST_CASE("localized homs: pinned examples") {
    auto c = arrow_category();
    std::set<size_t> ids{0, 1};
    // identities only: Hom unchanged
    for (size_t x = 0; x < 2; ++x)
        for (size_t y = 0; y < 2; ++y)
            CHECK(localized_hom(c, ids, x, y).classes.size() == c.homset(x, y).size());

    // inverting the arrow makes Hom(b, a) a singleton
    std::set<size_t> with_s{0, 1, 2};
    CHECK(localized_hom(c, with_s, 1, 0).classes.size() == 1);
    CHECK(localized_hom(c, with_s, 0, 1).classes.size() == 1);
    CHECK(localized_hom(c, with_s, 0, 0).classes.size() == 1);

    // disjoint objects with empty homs stay empty
    FiniteCategory d;
    d.objects = {"p", "q"};
    d.arrows = {{"ip", 0, 0}, {"iq", 1, 1}};
    d.identity_of = {0, 1};
    d.comp[{0, 0}] = 0;
    d.comp[{1, 1}] = 1;
    d.validate();
    CHECK(localized_hom(d, {0, 1}, 0, 1).classes.empty());
}

TEST_CASE("localized homs agree with the zigzag oracle") {
    struct Case {
        FiniteCategory c;
        std::set<size_t> s;
    };
    std::vector<Case> cases;
    cases.push_back({arrow_category(), {0, 1, 2}});
    cases.push_back({arrow_category(), {0, 1}});
    {
        auto c3 = chain3();
        cases.push_back({c3, {0, 1, 2, 3, 4, 5}});
        cases.push_back({c3, {0, 1, 2}});
        cases.push_back({c3, {0, 1, 2, 3}});
    }
    cases.push_back({cancel_category(), {0, 1, 2, 3, 4, 8}});
    for (auto& [c, s] : cases) {
        auto rep = check_right_multiplicative(c, s);
        if (!rep.all()) continue;
        mdr_test::ZigzagOracle oracle{c, s};
        for (size_t x = 0; x < c.objects.size(); ++x) {
            CHECK(sx_filtered(c, s, x));
            for (size_t y = 0; y < c.objects.size(); ++y) {
                size_t roofs = localized_hom(c, s, x, y).classes.size();
                size_t words = oracle.hom_classes(x, y);
                CHECK(roofs == words);
            }
        }
    }
}

TEST_CASE("localized composition and explicit inverses") {
    auto c = arrow_category();
    std::set<size_t> s{0, 1, 2};
    // Q(s): a -> b as the co-roof (id_b, s); its inverse: b -> a as (s, id_b)
    auto qs = localized_of_arrow(c, 2);
    std::pair<size_t, size_t> sinv{2, 1};
    auto around_a = localized_compose(c, s, qs, sinv);     // a -> a
    auto around_b = localized_compose(c, s, sinv, qs);     // b -> b
    auto hom_aa = localized_hom(c, s, 0, 0);
    auto hom_bb = localized_hom(c, s, 1, 1);
    CHECK(hom_aa.class_of.at(around_a) ==
          hom_aa.class_of.at({c.identity_of[0], c.identity_of[0]}));
    CHECK(hom_bb.class_of.at(around_b) ==
          hom_bb.class_of.at({c.identity_of[1], c.identity_of[1]}));
    // associativity of localized composition on a chain of three classes
    auto c3 = chain3();
    std::set<size_t> all{0, 1, 2, 3, 4, 5};
    auto f1 = localized_of_arrow(c3, 3);
    auto f2 = localized_of_arrow(c3, 4);
    std::pair<size_t, size_t> inv_ac{5, 2};  // c -> a
    auto left = localized_compose(c3, all, localized_compose(c3, all, f1, f2), inv_ac);
    auto right = localized_compose(c3, all, f1, localized_compose(c3, all, f2, inv_ac));
    auto hom = localized_hom(c3, all, 0, 0);
    CHECK(hom.class_of.at(left) == hom.class_of.at(right));
}

TEST_CASE("additive categories and the Karoubi envelope") {
    auto cat = AdditiveCategory::matrix_category({2, 1});
    cat.validate();
    // identity idempotent: an isomorphic copy of the object
    KaroubiEnvelope env(cat, {{0, cat.identities[0]}, {1, cat.identities[1]}});
    CHECK(env.hom_basis(0, 0).size() == 4);
    CHECK(env.hom_basis(0, 1).size() == 2);

    // e = diag(1,0) on the rank-2 object splits off a rank-1 object
    QVec e(4, Rational(0));
    e[0] = Rational(1);  // E_{00} in row-major (r * 2 + c)
    CHECK(KaroubiEnvelope::is_idempotent(cat, 0, e));
    auto [ni, r, s] = env.split_idempotent(0, e);
    CHECK(env.hom_basis(ni, ni).size() == 1);
    // hom((A,e),(B,id)) has dimension 1: maps through the split line
    CHECK(env.hom_basis(ni, 1).size() == 1);

    // e and 1 - e give two summands whose endomorphism spaces add up to
    // the diagonal part
    QVec e2(4, Rational(0));
    e2[3] = Rational(1);
    auto [ni2, r2, s2] = env.split_idempotent(0, e2);
    CHECK(env.hom_basis(ni2, ni2).size() == 1);
    CHECK(env.hom_basis(ni, ni2).size() == 1);

    // exhaustive idempotent search on the rank-1 object finds 0 and 1 and
    // both split
    auto found = env.find_idempotents(1, 1);
    CHECK(found.size() == 2);
    for (auto& u : found) {
        if (u == QVec{Rational(0)}) continue;  // zero splits trivially
        auto [ii, rr, ss] = env.split_idempotent(1, u);
        (void)ii;
    }
}

TEST_CASE("total complex of a first-quadrant square with exact rows") {
    // rows 0 and 1 are both the exact complex Q -(id)-> Q; the total complex
    // has no cohomology in positive degrees
    DoubleComplex dc;
    dc.dims[{0, 0}] = dc.dims[{1, 0}] = dc.dims[{0, 1}] = dc.dims[{1, 1}] = 1;
    dc.dh[{0, 0}] = qm({{1}});
    dc.dh[{0, 1}] = qm({{1}});
    // zero vertical maps keep the squares commuting
    auto tot = total_complex(dc);
    auto h = tot.complex.cohomology_dims();
    for (auto [n, d] : h)
        if (n > 0) CHECK(d == 0);
}

TEST_CASE("every member of S becomes invertible in the localization") {
    std::vector<std::pair<FiniteCategory, std::set<size_t>>> cases;
    cases.push_back({arrow_category(), {0, 1, 2}});
    cases.push_back({chain3(), {0, 1, 2, 3, 4, 5}});
    cases.push_back({cancel_category(), {0, 1, 2, 3, 4, 8}});
    for (auto& [c, s] : cases) {
        for (size_t s0 : s) {
            size_t x = c.arrows[s0].src, y = c.arrows[s0].dst;
            // forward class (id_y, s0) and backward class (s0, id_y)
            auto fwd = localized_of_arrow(c, s0);
            std::pair<size_t, size_t> bwd{s0, c.identity_of[y]};
            auto around_x = localized_compose(c, s, fwd, bwd);
            auto around_y = localized_compose(c, s, bwd, fwd);
            auto hom_xx = localized_hom(c, s, x, x);
            auto hom_yy = localized_hom(c, s, y, y);
            CHECK(hom_xx.class_of.at(around_x) ==
                  hom_xx.class_of.at({c.identity_of[x], c.identity_of[x]}));
            CHECK(hom_yy.class_of.at(around_y) ==
                  hom_yy.class_of.at({c.identity_of[y], c.identity_of[y]}));
        }
    }
}
