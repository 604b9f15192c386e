#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mdr/motive.hpp"

using namespace mdr;

namespace {
MotiveObject affine_obj(const AffineCurveScheme& s) {
    MotiveObject o;
    o.scheme = s;
    return o;
}
}  // namespace

TEST_CASE("realize a single affine term") {
    auto gm = AffineCurveScheme::gm("Gm", "z");
    auto r = realize(MotiveComplex::single(affine_obj(gm)), 8);
    CHECK(r.dim(0) == 1);
    CHECK(r.dim(1) == 1);
    CHECK(r.fdim(1, 1) == 1);   // F^1 H^1 = H^1
    CHECK(r.weight_of(1) == 2);
    CHECK(r.hodge_degree_of(1) == 1);
    CHECK(r.weight_of(0) == 0);

    auto e = AffineCurveScheme::plane_curve("E", "x", "y", MultiPoly::parse("y^2-x^3-x"));
    auto re = realize(MotiveComplex::single(affine_obj(e)), 8);
    CHECK(re.dim(1) == 2);
    CHECK(re.weight_of(1) == 1);  // compact-type H^1
}

TEST_CASE("Tate normalization: reduced P1 motive shifted by -2") {
    auto r = realize(MotiveComplex::tate_object(), 8);
    long total = 0;
    for (const auto& [n, d] : r.record.h) total += d.dim;
    CHECK(total == 1);
    CHECK(r.dim(0) == 1);
    CHECK(r.hodge_degree_of(0) == 1);
    CHECK(r.weight_of(0) == 2);
}

TEST_CASE("tate twist bookkeeping") {
    auto pt = AffineCurveScheme::spec_q();
    auto unit = realize(MotiveComplex::single(affine_obj(pt)), 6);
    CHECK(unit.dim(0) == 1);
    CHECK(unit.hodge_degree_of(0) == 0);
    auto tw = tate_twist(unit, 1);
    CHECK(tw.hodge_degree_of(0) == 1);
    CHECK(tw.weight_of(0) == 2);
    auto back = tate_twist(tw, -1);
    for (long p = -2; p <= 2; ++p) CHECK(back.fdim(0, p) == unit.fdim(0, p));
    for (long m = -2; m <= 4; ++m) CHECK(back.wdim(0, m) == unit.wdim(0, m));
    auto tw0 = tate_twist(unit, 0);
    CHECK(tw0.fdim(0, 0) == unit.fdim(0, 0));
}

TEST_CASE("Mayer-Vietoris cone realizes the projective line") {
    auto u = AffineCurveScheme::affine_line("U", "z");
    auto v = AffineCurveScheme::affine_line("V", "w");
    auto w = AffineCurveScheme::gm("W", "z");
    // inclusions: W -> U is z -> z; W -> V is z -> 1/z
    auto ju = graph(w, u, {RationalFunction(MultiPoly::var("z", {"z"}))});
    auto jv = graph(w, v, {RationalFunction(MultiPoly::constant(Rational(1), {"z"}),
                                            MultiPoly::var("z", {"z"}))});
    auto cone = MotiveComplex::mayer_vietoris_cone(w, u, v, ju, jv);
    auto r = realize(cone, 8);
    // quasi-isomorphic to realize(P1): dims (1, 0, 1)
    CHECK(r.dim(0) == 1);
    CHECK(r.dim(1) == 0);
    CHECK(r.dim(2) == 1);
    CHECK(r.fdim(2, 1) == 1);  // F^1 H^2 = H^2
    CHECK(r.weight_of(2) == 2);
    CHECK(r.weight_of(0) == 0);

    // direct comparison with the Cech realization of P1
    MotiveObject p1;
    p1.kind = MotiveObject::ProjectiveLine;
    auto rp = realize(MotiveComplex::single(p1), 8);
    for (long n = 0; n <= 2; ++n) {
        CHECK(r.dim(n) == rp.dim(n));
        for (long p = 0; p <= 2; ++p) CHECK(r.fdim(n, p) == rp.fdim(n, p));
        CHECK((r.dim(n) == 0 || r.weight_of(n) == rp.weight_of(n)));
    }
}

TEST_CASE("homotopy descent: the line cone is acyclic") {
    std::string why;
    CHECK(check_homotopy_descent(AffineCurveScheme::spec_q(), 8, &why));
    INFO(why);
    CHECK(check_homotopy_descent(AffineCurveScheme::gm("Gm", "z"), 8, &why));
    INFO(why);
    CHECK(check_homotopy_descent(
        AffineCurveScheme::punctured_line("A1-01", "z", {Rational(0), Rational(1)}), 8, &why));
    INFO(why);
    CHECK(check_homotopy_descent(AffineCurveScheme::affine_line("A1", "z"), 8, &why));
}

TEST_CASE("tensor comparison") {
    auto gm = AffineCurveScheme::gm("Gm", "z");
    auto rep = check_tensor(gm, gm, 8);
    CHECK(rep.dims_match);
    CHECK(rep.products_independent);
    CHECK(rep.hodge_adds);
    CHECK(rep.weights_add);
    CHECK(rep.product_dims[0] == 1);
    CHECK(rep.product_dims[1] == 2);
    CHECK(rep.product_dims[2] == 1);
    // H^2 generator carries weight 4 = 2 + 2
    REQUIRE(rep.generator_steps[2].size() == 1);
    CHECK(rep.generator_steps[2][0].second == 4);

    // X (x) unit = X
    auto pt = AffineCurveScheme::spec_q();
    auto rep2 = check_tensor(gm, pt, 8);
    CHECK(rep2.dims_match);
    CHECK(rep2.product_dims[1] == 1);

    // Gm (x) A^1 = Gm
    auto line = AffineCurveScheme::affine_line("A1", "w");
    auto rep3 = check_tensor(gm, line, 8);
    CHECK(rep3.dims_match);
    CHECK(rep3.product_dims[1] == 1);
}

TEST_CASE("realization functoriality on H^1 matrices") {
    auto gm = AffineCurveScheme::gm("Gm", "s");
    auto gm2 = AffineCurveScheme::gm("Gm2", "t");
    auto gm3 = AffineCurveScheme::gm("Gm3", "u");
    auto mk_graph = [&](const AffineCurveScheme& a, const AffineCurveScheme& b, long n) {
        return graph(a, b, {RationalFunction(MultiPoly::var(a.vars[0], a.vars).pow(n))});
    };
    auto mk_transpose = [&](const AffineCurveScheme& a, const AffineCurveScheme& b, long n) {
        ProductCoords pc = product_coords(a, b);
        MultiPoly gen = MultiPoly::var(pc.target[0], pc.all).pow(n) -
                        MultiPoly::var(pc.source[0], pc.all);
        return FiniteCorrespondence::single(PrimeCorrespondence::from_generator(a, b, gen));
    };
    int checked = 0;
    for (long na = 1; na <= 3; ++na) {
        for (long nb = 1; nb <= 3; ++nb) {
            for (int kinds = 0; kinds < 4; ++kinds) {
                auto alpha = (kinds & 1) ? mk_transpose(gm, gm2, na) : mk_graph(gm, gm2, na);
                auto beta = (kinds & 2) ? mk_transpose(gm2, gm3, nb) : mk_graph(gm2, gm3, nb);
                auto comp = compose(alpha, beta);
                QMat lhs = transfer_h1_matrix(comp, 8);
                QMat rhs = transfer_h1_matrix(alpha, 8) * transfer_h1_matrix(beta, 8);
                CHECK(lhs == rhs);
                ++checked;
            }
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("d^2 = 0 is enforced on motive differentials") {
    auto gm = AffineCurveScheme::gm("Gm", "z");
    MotiveComplex bad;
    bad.terms[0] = {affine_obj(gm)};
    bad.terms[1] = {affine_obj(gm)};
    bad.terms[2] = {affine_obj(gm)};
    MotiveEntry e;
    e.kind = MotiveEntry::Corr;
    e.corr = identity_correspondence(gm);
    bad.diff[0] = {{e}};
    bad.diff[1] = {{e}};
    CHECK_THROWS_AS(realize(bad, 6), Error);
}
