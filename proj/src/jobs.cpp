#include "mdr/jobs.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "mdr/compactify.hpp"
#include "mdr/factor.hpp"
#include "mdr/godement.hpp"
#include "mdr/json_io.hpp"
#include "mdr/karoubi.hpp"

namespace mdr {

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrKind::Precondition, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrKind::Parse, std::string("json: ") + e.what());
    }
}

std::string run_cohomology(const JobSpec& spec) {
    json j = load_json(spec.inputs.at(0));
    CohomologyRecord rec;
    if (j.contains("model")) {
        rec = cech_p1(divisor_from_json(j), spec.window, true);
    } else {
        rec = affine_cohomology(scheme_from_json(j), spec.window);
    }
    return spec.json_output ? record_to_json(rec).dump(2) + "\n" : record_to_text(rec);
}

std::string run_transfer(const JobSpec& spec) {
    FiniteCorrespondence corr = correspondence_from_json(load_json(spec.inputs.at(0)));
    Form in = form_from_json(load_json(spec.inputs.at(1)), corr.target);
    Transfer tr(corr);
    Form out = tr.apply(in);
    std::string var = corr.source.vars.empty() ? "x" : corr.source.vars[0];
    if (spec.json_output) return form_to_json(out, var).dump(2) + "\n";
    std::ostringstream os;
    if (out.degree == 0) {
        os << (out.coeff.is_zero() ? std::string("0") : out.coeff[0].str()) << "\n";
    } else if (out.is_zero()) {
        os << "0\n";
    } else {
        RationalFunction c = out.coeff[0];
        std::string dx = "d" + var;
        std::string n = c.num().str();
        std::string lhs = (n == "1") ? dx : (n == "-1" ? "-" + dx : n + "*" + dx);
        if (c.den().is_constant() && c.den().constant_value().is_one())
            os << lhs << "\n";
        else
            os << lhs << "/" << c.den().str() << "\n";
    }
    return os.str();
}

std::string run_compose(const JobSpec& spec) {
    FiniteCorrespondence a = correspondence_from_json(load_json(spec.inputs.at(0)));
    FiniteCorrespondence b = correspondence_from_json(load_json(spec.inputs.at(1)));
    FiniteCorrespondence c = compose(a, b);
    if (spec.json_output) return correspondence_to_json(c).dump(2) + "\n";
    std::ostringstream os;
    for (const auto& [p, m] : c.components)
        os << m << " * [" << p.key() << "] (degree " << p.degree_over_source << ")\n";
    if (c.components.empty()) os << "0\n";
    return os.str();
}

std::string run_realize(const JobSpec& spec) {
    MotiveComplex m = motive_from_json(load_json(spec.inputs.at(0)));
    RealizationResult r = realize(m, spec.window);
    return spec.json_output ? realization_to_json(r).dump(2) + "\n" : realization_to_text(r);
}

std::string run_localize(const JobSpec& spec) {
    FiniteCategory c = category_from_json(load_json(spec.inputs.at(0)));
    json sj = load_json(spec.inputs.at(1));
    std::set<size_t> s;
    for (const auto& name : sj.at("arrows")) s.insert(c.arrow_by_name(name.get<std::string>()));
    auto rep = check_right_multiplicative(c, s);
    if (!rep.all())
        fail(ErrKind::Precondition, "S is not a right multiplicative system: " + rep.counterexample);
    auto obj = [&](const std::string& name) -> size_t {
        for (size_t i = 0; i < c.objects.size(); ++i)
            if (c.objects[i] == name) return i;
        fail(ErrKind::Precondition, "unknown object '" + name + "'");
    };
    size_t x = obj(spec.inputs.at(2)), y = obj(spec.inputs.at(3));
    auto hom = localized_hom(c, s, x, y);
    json out;
    out["classes"] = json::array();
    for (const auto& [s0, f] : hom.classes) {
        json roof;
        roof["denominator"] = c.arrows[s0].name;
        roof["numerator"] = c.arrows[f].name;
        out["classes"].push_back(roof);
    }
    out["count"] = hom.classes.size();
    if (spec.json_output) return out.dump(2) + "\n";
    std::ostringstream os;
    os << hom.classes.size() << " classes\n";
    for (const auto& [s0, f] : hom.classes)
        os << "  (" << c.arrows[f].name << ", " << c.arrows[s0].name << "^-1)\n";
    return os.str();
}

std::string run_godement(const JobSpec& spec) {
    FiniteSite site = site_from_json(load_json(spec.inputs.at(0)));
    Presheaf f = presheaf_from_json(load_json(spec.inputs.at(1)), site);
    auto h = cohomology_via_godement(site, f);
    json out;
    json dims = json::array();
    for (auto [n, d] : h) {
        json e;
        e["deg"] = n;
        e["dim"] = d;
        dims.push_back(e);
    }
    out["h"] = dims;
    if (spec.json_output) return out.dump(2) + "\n";
    std::ostringstream os;
    for (auto [n, d] : h) os << "H^" << n << ": dim " << d << "\n";
    return os.str();
}

}  // namespace

std::vector<SelftestLine> run_selftest(const std::string& filter) {
    std::vector<std::pair<std::string, std::function<bool()>>> checks;

    checks.emplace_back("resultant", [] {
        auto r = resultant(MultiPoly::parse("t^2-s", {{"s", "t"}}),
                           MultiPoly::parse("u-t^2", {{"t", "u"}}), "t");
        return r == MultiPoly::parse("(u-s)^2", {{"s", "u"}});
    });
    checks.emplace_back("groebner", [] {
        auto b = groebner_basis({MultiPoly::parse("y^2-x^3-x", {{"x", "y"}}),
                                 MultiPoly::parse("-3*x^2-1", {{"x", "y"}}),
                                 MultiPoly::parse("2*y", {{"x", "y"}})});
        return ideal_is_unit(b);
    });
    checks.emplace_back("factor", [] {
        auto parts = factor_over_q(UniPoly<Rational>(std::vector<Rational>{-1, 0, 0, 0, 1}));
        return parts.size() == 3;
    });
    checks.emplace_back("trace-table", [] {
        for (long n = 2; n <= 3; ++n) {
            auto base = AffineCurveScheme::affine_line("A1", "z");
            std::vector<RationalFunction> cs(static_cast<size_t>(n) + 1, RationalFunction(0));
            cs[0] = RationalFunction::parse("-z");
            cs[static_cast<size_t>(n)] = RationalFunction(1);
            auto ext = FiniteAlgebraExtension::make(base, "t", El(std::move(cs)));
            const FuncField& k = ext.tower;
            El tm = El::constant(RationalFunction(1));
            for (long m = 0; m <= 6; ++m) {
                if (m > 0) tm = k.mul(tm, k.tgen());
                Form tr = trace_forms(ext, Form::dt(k, tm));
                bool zero = (m + 1) % n != 0;
                if (zero != tr.is_zero()) return false;
            }
        }
        return true;
    });
    checks.emplace_back("compose", [] {
        auto X = AffineCurveScheme::affine_line("X", "z");
        auto g2 = graph(X, X, {RationalFunction(MultiPoly::parse("z^2", {{"z"}}))});
        auto g3 = graph(X, X, {RationalFunction(MultiPoly::parse("z^3", {{"z"}}))});
        auto g6 = graph(X, X, {RationalFunction(MultiPoly::parse("z^6", {{"z"}}))});
        return compose(g3, g2) == g6;
    });
    checks.emplace_back("sym", [] {
        ZeroCycle g;
        g.ambient = AffineCurveScheme::affine_line("A1", "T");
        g.points.push_back({UniPoly<Rational>(std::vector<Rational>{-2, 0, 1}), 1});
        auto e = sym_point(g);
        return e.size() == 2 && e[0].is_zero() && e[1] == Rational(-2);
    });
    checks.emplace_back("cohomology-gm", [] {
        auto rec = affine_cohomology(AffineCurveScheme::gm("Gm", "z"), 8);
        return rec.dim(1) == 1 && rec.h[1].basis[0] == "dz/z";
    });
    checks.emplace_back("cech-p1", [] {
        LogDivisor empty;
        auto rec = cech_p1(empty, 8);
        return rec.dim(0) == 1 && rec.dim(1) == 0 && rec.dim(2) == 1;
    });
    checks.emplace_back("mayer-vietoris", [] { return mayer_vietoris_p1(8).exact; });
    checks.emplace_back("kunneth", [] {
        auto gm = AffineCurveScheme::gm("Gm", "z");
        auto rep = kunneth(gm, gm, 8);
        return rep.dims_match && rep.product_dims[1] == 2;
    });
    checks.emplace_back("homotopy", [] {
        return homotopy_invariance_check(AffineCurveScheme::gm("Gm", "z"), 8);
    });
    checks.emplace_back("residue", [] {
        return residue_at(RationalFunction::parse("1/z"), "z", Rational(0)) == Rational(1) &&
               residue_at_infinity(RationalFunction::parse("1/z"), "z") == Rational(-1);
    });
    checks.emplace_back("localization", [] {
        FiniteCategory c;
        c.objects = {"a", "b"};
        c.arrows = {{"ia", 0, 0}, {"ib", 1, 1}, {"s", 0, 1}};
        c.identity_of = {0, 1};
        c.comp[{0, 0}] = 0;
        c.comp[{1, 1}] = 1;
        c.comp[{2, 0}] = 2;
        c.comp[{1, 2}] = 2;
        std::set<size_t> s{0, 1, 2};
        return check_right_multiplicative(c, s).all() &&
               localized_hom(c, s, 1, 0).classes.size() == 1;
    });
    checks.emplace_back("karoubi", [] {
        auto cat = AdditiveCategory::matrix_category({2});
        KaroubiEnvelope env(cat, {{0, cat.identities[0]}});
        QVec e(4, Rational(0));
        e[0] = Rational(1);
        auto [ni, r, s] = env.split_idempotent(0, e);
        return env.hom_basis(ni, ni).size() == 1;
    });
    checks.emplace_back("godement", [] {
        auto s = FiniteSite::make({"a", "b", "c", "d"}, {{2, 0}, {2, 1}, {3, 0}, {3, 1}});
        auto h = cohomology_via_godement(s, Presheaf::constant_sheaf(s, 1));
        return h[0] == 1 && h[1] == 1;
    });
    checks.emplace_back("realize-tate", [] {
        auto r = realize(MotiveComplex::tate_object(), 8);
        return r.dim(0) == 1 && r.hodge_degree_of(0) == 1 && r.weight_of(0) == 2;
    });
    checks.emplace_back("window-stability", [] {
        for (long w : {6L, 8L}) {
            auto rec = affine_cohomology(
                AffineCurveScheme::punctured_line("P", "z", {Rational(0), Rational(1)}), w);
            if (rec.dim(1) != 2) return false;
        }
        return true;
    });

    std::vector<SelftestLine> out;
    for (auto& [name, fn] : checks) {
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        SelftestLine line;
        line.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            line.passed = fn();
        } catch (const std::exception&) {
            line.passed = false;
        }
        line.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        out.push_back(std::move(line));
    }
    return out;
}

JobResult run_job(const JobSpec& spec) {
    JobResult res;
    try {
        if (spec.command == "cohomology") {
            res.output = run_cohomology(spec);
        } else if (spec.command == "transfer") {
            res.output = run_transfer(spec);
        } else if (spec.command == "compose") {
            res.output = run_compose(spec);
        } else if (spec.command == "realize") {
            res.output = run_realize(spec);
        } else if (spec.command == "localize") {
            res.output = run_localize(spec);
        } else if (spec.command == "godement") {
            res.output = run_godement(spec);
        } else if (spec.command == "selftest") {
            auto lines = run_selftest(spec.filter);
            std::ostringstream os;
            bool all = true;
            for (const auto& l : lines) {
                os << (l.passed ? "[ ok ]" : "[FAIL]") << " " << l.name << " (" << l.millis
                   << " ms)\n";
                all = all && l.passed;
            }
            os << (all ? "selftest passed" : "selftest FAILED") << " (" << lines.size()
               << " checks)\n";
            res.output = os.str();
            if (!all) res.exit_code = 2;
        } else {
            res.exit_code = 2;
            res.error = "unknown command '" + spec.command + "'";
        }
    } catch (const Error& e) {
        res.exit_code = e.user_fault() ? 2 : 3;
        res.error = e.what();
    } catch (const std::exception& e) {
        res.exit_code = 2;
        res.error = e.what();
    }
    return res;
}

}  // namespace mdr
