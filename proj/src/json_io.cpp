#include "mdr/json_io.hpp"

#include <sstream>

namespace mdr {

namespace {

std::vector<std::string> str_list(const json& j) {
    std::vector<std::string> out;
    for (const auto& e : j) out.push_back(e.get<std::string>());
    return out;
}

[[noreturn]] void bad(const std::string& what) { fail(ErrKind::Parse, what); }

}  // namespace

AffineCurveScheme scheme_from_json(const json& j) {
    AffineCurveScheme s;
    if (!j.is_object()) bad("scheme must be an object");
    s.label = j.value("label", std::string("X"));
    if (j.contains("vars")) s.vars = str_list(j.at("vars"));
    if (j.contains("eqs"))
        for (const auto& e : j.at("eqs"))
            s.equations.push_back(MultiPoly::parse(e.get<std::string>(), s.vars));
    if (j.contains("invert"))
        for (const auto& e : j.at("invert"))
            s.inverted.push_back(MultiPoly::parse(e.get<std::string>(), s.vars));
    s.validate();
    return s;
}

json scheme_to_json(const AffineCurveScheme& s) {
    json j;
    j["label"] = s.label;
    j["vars"] = s.vars;
    json eqs = json::array(), inv = json::array();
    for (const auto& e : s.equations) eqs.push_back(e.str());
    for (const auto& e : s.inverted) inv.push_back(e.str());
    j["eqs"] = eqs;
    j["invert"] = inv;
    return j;
}

FiniteCorrespondence correspondence_from_json(const json& j) {
    if (!j.is_object()) bad("correspondence must be an object");
    AffineCurveScheme src = scheme_from_json(j.at("source"));
    AffineCurveScheme dst = scheme_from_json(j.at("target"));
    FiniteCorrespondence out = FiniteCorrespondence::zero(src, dst);
    ProductCoords pc = product_coords(src, dst);
    for (const auto& comp : j.at("components")) {
        long mult = comp.value("mult", 1L);
        auto ideals = comp.at("ideal");
        if (ideals.size() != 1) bad("components need exactly one generator in this schema");
        MultiPoly gen = MultiPoly::parse(ideals[0].get<std::string>(), pc.all);
        out.components.emplace_back(PrimeCorrespondence::from_generator(src, dst, gen), mult);
    }
    out.normalize();
    return out;
}

json correspondence_to_json(const FiniteCorrespondence& c) {
    json j;
    j["source"] = scheme_to_json(c.source);
    j["target"] = scheme_to_json(c.target);
    json comps = json::array();
    for (const auto& [p, m] : c.components) {
        json cj;
        json ideal = json::array();
        for (const auto& g : p.ideal) ideal.push_back(g.str());
        cj["ideal"] = ideal;
        cj["mult"] = m;
        cj["degree"] = p.degree_over_source;
        comps.push_back(cj);
    }
    j["components"] = comps;
    return j;
}

Form form_from_json(const json& j, const AffineCurveScheme& on) {
    if (on.vars.size() != 1) bad("forms are parsed on one-coordinate schemes");
    long degree = j.value("degree", 0L);
    Form acc = Form::zero(static_cast<int>(degree));
    FuncField k(on.vars[0]);
    for (const auto& t : j.at("terms")) {
        RationalFunction c = RationalFunction::parse(t.at("coeff").get<std::string>(), on.vars);
        std::vector<std::string> wedge;
        if (t.contains("wedge")) wedge = str_list(t.at("wedge"));
        if (degree == 0) {
            if (!wedge.empty()) bad("degree-0 terms carry no wedge factors");
            acc = form_add(k, acc, Form::function(El::constant(c)));
        } else if (degree == 1) {
            if (wedge.size() != 1 || wedge[0] != "d" + on.vars[0])
                bad("degree-1 terms need wedge [\"d" + on.vars[0] + "\"]");
            acc = form_add(k, acc, Form::dx(El::constant(c)));
        } else {
            bad("only degrees 0 and 1 are supported on curves");
        }
    }
    return acc;
}

json form_to_json(const Form& f, const std::string& var) {
    json j;
    j["degree"] = f.degree;
    json terms = json::array();
    if (!f.coeff.is_zero()) {
        json t;
        t["coeff"] = f.coeff.degree() <= 0 ? f.coeff[0].str() : f.coeff.str();
        if (f.degree == 1) t["wedge"] = json::array({"d" + var});
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

LogDivisor divisor_from_json(const json& j) {
    LogDivisor d;
    d.model = j.value("model", std::string("P1"));
    if (j.contains("points"))
        for (const auto& p : j.at("points")) {
            std::string ideal = p.at("ideal").get<std::string>();
            if (ideal == "inf") {
                d.points.push_back(BoundaryPoint::infinity());
            } else {
                MultiPoly q = MultiPoly::parse(ideal);
                auto vars = q.pruned().vars();
                if (vars.size() != 1 || q.degree_in(vars[0]) != 1)
                    bad("divisor points need linear ideals or \"inf\"");
                auto cs = q.coeffs_in(vars[0]);
                Rational a = -cs[0].constant_value() / cs[1].constant_value();
                d.points.push_back(BoundaryPoint::at(a));
            }
        }
    return d;
}

json record_to_json(const CohomologyRecord& r) {
    json j;
    json hs = json::array();
    for (const auto& [n, d] : r.h) {
        json e;
        e["deg"] = n;
        e["dim"] = d.dim;
        e["basis"] = d.basis;
        e["F"] = d.F;
        e["W"] = d.W;
        hs.push_back(e);
    }
    j["h"] = hs;
    j["window"] = r.window;
    return j;
}

std::string record_to_text(const CohomologyRecord& r) {
    std::ostringstream os;
    for (const auto& [n, d] : r.h) {
        os << "H^" << n << ": dim " << d.dim;
        if (!d.basis.empty()) {
            os << "  basis:";
            for (const auto& b : d.basis) os << " " << b;
        }
        os << "  F:";
        for (long f : d.F) os << " " << f;
        os << "  W:";
        for (long w : d.W) os << " " << w;
        os << "\n";
    }
    return os.str();
}

FiniteSite site_from_json(const json& j) {
    auto points = str_list(j.at("points"));
    std::vector<std::pair<size_t, size_t>> rel;
    auto locate = [&](const json& e) -> size_t {
        if (e.is_number_integer()) return e.get<size_t>();
        std::string name = e.get<std::string>();
        for (size_t i = 0; i < points.size(); ++i)
            if (points[i] == name) return i;
        bad("unknown point '" + name + "'");
    };
    if (j.contains("leq"))
        for (const auto& e : j.at("leq")) rel.emplace_back(locate(e[0]), locate(e[1]));
    return FiniteSite::make(points, rel);
}

Presheaf presheaf_from_json(const json& j, const FiniteSite& site) {
    if (j.contains("constant")) return Presheaf::constant_sheaf(site, j.at("constant").get<long>());
    Presheaf f;
    f.site = &site;
    auto mask_of = [&](const std::string& key) -> uint32_t {
        if (key.empty()) return 0;
        uint32_t m = 0;
        std::stringstream ss(key);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            bool found = false;
            for (size_t i = 0; i < site.points.size(); ++i)
                if (site.points[i] == tok) {
                    m |= (1u << i);
                    found = true;
                }
            if (!found) bad("unknown point '" + tok + "' in open");
        }
        return m;
    };
    for (uint32_t u : site.opens) f.dims[u] = 0;
    for (const auto& [key, val] : j.at("dims").items()) f.dims[mask_of(key)] = val.get<long>();
    if (j.contains("restrictions"))
        for (const auto& [key, val] : j.at("restrictions").items()) {
            auto bar = key.find('|');
            if (bar == std::string::npos) bad("restriction keys look like \"U|V\"");
            uint32_t u = mask_of(key.substr(0, bar)), v = mask_of(key.substr(bar + 1));
            QMat m(val.size(), val.empty() ? 0 : val[0].size());
            for (size_t r = 0; r < val.size(); ++r)
                for (size_t c = 0; c < val[r].size(); ++c)
                    m(r, c) = Rational::parse(val[r][c].is_string()
                                                  ? val[r][c].get<std::string>()
                                                  : std::to_string(val[r][c].get<long>()));
            f.res[{u, v}] = std::move(m);
        }
    f.validate();
    return f;
}

FiniteCategory category_from_json(const json& j) {
    FiniteCategory c;
    c.objects = str_list(j.at("objects"));
    auto obj_index = [&](const std::string& name) -> size_t {
        for (size_t i = 0; i < c.objects.size(); ++i)
            if (c.objects[i] == name) return i;
        bad("unknown object '" + name + "'");
    };
    for (const auto& a : j.at("arrows"))
        c.arrows.push_back({a.at("name").get<std::string>(),
                            obj_index(a.at("src").get<std::string>()),
                            obj_index(a.at("dst").get<std::string>())});
    for (const auto& idname : j.at("identities"))
        c.identity_of.push_back(c.arrow_by_name(idname.get<std::string>()));
    for (const auto& [key, val] : j.at("comp").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) bad("composition keys look like \"g,f\"");
        size_t g = c.arrow_by_name(key.substr(0, comma));
        size_t f = c.arrow_by_name(key.substr(comma + 1));
        c.comp[{g, f}] = c.arrow_by_name(val.get<std::string>());
    }
    c.validate();
    return c;
}

MotiveComplex motive_from_json(const json& j) {
    MotiveComplex m;
    std::map<std::string, AffineCurveScheme> schemes;
    if (j.contains("schemes"))
        for (const auto& [name, sj] : j.at("schemes").items())
            schemes.emplace(name, scheme_from_json(sj));
    auto find_scheme = [&](const std::string& name) -> const AffineCurveScheme& {
        auto it = schemes.find(name);
        if (it == schemes.end()) bad("unknown scheme label '" + name + "'");
        return it->second;
    };
    for (const auto& [deg, termsj] : j.at("terms").items()) {
        long d = std::stol(deg);
        for (const auto& t : termsj) {
            MotiveObject obj;
            std::string kind = t.value("kind", std::string("affine"));
            if (kind == "p1") {
                obj.kind = MotiveObject::ProjectiveLine;
            } else if (kind == "affine_times_line") {
                obj.kind = MotiveObject::AffineTimesLine;
                obj.scheme = find_scheme(t.at("scheme").get<std::string>());
            } else {
                obj.kind = MotiveObject::Affine;
                obj.scheme = find_scheme(t.at("scheme").get<std::string>());
            }
            m.terms[d].push_back(std::move(obj));
        }
    }
    if (j.contains("d"))
        for (const auto& [deg, rows] : j.at("d").items()) {
            long d = std::stol(deg);
            for (const auto& row : rows) {
                std::vector<MotiveEntry> r;
                for (const auto& e : row) {
                    MotiveEntry entry;
                    if (e.is_number() && e.get<long>() == 0) {
                        entry.kind = MotiveEntry::Zero;
                    } else {
                        std::string kind = e.at("kind").get<std::string>();
                        entry.scale = e.value("scale", 1L);
                        if (kind == "corr") {
                            entry.kind = MotiveEntry::Corr;
                            entry.corr = correspondence_from_json(e.at("corr"));
                        } else if (kind == "to_point") {
                            entry.kind = MotiveEntry::ToPoint;
                        } else if (kind == "line_projection") {
                            entry.kind = MotiveEntry::LineProjection;
                        } else {
                            bad("unknown entry kind '" + kind + "'");
                        }
                    }
                    r.push_back(std::move(entry));
                }
                m.diff[d].push_back(std::move(r));
            }
        }
    m.twist = j.value("twist", 0L);
    m.shift = j.value("shift", 0L);
    return m;
}

json realization_to_json(const RealizationResult& r) {
    json j = record_to_json(r.record);
    j["f_shift"] = r.f_shift;
    j["w_shift"] = r.w_shift;
    j["provenance"] = r.provenance;
    return j;
}

std::string realization_to_text(const RealizationResult& r) {
    std::ostringstream os;
    os << record_to_text(r.record);
    if (r.f_shift || r.w_shift)
        os << "twist: F by " << r.f_shift << ", W by " << r.w_shift << "\n";
    for (const auto& p : r.provenance) os << "# " << p << "\n";
    return os.str();
}

}  // namespace mdr
