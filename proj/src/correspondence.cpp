#include "mdr/correspondence.hpp"

#include <algorithm>

#include "mdr/factor.hpp"

namespace mdr {

namespace {

// Generic-fiber coefficient field of the source: Q (no variables) or Q(x).
// Anything else (etale extensions, plane curves) is outside the supported
// composition class.
void require_composable_source(const AffineCurveScheme& x) {
    if (!x.equations.empty() || x.vars.size() > 1)
        fail(ErrKind::UnsupportedPresentation,
             "source '" + x.label + "' has no rational or simple transcendental function field");
}

MultiPoly rename_var(const MultiPoly& p, const std::string& from, const std::string& to,
                     const std::vector<std::string>& ctx) {
    if (from == to) return p.on_vars(ctx);
    return p.substitute(from, MultiPoly::var(to, ctx)).on_vars(ctx);
}

// Clears denominators of a monic polynomial over Q(x) into an
// integer-primitive bivariate generator.
MultiPoly clear_fiber_poly(const UniPoly<RationalFunction>& pi, const std::string& tvar,
                           const std::vector<std::string>& vars) {
    MultiPoly den = MultiPoly::constant(Rational(1), vars);
    for (const auto& c : pi.coeffs()) {
        RationalFunction q = RationalFunction(den.pruned()) * RationalFunction(c.den());
        den = (q.num() * q.den()).on_vars(vars);  // product, reduction not needed
        den = *MultiPoly::exact_div(den, poly_gcd(den, den));  // normalize monic-ish
    }
    // Simpler: use the lcm accumulated as a plain product then rely on
    // integer_primitive + prime generator invariants downstream.
    MultiPoly acc(vars);
    MultiPoly t = MultiPoly::var(tvar, vars);
    for (size_t i = pi.coeffs().size(); i-- > 0;) {
        RationalFunction c = pi[i] * RationalFunction(den.pruned());
        require_invariant(c.is_polynomial(), "denominator clearing failed");
        acc = acc * t + c.num().on_vars(vars);
    }
    return acc.integer_primitive();
}

}  // namespace

UniPoly<RationalFunction> PrimeCorrespondence::fiber_poly() const {
    if (target.vars.size() != 1 || ideal.size() != 1)
        fail(ErrKind::UnsupportedPresentation,
             "no single-generator fiber presentation for component " + key());
    ProductCoords pc = product_coords(source, target);
    auto up = as_unipoly_over_field(ideal[0].on_vars(pc.all), pc.target[0]);
    return up.monic();
}

std::string PrimeCorrespondence::key() const {
    std::string k;
    for (const auto& g : ideal) k += (k.empty() ? "" : ";") + g.str();
    return k.empty() ? "<structure>" : k;
}

PrimeCorrespondence PrimeCorrespondence::from_generator(const AffineCurveScheme& source,
                                                        const AffineCurveScheme& target,
                                                        const MultiPoly& gen) {
    source.validate();
    target.validate();
    require_composable_source(source);
    if (target.vars.size() != 1)
        fail(ErrKind::UnsupportedPresentation, "from_generator needs a single-coordinate target");
    ProductCoords pc = product_coords(source, target);
    PrimeCorrespondence p;
    p.source = source;
    p.target = target;
    MultiPoly g = gen.on_vars(pc.all).integer_primitive();
    if (g.is_zero() || g.degree_in(pc.target[0]) < 1)
        fail(ErrKind::UnsupportedInput, "generator does not involve the target coordinate");
    p.ideal = {g};

    const std::string& u = pc.target[0];
    auto cs = g.coeffs_in(u);
    long du = g.degree_in(u);
    // Finite over the source: the leading u-coefficient is a unit on X.
    if (!invertible_on(cs[static_cast<size_t>(du)].pruned(), source) &&
        !cs[static_cast<size_t>(du)].is_constant())
        fail(ErrKind::UnsupportedInput,
             "cycle not finite over source: leading coefficient " +
                 cs[static_cast<size_t>(du)].str() + " is not a unit");
    // No vertical components: content in u is trivial.
    MultiPoly cont(g.vars());
    for (const auto& c : cs)
        if (!c.is_zero()) cont = cont.is_zero() ? c : poly_gcd(cont, c);
    if (!cont.is_constant())
        fail(ErrKind::UnsupportedInput, "cycle has a component not finite over the source");

    // Integral: irreducible over k(X).
    auto up = as_unipoly_over_field(g, u);
    bool constant_coeffs = source.vars.empty();
    if (!constant_coeffs) {
        bool uses = false;
        for (const auto& c : up.coeffs())
            if (c.num().depends_on(source.vars[0]) || c.den().depends_on(source.vars[0]))
                uses = true;
        constant_coeffs = !uses;
    }
    size_t nparts = 0;
    long maxmult = 1;
    if (constant_coeffs) {
        std::vector<Rational> qc;
        for (const auto& c : up.coeffs()) qc.push_back(c.constant_value());
        auto parts = factor_over_q(UniPoly<Rational>(std::move(qc)));
        nparts = parts.size();
        for (const auto& pt : parts) maxmult = std::max(maxmult, pt.mult);
    } else {
        auto parts = factor_over_qs(up, source.vars[0]);
        nparts = parts.size();
        for (const auto& pt : parts) maxmult = std::max(maxmult, pt.mult);
    }
    if (nparts != 1 || maxmult != 1)
        fail(ErrKind::UnsupportedInput, "generator " + g.str() + " is not integral");

    // The cycle must land inside the target: divide the etale equation,
    // avoid the target's removed locus.
    auto fp = up.monic();
    if (!target.equations.empty()) {
        auto m = as_unipoly_over_field(target.equations[0].on_vars({target.vars[0]}), target.vars[0]);
        // rename target var: fiber poly is in u over k(X); m is in the same
        // coordinate, so direct division applies.
        if (!(UniPoly<RationalFunction>::divmod(m, fp).second.is_zero()))
            fail(ErrKind::UnsupportedInput, "cycle does not lie on the etale target");
    }
    for (const auto& inv : target.inverted) {
        MultiPoly renamed = rename_var(inv.on_vars(target.vars), target.vars[0], u, pc.all);
        auto invp = as_unipoly_over_field(renamed, u);
        if (upoly_gcd(fp, invp).degree() > 0)
            fail(ErrKind::UnsupportedInput, "cycle meets the removed locus of the target");
    }

    p.degree_over_source = du;
    return p;
}

PrimeCorrespondence PrimeCorrespondence::over_component(const AffineCurveScheme& source,
                                                        const AffineCurveScheme& target,
                                                        const MultiPoly& component_minpoly,
                                                        const MultiPoly& gen) {
    source.validate();
    target.validate();
    if (source.vars.size() != 1 || source.equations.empty() || source.dim() != 0)
        fail(ErrKind::UnsupportedPresentation, "over_component needs an etale source");
    if (target.vars.size() != 1)
        fail(ErrKind::UnsupportedPresentation, "over_component needs a single-coordinate target");
    if (!MultiPoly::exact_div(source.equations[0].on_vars(source.vars),
                              component_minpoly.on_vars(source.vars))
             .has_value())
        fail(ErrKind::Precondition, "component polynomial does not divide the source equation");
    ProductCoords pc = product_coords(source, target);
    PrimeCorrespondence p;
    p.source = source;
    p.target = target;
    MultiPoly g = gen.on_vars(pc.all).integer_primitive();
    long du = g.degree_in(pc.target[0]);
    if (du < 1) fail(ErrKind::UnsupportedInput, "generator does not involve the target coordinate");
    // leading u-coefficient must be invertible modulo the component
    MultiPoly lc = g.coeffs_in(pc.target[0])[static_cast<size_t>(du)];
    if (lc.pruned().total_degree() >= 1) {
        MultiPoly res = resultant(lc, component_minpoly.on_vars(pc.all), source.vars[0]);
        if (res.is_zero())
            fail(ErrKind::UnsupportedInput, "cycle not finite over its component");
    } else if (lc.is_zero()) {
        fail(ErrKind::UnsupportedInput, "zero generator");
    }
    p.ideal = {component_minpoly.on_vars(pc.all).integer_primitive(), g};
    p.degree_over_source = du;
    return p;
}

bool FiniteCorrespondence::is_effective() const {
    for (const auto& [p, m] : components)
        if (m <= 0) return false;
    return true;
}

void FiniteCorrespondence::normalize() {
    std::map<std::string, std::pair<PrimeCorrespondence, long>> merged;
    for (auto& [p, m] : components) {
        auto it = merged.find(p.key());
        if (it == merged.end())
            merged.emplace(p.key(), std::make_pair(p, m));
        else
            it->second.second += m;
    }
    components.clear();
    for (auto& [k, pm] : merged)
        if (pm.second != 0) components.push_back(pm);
}

FiniteCorrespondence FiniteCorrespondence::scaled(long n) const {
    FiniteCorrespondence r = *this;
    if (n == 0) {
        r.components.clear();
        return r;
    }
    for (auto& [p, m] : r.components) m *= n;
    return r;
}

FiniteCorrespondence operator+(const FiniteCorrespondence& a, const FiniteCorrespondence& b) {
    if (!(a.source == b.source) || !(a.target == b.target))
        fail(ErrKind::Precondition, "sum of correspondences with different ambient");
    FiniteCorrespondence r = a;
    r.components.insert(r.components.end(), b.components.begin(), b.components.end());
    r.normalize();
    return r;
}

bool operator==(const FiniteCorrespondence& a, const FiniteCorrespondence& b) {
    if (!(a.source == b.source) || !(a.target == b.target)) return false;
    FiniteCorrespondence x = a, y = b;
    x.normalize();
    y.normalize();
    if (x.components.size() != y.components.size()) return false;
    for (size_t i = 0; i < x.components.size(); ++i) {
        if (x.components[i].second != y.components[i].second) return false;
        if (x.components[i].first.key() != y.components[i].first.key()) return false;
    }
    return true;
}

FiniteCorrespondence FiniteCorrespondence::zero(const AffineCurveScheme& s,
                                                const AffineCurveScheme& t) {
    FiniteCorrespondence r;
    r.source = s;
    r.target = t;
    return r;
}

FiniteCorrespondence FiniteCorrespondence::single(PrimeCorrespondence p, long mult) {
    FiniteCorrespondence r;
    r.source = p.source;
    r.target = p.target;
    if (mult != 0) r.components.emplace_back(std::move(p), mult);
    r.normalize();
    return r;
}

FiniteCorrespondence graph(const AffineCurveScheme& x, const AffineCurveScheme& y,
                           const std::vector<RationalFunction>& images) {
    x.validate();
    y.validate();
    if (images.size() != y.vars.size())
        fail(ErrKind::InvalidMorphism, "expected one image per target coordinate");
    if (x.vars.size() > 1)
        fail(ErrKind::UnsupportedPresentation, "graphs from plane curves are not supported");
    if (!x.is_connected())
        fail(ErrKind::UnsupportedPresentation, "graphs from disconnected schemes are not supported");

    // Regularity: denominators invertible on X.
    for (const auto& f : images) {
        if (x.equations.empty()) {
            if (!invertible_on(f.den().pruned(), x))
                fail(ErrKind::InvalidMorphism,
                     "image " + f.str() + " is not regular on " + x.label);
        } else if (!f.den().is_constant()) {
            fail(ErrKind::InvalidMorphism, "image has a denominator on an etale base");
        }
    }
    // The images must satisfy the target's equations (mod the source's own
    // equation for etale sources).
    for (const auto& eq : y.equations) {
        MultiPoly e = eq;
        RationalFunction val(MultiPoly::constant(Rational(0)));
        // substitute target variables by images into eq
        std::vector<MultiPoly> cs{e};
        // evaluate via recursive substitution on the fraction field
        RationalFunction acc;
        {
            // fold variables one at a time
            RationalFunction cur(e);
            for (size_t j = 0; j < y.vars.size(); ++j)
                cur = cur.substitute(y.vars[j], images[j]);
            acc = cur;
        }
        if (!x.equations.empty()) {
            // reduce numerator modulo the etale minimal polynomial
            auto m = as_unipoly_over_field(x.equations[0], x.vars[0]);
            auto n = as_unipoly_over_field(acc.num().on_vars(x.vars), x.vars[0]);
            if (!(UniPoly<RationalFunction>::divmod(n, m).second.is_zero()))
                fail(ErrKind::InvalidMorphism, "images do not satisfy the target equation");
        } else if (!acc.is_zero()) {
            fail(ErrKind::InvalidMorphism, "images do not satisfy the target equation");
        }
    }
    // Images must avoid the target's removed locus: for each inverted g of
    // the target, g(images) must be invertible on X.
    for (const auto& inv : y.inverted) {
        RationalFunction cur(inv);
        for (size_t j = 0; j < y.vars.size(); ++j) cur = cur.substitute(y.vars[j], images[j]);
        if (cur.is_zero() ||
            (x.equations.empty() && !invertible_on(cur.num().pruned(), x)))
            fail(ErrKind::InvalidMorphism, "image lands in the removed locus of " + y.label);
    }

    ProductCoords pc = product_coords(x, y);
    PrimeCorrespondence p;
    p.source = x;
    p.target = y;
    p.graph_images = images;
    p.degree_over_source = 1;
    for (size_t j = 0; j < y.vars.size(); ++j) {
        MultiPoly uj = MultiPoly::var(pc.target[j], pc.all);
        MultiPoly num = images[j].num().on_vars(pc.all);
        MultiPoly den = images[j].den().on_vars(pc.all);
        p.ideal.push_back((uj * den - num).integer_primitive());
    }
    return FiniteCorrespondence::single(std::move(p));
}

FiniteCorrespondence identity_correspondence(const AffineCurveScheme& x) {
    std::vector<RationalFunction> images;
    for (const auto& v : x.vars) images.emplace_back(MultiPoly::var(v, x.vars));
    return graph(x, x, images);
}

namespace {

FiniteCorrespondence compose_prime(const PrimeCorrespondence& p, const PrimeCorrespondence& q) {
    const AffineCurveScheme& X = p.source;
    const AffineCurveScheme& Y = p.target;
    const AffineCurveScheme& Z = q.target;
    require_composable_source(X);
    if (Y.vars.size() > 1 || Z.vars.size() > 1)
        fail(ErrKind::UnsupportedPresentation,
             "composition through plane-curve middles or targets is not supported");

    // Composite into a point scheme: the structure correspondence with the
    // product of degrees as multiplicity.
    if (Z.vars.empty()) {
        PrimeCorrespondence r;
        r.source = X;
        r.target = Z;
        r.degree_over_source = 1;
        return FiniteCorrespondence::single(std::move(r),
                                            p.degree_over_source * q.degree_over_source);
    }

    const std::string mid = "__mid", tv = "__tgt";
    std::vector<std::string> vars = X.vars;
    vars.push_back(mid);
    vars.push_back(tv);

    // Eliminant over the target coordinate: Res_mid(g_p, g_q) equals the
    // characteristic polynomial of the target coordinate on the fiber
    // algebra up to a unit in Q[x]; exponents of its irreducible factors
    // over k(X) are the pushforward multiplicities.
    MultiPoly R(vars);
    if (Y.vars.empty()) {
        ProductCoords pcq = product_coords(Y, Z);
        R = rename_var(q.ideal[0].on_vars(pcq.all), pcq.target[0], tv, vars);
    } else {
        ProductCoords pcp = product_coords(X, Y);
        ProductCoords pcq = product_coords(Y, Z);
        require_invariant(p.ideal.size() == 1 && q.ideal.size() == 1,
                          "composition needs single-generator components");
        std::vector<std::string> ctx1 = merge_vars(pcp.all, vars);
        MultiPoly ga = p.ideal[0]
                           .on_vars(pcp.all)
                           .substitute(pcp.target[0], MultiPoly::var(mid, ctx1))
                           .on_vars(vars);
        std::vector<std::string> ctx2 = merge_vars(pcq.all, vars);
        MultiPoly gb = q.ideal[0]
                           .on_vars(pcq.all)
                           .substitute(pcq.target[0], MultiPoly::var(tv, ctx2))
                           .substitute(Y.vars[0], MultiPoly::var(mid, ctx2))
                           .on_vars(vars);
        if (!gb.depends_on(mid)) {
            R = gb.pow(p.degree_over_source);
        } else if (gb.degree_in(mid) == 1) {
            // linear middle: substitute mid = -c0/c1 and clear; the resultant
            // collapses to c1^{deg ga} * ga(-c0/c1)
            auto cs = gb.coeffs_in(mid);
            auto as = ga.coeffs_in(mid);
            MultiPoly acc(vars);
            MultiPoly num = -cs[0], den = cs[1];
            MultiPoly denpow = MultiPoly::constant(Rational(1), vars);
            std::vector<MultiPoly> denpows{denpow};
            for (size_t i = 1; i < as.size(); ++i)
                denpows.push_back(denpows.back() * den);
            for (size_t i = 0; i < as.size(); ++i)
                acc += as[i] * num.pow(static_cast<long>(i)) *
                       denpows[as.size() - 1 - i];
            R = acc.on_vars(vars);
        } else if (ga.degree_in(mid) == 1) {
            auto cs = ga.coeffs_in(mid);
            auto bs = gb.coeffs_in(mid);
            MultiPoly acc(vars);
            MultiPoly num = -cs[0], den = cs[1];
            std::vector<MultiPoly> denpows{MultiPoly::constant(Rational(1), vars)};
            for (size_t i = 1; i < bs.size(); ++i)
                denpows.push_back(denpows.back() * den);
            for (size_t i = 0; i < bs.size(); ++i)
                acc += bs[i] * num.pow(static_cast<long>(i)) *
                       denpows[bs.size() - 1 - i];
            R = acc.on_vars(vars);
        } else {
            R = resultant(ga, gb, mid).on_vars(vars);
        }
    }
    require_invariant(!R.is_zero(), "eliminant vanished for a finite intersection");

    // Strip content in the target coordinate (unit factors from leading
    // coefficients).
    {
        MultiPoly cont(R.vars());
        for (const auto& c : R.coeffs_in(tv))
            if (!c.is_zero()) cont = cont.is_zero() ? c : poly_gcd(cont, c);
        if (!cont.is_constant()) R = *MultiPoly::exact_div(R, cont);
    }

    auto up = as_unipoly_over_field(R, tv);
    ProductCoords pc_out = product_coords(X, Z);
    FiniteCorrespondence out = FiniteCorrespondence::zero(X, Z);
    long total = 0;
    bool constant_coeffs = X.vars.empty() || !R.depends_on(X.vars[0]);
    auto add_component = [&](const UniPoly<RationalFunction>& pi, long mult) {
        MultiPoly gen = clear_fiber_poly(pi, tv, vars);
        gen = rename_var(gen, tv, pc_out.target[0], pc_out.all);
        PrimeCorrespondence comp = PrimeCorrespondence::from_generator(X, Z, gen);
        total += mult * comp.degree_over_source;
        out.components.emplace_back(std::move(comp), mult);
    };
    if (constant_coeffs) {
        std::vector<Rational> qc;
        for (const auto& c : up.coeffs()) qc.push_back(c.constant_value());
        for (const auto& part : factor_over_q(UniPoly<Rational>(std::move(qc)))) {
            std::vector<RationalFunction> lift;
            for (const auto& c : part.factor.coeffs()) lift.emplace_back(c);
            add_component(UniPoly<RationalFunction>(std::move(lift)), part.mult);
        }
    } else {
        for (const auto& part : factor_over_qs(up, X.vars[0]))
            add_component(part.factor, part.mult);
    }
    require_invariant(total == p.degree_over_source * q.degree_over_source,
                      "pushforward degree mismatch in composition");
    out.normalize();
    return out;
}

}  // namespace

FiniteCorrespondence compose(const FiniteCorrespondence& alpha,
                             const FiniteCorrespondence& beta) {
    if (!(alpha.target == beta.source))
        fail(ErrKind::CompositionMismatch,
             "middle schemes differ: " + alpha.target.label + " vs " + beta.source.label);
    FiniteCorrespondence out = FiniteCorrespondence::zero(alpha.source, beta.target);
    for (const auto& [p, m] : alpha.components)
        for (const auto& [q, n] : beta.components)
            out = out + compose_prime(p, q).scaled(m * n);
    out.normalize();
    return out;
}

FiniteCorrespondence external_tensor(const FiniteCorrespondence& a,
                                     const FiniteCorrespondence& b) {
    AffineCurveScheme s = AffineCurveScheme::product(a.source, b.source);
    AffineCurveScheme t = AffineCurveScheme::product(a.target, b.target);
    FiniteCorrespondence out = FiniteCorrespondence::zero(s, t);
    ProductCoords pc_s = product_coords(a.source, b.source);
    ProductCoords pc_t = product_coords(a.target, b.target);
    ProductCoords pc_out = product_coords(s, t);
    // Source coordinates of the product keep pc_s names; target coordinates
    // use pc_out.target which concatenates (renamed) a.target and b.target.
    for (const auto& [p, m] : a.components) {
        for (const auto& [q, n] : b.components) {
            PrimeCorrespondence r;
            r.source = s;
            r.target = t;
            r.degree_over_source = p.degree_over_source * q.degree_over_source;
            // embed p's ideal: source vars keep names, target vars map to
            // the first block of pc_out.target
            ProductCoords pa = product_coords(a.source, a.target);
            for (MultiPoly g : p.ideal) {
                g = g.on_vars(pa.all);
                std::vector<std::string> ctx = merge_vars(pa.all, pc_out.all);
                for (size_t j = 0; j < a.target.vars.size(); ++j)
                    g = rename_var(g, pa.target[j], pc_out.target[j], ctx);
                r.ideal.push_back(g.on_vars(pc_out.all));
            }
            ProductCoords pb = product_coords(b.source, b.target);
            for (MultiPoly g : q.ideal) {
                g = g.on_vars(pb.all);
                std::vector<std::string> ctx = merge_vars(pb.all, pc_out.all);
                ctx = merge_vars(ctx, pc_s.all);
                // b's source vars map to the second block of pc_s
                for (size_t j = 0; j < b.source.vars.size(); ++j)
                    g = rename_var(g, pb.source[j], pc_s.target[j], ctx);
                for (size_t j = 0; j < b.target.vars.size(); ++j)
                    g = rename_var(g, pb.target[j],
                                   pc_out.target[a.target.vars.size() + j], ctx);
                r.ideal.push_back(g.on_vars(pc_out.all));
            }
            out.components.emplace_back(std::move(r), m * n);
        }
    }
    out.normalize();
    return out;
}

DegreeReport degree_over_source(const FiniteCorrespondence& alpha) {
    DegreeReport rep;
    rep.connected = alpha.source.is_connected();
    if (rep.connected) {
        for (const auto& [p, m] : alpha.components) rep.total += m * p.degree_over_source;
        rep.per_component.emplace_back(alpha.source.label, rep.total);
        return rep;
    }
    // Per connected component of an etale source: a prime lies over the
    // component whose minimal polynomial meets its ideal.
    auto parts = factor_multipoly_in(alpha.source.equations[0], alpha.source.vars[0]);
    for (const auto& [mi, mult] : parts) {
        long deg = 0;
        for (const auto& [p, m] : alpha.components) {
            std::vector<MultiPoly> gens = p.ideal;
            gens.push_back(mi.on_vars(merge_vars(mi.vars(), alpha.source.vars)));
            if (!ideal_is_unit(groebner_basis(gens))) deg += m * p.degree_over_source;
        }
        rep.per_component.emplace_back(mi.str(), deg);
    }
    return rep;
}

FiniteCorrespondence transpose(const FiniteCorrespondence& alpha) {
    FiniteCorrespondence out = FiniteCorrespondence::zero(alpha.target, alpha.source);
    for (const auto& [p, m] : alpha.components) {
        if (p.source.vars.size() != 1 || p.target.vars.size() != 1 || p.ideal.size() != 1)
            fail(ErrKind::UnsupportedPresentation, "transpose needs single-coordinate schemes");
        ProductCoords pc = product_coords(p.source, p.target);
        ProductCoords pc_t = product_coords(p.target, p.source);
        std::vector<std::string> tmp = {"_a", "_b"};
        MultiPoly g = p.ideal[0].on_vars(pc.all);
        std::vector<std::string> ctx = merge_vars(pc.all, tmp);
        g = rename_var(g, pc.source[0], "_b", ctx);
        g = rename_var(g, pc.target[0], "_a", ctx);
        ctx = merge_vars(ctx, pc_t.all);
        g = rename_var(g, "_a", pc_t.source[0], ctx);
        g = rename_var(g, "_b", pc_t.target[0], ctx);
        out.components.emplace_back(
            PrimeCorrespondence::from_generator(p.target, p.source, g.on_vars(pc_t.all)), m);
    }
    out.normalize();
    return out;
}

long ZeroCycle::total_degree() const {
    long d = 0;
    for (const auto& [f, m] : points) d += m * (f.degree());
    return d;
}

bool ZeroCycle::is_effective() const {
    for (const auto& [f, m] : points)
        if (m <= 0) return false;
    return true;
}

std::vector<Rational> sym_point(const ZeroCycle& gamma) {
    if (!gamma.is_effective()) fail(ErrKind::Effectivity, "zero cycle is not effective");
    if (gamma.ambient.vars.size() != 1 || !gamma.ambient.equations.empty())
        fail(ErrKind::UnsupportedInput, "sym_point needs the affine line as ambient");
    UniPoly<Rational> prod = UniPoly<Rational>::constant(Rational(1));
    for (const auto& [f, m] : gamma.points) {
        if (f.degree() < 1 || !f.lc().is_one())
            fail(ErrKind::UnsupportedInput, "point ideal must be monic nonconstant");
        if (!is_irreducible_over_q(f))
            fail(ErrKind::UnsupportedInput, "point ideal " + f.str() + " is not maximal");
        for (long i = 0; i < m; ++i) prod = prod * f;
    }
    long n = prod.degree();
    std::vector<Rational> e;
    for (long k = 1; k <= n; ++k) {
        Rational c = prod[static_cast<size_t>(n - k)];
        e.push_back(k % 2 == 1 ? -c : c);
    }
    return e;
}

FiniteCorrespondence cycle_to_correspondence(const ZeroCycle& gamma,
                                             const AffineCurveScheme& line) {
    AffineCurveScheme pt = AffineCurveScheme::spec_q();
    FiniteCorrespondence out = FiniteCorrespondence::zero(pt, line);
    ProductCoords pc = product_coords(pt, line);
    for (const auto& [f, m] : gamma.points) {
        MultiPoly g(pc.all);
        MultiPoly u = MultiPoly::var(pc.target[0], pc.all);
        for (size_t i = f.coeffs().size(); i-- > 0;)
            g = g * u + MultiPoly::constant(f[i], pc.all);
        out.components.emplace_back(PrimeCorrespondence::from_generator(pt, line, g), m);
    }
    out.normalize();
    return out;
}

}  // namespace mdr
