#include "mdr/groebner.hpp"

#include <algorithm>
#include <set>

namespace mdr {

namespace {

bool exps_divides(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps exps_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exps_coprime(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MultiPoly monomial_on(const Exps& e, const Rational& c, const std::vector<std::string>& vars) {
    MultiPoly m(vars);
    m.set_term(e, c);
    return m;
}

}  // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    if (basis.empty()) return p;
    std::vector<std::string> vars = p.vars();
    for (const auto& b : basis) vars = merge_vars(vars, b.vars());
    MultiPoly rem(vars);
    MultiPoly cur = p.on_vars(vars);
    std::vector<MultiPoly> bs;
    for (const auto& b : basis)
        if (!b.is_zero()) bs.push_back(b.on_vars(vars));
    while (!cur.is_zero()) {
        bool reduced = false;
        const Exps& le = cur.leading_exps();
        for (const auto& b : bs) {
            if (!exps_divides(b.leading_exps(), le)) continue;
            Exps q(le.size());
            for (size_t i = 0; i < le.size(); ++i) q[i] = le[i] - b.leading_exps()[i];
            cur -= monomial_on(q, cur.leading_coeff() / b.leading_coeff(), vars) * b;
            reduced = true;
            break;
        }
        if (!reduced) {
            rem += monomial_on(le, cur.leading_coeff(), vars);
            cur -= monomial_on(le, cur.leading_coeff(), vars);
        }
    }
    return rem;
}

std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens) {
    if (gens.empty()) fail(ErrKind::Precondition, "empty generator list");
    std::vector<std::string> vars;
    for (const auto& g : gens) vars = merge_vars(vars, g.vars());
    std::vector<MultiPoly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.on_vars(vars).monic());
    if (basis.empty()) fail(ErrKind::Precondition, "all generators are zero");

    using Pair = std::pair<size_t, size_t>;
    std::vector<Pair> queue;
    std::set<Pair> dropped;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) queue.emplace_back(i, j);
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    auto spoly = [&](size_t i, size_t j) {
        const Exps &ei = basis[i].leading_exps(), &ej = basis[j].leading_exps();
        Exps l = exps_lcm(ei, ej);
        Exps qi(l.size()), qj(l.size());
        for (size_t k = 0; k < l.size(); ++k) {
            qi[k] = l[k] - ei[k];
            qj[k] = l[k] - ej[k];
        }
        return monomial_on(qi, Rational(1) / basis[i].leading_coeff(), vars) * basis[i] -
               monomial_on(qj, Rational(1) / basis[j].leading_coeff(), vars) * basis[j];
    };

    size_t guard = 0;
    while (!queue.empty()) {
        if (++guard > 200000) fail(ErrKind::InvariantViolation, "Buchberger did not terminate");
        auto [i, j] = queue.back();
        queue.pop_back();
        const Exps &ei = basis[i].leading_exps(), &ej = basis[j].leading_exps();
        // Product criterion.
        if (exps_coprime(ei, ej)) continue;
        // Chain criterion: some k whose leading term divides lcm(i,j) with
        // both mixed pairs already handled.
        Exps l = exps_lcm(ei, ej);
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!exps_divides(basis[k].leading_exps(), l)) continue;
            Pair a{std::min(i, k), std::max(i, k)}, b{std::min(j, k), std::max(j, k)};
            auto pending = [&](const Pair& p) {
                return std::find(queue.begin(), queue.end(), p) != queue.end();
            };
            if (!pending(a) && !pending(b)) chained = true;
        }
        if (chained) continue;
        MultiPoly r = normal_form(spoly(i, j), basis);
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            push_pairs(basis.size() - 1);
        }
    }

    // Interreduce: drop elements whose leading term is divisible by another,
    // then fully reduce tails.
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (exps_divides(basis[j].leading_exps(), basis[i].leading_exps())) {
                if (basis[j].leading_exps() == basis[i].leading_exps() && j > i) continue;
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : normal_form(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
        GrlexGreater gt;
        if (a.leading_exps() != b.leading_exps()) return gt(a.leading_exps(), b.leading_exps());
        return a.str() < b.str();
    });
    return reduced;
}

bool ideal_is_unit(const std::vector<MultiPoly>& groebner) {
    for (const auto& g : groebner)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

}  // namespace mdr
