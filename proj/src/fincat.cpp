#include "mdr/fincat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mdr {

size_t FiniteCategory::compose(size_t g, size_t f) const {
    if (arrows[f].dst != arrows[g].src)
        fail(ErrKind::Precondition, "arrows not composable: " + arrows[g].name + " o " + arrows[f].name);
    auto it = comp.find({g, f});
    if (it == comp.end())
        fail(ErrKind::Precondition, "composition table incomplete at " + arrows[g].name + " o " +
                                        arrows[f].name);
    return it->second;
}

void FiniteCategory::validate() const {
    if (identity_of.size() != objects.size())
        fail(ErrKind::Precondition, "one identity per object required");
    for (size_t a = 0; a < objects.size(); ++a) {
        const Arrow& id = arrows[identity_of[a]];
        if (id.src != a || id.dst != a) fail(ErrKind::Precondition, "identity endpoints wrong");
    }
    for (size_t f = 0; f < arrows.size(); ++f) {
        if (compose(identity_of[arrows[f].dst], f) != f ||
            compose(f, identity_of[arrows[f].src]) != f)
            fail(ErrKind::Precondition, "identity law fails at " + arrows[f].name);
    }
    for (size_t f = 0; f < arrows.size(); ++f)
        for (size_t g = 0; g < arrows.size(); ++g) {
            if (arrows[f].dst != arrows[g].src) continue;
            for (size_t h = 0; h < arrows.size(); ++h) {
                if (arrows[g].dst != arrows[h].src) continue;
                if (compose(h, compose(g, f)) != compose(compose(h, g), f))
                    fail(ErrKind::Precondition, "associativity fails");
            }
        }
}

size_t FiniteCategory::arrow_by_name(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return i;
    fail(ErrKind::Precondition, "no arrow named " + name);
}

std::vector<size_t> FiniteCategory::homset(size_t x, size_t y) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].src == x && arrows[i].dst == y) out.push_back(i);
    return out;
}

MultiplicativeReport check_right_multiplicative(const FiniteCategory& c,
                                                const std::set<size_t>& s) {
    MultiplicativeReport rep;
    rep.identities = true;
    for (size_t a = 0; a < c.objects.size(); ++a) {
        if (!s.count(c.identity_of[a])) {
            rep.identities = false;
            rep.counterexample = "identity of " + c.objects[a] + " not in S";
            break;
        }
    }
    rep.closure = true;
    for (size_t f : s)
        for (size_t g : s) {
            if (c.arrows[f].dst != c.arrows[g].src) continue;
            if (!s.count(c.compose(g, f))) {
                rep.closure = false;
                if (rep.counterexample.empty())
                    rep.counterexample = "S not closed under " + c.arrows[g].name + " o " +
                                         c.arrows[f].name;
            }
        }
    // Ore: for f: X -> Y and s0: X -> X' in S, find t: Y -> Y' in S and
    // g: X' -> Y' with g o s0 = t o f.
    rep.ore = true;
    for (size_t f = 0; f < c.arrows.size() && rep.ore; ++f) {
        for (size_t s0 : s) {
            if (c.arrows[s0].src != c.arrows[f].src) continue;
            bool found = false;
            for (size_t t : s) {
                if (c.arrows[t].src != c.arrows[f].dst) continue;
                for (size_t g = 0; g < c.arrows.size() && !found; ++g) {
                    if (c.arrows[g].src != c.arrows[s0].dst ||
                        c.arrows[g].dst != c.arrows[t].dst)
                        continue;
                    if (c.compose(g, s0) == c.compose(t, f)) found = true;
                }
                if (found) break;
            }
            if (!found) {
                rep.ore = false;
                if (rep.counterexample.empty())
                    rep.counterexample =
                        "no Ore completion for f=" + c.arrows[f].name + ", s=" + c.arrows[s0].name;
                break;
            }
        }
    }
    // Right cancellation: parallel f,g with f o s = g o s for some s in S
    // admit t in S with t o f = t o g.
    rep.cancellation = true;
    for (size_t f = 0; f < c.arrows.size() && rep.cancellation; ++f) {
        for (size_t g = 0; g < c.arrows.size() && rep.cancellation; ++g) {
            if (f == g || c.arrows[f].src != c.arrows[g].src ||
                c.arrows[f].dst != c.arrows[g].dst)
                continue;
            bool equalized = false;
            for (size_t s0 : s) {
                if (c.arrows[s0].dst != c.arrows[f].src) continue;
                if (c.compose(f, s0) == c.compose(g, s0)) {
                    equalized = true;
                    break;
                }
            }
            if (!equalized) continue;
            bool found = false;
            for (size_t t : s) {
                if (c.arrows[t].src != c.arrows[f].dst) continue;
                if (c.compose(t, f) == c.compose(t, g)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                rep.cancellation = false;
                if (rep.counterexample.empty())
                    rep.counterexample = "no cancelling t for " + c.arrows[f].name + " vs " +
                                         c.arrows[g].name;
            }
        }
    }
    return rep;
}

bool sx_filtered(const FiniteCategory& c, const std::set<size_t>& s, size_t x, std::string* why) {
    // objects of S^X: arrows in S with source x
    std::vector<size_t> objs;
    for (size_t a : s)
        if (c.arrows[a].src == x) objs.push_back(a);
    if (objs.empty()) {
        if (why) *why = "S^X empty";
        return false;
    }
    // (F1) any two objects map to a common one
    for (size_t s1 : objs)
        for (size_t s2 : objs) {
            bool found = false;
            for (size_t s3 : objs) {
                bool h1 = false, h2 = false;
                for (size_t h = 0; h < c.arrows.size(); ++h) {
                    if (c.arrows[h].src == c.arrows[s1].dst &&
                        c.arrows[h].dst == c.arrows[s3].dst && c.compose(h, s1) == s3)
                        h1 = true;
                    if (c.arrows[h].src == c.arrows[s2].dst &&
                        c.arrows[h].dst == c.arrows[s3].dst && c.compose(h, s2) == s3)
                        h2 = true;
                }
                if (h1 && h2) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                if (why)
                    *why = "no common refinement of " + c.arrows[s1].name + ", " +
                           c.arrows[s2].name;
                return false;
            }
        }
    // (F2) parallel morphisms in S^X are equalized by some further morphism
    for (size_t s1 : objs)
        for (size_t s2 : objs) {
            std::vector<size_t> par;
            for (size_t h = 0; h < c.arrows.size(); ++h)
                if (c.arrows[h].src == c.arrows[s1].dst && c.arrows[h].dst == c.arrows[s2].dst &&
                    c.compose(h, s1) == s2)
                    par.push_back(h);
            for (size_t h1 : par)
                for (size_t h2 : par) {
                    if (h1 == h2) continue;
                    bool found = false;
                    for (size_t s3 : objs) {
                        for (size_t k = 0; k < c.arrows.size(); ++k) {
                            if (c.arrows[k].src != c.arrows[s2].dst ||
                                c.arrows[k].dst != c.arrows[s3].dst)
                                continue;
                            if (c.compose(k, s2) != s3) continue;
                            if (c.compose(k, h1) == c.compose(k, h2)) {
                                found = true;
                                break;
                            }
                        }
                        if (found) break;
                    }
                    if (!found) {
                        if (why)
                            *why = "parallel arrows " + c.arrows[h1].name + ", " +
                                   c.arrows[h2].name + " not equalized";
                        return false;
                    }
                }
        }
    return true;
}

LocalizedHom localized_hom(const FiniteCategory& c, const std::set<size_t>& s, size_t x,
                           size_t y) {
    // pairs (s0: y -> y', f: x -> y')
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t s0 : s) {
        if (c.arrows[s0].src != y) continue;
        for (size_t f = 0; f < c.arrows.size(); ++f)
            if (c.arrows[f].src == x && c.arrows[f].dst == c.arrows[s0].dst)
                pairs.emplace_back(s0, f);
    }
    // union-find over the colimit identifications (s0,f) ~ (h o s0, h o f)
    std::vector<size_t> parent(pairs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto unite = [&](size_t i, size_t j) { parent[find(i)] = find(j); };
    std::map<std::pair<size_t, size_t>, size_t> index;
    for (size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = i;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [s0, f] = pairs[i];
        for (size_t h = 0; h < c.arrows.size(); ++h) {
            if (c.arrows[h].src != c.arrows[s0].dst) continue;
            size_t hs = c.compose(h, s0);
            if (!s.count(hs)) continue;  // h must be a morphism in S^Y
            size_t hf = c.compose(h, f);
            auto it = index.find({hs, hf});
            if (it != index.end()) unite(i, it->second);
        }
    }
    LocalizedHom out;
    std::map<size_t, size_t> root_to_class;
    for (size_t i = 0; i < pairs.size(); ++i) {
        size_t r = find(i);
        auto it = root_to_class.find(r);
        size_t cls;
        if (it == root_to_class.end()) {
            cls = out.classes.size();
            root_to_class[r] = cls;
            out.classes.push_back(pairs[r]);
        } else {
            cls = it->second;
        }
        out.class_of[pairs[i]] = cls;
    }
    return out;
}

std::pair<size_t, size_t> localized_compose(const FiniteCategory& c, const std::set<size_t>& s,
                                            std::pair<size_t, size_t> xy,
                                            std::pair<size_t, size_t> yz) {
    auto [s1, f] = xy;  // s1: Y -> Y', f: X -> Y'
    auto [s2, g] = yz;  // s2: Z -> Z', g: Y -> Z'
    // Ore square for (g', s1) where g': Y -> Z'; need u: Z' -> V in S and
    // h: Y' -> V with h o s1 = u o g.
    for (size_t u : s) {
        if (c.arrows[u].src != c.arrows[g].dst) continue;
        for (size_t h = 0; h < c.arrows.size(); ++h) {
            if (c.arrows[h].src != c.arrows[s1].dst || c.arrows[h].dst != c.arrows[u].dst)
                continue;
            if (c.compose(h, s1) != c.compose(u, g)) continue;
            size_t new_s = c.compose(u, s2);
            if (!s.count(new_s)) continue;
            size_t new_f = c.compose(h, f);
            return {new_s, new_f};
        }
    }
    fail(ErrKind::Precondition, "no Ore completion available for composition");
}

std::pair<size_t, size_t> localized_of_arrow(const FiniteCategory& c, size_t f) {
    return {c.identity_of[c.arrows[f].dst], f};
}

}  // namespace mdr
