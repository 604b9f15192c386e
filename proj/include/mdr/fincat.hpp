#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mdr/error.hpp"

namespace mdr {

// A finite category presented by objects, named arrows (including chosen
// identities), and a total composition table on composable pairs.
struct FiniteCategory {
    std::vector<std::string> objects;
    struct Arrow {
        std::string name;
        size_t src = 0, dst = 0;
    };
    std::vector<Arrow> arrows;
    std::vector<size_t> identity_of;                   // object -> arrow index
    std::map<std::pair<size_t, size_t>, size_t> comp;  // (g, f) -> g o f

    size_t compose(size_t g, size_t f) const;  // f: a->b, g: b->c
    void validate() const;                     // identity and associativity laws
    size_t arrow_by_name(const std::string& name) const;
    std::vector<size_t> homset(size_t x, size_t y) const;
};

// Right multiplicative system axioms (identities, closure, Ore square
// completion, right cancellation), each checked exhaustively.
struct MultiplicativeReport {
    bool identities = false, closure = false, ore = false, cancellation = false;
    std::string counterexample;  // first failure, empty when all pass
    bool all() const { return identities && closure && ore && cancellation; }
};
MultiplicativeReport check_right_multiplicative(const FiniteCategory& c,
                                                const std::set<size_t>& s);

// Verifies that the category S^X (objects s: X -> X' in S, morphisms h with
// h o s = s') is filtered; reports the first failure.
bool sx_filtered(const FiniteCategory& c, const std::set<size_t>& s, size_t x,
                 std::string* why = nullptr);

// Hom(X, Y) in C[S^{-1}]: classes of co-roofs (s: Y -> Y' in S, f: X -> Y'),
// the filtered colimit over S^Y of Hom(X, Y').
struct LocalizedHom {
    std::vector<std::pair<size_t, size_t>> classes;  // canonical representatives
    std::map<std::pair<size_t, size_t>, size_t> class_of;
};
LocalizedHom localized_hom(const FiniteCategory& c, const std::set<size_t>& s, size_t x,
                           size_t y);

// Composition of localized classes through an Ore square (returns a roof;
// canonicalize against localized_hom of the composite pair).
std::pair<size_t, size_t> localized_compose(const FiniteCategory& c, const std::set<size_t>& s,
                                            std::pair<size_t, size_t> xy,
                                            std::pair<size_t, size_t> yz);

// The localized image of a plain arrow f: X -> Y is the co-roof (id_Y, f).
std::pair<size_t, size_t> localized_of_arrow(const FiniteCategory& c, size_t f);

}  // namespace mdr
