#pragma once

#include <functional>

#include "mdr/site.hpp"

namespace mdr {

// A monad on the presheaf category of a fixed finite site, presented by an
// object map, a morphism map, the unit and the multiplication.
struct MonadPresentation {
    std::function<Presheaf(const Presheaf&)> obj;
    std::function<PresheafMap(const Presheaf&, const Presheaf&, const PresheafMap&)> map;
    std::function<PresheafMap(const Presheaf&)> unit;  // F -> MF
    std::function<PresheafMap(const Presheaf&)> mult;  // MMF -> MF
};

MonadPresentation identity_monad();

// The Godement monad on a finite poset site: GF(U) = prod_{x in U} F(U_x),
// restrictions are projections, the unit is the germ map, and the
// multiplication projects the double product onto the diagonal components.
MonadPresentation godement_monad(const FiniteSite& site);

// Verifies the unit and associativity squares on a test object.
bool check_monad_laws(const MonadPresentation& m, const Presheaf& f, std::string* why = nullptr);

// The bar tower M^k F for k = 0..depth+1 (tower[0] = F, so the n-cosimplex
// B^n is tower[n+1]) with cofaces M^i eta M^{k-i}: tower[k] -> tower[k+1]
// and codegeneracies M^i mu M^{k-2-i}: tower[k] -> tower[k-1]. The
// augmentation is coface[0][0] = eta_F.
struct BarConstruction {
    std::vector<Presheaf> tower;
    std::vector<std::vector<PresheafMap>> coface;   // coface[k][i], i = 0..k
    std::vector<std::vector<PresheafMap>> codegen;  // codegen[k][i]: tower[k]->tower[k-1], i=0..k-2
};
BarConstruction bar_construction(const MonadPresentation& m, const Presheaf& f, long depth = 4);

// Cosimplicial identities (coface/coface, codegen/codegen, mixed) on all
// stored levels.
bool check_cosimplicial_identities(const BarConstruction& bar, std::string* why = nullptr);

// The alternating-sum cochain complex of global sections of B^* (the
// Godement complex when m is the Godement monad): degree n holds
// Gamma(X, M^{n+1}F).
BoundedComplex bar_global_sections_complex(const BarConstruction& bar);

// Sheaf cohomology dimensions via the Godement resolution, truncated at the
// site's point count. Errors when f is not a sheaf.
std::map<long, long> cohomology_via_godement(const FiniteSite& site, const Presheaf& f);

// Stalkwise exactness of the augmented bar complex at every point
// (H^0 = stalk, higher cohomology zero).
bool augmentation_stalkwise_quasi_iso(const FiniteSite& site, const Presheaf& f,
                                      std::string* why = nullptr);

// All restriction maps of GF are surjective.
bool godement_flasque(const FiniteSite& site, const Presheaf& f);

}  // namespace mdr
