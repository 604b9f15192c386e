#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mdr/complexes.hpp"

namespace mdr {

// A finite poset site: opens are the up-sets of the order, each point x has
// the minimal open U_x = { y : y >= x }, and stalks are sections over U_x.
struct FiniteSite {
    std::vector<std::string> points;
    std::vector<std::vector<bool>> leq;  // leq[i][j]: i <= j
    std::vector<uint32_t> opens;         // all up-sets as bitmasks, sorted

    static FiniteSite make(std::vector<std::string> points,
                           const std::vector<std::pair<size_t, size_t>>& relations);

    size_t n() const { return points.size(); }
    bool is_open(uint32_t mask) const;
    uint32_t full() const { return (1u << n()) - 1; }
    uint32_t min_open(size_t point) const;
    std::vector<size_t> members(uint32_t mask) const;
    // Connected components of an open under comparability.
    std::vector<uint32_t> components(uint32_t mask) const;

    void validate() const;
};

// Presheaf of finite-dimensional rational vector spaces on the opens.
struct Presheaf {
    const FiniteSite* site = nullptr;
    std::map<uint32_t, long> dims;
    // restriction matrices for V subset U (identity and missing pairs are
    // synthesized from composites when needed)
    std::map<std::pair<uint32_t, uint32_t>, QMat> res;

    long dim(uint32_t u) const;
    QMat restriction(uint32_t u, uint32_t v) const;
    void validate() const;  // functoriality on all nested triples

    // Is the presheaf a sheaf: F(U) = lim over the points of U of the stalks.
    bool is_sheaf(std::string* why = nullptr) const;

    static Presheaf constant_sheaf(const FiniteSite& s, long rank);
    static Presheaf constant_presheaf(const FiniteSite& s, long rank);
};

// A morphism of presheaves: one matrix per open (naturality checked against
// the two presheaves on demand).
struct PresheafMap {
    std::map<uint32_t, QMat> at;
    QMat get(const Presheaf& src, const Presheaf& dst, uint32_t u) const;
    void check_natural(const Presheaf& src, const Presheaf& dst) const;
};

PresheafMap presheaf_map_compose(const Presheaf& a, const Presheaf& b, const Presheaf& c,
                                 const PresheafMap& f, const PresheafMap& g);
bool presheaf_map_equal(const Presheaf& src, const Presheaf& dst, const PresheafMap& f,
                        const PresheafMap& g);
PresheafMap presheaf_identity(const Presheaf& f);

// Simplicial cochain complex of the order complex (nerve) of the poset with
// constant rational coefficients: the independent oracle for constant-sheaf
// cohomology.
std::map<long, long> order_complex_cohomology(const FiniteSite& s);

}  // namespace mdr
