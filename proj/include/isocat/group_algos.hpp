// group_algos.hpp -- subgroup machinery, invariant-form search, order
// statistics, conjugacy classes, and isomorphism testing by generator-image
// backtracking.
#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "isocat/group.hpp"

namespace isocat {

// multiset {element order -> count}; counts sum to |G|
std::map<std::uint32_t, std::uint32_t> order_statistics(
    const FiniteGroup& g, std::size_t cap = FiniteGroup::kDefaultCap);

struct ConjugacyClasses {
    std::vector<std::uint32_t> class_of;          // element index -> class id
    std::vector<std::uint32_t> rep;               // class id -> element index
    std::vector<std::uint32_t> size;              // class id -> size
    std::vector<std::uint32_t> rep_order;         // class id -> order of rep
    std::uint32_t count() const { return (std::uint32_t)rep.size(); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g,
                                   std::size_t cap = FiniteGroup::kDefaultCap);

// every subgroup of g (join closure of the cyclic lattice); intended for
// small groups -- throws CapExceeded when the lattice outgrows subgroup_cap
std::vector<Subgroup> all_subgroups(const GroupPtr& g,
                                    std::size_t subgroup_cap = 100000);

// exhaustive list of normal abelian subgroups of order 2^{2m}, m >= 1
std::vector<Subgroup> normal_abelian_subgroups(const GroupPtr& g,
                                               std::size_t group_cap = 512);

// All G-invariant alternating nondegenerate bicharacters on A (stored in
// A-coordinates through the fixed duality).  Exhaustive; deterministic order.
std::vector<Pairing> invariant_skew_isos(const GroupPtr& g, const Subgroup& a,
                                         const AbelianStructure& as,
                                         std::size_t candidate_cap = 200000);

struct Isomorphism {
    std::vector<std::uint32_t> dom_gens; // element indices in G1
    std::vector<std::uint32_t> img_gens; // element indices in G2
};

// Explicit isomorphism or nullopt (exhaustive backtracking over generator
// images, pruned by order and conjugacy-class size).
std::optional<Isomorphism> is_isomorphic(const GroupPtr& g1, const GroupPtr& g2,
                                         std::size_t cap = 100000);

// replays a witness: do the generator images extend to a bijective
// homomorphism?
bool verify_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                        const Isomorphism& iso);

} // namespace isocat
