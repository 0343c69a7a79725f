// group.hpp -- finite-group oracles: identity / multiply / invert closures,
// generator sets, deterministic BFS enumeration with caps, subgroups,
// quotients with pinned coset sections, and actions on abelian coefficient
// groups.  Groups that other objects keep alive are passed as GroupPtr.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "isocat/abelian.hpp"
#include "isocat/element.hpp"

namespace isocat {

struct Enumeration {
    std::vector<GroupElement> elems; // BFS discovery order, elems[0] = identity
    // open-addressing index over packed words (key = word+1, 0 = empty slot)
    std::vector<std::uint64_t> pk;
    std::vector<std::uint32_t> pv;
    std::unordered_map<GroupElement, std::uint32_t, ElementHash> generic_index;

    std::uint32_t size() const { return (std::uint32_t)elems.size(); }
    std::uint32_t index_of(const GroupElement& e) const; // throws if absent
    bool contains(const GroupElement& e) const;
    // returns slot index or UINT32_MAX; valid only for packed enumerations
    std::uint32_t packed_lookup(std::uint64_t word) const;
};

struct FiniteGroup {
    std::string name;
    GroupElement id;
    std::vector<GroupElement> gens;
    std::function<GroupElement(const GroupElement&, const GroupElement&)> mul;
    std::function<GroupElement(const GroupElement&)> inv;
    // optional flat multiply on packed elements (BFS fast path); ctx carries
    // the dimension for the matrix sorts
    std::uint64_t (*packed_mul)(std::uint64_t, std::uint64_t, std::uint32_t) = nullptr;
    std::uint32_t packed_ctx = 0;
    // rebuild a GroupElement from a packed word (required with packed_mul)
    GroupElement (*packed_unpack)(std::uint64_t, std::uint32_t) = nullptr;

    static constexpr std::size_t kDefaultCap = 2'000'000;

    // BFS closure of the generators; cached after the first call (the cache
    // is shared between copies).  Throws CapExceeded past the cap.
    const Enumeration& enumerate(std::size_t cap = kDefaultCap) const;
    bool enumerated() const { return *cache_ != nullptr; }
    std::uint32_t order(std::size_t cap = kDefaultCap) const {
        return enumerate(cap).size();
    }

    std::uint32_t element_order(const GroupElement& e) const;
    GroupElement conj(const GroupElement& g, const GroupElement& x) const {
        return mul(mul(g, x), inv(g));
    }

    FiniteGroup() : cache_(std::make_shared<std::shared_ptr<Enumeration>>()) {}

private:
    // double indirection so copies observe the same lazily-filled cache
    std::shared_ptr<std::shared_ptr<Enumeration>> cache_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr hold(FiniteGroup g) {
    return std::make_shared<const FiniteGroup>(std::move(g));
}

struct Subgroup {
    GroupPtr parent;
    std::vector<std::uint32_t> elem_idx; // sorted parent enumeration indices
    bool normal = false;
    bool abelian = false;

    std::uint32_t order() const { return (std::uint32_t)elem_idx.size(); }
    bool contains_index(std::uint32_t i) const;
};

// Structure of an abelian subgroup: a fixed decomposition with generators
// realized inside the parent group, plus rank <-> parent-index tables.
struct AbelianStructure {
    AbelianGroup shape;
    std::vector<GroupElement> gens;          // one per factor
    std::vector<GroupElement> elem_of_rank;  // rank -> parent element
    std::unordered_map<std::uint32_t, std::uint32_t> rank_of_parent_idx;

    std::uint32_t rank_of(const FiniteGroup& g, const GroupElement& e) const;
};

// Decompose a subgroup known to be abelian; deterministic (first basis in
// enumeration order).  Throws if the subgroup is not abelian.
AbelianStructure abelian_structure(const FiniteGroup& g, const Subgroup& a);

// Action of the members of an enumerated group K on an abelian group A.
struct GroupAction {
    GroupPtr k;
    AbelianGroup a;
    // images of A-generators under every k: flat [k_idx][gen] -> rank
    std::vector<std::uint32_t> gen_img;
    // same for the dual action on characters (through the fixed duality)
    std::vector<std::uint32_t> dual_gen_img;

    std::uint32_t apply(std::uint32_t k_idx, std::uint32_t a_rank) const;
    std::uint32_t dual_apply(std::uint32_t k_idx, std::uint32_t x_rank) const;
    // identity trivial, composition on generators, generators bijective
    void verify_axioms() const;
};

// Quotient of g by a normal subgroup: elements are the lexicographically
// least coset representatives (in enumeration order).
struct QuotientGroup {
    GroupPtr k;
    std::vector<std::uint32_t> section;  // coset -> parent elem index of rep
    std::vector<std::uint32_t> coset_of; // parent elem index -> coset index
};

QuotientGroup quotient(const GroupPtr& g, const Subgroup& a);

// Conjugation action of the quotient K = G/A on abelian normal A.
GroupAction conjugation_action(const GroupPtr& g, const AbelianStructure& as,
                               const QuotientGroup& q);

// ---- built-in families / group spec files ----

// cyclic(n), abelian(n1,...), elementary_abelian(p,k), dihedral(n) [order 2n],
// dihedral8, quaternion8, gl(n), sp(n), u(n), p(n), asp(n)
FiniteGroup build_group(const std::string& spec);
FiniteGroup build_group_file(const std::string& path);

// permutation generators in cycle notation, e.g. "(1 2 3)(4 5)"
Perm parse_cycles(const std::string& text, std::uint32_t degree);

} // namespace isocat
