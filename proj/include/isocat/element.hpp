// element.hpp -- the group element sort: a tagged union over the concrete
// representations used by the built-in families.
//
//   Perm    permutations (user groups, regular representations)
//   BitMat  GL(n,2) / Sp(2n,2) / parabolic matrices, n <= 8
//   AffMat  pairs (g, v): x -> g x + v   (ASp(V) and other semidirects)
//   HeisEl  Heisenberg pairs (v, +-1)
//
// Equality is structural; hashing is consistent with equality.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "isocat/bitmat.hpp"

namespace isocat {

struct Perm {
    std::vector<std::uint8_t> img; // img[i] = image of point i

    static Perm identity(std::uint32_t deg) {
        Perm p;
        p.img.resize(deg);
        for (std::uint32_t i = 0; i < deg; ++i) p.img[i] = (std::uint8_t)i;
        return p;
    }
    std::uint32_t degree() const { return (std::uint32_t)img.size(); }

    friend Perm operator*(const Perm& a, const Perm& b) {
        // (a*b)(x) = a(b(x))
        require(a.img.size() == b.img.size(), "Perm: degree mismatch");
        Perm c;
        c.img.resize(a.img.size());
        for (std::size_t i = 0; i < a.img.size(); ++i) c.img[i] = a.img[b.img[i]];
        return c;
    }
    Perm inverse() const {
        Perm c;
        c.img.resize(img.size());
        for (std::size_t i = 0; i < img.size(); ++i) c.img[img[i]] = (std::uint8_t)i;
        return c;
    }
    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
};

struct AffMat {
    BitMat m;
    std::uint8_t v = 0; // translation part, bitmask of dimension m.n

    friend AffMat operator*(const AffMat& a, const AffMat& b) {
        // composition of x -> a.m x + a.v after x -> b.m x + b.v
        return AffMat{a.m * b.m, (std::uint8_t)(a.m.apply(b.v) ^ a.v)};
    }
    AffMat inverse() const {
        BitMat mi = m.inverse();
        return AffMat{mi, mi.apply(v)};
    }
    friend bool operator==(const AffMat& a, const AffMat& b) {
        return a.m == b.m && a.v == b.v;
    }
};

struct HeisEl {
    std::uint8_t dim = 0; // dim of V = 2n
    std::uint8_t v = 0;   // element of V, bitmask
    std::uint8_t s = 0;   // sign bit: value (-1)^s
    friend bool operator==(const HeisEl& a, const HeisEl& b) {
        return a.dim == b.dim && a.v == b.v && a.s == b.s;
    }
};

using GroupElement = std::variant<Perm, BitMat, AffMat, HeisEl>;

struct ElementHash {
    std::size_t operator()(const GroupElement& e) const;
};

std::string element_str(const GroupElement& e);

// 64-bit packing for the matrix-flavoured sorts (BFS fast path).
// Valid when the packed payload fits; group builders guarantee it.
bool element_packable(const GroupElement& e);
std::uint64_t element_pack(const GroupElement& e);

} // namespace isocat
