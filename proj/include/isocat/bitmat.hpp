// bitmat.hpp -- n x n matrices over F2 for n <= 8, packed into one uint64
// (row i = byte i, bit j = entry (i,j)).  These are the working currency for
// GL / Sp / parabolic group elements; the dynamic F2Mat stays for solver work.
#pragma once

#include <cstdint>
#include <ostream>

#include "isocat/common.hpp"

namespace isocat {

struct BitMat {
    std::uint8_t n = 0;   // dimension, <= 8
    std::uint64_t b = 0;  // row-major bytes

    BitMat() = default;
    BitMat(std::uint8_t dim, std::uint64_t bits) : n(dim), b(bits) {}

    static BitMat identity(std::uint8_t n) {
        BitMat m{n, 0};
        for (std::uint8_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }
    static BitMat zero(std::uint8_t n) { return BitMat{n, 0}; }

    bool get(std::uint8_t i, std::uint8_t j) const {
        return (b >> (8 * i + j)) & 1;
    }
    void set(std::uint8_t i, std::uint8_t j, bool v) {
        std::uint64_t m = 1ULL << (8 * i + j);
        if (v) b |= m; else b &= ~m;
    }
    std::uint8_t row(std::uint8_t i) const {
        return (std::uint8_t)(b >> (8 * i));
    }
    void set_row(std::uint8_t i, std::uint8_t bits) {
        b = (b & ~(0xFFULL << (8 * i))) | ((std::uint64_t)bits << (8 * i));
    }

    // matrix * column vector (vector = bitmask, bit j = coordinate j)
    std::uint8_t apply(std::uint8_t v) const {
        std::uint8_t out = 0;
        for (std::uint8_t i = 0; i < n; ++i)
            out |= (std::uint8_t)((__builtin_popcount(row(i) & v) & 1) << i);
        return out;
    }

    friend BitMat operator*(const BitMat& a, const BitMat& bm) {
        require(a.n == bm.n, "BitMat: dimension mismatch");
        BitMat c{a.n, 0};
        for (std::uint8_t i = 0; i < a.n; ++i) {
            std::uint8_t ra = a.row(i), acc = 0;
            while (ra) {
                std::uint8_t j = (std::uint8_t)__builtin_ctz(ra);
                acc ^= bm.row(j);
                ra &= (std::uint8_t)(ra - 1);
            }
            c.set_row(i, acc);
        }
        return c;
    }

    BitMat transpose() const {
        BitMat t{n, 0};
        for (std::uint8_t i = 0; i < n; ++i)
            for (std::uint8_t j = 0; j < n; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    // inverse over F2; requires invertibility
    BitMat inverse() const {
        BitMat a = *this, inv = identity(n);
        for (std::uint8_t col = 0; col < n; ++col) {
            std::uint8_t piv = n;
            for (std::uint8_t r = col; r < n; ++r)
                if (a.get(r, col)) { piv = r; break; }
            require(piv != n, "BitMat::inverse: singular matrix");
            if (piv != col) {
                std::uint8_t t1 = a.row(col), t2 = a.row(piv);
                a.set_row(col, t2); a.set_row(piv, t1);
                t1 = inv.row(col); t2 = inv.row(piv);
                inv.set_row(col, t2); inv.set_row(piv, t1);
            }
            for (std::uint8_t r = 0; r < n; ++r) {
                if (r != col && a.get(r, col)) {
                    a.set_row(r, a.row(r) ^ a.row(col));
                    inv.set_row(r, inv.row(r) ^ inv.row(col));
                }
            }
        }
        return inv;
    }

    bool is_invertible() const {
        BitMat a = *this;
        for (std::uint8_t col = 0; col < n; ++col) {
            std::uint8_t piv = n;
            for (std::uint8_t r = col; r < n; ++r)
                if (a.get(r, col)) { piv = r; break; }
            if (piv == n) return false;
            if (piv != col) {
                std::uint8_t t1 = a.row(col), t2 = a.row(piv);
                a.set_row(col, t2); a.set_row(piv, t1);
            }
            for (std::uint8_t r = (std::uint8_t)(col + 1); r < n; ++r)
                if (a.get(r, col)) a.set_row(r, a.row(r) ^ a.row(col));
        }
        return true;
    }

    bool is_symmetric() const {
        for (std::uint8_t i = 0; i < n; ++i)
            for (std::uint8_t j = (std::uint8_t)(i + 1); j < n; ++j)
                if (get(i, j) != get(j, i)) return false;
        return true;
    }

    friend bool operator==(const BitMat& a, const BitMat& bm) {
        return a.n == bm.n && a.b == bm.b;
    }
    friend bool operator!=(const BitMat& a, const BitMat& bm) { return !(a == bm); }
    friend bool operator<(const BitMat& a, const BitMat& bm) {
        return a.b < bm.b;
    }

    friend std::ostream& operator<<(std::ostream& os, const BitMat& m) {
        os << "[";
        for (std::uint8_t i = 0; i < m.n; ++i) {
            if (i) os << ";";
            for (std::uint8_t j = 0; j < m.n; ++j) os << (m.get(i, j) ? '1' : '0');
        }
        return os << "]";
    }
};

// ---- symplectic structure on V = Y + Y*, coordinates (y_1..y_n, f_1..f_n) ----

// <(y1,f1),(y2,f2)> = f2(y1) + f1(y2), as a bit
inline bool symplectic_pair(std::uint8_t dim2n, std::uint8_t v, std::uint8_t w) {
    std::uint8_t half = (std::uint8_t)(dim2n / 2);
    std::uint8_t mask = (std::uint8_t)((1u << half) - 1);
    std::uint8_t y1 = (std::uint8_t)(v & mask), f1 = (std::uint8_t)(v >> half);
    std::uint8_t y2 = (std::uint8_t)(w & mask), f2 = (std::uint8_t)(w >> half);
    return (__builtin_popcount((y1 & f2) | 0u) + __builtin_popcount(y2 & f1)) & 1;
}

inline bool preserves_symplectic(const BitMat& g) {
    for (std::uint8_t i = 0; i < g.n; ++i)
        for (std::uint8_t j = 0; j < g.n; ++j) {
            std::uint8_t ei = (std::uint8_t)(1u << i), ej = (std::uint8_t)(1u << j);
            if (symplectic_pair(g.n, g.apply(ei), g.apply(ej)) !=
                symplectic_pair(g.n, ei, ej))
                return false;
        }
    return true;
}

// symplectic transvection x -> x + <x,w> w
inline BitMat transvection(std::uint8_t dim2n, std::uint8_t w) {
    BitMat t = BitMat::identity(dim2n);
    for (std::uint8_t j = 0; j < dim2n; ++j) {
        std::uint8_t ej = (std::uint8_t)(1u << j);
        if (symplectic_pair(dim2n, ej, w)) {
            // column j gains w
            for (std::uint8_t i = 0; i < dim2n; ++i)
                if ((w >> i) & 1) t.set(i, j, !t.get(i, j));
        }
    }
    return t;
}

// block embeddings for the parabolic P = GL(Y) |x S^2 Y*  inside Sp(V):
// l -> diag(L, L^{-T}), u -> [[I,0],[U,I]] in (y; f) coordinates
BitMat embed_gl(const BitMat& l);
BitMat embed_sym(const BitMat& u);
bool in_parabolic(const BitMat& g);                 // preserves Y* = {y = 0}
void parabolic_factor(const BitMat& g, BitMat& u, BitMat& l); // g = u * l

} // namespace isocat
