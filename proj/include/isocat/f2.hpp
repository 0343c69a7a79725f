// f2.hpp -- bit-packed vectors and matrices over the field of two elements,
// with exact rank / solve / nullspace via Gaussian elimination.
//
// F2Eliminator consumes equations one at a time (lowest-set-bit pivoting,
// deterministic), keeps a reduced basis, and can track the provenance of each
// kept row as a combination of original equation indices -- that combination
// is the unsolvability certificate handed out on inconsistent systems.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isocat/common.hpp"

namespace isocat {

struct F2Vec {
    std::uint32_t n = 0;
    std::vector<std::uint64_t> w;

    F2Vec() = default;
    explicit F2Vec(std::uint32_t bits) : n(bits), w((bits + 63) / 64, 0) {}

    bool get(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(std::uint32_t i, bool v) {
        std::uint64_t m = 1ULL << (i & 63);
        if (v) w[i >> 6] |= m; else w[i >> 6] &= ~m;
    }
    void flip(std::uint32_t i) { w[i >> 6] ^= 1ULL << (i & 63); }

    void operator^=(const F2Vec& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    bool is_zero() const {
        for (std::uint64_t x : w) if (x) return false;
        return true;
    }
    // index of lowest set bit, or n if zero
    std::uint32_t lowest_bit() const;
    bool dot(const F2Vec& o) const; // parity of <this, o>
    std::uint32_t popcount() const;

    friend bool operator==(const F2Vec& a, const F2Vec& b) {
        return a.n == b.n && a.w == b.w;
    }
};

struct F2Mat {
    std::uint32_t rows = 0, cols = 0;
    std::vector<F2Vec> r;

    F2Mat() = default;
    F2Mat(std::uint32_t rows_, std::uint32_t cols_)
        : rows(rows_), cols(cols_), r(rows_, F2Vec(cols_)) {}

    bool get(std::uint32_t i, std::uint32_t j) const { return r[i].get(j); }
    void set(std::uint32_t i, std::uint32_t j, bool v) { r[i].set(j, v); }

    F2Vec mul(const F2Vec& x) const; // this * x
    std::uint32_t rank() const;
};

struct F2Solution {
    std::optional<F2Vec> x;          // a particular solution, if one exists
    std::vector<F2Vec> nullspace;    // basis of ker(M)
    // when x is empty: indices of input rows whose XOR gives 0 = 1
    std::vector<std::uint32_t> certificate;
};

// Solve M x = rhs exactly. Deterministic (lowest pivot index first).
F2Solution solve_f2(const F2Mat& m, const F2Vec& rhs);

// Incremental eliminator over F2 for lazily generated equation streams.
class F2Eliminator {
public:
    // track_provenance: keep, per retained row, the set of original equation
    // indices it combines (needed for unsolvability certificates).
    F2Eliminator(std::uint32_t unknowns, bool track_provenance);

    // Feed one equation row (coefficients) = rhs bit. Returns false exactly
    // when the equation made the system inconsistent.
    bool add(const F2Vec& coeffs, bool rhs);

    bool consistent() const { return consistent_; }
    std::uint32_t rank() const { return (std::uint32_t)pivot_col_.size(); }
    std::uint32_t equations_seen() const { return eq_count_; }

    // combination of original equation indices XOR-ing to 0 = 1
    const std::vector<std::uint32_t>& certificate() const { return certificate_; }

    // particular solution with free variables = 0 (system must be consistent)
    F2Vec solution() const;
    std::vector<F2Vec> nullspace() const;

private:
    std::uint32_t n_;
    bool track_;
    bool consistent_ = true;
    std::uint32_t eq_count_ = 0;
    std::vector<F2Vec> rows_;         // reduced rows, coeffs only
    std::vector<std::uint8_t> rhs_;   // rhs bit per kept row
    std::vector<std::uint32_t> pivot_col_;
    std::vector<std::vector<std::uint32_t>> prov_; // sorted index lists
    std::vector<std::uint32_t> certificate_;

    static void xor_prov(std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b);
};

} // namespace isocat
