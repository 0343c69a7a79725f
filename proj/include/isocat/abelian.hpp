// abelian.hpp -- finite abelian groups as fixed decompositions Z/n1 x ... x Z/nk,
// with the global duality convention used throughout the toolkit:
//
//     chi_x(y) = zeta_N ^ ( sum_i x_i y_i (N / n_i) ),   N = exp(A).
//
// Every statement "on the character group" is stored in A-coordinates through
// this identification.  Elements are addressed by mixed-radix rank, factor 0
// least significant.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isocat/common.hpp"
#include "isocat/zn.hpp"

namespace isocat {

struct AbelianGroup {
    std::vector<std::uint32_t> factors; // n_1 .. n_k, each >= 2 (empty = trivial)
    std::uint32_t size = 1;
    std::uint32_t exponent = 1;

    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<std::uint32_t> ns);

    std::uint32_t rank() const { return (std::uint32_t)factors.size(); }

    std::uint32_t rank_of(const ZnVec& coords) const;
    ZnVec coords_of(std::uint32_t r) const;
    std::uint32_t coord(std::uint32_t r, std::uint32_t i) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return add(a, neg(b));
    }
    std::uint32_t smul(std::int64_t s, std::uint32_t a) const;
    std::uint32_t order_of(std::uint32_t a) const;
    std::uint32_t unit_rank(std::uint32_t i) const; // rank of generator e_i

    // y with 2y = x; group order must be odd (then y is unique)
    std::uint32_t halve(std::uint32_t a) const;
    bool has_odd_order() const { return size % 2 == 1; }

    // exponent (mod `exponent`) of chi_x(y); symmetric in (x, y)
    std::uint32_t pair_exponent(std::uint32_t x, std::uint32_t y) const;

    std::string describe() const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.factors == b.factors;
    }
};

// A bicharacter A x A -> mu_N given by an exponent matrix C (k x k over
// Z/exponent with the divisibility pattern (N/gcd(n_i,n_j)) | C_ij):
//     R(x, y) = zeta_N ^ ( sum_{ij} C_ij x_i y_j ).
// Used both for invariant forms R and for bicharacter 2-cocycles J.
struct Pairing {
    AbelianGroup A;
    std::vector<std::uint32_t> C; // row-major k x k, exponents mod A.exponent

    Pairing() = default;
    Pairing(AbelianGroup a, std::vector<std::uint32_t> c)
        : A(std::move(a)), C(std::move(c)) {}

    std::uint32_t at(std::uint32_t i, std::uint32_t j) const {
        return C[i * A.rank() + j];
    }
    std::uint32_t eval_exp(std::uint32_t x, std::uint32_t y) const;

    bool is_bicharacter_matrix() const; // divisibility pattern holds
    bool is_alternating(std::uint32_t* witness = nullptr) const; // R(x,x)=1
    bool is_nondegenerate(std::uint32_t* witness = nullptr) const;
    bool is_symmetric() const;

    friend bool operator==(const Pairing& a, const Pairing& b) {
        return a.A == b.A && a.C == b.C;
    }
};

struct SymplecticBasis {
    // hyperbolic pairs: ranks of e_1..e_m then f_1..f_m
    std::vector<std::uint32_t> e, f;
};

// Ordered symplectic basis of an alternating nondegenerate pairing on an
// elementary abelian 2-group: R(e_i, f_j) = (-1)^{delta_ij},
// R(e_i, e_j) = R(f_i, f_j) = 1.  Deterministic (lowest rank first).
// Throws ContractViolation with a witness description otherwise.
SymplecticBasis symplectic_basis(const Pairing& r);

} // namespace isocat
