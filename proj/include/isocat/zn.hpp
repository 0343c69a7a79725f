// zn.hpp -- exact linear algebra modulo a composite N (zero divisors handled).
//
// The solver runs a Howell-style elimination: pivots are made to divide N by
// unit scaling, gcd row transforms merge incomparable entries, and every
// non-unit pivot row spawns a completion row (N/pivot times it) so that the
// hidden constraints on later columns are materialized.  Back-substitution
// with free variables = 0 then yields a canonical particular solution, and
// pivot/free freedoms yield generators of the solution subgroup of (Z/N)^n.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isocat/common.hpp"

namespace isocat {

using ZnVec = std::vector<std::uint32_t>; // entries in [0, N)

struct ZnSolution {
    std::optional<ZnVec> x;          // canonical particular solution
    std::vector<ZnVec> null_gens;    // generators of {v : M v = 0 mod N}
    // when x is empty: a row (c, r) in the row space of the augmented system
    // with c = 0 and r != 0; stored as the combination over input rows.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> certificate; // (row, coeff)
};

// Solve M x = rhs (mod N). M is rows x cols, row-major.
ZnSolution solve_zn(const std::vector<ZnVec>& m, const ZnVec& rhs,
                    std::uint32_t n_mod, bool want_nullspace = true);

// modular helpers
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t n);      // a must be a unit
// unit u with a * u = gcd(a, N) (mod N)
std::uint32_t unit_scale_to_gcd(std::uint32_t a, std::uint32_t n);

} // namespace isocat
