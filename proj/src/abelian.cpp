#include "isocat/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace isocat {

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> ns) : factors(std::move(ns)) {
    for (std::uint32_t n : factors) {
        require(n >= 2, "AbelianGroup: factors must be >= 2");
        std::uint64_t s = (std::uint64_t)size * n;
        require(s <= (1u << 24), "AbelianGroup: group too large");
        size = (std::uint32_t)s;
        exponent = (std::uint32_t)lcm_u64(exponent, n);
    }
}

std::uint32_t AbelianGroup::rank_of(const ZnVec& coords) const {
    require(coords.size() == factors.size(), "AbelianGroup: coord arity");
    std::uint32_t r = 0, mult = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        r += (coords[i] % factors[i]) * mult;
        mult *= factors[i];
    }
    return r;
}

ZnVec AbelianGroup::coords_of(std::uint32_t r) const {
    ZnVec out(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        out[i] = r % factors[i];
        r /= factors[i];
    }
    return out;
}

std::uint32_t AbelianGroup::coord(std::uint32_t r, std::uint32_t i) const {
    for (std::uint32_t k = 0; k < i; ++k) r /= factors[k];
    return r % factors[i];
}

std::uint32_t AbelianGroup::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, mult = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::uint32_t n = factors[i];
        out += ((a % n) + (b % n)) % n * mult;
        a /= n;
        b /= n;
        mult *= n;
    }
    return out;
}

std::uint32_t AbelianGroup::neg(std::uint32_t a) const {
    std::uint32_t out = 0, mult = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::uint32_t n = factors[i];
        out += (n - a % n) % n * mult;
        a /= n;
        mult *= n;
    }
    return out;
}

std::uint32_t AbelianGroup::smul(std::int64_t s, std::uint32_t a) const {
    std::uint32_t out = 0, mult = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::uint32_t n = factors[i];
        std::int64_t c = (std::int64_t)(a % n) * (s % (std::int64_t)n) % (std::int64_t)n;
        if (c < 0) c += n;
        out += (std::uint32_t)c * mult;
        a /= n;
        mult *= n;
    }
    return out;
}

std::uint32_t AbelianGroup::order_of(std::uint32_t a) const {
    std::uint64_t o = 1;
    std::uint32_t rest = a;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::uint32_t n = factors[i], c = rest % n;
        rest /= n;
        if (c) o = lcm_u64(o, n / gcd_u64(c, n));
    }
    return (std::uint32_t)o;
}

std::uint32_t AbelianGroup::unit_rank(std::uint32_t i) const {
    std::uint32_t mult = 1;
    for (std::uint32_t k = 0; k < i; ++k) mult *= factors[k];
    return mult;
}

std::uint32_t AbelianGroup::halve(std::uint32_t a) const {
    require(has_odd_order(), "halve: group must have odd order");
    std::uint32_t out = 0, mult = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::uint32_t n = factors[i];
        std::uint32_t c = a % n;
        a /= n;
        out += (std::uint32_t)(((std::uint64_t)c * ((n + 1) / 2)) % n) * mult;
        mult *= n;
    }
    return out;
}

std::uint32_t AbelianGroup::pair_exponent(std::uint32_t x, std::uint32_t y) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::uint32_t n = factors[i];
        acc += (std::uint64_t)(x % n) * (y % n) % exponent * (exponent / n);
        x /= n;
        y /= n;
    }
    return (std::uint32_t)(acc % exponent);
}

std::string AbelianGroup::describe() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "x";
        os << "Z/" << factors[i];
    }
    return os.str();
}

std::uint32_t Pairing::eval_exp(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t k = A.rank(), n = A.exponent;
    std::uint64_t acc = 0;
    ZnVec xc = A.coords_of(x), yc = A.coords_of(y);
    for (std::uint32_t i = 0; i < k; ++i) {
        if (!xc[i]) continue;
        for (std::uint32_t j = 0; j < k; ++j) {
            if (!yc[j]) continue;
            acc += (std::uint64_t)at(i, j) * xc[i] % n * yc[j] % n;
        }
    }
    return (std::uint32_t)(acc % n);
}

bool Pairing::is_bicharacter_matrix() const {
    std::uint32_t k = A.rank(), n = A.exponent;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) {
            std::uint32_t g = (std::uint32_t)gcd_u64(A.factors[i], A.factors[j]);
            if (at(i, j) % (n / g) != 0) return false;
        }
    return true;
}

bool Pairing::is_alternating(std::uint32_t* witness) const {
    for (std::uint32_t x = 0; x < A.size; ++x) {
        if (eval_exp(x, x) != 0) {
            if (witness) *witness = x;
            return false;
        }
    }
    return true;
}

bool Pairing::is_nondegenerate(std::uint32_t* witness) const {
    for (std::uint32_t x = 1; x < A.size; ++x) {
        bool trivial = true;
        for (std::uint32_t y = 0; y < A.size && trivial; ++y)
            if (eval_exp(x, y) != 0) trivial = false;
        if (trivial) {
            if (witness) *witness = x;
            return false;
        }
    }
    return true;
}

bool Pairing::is_symmetric() const {
    std::uint32_t k = A.rank();
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

SymplecticBasis symplectic_basis(const Pairing& r) {
    const AbelianGroup& A = r.A;
    for (std::uint32_t n : A.factors)
        require(n == 2, "symplectic_basis: group must be elementary abelian of exponent 2");
    std::uint32_t witness = 0;
    if (!r.is_alternating(&witness))
        throw ContractViolation("symplectic_basis: form is not alternating, witness rank " +
                                std::to_string(witness));
    if (!r.is_nondegenerate(&witness))
        throw ContractViolation("symplectic_basis: form is degenerate, witness rank " +
                                std::to_string(witness));

    // peel off hyperbolic pairs; the residual space is tracked as the set of
    // ranks orthogonal to all pairs found so far, lowest rank chosen first
    SymplecticBasis out;
    std::vector<std::uint32_t> cand;
    for (std::uint32_t x = 1; x < A.size; ++x) cand.push_back(x);
    while (!cand.empty()) {
        std::uint32_t e = cand.front();
        std::uint32_t f = 0;
        bool found = false;
        for (std::uint32_t y : cand) {
            if (r.eval_exp(e, y) != 0) { f = y; found = true; break; }
        }
        internal_check(found, "symplectic_basis: nondegenerate form ran out of partners");
        out.e.push_back(e);
        out.f.push_back(f);
        std::vector<std::uint32_t> next;
        for (std::uint32_t y : cand) {
            if (y != e && y != f && r.eval_exp(e, y) == 0 && r.eval_exp(f, y) == 0)
                next.push_back(y);
        }
        cand = std::move(next);
    }
    internal_check((std::uint64_t)1 << (2 * out.e.size()) == A.size || A.size == 1,
                   "symplectic_basis: hyperbolic pairs do not span");
    return out;
}

} // namespace isocat
