// rootu.hpp -- roots of unity stored as exponents: value = exp(2*pi*i*k/N).
//
// Stored in canonical form (gcd(k, N) reduced out), so structural equality is
// mathematical equality and hashing is consistent.  Products are computed at
// the lcm of the two orders.
#pragma once

#include <cstdint>
#include <functional>
#include <ostream>

#include "isocat/common.hpp"

namespace isocat {

struct RootOfUnity {
    std::uint32_t order = 1; // N >= 1
    std::uint32_t expn = 0;  // in [0, N), gcd-reduced against N

    RootOfUnity() = default;

    static RootOfUnity of(std::uint32_t order, std::int64_t expn) {
        require(order >= 1, "RootOfUnity: order must be positive");
        std::int64_t e = expn % (std::int64_t)order;
        if (e < 0) e += order;
        RootOfUnity r;
        r.order = order;
        r.expn = (std::uint32_t)e;
        r.reduce();
        return r;
    }
    static RootOfUnity one() { return RootOfUnity(); }
    static RootOfUnity minus_one() { return of(2, 1); }

    bool is_one() const { return expn == 0; }

    // exponent of this root rewritten at a conductor M (order must divide M)
    std::uint32_t exponent_at(std::uint32_t m) const {
        require(m % order == 0, "RootOfUnity: order does not divide conductor");
        return expn * (m / order) % m;
    }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        std::uint32_t l = (std::uint32_t)lcm_u64(a.order, b.order);
        return of(l, (std::int64_t)a.exponent_at(l) + b.exponent_at(l));
    }
    RootOfUnity inverse() const { return of(order, -(std::int64_t)expn); }
    RootOfUnity pow(std::int64_t k) const {
        return of(order, (std::int64_t)expn * (k % (std::int64_t)order));
    }

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
        return a.order == b.order && a.expn == b.expn;
    }
    friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) {
        return !(a == b);
    }

    friend std::ostream& operator<<(std::ostream& os, const RootOfUnity& r) {
        if (r.expn == 0) return os << "1";
        if (r.order == 2) return os << "-1";
        if (r.order == 4) return os << (r.expn == 1 ? "i" : "-i");
        return os << "zeta" << r.order << "^" << r.expn;
    }

private:
    void reduce() {
        if (expn == 0) { order = 1; return; }
        std::uint32_t g = (std::uint32_t)gcd_u64(expn, order);
        expn /= g;
        order /= g;
    }
};

struct RootOfUnityHash {
    std::size_t operator()(const RootOfUnity& r) const {
        return std::hash<std::uint64_t>()(((std::uint64_t)r.order << 32) | r.expn);
    }
};

} // namespace isocat
