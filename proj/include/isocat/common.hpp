// common.hpp -- error types, deterministic RNG, small shared utilities.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace isocat {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition / input contract violated by the caller.
struct ContractViolation : Error {
    explicit ContractViolation(const std::string& msg) : Error(msg) {}
};

// An enumeration or solver exceeded its configured cap.
struct CapExceeded : Error {
    std::size_t partial;
    CapExceeded(const std::string& msg, std::size_t partial_count)
        : Error(msg), partial(partial_count) {}
};

// A computation contradicted a structural guarantee (would indicate a bug,
// not bad input).
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ContractViolation(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
    if (!cond) throw InternalInconsistency(msg);
}

// Deterministic RNG wrapper. mt19937_64 output is pinned by the standard, and
// we reduce by plain modulo, so sequences are reproducible across platforms.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed = 0) : eng(seed) {}
    std::uint64_t next() { return eng(); }
    std::uint64_t below(std::uint64_t n) { return n ? eng() % n : 0; }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / gcd_u64(a, b) * b;
}

} // namespace isocat
