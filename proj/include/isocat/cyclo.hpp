// cyclo.hpp -- exact elements of the cyclotomic field Q(zeta_N).
//
// An element is a rational-coefficient vector in the power basis
// 1, x, ..., x^{deg-1} modulo the N-th cyclotomic polynomial Phi_N.
// Conductors are registered lazily in a process-wide table; intended for
// small N (<= 64 in this project, Gaussian rationals N = 4 dominating).
#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "isocat/rat.hpp"
#include "isocat/rootu.hpp"

namespace isocat {

class Cyclo {
public:
    Cyclo() : cond_(1), c_(1) {}
    explicit Cyclo(const Rat& r) : cond_(1), c_{r} {}

    static Cyclo zero(std::uint32_t n);
    static Cyclo one(std::uint32_t n);
    // zeta_N^k as an element of Q(zeta_N)
    static Cyclo root(std::uint32_t n, std::int64_t k);
    static Cyclo from_root(const RootOfUnity& r, std::uint32_t conductor);
    static Cyclo rational(const Rat& r, std::uint32_t conductor);

    std::uint32_t conductor() const { return cond_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;     // lies in Q
    Rat rational_part() const;    // requires is_rational()

    Cyclo lift_to(std::uint32_t m) const; // cond_ must divide m

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    Cyclo operator-() const;
    Cyclo conj() const;       // complex conjugation zeta -> zeta^{-1}
    Cyclo inverse() const;    // requires nonzero
    Cyclo& operator+=(const Cyclo& b) { *this = *this + b; return *this; }
    Cyclo& operator-=(const Cyclo& b) { *this = *this - b; return *this; }
    Cyclo& operator*=(const Cyclo& b) { *this = *this * b; return *this; }

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // If the value is a root of unity of order dividing the conductor,
    // return it (scan over all conductor-th roots).
    bool as_root(RootOfUnity& out) const;

    friend std::ostream& operator<<(std::ostream& os, const Cyclo& v);

    // degree of Q(zeta_N) (Euler phi)
    static std::uint32_t degree(std::uint32_t n);

private:
    std::uint32_t cond_;
    std::vector<Rat> c_; // size degree(cond_)

    Cyclo(std::uint32_t n, std::vector<Rat> c) : cond_(n), c_(std::move(c)) {}
    static void align(Cyclo& a, Cyclo& b);
};

} // namespace isocat
