#include "isocat/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace isocat {

namespace {

// integer polynomials, index = power
using IPoly = std::vector<std::int64_t>;

IPoly ipoly_trim(IPoly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

// exact division by a monic divisor; remainder must vanish
IPoly ipoly_div_monic(IPoly num, const IPoly& den) {
    internal_check(den.back() == 1, "ipoly_div_monic: divisor not monic");
    std::size_t dn = den.size();
    internal_check(num.size() >= dn, "ipoly_div_monic: degree underflow");
    IPoly q(num.size() - dn + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        std::int64_t f = num[k + dn - 1];
        if (f == 0) continue;
        q[k] = f;
        for (std::size_t j = 0; j < dn; ++j) num[k + j] -= f * den[j];
    }
    for (std::int64_t v : num)
        internal_check(v == 0, "ipoly_div_monic: nonzero remainder");
    return ipoly_trim(q);
}

IPoly cyclotomic_poly(std::uint32_t n) {
    // x^n - 1 divided by Phi_d for all proper divisors d | n
    IPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d == 0) p = ipoly_div_monic(std::move(p), cyclotomic_poly(d));
    }
    return p;
}

struct CondCtx {
    std::uint32_t n = 1;
    std::uint32_t deg = 1;
    IPoly phi;
    // x^e mod Phi_n for every e in [0, 2n): row e has deg entries
    std::vector<std::vector<Rat>> power;
};

const CondCtx& ctx_for(std::uint32_t n) {
    static std::mutex mu;
    static std::map<std::uint32_t, CondCtx> table;
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(n);
    if (it != table.end()) return it->second;

    require(n >= 1, "conductor must be positive");
    CondCtx ctx;
    ctx.n = n;
    ctx.phi = cyclotomic_poly(n);
    ctx.deg = (std::uint32_t)ctx.phi.size() - 1;
    ctx.power.assign(2 * (std::size_t)n, std::vector<Rat>(ctx.deg, Rat(0)));
    for (std::uint32_t e = 0; e < ctx.deg && e < 2 * n; ++e) ctx.power[e][e] = Rat(1);
    for (std::uint32_t e = ctx.deg; e < 2 * n; ++e) {
        // x^e = x * x^{e-1}; fold the overflowing top power through
        // x^deg = -(phi[0] + ... + phi[deg-1] x^{deg-1})   (phi monic)
        const auto& prev = ctx.power[e - 1];
        std::vector<Rat> cur(ctx.deg, Rat(0));
        for (std::uint32_t i = 0; i + 1 < ctx.deg; ++i) cur[i + 1] = prev[i];
        Rat top = prev[ctx.deg - 1];
        if (!top.is_zero()) {
            for (std::uint32_t i = 0; i < ctx.deg; ++i)
                cur[i] -= top * Rat(ctx.phi[i]);
        }
        ctx.power[e] = std::move(cur);
    }
    return table.emplace(n, std::move(ctx)).first->second;
}

// rational polynomials for the inverse computation
using QPoly = std::vector<Rat>;

QPoly qtrim(QPoly p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    return p;
}

bool qzero(const QPoly& p) { return p.size() == 1 && p[0].is_zero(); }

// num = q * den + rem with deg(rem) < deg(den)
void qdivmod(const QPoly& num, const QPoly& den, QPoly& q, QPoly& rem) {
    rem = qtrim(num);
    if (rem.size() < den.size()) { q = QPoly{Rat(0)}; return; }
    q.assign(rem.size() - den.size() + 1, Rat(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        if (rem.size() < k + den.size()) continue;
        Rat f = rem[k + den.size() - 1] / den.back();
        if (f.is_zero()) continue;
        q[k] = f;
        for (std::size_t j = 0; j < den.size(); ++j)
            rem[k + j] -= f * den[j];
    }
    rem = qtrim(rem);
    q = qtrim(q);
}

} // namespace

std::uint32_t Cyclo::degree(std::uint32_t n) { return ctx_for(n).deg; }

Cyclo Cyclo::zero(std::uint32_t n) {
    return Cyclo(n, std::vector<Rat>(degree(n), Rat(0)));
}

Cyclo Cyclo::one(std::uint32_t n) { return rational(Rat(1), n); }

Cyclo Cyclo::rational(const Rat& r, std::uint32_t n) {
    Cyclo v = zero(n);
    v.c_[0] = r;
    return v;
}

Cyclo Cyclo::root(std::uint32_t n, std::int64_t k) {
    const CondCtx& ctx = ctx_for(n);
    std::int64_t e = k % (std::int64_t)n;
    if (e < 0) e += n;
    return Cyclo(n, ctx.power[(std::size_t)e]);
}

Cyclo Cyclo::from_root(const RootOfUnity& r, std::uint32_t conductor) {
    return root(conductor, r.exponent_at(conductor));
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_zero(); });
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rat Cyclo::rational_part() const {
    require(is_rational(), "Cyclo: value is not rational");
    return c_[0];
}

Cyclo Cyclo::lift_to(std::uint32_t m) const {
    if (m == cond_) return *this;
    require(m % cond_ == 0, "Cyclo::lift_to: conductor must be a multiple");
    Cyclo out = zero(m);
    std::uint32_t step = m / cond_;
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Cyclo p = root(m, (std::int64_t)i * step);
        for (std::uint32_t j = 0; j < out.c_.size(); ++j)
            out.c_[j] += c_[i] * p.c_[j];
    }
    return out;
}

void Cyclo::align(Cyclo& a, Cyclo& b) {
    if (a.cond_ == b.cond_) return;
    std::uint32_t l = (std::uint32_t)lcm_u64(a.cond_, b.cond_);
    a = a.lift_to(l);
    b = b.lift_to(l);
}

Cyclo operator+(const Cyclo& a0, const Cyclo& b0) {
    Cyclo a = a0, b = b0;
    Cyclo::align(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclo operator-(const Cyclo& a0, const Cyclo& b0) {
    Cyclo a = a0, b = b0;
    Cyclo::align(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo operator*(const Cyclo& a0, const Cyclo& b0) {
    Cyclo a = a0, b = b0;
    Cyclo::align(a, b);
    const CondCtx& ctx = ctx_for(a.cond_);
    std::uint32_t deg = ctx.deg;
    std::vector<Rat> conv(2 * (std::size_t)deg, Rat(0));
    for (std::uint32_t i = 0; i < deg; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::uint32_t j = 0; j < deg; ++j) {
            if (b.c_[j].is_zero()) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    std::vector<Rat> out(deg, Rat(0));
    for (std::uint32_t e = 0; e < conv.size(); ++e) {
        if (conv[e].is_zero()) continue;
        if (e < deg) {
            out[e] += conv[e];
        } else {
            const auto& row = ctx.power[e];
            for (std::uint32_t j = 0; j < deg; ++j)
                if (!row[j].is_zero()) out[j] += conv[e] * row[j];
        }
    }
    return Cyclo(a.cond_, std::move(out));
}

Cyclo Cyclo::conj() const {
    const CondCtx& ctx = ctx_for(cond_);
    Cyclo out = zero(cond_);
    for (std::uint32_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::uint32_t e = (cond_ - i % cond_) % cond_;
        const auto& row = ctx.power[e];
        for (std::uint32_t j = 0; j < out.c_.size(); ++j)
            if (!row[j].is_zero()) out.c_[j] += c_[i] * row[j];
    }
    return out;
}

Cyclo Cyclo::inverse() const {
    require(!is_zero(), "Cyclo: inverse of zero");
    const CondCtx& ctx = ctx_for(cond_);
    // extended Euclid in Q[x] between Phi_N and this element;
    // Phi_N is irreducible so the gcd is a nonzero constant
    QPoly r0(ctx.deg + 1, Rat(0));
    for (std::size_t i = 0; i < ctx.phi.size(); ++i) r0[i] = Rat(ctx.phi[i]);
    QPoly r1 = qtrim(c_);
    QPoly s0{Rat(0)}, s1{Rat(1)}; // Bezout coefficients on this element
    while (!qzero(r1)) {
        QPoly q, rem;
        qdivmod(r0, r1, q, rem);
        // s2 = s0 - q * s1
        QPoly qs(q.size() + s1.size() - 1, Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (std::size_t j = 0; j < s1.size(); ++j)
                qs[i + j] += q[i] * s1[j];
        }
        QPoly s2(std::max(s0.size(), qs.size()), Rat(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = qtrim(s2);
    }
    internal_check(r0.size() == 1 && !r0[0].is_zero(),
                   "Cyclo::inverse: gcd with Phi_N is not a unit");
    internal_check(s0.size() <= ctx.deg, "Cyclo::inverse: degree overflow");
    Cyclo out = zero(cond_);
    for (std::size_t i = 0; i < s0.size(); ++i) out.c_[i] = s0[i] / r0[0];
    return out;
}

bool operator==(const Cyclo& a0, const Cyclo& b0) {
    Cyclo a = a0, b = b0;
    Cyclo::align(a, b);
    return a.c_ == b.c_;
}

bool Cyclo::as_root(RootOfUnity& out) const {
    for (std::uint32_t k = 0; k < cond_; ++k) {
        if (*this == root(cond_, k)) {
            out = RootOfUnity::of(cond_, k);
            return true;
        }
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& v) {
    bool first = true;
    for (std::size_t i = 0; i < v.c_.size(); ++i) {
        if (v.c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << v.c_[i].str();
        if (i > 0) os << "*z" << v.cond_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os;
}

} // namespace isocat
