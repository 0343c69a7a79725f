#include "isocat/zn.hpp"

#include <algorithm>
#include <numeric>

namespace isocat {

namespace {

std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
    if (b == 0) { s = 1; t = 0; return a; }
    std::int64_t s1, t1;
    std::int64_t g = xgcd(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

} // namespace

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t n) {
    std::int64_t s, t;
    std::int64_t g = xgcd((std::int64_t)(a % n), (std::int64_t)n, s, t);
    require(g == 1, "mod_inv: not a unit");
    std::int64_t r = s % (std::int64_t)n;
    if (r < 0) r += n;
    return (std::uint32_t)r;
}

std::uint32_t unit_scale_to_gcd(std::uint32_t a, std::uint32_t n) {
    a %= n;
    if (a == 0) return 1;
    std::uint32_t g = (std::uint32_t)gcd_u64(a, n);
    // a/g is a unit modulo n/g; lift its inverse to a unit modulo n
    std::uint32_t u0 = mod_inv(a / g, n / g);
    for (std::uint32_t k = 0;; ++k) {
        std::uint64_t cand = u0 + (std::uint64_t)k * (n / g);
        if (cand >= n) cand %= n;
        if (gcd_u64(cand, n) == 1) return (std::uint32_t)cand;
        internal_check(k <= n, "unit_scale_to_gcd: no unit lift found");
    }
}

namespace {

struct Row {
    ZnVec c;                  // cols coefficients
    std::uint32_t rhs = 0;
    // combination of original rows (index -> coefficient); completion rows
    // inherit scaled provenance
    std::vector<std::pair<std::uint32_t, std::uint32_t>> prov;
};

void prov_addmul(std::vector<std::pair<std::uint32_t, std::uint32_t>>& a,
                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& b,
                 std::uint32_t f, std::uint32_t n) {
    for (auto [idx, coef] : b) {
        std::uint32_t add = (std::uint32_t)(((std::uint64_t)coef * f) % n);
        if (!add) continue;
        bool found = false;
        for (auto& [i2, c2] : a) {
            if (i2 == idx) {
                c2 = (c2 + add) % n;
                found = true;
                break;
            }
        }
        if (!found) a.emplace_back(idx, add);
    }
    a.erase(std::remove_if(a.begin(), a.end(),
                           [](const auto& p) { return p.second == 0; }),
            a.end());
}

void row_submul(Row& r, const Row& p, std::uint32_t f, std::uint32_t n) {
    // r -= f * p  (mod n)
    if (f == 0) return;
    for (std::size_t j = 0; j < r.c.size(); ++j)
        r.c[j] = (std::uint32_t)((r.c[j] + (std::uint64_t)(n - f % n) * p.c[j]) % n);
    r.rhs = (std::uint32_t)((r.rhs + (std::uint64_t)(n - f % n) * p.rhs) % n);
    prov_addmul(r.prov, p.prov, n - f % n, n);
}

void row_scale(Row& r, std::uint32_t u, std::uint32_t n) {
    for (auto& v : r.c) v = (std::uint32_t)(((std::uint64_t)v * u) % n);
    r.rhs = (std::uint32_t)(((std::uint64_t)r.rhs * u) % n);
    for (auto& [i, c] : r.prov) c = (std::uint32_t)(((std::uint64_t)c * u) % n);
    r.prov.erase(std::remove_if(r.prov.begin(), r.prov.end(),
                                [](const auto& p) { return p.second == 0; }),
                 r.prov.end());
}

} // namespace

ZnSolution solve_zn(const std::vector<ZnVec>& m, const ZnVec& rhs,
                    std::uint32_t n, bool want_nullspace) {
    require(n >= 2, "solve_zn: modulus must be >= 2");
    require(m.size() == rhs.size(), "solve_zn: dimension mismatch");
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (const auto& row : m)
        require(row.size() == cols, "solve_zn: ragged matrix");

    std::vector<Row> work;
    work.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Row r;
        r.c.resize(cols);
        for (std::size_t j = 0; j < cols; ++j) r.c[j] = m[i][j] % n;
        r.rhs = rhs[i] % n;
        r.prov.emplace_back((std::uint32_t)i, 1);
        work.push_back(std::move(r));
    }

    std::vector<Row> pivots;             // echelon rows, by pivot column
    std::vector<std::uint32_t> pivot_col;

    ZnSolution out;

    for (std::uint32_t col = 0; col < cols; ++col) {
        // gather active rows with a nonzero entry in this column
        std::vector<std::size_t> hot;
        for (std::size_t i = 0; i < work.size(); ++i)
            if (work[i].c[col] != 0) hot.push_back(i);
        if (hot.empty()) continue;

        // gcd-triangularize within the column: combine rows until one remains
        std::size_t keep = hot[0];
        for (std::size_t t = 1; t < hot.size(); ++t) {
            std::size_t other = hot[t];
            std::uint32_t a = work[keep].c[col], b = work[other].c[col];
            if (b == 0) continue;
            if (b % a != 0 && a % b == 0) {
                std::swap(work[keep], work[other]);
                std::swap(a, b);
            }
            if (b % a == 0) {
                row_submul(work[other], work[keep], b / a, n);
            } else {
                // unimodular pair transform: (K, O) -> (sK + tO, (-b/g)K + (a/g)O)
                // with sa + tb = g; determinant (sa + tb)/g = 1, so the row
                // space mod n is exactly preserved
                std::int64_t s, tt;
                std::int64_t g = xgcd((std::int64_t)a, (std::int64_t)b, s, tt);
                s %= (std::int64_t)n; if (s < 0) s += n;
                tt %= (std::int64_t)n; if (tt < 0) tt += n;
                Row combo = work[keep];
                row_scale(combo, (std::uint32_t)s, n);
                {
                    Row tmp = work[other];
                    row_scale(tmp, (std::uint32_t)tt, n);
                    for (std::size_t j = 0; j < cols; ++j)
                        combo.c[j] = (combo.c[j] + tmp.c[j]) % n;
                    combo.rhs = (combo.rhs + tmp.rhs) % n;
                    prov_addmul(combo.prov, tmp.prov, 1, n);
                }
                Row nother = work[keep];
                row_scale(nother, (std::uint32_t)((n - (b / g) % n) % n), n);
                {
                    Row tmp = std::move(work[other]);
                    row_scale(tmp, (std::uint32_t)((a / g) % n), n);
                    for (std::size_t j = 0; j < cols; ++j)
                        nother.c[j] = (nother.c[j] + tmp.c[j]) % n;
                    nother.rhs = (nother.rhs + tmp.rhs) % n;
                    prov_addmul(nother.prov, tmp.prov, 1, n);
                }
                internal_check(combo.c[col] == (std::uint64_t)g % n,
                               "solve_zn: gcd combine lost pivot");
                work[keep] = std::move(combo);
                work[other] = std::move(nother);
            }
            internal_check(work[other].c[col] == 0, "solve_zn: elimination failed");
        }

        // normalize pivot to a divisor of n by unit scaling
        Row prow = std::move(work[keep]);
        work.erase(work.begin() + (std::ptrdiff_t)keep);
        std::uint32_t a = prow.c[col];
        std::uint32_t u = unit_scale_to_gcd(a, n);
        row_scale(prow, u, n);
        std::uint32_t g = prow.c[col];
        internal_check(g == gcd_u64(a, n), "solve_zn: pivot normalization failed");

        // completion row exposes constraints hidden behind a non-unit pivot
        if (g != 1) {
            Row comp = prow;
            row_scale(comp, n / g, n);
            internal_check(comp.c[col] == 0, "solve_zn: completion row keeps pivot");
            bool nonzero = comp.rhs != 0;
            for (auto v : comp.c) nonzero = nonzero || v != 0;
            if (nonzero) work.push_back(std::move(comp));
        }

        pivots.push_back(std::move(prow));
        pivot_col.push_back(col);
    }

    // leftover rows are zero in all columns; nonzero rhs => inconsistent
    for (const auto& r : work) {
        bool allz = std::all_of(r.c.begin(), r.c.end(),
                                [](std::uint32_t v) { return v == 0; });
        internal_check(allz, "solve_zn: residual row has nonzero coefficient");
        if (r.rhs != 0) {
            out.certificate = r.prov;
            break;
        }
    }

    bool inconsistent = !out.certificate.empty();

    // back-substitution helper: given fixed values for a set of coordinates,
    // solve pivot rows bottom-up; returns false if some pivot fails to divide
    auto back_solve = [&](ZnVec& x, std::uint32_t rhs_scale) -> bool {
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const Row& r = pivots[k];
            std::uint32_t col = pivot_col[k];
            std::uint64_t acc = ((std::uint64_t)r.rhs * rhs_scale) % n;
            for (std::size_t j = col + 1; j < cols; ++j)
                acc = (acc + (std::uint64_t)(n - r.c[j]) * x[j]) % n;
            std::uint32_t g = r.c[col];
            if (acc % g != 0) return false;
            x[col] = (std::uint32_t)((acc / g) % (n / g));
        }
        return true;
    };

    if (!inconsistent) {
        ZnVec x(cols, 0);
        bool ok = back_solve(x, 1);
        internal_check(ok, "solve_zn: back-substitution failed on consistent system");
        // verify exactly
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < cols; ++j)
                acc = (acc + (std::uint64_t)m[i][j] * x[j]) % n;
            internal_check(acc == rhs[i] % n, "solve_zn: solution verification failed");
        }
        out.x = std::move(x);
    }

    if (want_nullspace) {
        std::vector<std::uint8_t> is_pivot(cols, 0);
        for (std::uint32_t c : pivot_col) is_pivot[c] = 1;
        auto try_gen = [&](std::uint32_t pin_col, std::uint32_t pin_val) {
            ZnVec v(cols, 0);
            v[pin_col] = pin_val;
            // solve pivot rows bottom-up, skipping rows at/right of pin
            for (std::size_t k = pivots.size(); k-- > 0;) {
                const Row& r = pivots[k];
                std::uint32_t col = pivot_col[k];
                if (col == pin_col) continue; // consistent by construction
                std::uint64_t acc = 0;
                for (std::size_t j = col + 1; j < cols; ++j)
                    acc = (acc + (std::uint64_t)(n - r.c[j]) * v[j]) % n;
                std::uint32_t g = r.c[col];
                internal_check(acc % g == 0, "solve_zn: nullspace back-solve failed");
                v[col] = (std::uint32_t)((acc / g) % (n / g));
            }
            // verify M v = 0
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::uint64_t acc = 0;
                for (std::size_t j = 0; j < cols; ++j)
                    acc = (acc + (std::uint64_t)m[i][j] * v[j]) % n;
                internal_check(acc == 0, "solve_zn: nullspace generator invalid");
            }
            bool nz = std::any_of(v.begin(), v.end(),
                                  [](std::uint32_t t) { return t != 0; });
            if (nz) out.null_gens.push_back(std::move(v));
        };
        for (std::uint32_t c = 0; c < cols; ++c) {
            if (!is_pivot[c]) {
                try_gen(c, 1);
            } else {
                std::size_t k = (std::size_t)(std::find(pivot_col.begin(),
                                                        pivot_col.end(), c) -
                                              pivot_col.begin());
                std::uint32_t g = pivots[k].c[c];
                if (g != 1) try_gen(c, n / g);
            }
        }
    }

    return out;
}

} // namespace isocat
