#include "isocat/f2.hpp"

#include <algorithm>
#include <bit>

namespace isocat {

std::uint32_t F2Vec::lowest_bit() const {
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k]) return (std::uint32_t)(k * 64 + std::countr_zero(w[k]));
    return n;
}

bool F2Vec::dot(const F2Vec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w.size(); ++k) acc ^= w[k] & o.w[k];
    return std::popcount(acc) & 1;
}

std::uint32_t F2Vec::popcount() const {
    std::uint32_t c = 0;
    for (std::uint64_t x : w) c += (std::uint32_t)std::popcount(x);
    return c;
}

F2Vec F2Mat::mul(const F2Vec& x) const {
    require(x.n == cols, "F2Mat::mul: dimension mismatch");
    F2Vec out(rows);
    for (std::uint32_t i = 0; i < rows; ++i)
        if (r[i].dot(x)) out.set(i, true);
    return out;
}

std::uint32_t F2Mat::rank() const {
    F2Eliminator e(cols, false);
    for (std::uint32_t i = 0; i < rows; ++i) e.add(r[i], false);
    return e.rank();
}

F2Solution solve_f2(const F2Mat& m, const F2Vec& rhs) {
    require(m.rows == rhs.n, "solve_f2: dimension mismatch");
    F2Eliminator e(m.cols, true);
    for (std::uint32_t i = 0; i < m.rows; ++i) e.add(m.r[i], rhs.get(i));
    F2Solution out;
    out.nullspace = e.nullspace();
    if (e.consistent()) {
        out.x = e.solution();
    } else {
        out.certificate = e.certificate();
    }
    return out;
}

F2Eliminator::F2Eliminator(std::uint32_t unknowns, bool track_provenance)
    : n_(unknowns), track_(track_provenance) {}

void F2Eliminator::xor_prov(std::vector<std::uint32_t>& a,
                            const std::vector<std::uint32_t>& b) {
    // symmetric difference of sorted index lists
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    a = std::move(out);
}

bool F2Eliminator::add(const F2Vec& coeffs, bool rhs) {
    require(coeffs.n == n_, "F2Eliminator: wrong row width");
    std::uint32_t idx = eq_count_++;
    if (!consistent_) return false;

    F2Vec row = coeffs;
    bool b = rhs;
    std::vector<std::uint32_t> prov;
    if (track_) prov.push_back(idx);

    // reduce against existing pivots
    for (;;) {
        std::uint32_t lead = row.lowest_bit();
        if (lead == n_) break;
        auto it = std::lower_bound(pivot_col_.begin(), pivot_col_.end(), lead);
        if (it == pivot_col_.end() || *it != lead) {
            std::size_t pos = (std::size_t)(it - pivot_col_.begin());
            // forward-reduce against later pivots so stored rows stay fully
            // inter-reduced (each row: its own pivot column + free columns)
            for (std::size_t k = pos; k < rows_.size(); ++k) {
                if (row.get(pivot_col_[k])) {
                    row ^= rows_[k];
                    b ^= (bool)rhs_[k];
                    if (track_) xor_prov(prov, prov_[k]);
                }
            }
            // back-reduce existing rows that contain this column
            for (std::size_t k = 0; k < rows_.size(); ++k) {
                if (rows_[k].get(lead)) {
                    rows_[k] ^= row;
                    rhs_[k] ^= (std::uint8_t)b;
                    if (track_) xor_prov(prov_[k], prov);
                }
            }
            rows_.insert(rows_.begin() + pos, std::move(row));
            rhs_.insert(rhs_.begin() + pos, (std::uint8_t)b);
            pivot_col_.insert(pivot_col_.begin() + pos, lead);
            if (track_) prov_.insert(prov_.begin() + pos, std::move(prov));
            return true;
        }
        std::size_t pos = (std::size_t)(it - pivot_col_.begin());
        row ^= rows_[pos];
        b ^= (bool)rhs_[pos];
        if (track_) xor_prov(prov, prov_[pos]);
    }
    // row vanished
    if (b) {
        consistent_ = false;
        certificate_ = std::move(prov);
        return false;
    }
    return true;
}

F2Vec F2Eliminator::solution() const {
    require(consistent_, "F2Eliminator: system is inconsistent");
    F2Vec x(n_);
    // rows are fully inter-reduced, so each pivot variable reads off directly
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (rhs_[k]) x.set(pivot_col_[k], true);
    return x;
}

std::vector<F2Vec> F2Eliminator::nullspace() const {
    std::vector<F2Vec> basis;
    std::vector<std::uint8_t> is_pivot(n_, 0);
    for (std::uint32_t c : pivot_col_) is_pivot[c] = 1;
    for (std::uint32_t f = 0; f < n_; ++f) {
        if (is_pivot[f]) continue;
        F2Vec v(n_);
        v.set(f, true);
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if (rows_[k].get(f)) v.set(pivot_col_[k], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace isocat
