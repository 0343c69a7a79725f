#include "isocat/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>

namespace isocat {

// ---------------------------------------------------------------- elements

std::size_t ElementHash::operator()(const GroupElement& e) const {
    return std::visit(
        [](const auto& v) -> std::size_t {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Perm>) {
                std::uint64_t h = 0xcbf29ce484222325ULL;
                for (std::uint8_t x : v.img) h = (h ^ x) * 0x100000001b3ULL;
                return (std::size_t)h;
            } else if constexpr (std::is_same_v<T, BitMat>) {
                return (std::size_t)splitmix64(v.b ^ ((std::uint64_t)v.n << 56));
            } else if constexpr (std::is_same_v<T, AffMat>) {
                return (std::size_t)splitmix64(v.m.b ^ splitmix64(v.v));
            } else {
                return (std::size_t)splitmix64(((std::uint64_t)v.v << 16) |
                                               ((std::uint64_t)v.s << 8) | v.dim);
            }
        },
        e);
}

bool element_packable(const GroupElement& e) {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Perm>) return false;
            else if constexpr (std::is_same_v<T, BitMat>) return true;
            else if constexpr (std::is_same_v<T, AffMat>) return v.m.n <= 7;
            else return true;
        },
        e);
}

std::uint64_t element_pack(const GroupElement& e) {
    return std::visit(
        [](const auto& v) -> std::uint64_t {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Perm>) {
                throw InternalInconsistency("element_pack: permutations are not packed");
            } else if constexpr (std::is_same_v<T, BitMat>) {
                return v.b;
            } else if constexpr (std::is_same_v<T, AffMat>) {
                return v.m.b | ((std::uint64_t)v.v << 56);
            } else {
                return ((std::uint64_t)v.v << 8) | v.s;
            }
        },
        e);
}

std::string element_str(const GroupElement& e) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<T, Perm>) {
                // cycle notation, 1-based
                std::vector<bool> seen(v.img.size(), false);
                bool any = false;
                for (std::size_t s = 0; s < v.img.size(); ++s) {
                    if (seen[s] || v.img[s] == s) continue;
                    os << "(";
                    std::size_t x = s;
                    bool first = true;
                    while (!seen[x]) {
                        seen[x] = true;
                        if (!first) os << " ";
                        os << x + 1;
                        first = false;
                        x = v.img[x];
                    }
                    os << ")";
                    any = true;
                }
                if (!any) os << "()";
            } else if constexpr (std::is_same_v<T, BitMat>) {
                os << v;
            } else if constexpr (std::is_same_v<T, AffMat>) {
                os << v.m << "+" << (unsigned)v.v;
            } else {
                os << "(" << (unsigned)v.v << "," << (v.s ? "-1" : "1") << ")";
            }
            return os.str();
        },
        e);
}

// ------------------------------------------------------------- enumeration

std::uint32_t Enumeration::packed_lookup(std::uint64_t word) const {
    std::size_t mask = pk.size() - 1;
    std::size_t h = (std::size_t)splitmix64(word) & mask;
    std::uint64_t key = word + 1;
    while (pk[h]) {
        if (pk[h] == key) return pv[h];
        h = (h + 1) & mask;
    }
    return UINT32_MAX;
}

std::uint32_t Enumeration::index_of(const GroupElement& e) const {
    if (!pk.empty()) {
        std::uint32_t i = packed_lookup(element_pack(e));
        require(i != UINT32_MAX, "Enumeration: element not in group");
        return i;
    }
    auto it = generic_index.find(e);
    require(it != generic_index.end(), "Enumeration: element not in group");
    return it->second;
}

bool Enumeration::contains(const GroupElement& e) const {
    if (!pk.empty()) return packed_lookup(element_pack(e)) != UINT32_MAX;
    return generic_index.count(e) != 0;
}

const Enumeration& FiniteGroup::enumerate(std::size_t cap) const {
    if (*cache_) {
        if ((*cache_)->size() > cap)
            throw CapExceeded(name + ": enumeration exceeds cap", (*cache_)->size());
        return **cache_;
    }
    auto en = std::make_shared<Enumeration>();
    bool packed = element_packable(id) && packed_mul != nullptr && packed_unpack != nullptr;
    for (const auto& g : gens) packed = packed && element_packable(g);

    if (packed) {
        // BFS over packed words; open-addressing table is kept as the index
        std::vector<std::uint64_t> order;
        std::size_t tcap = 1 << 12;
        en->pk.assign(tcap, 0);
        en->pv.assign(tcap, 0);
        auto grow = [&]() {
            std::size_t ncap = tcap * 2;
            std::vector<std::uint64_t> nk(ncap, 0);
            std::vector<std::uint32_t> nv(ncap, 0);
            for (std::size_t s = 0; s < tcap; ++s) {
                if (!en->pk[s]) continue;
                std::size_t h = (std::size_t)splitmix64(en->pk[s] - 1) & (ncap - 1);
                while (nk[h]) h = (h + 1) & (ncap - 1);
                nk[h] = en->pk[s];
                nv[h] = en->pv[s];
            }
            en->pk = std::move(nk);
            en->pv = std::move(nv);
            tcap = ncap;
        };
        auto insert = [&](std::uint64_t w, std::uint32_t idx) -> bool {
            if ((order.size() + 1) * 2 > tcap) grow();
            std::uint64_t key = w + 1;
            std::size_t h = (std::size_t)splitmix64(w) & (tcap - 1);
            while (en->pk[h]) {
                if (en->pk[h] == key) return false;
                h = (h + 1) & (tcap - 1);
            }
            en->pk[h] = key;
            en->pv[h] = idx;
            return true;
        };

        order.push_back(element_pack(id));
        insert(order[0], 0);
        std::vector<std::uint64_t> pg;
        for (const auto& g : gens) pg.push_back(element_pack(g));
        for (std::size_t i = 0; i < order.size(); ++i) {
            std::uint64_t x = order[i];
            for (std::uint64_t g : pg) {
                std::uint64_t y = packed_mul(x, g, packed_ctx);
                if (insert(y, (std::uint32_t)order.size())) {
                    order.push_back(y);
                    if (order.size() > cap)
                        throw CapExceeded(name + ": enumeration exceeds cap (" +
                                              std::to_string(cap) + ")",
                                          order.size());
                }
            }
        }
        en->elems.reserve(order.size());
        for (std::uint64_t w : order) en->elems.push_back(packed_unpack(w, packed_ctx));
        *cache_ = std::move(en);
        return **cache_;
    }

    auto push = [&](const GroupElement& e) -> bool {
        auto [it, fresh] =
            en->generic_index.emplace(e, (std::uint32_t)en->elems.size());
        if (!fresh) return false;
        en->elems.push_back(e);
        return true;
    };

    push(id);
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t i = queue.front();
        queue.pop_front();
        GroupElement x = en->elems[i];
        for (const auto& g : gens) {
            GroupElement y = mul(x, g);
            if (push(y)) {
                if (en->elems.size() > cap)
                    throw CapExceeded(name + ": enumeration exceeds cap (" +
                                          std::to_string(cap) + ")",
                                      en->elems.size());
                queue.push_back((std::uint32_t)(en->elems.size() - 1));
            }
        }
    }
    *cache_ = std::move(en);
    return **cache_;
}

std::uint32_t FiniteGroup::element_order(const GroupElement& e) const {
    GroupElement x = e;
    std::uint32_t o = 1;
    while (!(x == id)) {
        x = mul(x, e);
        ++o;
        internal_check(o < (1u << 24), "element_order: runaway element");
    }
    return o;
}

bool Subgroup::contains_index(std::uint32_t i) const {
    return std::binary_search(elem_idx.begin(), elem_idx.end(), i);
}

// ------------------------------------------------------ abelian structure

std::uint32_t AbelianStructure::rank_of(const FiniteGroup& g, const GroupElement& e) const {
    auto it = rank_of_parent_idx.find(g.enumerate().index_of(e));
    require(it != rank_of_parent_idx.end(), "AbelianStructure: element not in subgroup");
    return it->second;
}

AbelianStructure abelian_structure(const FiniteGroup& g, const Subgroup& a) {
    const Enumeration& en = g.enumerate();
    std::vector<GroupElement> elems;
    for (std::uint32_t i : a.elem_idx) elems.push_back(en.elems[i]);
    std::uint32_t n = (std::uint32_t)elems.size();

    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = (std::uint32_t)(i + 1); j < n; ++j)
            require(g.mul(elems[i], elems[j]) == g.mul(elems[j], elems[i]),
                    "abelian_structure: subgroup is not abelian");

    std::vector<std::uint32_t> ord(n);
    for (std::uint32_t i = 0; i < n; ++i) ord[i] = g.element_order(elems[i]);

    std::vector<std::uint32_t> primes;
    for (std::uint32_t m = n, p = 2; m > 1; ++p) {
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    }

    std::vector<std::uint32_t> factors;
    std::vector<GroupElement> basis;
    for (std::uint32_t p : primes) {
        std::vector<std::uint32_t> comp; // indices of p-power-order elements
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint32_t o = ord[i];
            while (o % p == 0) o /= p;
            if (o == 1) comp.push_back(i);
        }
        // recover the partition from order counts: the count of x with
        // x^{p^e} = 1 is p^{s_e}, and s_e - s_{e-1} = #{i : lambda_i >= e}
        std::vector<std::uint32_t> lambda;
        {
            std::uint32_t prev = 0;
            for (std::uint32_t e = 1;; ++e) {
                std::uint64_t pe = 1;
                for (std::uint32_t t = 0; t < e; ++t) pe *= p;
                std::uint32_t cnt = 0;
                for (std::uint32_t i : comp)
                    if (pe % ord[i] == 0) ++cnt;
                std::uint32_t se = 0;
                for (std::uint32_t c = cnt; c > 1; c /= p) ++se;
                if (se == prev) break;
                for (std::uint32_t t = 0; t < se - prev; ++t) lambda.push_back(e);
                prev = se;
            }
        }
        std::sort(lambda.rbegin(), lambda.rend());

        // backtracking for a basis realizing the partition (first in
        // enumeration order); each new generator must meet the current span
        // trivially
        std::vector<GroupElement> chosen;
        std::vector<GroupElement> span{g.id};
        std::function<bool(std::size_t)> pick = [&](std::size_t level) -> bool {
            if (level == lambda.size()) return true;
            std::uint64_t target = 1;
            for (std::uint32_t t = 0; t < lambda[level]; ++t) target *= p;
            for (std::uint32_t ci : comp) {
                if (ord[ci] != target) continue;
                const GroupElement& cand = elems[ci];
                bool ok = true;
                GroupElement pw = cand;
                for (std::uint64_t j = 1; j < target && ok; ++j) {
                    for (const auto& s : span)
                        if (s == pw) { ok = false; break; }
                    pw = g.mul(pw, cand);
                }
                if (!ok) continue;
                std::vector<GroupElement> bigger;
                GroupElement q = g.id;
                for (std::uint64_t j = 0; j < target; ++j) {
                    for (const auto& s : span) bigger.push_back(g.mul(s, q));
                    q = g.mul(q, cand);
                }
                std::vector<GroupElement> saved = std::move(span);
                span = std::move(bigger);
                chosen.push_back(cand);
                if (pick(level + 1)) return true;
                chosen.pop_back();
                span = std::move(saved);
            }
            return false;
        };
        internal_check(pick(0), "abelian_structure: basis search failed");
        for (std::uint32_t l : lambda) {
            std::uint64_t pe = 1;
            for (std::uint32_t t = 0; t < l; ++t) pe *= p;
            factors.push_back((std::uint32_t)pe);
        }
        for (auto& c : chosen) basis.push_back(std::move(c));
    }

    AbelianStructure out;
    out.shape = AbelianGroup(factors);
    internal_check(out.shape.size == n, "abelian_structure: size mismatch");
    out.gens = basis;
    out.elem_of_rank.resize(n, g.id);
    for (std::uint32_t r = 0; r < n; ++r) {
        ZnVec c = out.shape.coords_of(r);
        GroupElement e = g.id;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::uint32_t t = 0; t < c[i]; ++t) e = g.mul(e, basis[i]);
        out.elem_of_rank[r] = e;
        auto [it, fresh] = out.rank_of_parent_idx.emplace(en.index_of(e), r);
        internal_check(fresh, "abelian_structure: basis does not span freely");
        (void)it;
    }
    return out;
}

// ---------------------------------------------------------------- quotient

QuotientGroup quotient(const GroupPtr& gp, const Subgroup& a) {
    require(gp != nullptr, "quotient: null group");
    const FiniteGroup& g = *gp;
    const Enumeration& en = g.enumerate();
    std::uint32_t n = en.size();

    // normality on generators
    for (const auto& gg : g.gens)
        for (std::uint32_t j : a.elem_idx)
            require(a.contains_index(en.index_of(g.conj(gg, en.elems[j]))),
                    "quotient: subgroup is not normal");

    auto coset_of = std::make_shared<std::vector<std::uint32_t>>(n, UINT32_MAX);
    auto section = std::make_shared<std::vector<std::uint32_t>>();
    for (std::uint32_t i = 0; i < n; ++i) {
        if ((*coset_of)[i] != UINT32_MAX) continue;
        std::uint32_t c = (std::uint32_t)section->size();
        section->push_back(i); // least enumeration index = representative
        for (std::uint32_t j : a.elem_idx) {
            std::uint32_t yi = en.index_of(g.mul(en.elems[i], en.elems[j]));
            internal_check((*coset_of)[yi] == UINT32_MAX || (*coset_of)[yi] == c,
                           "quotient: cosets overlap");
            (*coset_of)[yi] = c;
        }
    }

    auto rep = [gp, coset_of, section](const GroupElement& e) -> GroupElement {
        const Enumeration& pen = gp->enumerate();
        return pen.elems[(*section)[(*coset_of)[pen.index_of(e)]]];
    };

    FiniteGroup k;
    k.name = g.name + "/A";
    k.id = g.id;
    k.mul = [gp, rep](const GroupElement& x, const GroupElement& y) {
        return rep(gp->mul(x, y));
    };
    k.inv = [gp, rep](const GroupElement& x) { return rep(gp->inv(x)); };
    for (const auto& gg : g.gens) {
        GroupElement r = rep(gg);
        if (r == g.id) continue;
        bool dup = false;
        for (const auto& prev : k.gens) dup = dup || prev == r;
        if (!dup) k.gens.push_back(r);
    }
    QuotientGroup out;
    out.k = hold(std::move(k));
    out.section = *section;
    out.coset_of = *coset_of;
    return out;
}

// ------------------------------------------------------------------ action

std::uint32_t GroupAction::apply(std::uint32_t k_idx, std::uint32_t a_rank) const {
    std::uint32_t out = 0;
    ZnVec c = a.coords_of(a_rank);
    for (std::uint32_t i = 0; i < a.rank(); ++i)
        if (c[i]) out = a.add(out, a.smul(c[i], gen_img[k_idx * a.rank() + i]));
    return out;
}

std::uint32_t GroupAction::dual_apply(std::uint32_t k_idx, std::uint32_t x_rank) const {
    std::uint32_t out = 0;
    ZnVec c = a.coords_of(x_rank);
    for (std::uint32_t i = 0; i < a.rank(); ++i)
        if (c[i]) out = a.add(out, a.smul(c[i], dual_gen_img[k_idx * a.rank() + i]));
    return out;
}

void GroupAction::verify_axioms() const {
    const Enumeration& en = k->enumerate();
    std::uint32_t idx0 = en.index_of(k->id);
    for (std::uint32_t r = 0; r < a.size; ++r)
        internal_check(apply(idx0, r) == r, "GroupAction: identity acts nontrivially");
    for (const auto& gg : k->gens) {
        std::uint32_t gi = en.index_of(gg);
        std::vector<bool> hit(a.size, false);
        for (std::uint32_t r = 0; r < a.size; ++r) {
            std::uint32_t s = apply(gi, r);
            internal_check(!hit[s], "GroupAction: generator action not injective");
            hit[s] = true;
        }
    }
    for (const auto& g1 : k->gens) {
        for (const auto& g2 : k->gens) {
            std::uint32_t i1 = en.index_of(g1), i2 = en.index_of(g2);
            std::uint32_t i12 = en.index_of(k->mul(g1, g2));
            for (std::uint32_t t = 0; t < a.rank(); ++t) {
                std::uint32_t e = a.unit_rank(t);
                internal_check(apply(i12, e) == apply(i1, apply(i2, e)),
                               "GroupAction: composition fails");
            }
        }
    }
}

GroupAction conjugation_action(const GroupPtr& gp, const AbelianStructure& as,
                               const QuotientGroup& q) {
    const FiniteGroup& g = *gp;
    GroupAction act;
    act.k = q.k;
    act.a = as.shape;
    const Enumeration& ken = q.k->enumerate();
    std::uint32_t kr = as.shape.rank();
    act.gen_img.assign((std::size_t)ken.size() * kr, 0);
    act.dual_gen_img.assign((std::size_t)ken.size() * kr, 0);
    const AbelianGroup& A = as.shape;
    for (std::uint32_t ki = 0; ki < ken.size(); ++ki) {
        const GroupElement& lift = ken.elems[ki]; // section representative
        GroupElement lift_inv = g.inv(lift);
        for (std::uint32_t t = 0; t < kr; ++t) {
            GroupElement img = g.mul(g.mul(lift, as.gens[t]), lift_inv);
            act.gen_img[ki * kr + t] = as.rank_of(g, img);
        }
        // dual action on characters through the fixed duality:
        // (k |> chi_x)(a) = chi_x(k^{-1} a); the image character of a unit
        // coordinate vector is solved coordinatewise
        for (std::uint32_t i = 0; i < kr; ++i) {
            ZnVec c(kr, 0);
            for (std::uint32_t j = 0; j < kr; ++j) {
                GroupElement pre = g.mul(g.mul(lift_inv, as.gens[j]), lift);
                std::uint32_t pr = as.rank_of(g, pre);
                std::uint32_t d = A.coord(pr, i);
                // c_j * (N/n_j) == d * (N/n_i)  (mod N)
                std::uint64_t num = (std::uint64_t)d * (A.exponent / A.factors[i]);
                internal_check(num % (A.exponent / A.factors[j]) == 0,
                               "conjugation_action: dual action not integral");
                c[j] = (std::uint32_t)((num / (A.exponent / A.factors[j])) % A.factors[j]);
            }
            act.dual_gen_img[ki * kr + i] = A.rank_of(c);
        }
    }
    act.verify_axioms();
    return act;
}

// --------------------------------------------------------------- builders

BitMat embed_gl(const BitMat& l) {
    std::uint8_t n = l.n;
    BitMat g = BitMat::zero((std::uint8_t)(2 * n));
    BitMat lit = l.inverse().transpose();
    for (std::uint8_t i = 0; i < n; ++i)
        for (std::uint8_t j = 0; j < n; ++j) {
            if (l.get(i, j)) g.set(i, j, true);
            if (lit.get(i, j)) g.set((std::uint8_t)(n + i), (std::uint8_t)(n + j), true);
        }
    return g;
}

BitMat embed_sym(const BitMat& u) {
    std::uint8_t n = u.n;
    BitMat g = BitMat::identity((std::uint8_t)(2 * n));
    for (std::uint8_t i = 0; i < n; ++i)
        for (std::uint8_t j = 0; j < n; ++j)
            if (u.get(i, j)) g.set((std::uint8_t)(n + i), j, true);
    return g;
}

bool in_parabolic(const BitMat& g) {
    std::uint8_t n = (std::uint8_t)(g.n / 2);
    for (std::uint8_t i = 0; i < n; ++i)
        for (std::uint8_t j = 0; j < n; ++j)
            if (g.get(i, (std::uint8_t)(n + j))) return false;
    return true;
}

void parabolic_factor(const BitMat& g, BitMat& u, BitMat& l) {
    std::uint8_t n = (std::uint8_t)(g.n / 2);
    require(in_parabolic(g), "parabolic_factor: element does not preserve Y*");
    l = BitMat::zero(n);
    BitMat c = BitMat::zero(n);
    for (std::uint8_t i = 0; i < n; ++i)
        for (std::uint8_t j = 0; j < n; ++j) {
            if (g.get(i, j)) l.set(i, j, true);
            if (g.get((std::uint8_t)(n + i), j)) c.set(i, j, true);
        }
    u = c * l.inverse();
    internal_check(u.is_symmetric(), "parabolic_factor: u block not symmetric");
    internal_check(embed_sym(u) * embed_gl(l) == g, "parabolic_factor: u*l != g");
}

namespace {

std::uint64_t packed_bitmat_mul(std::uint64_t a, std::uint64_t b, std::uint32_t n) {
    std::uint64_t c = 0;
    for (unsigned i = 0; i < n; ++i) {
        unsigned ra = (unsigned)((a >> (8 * i)) & 0xFF);
        std::uint64_t acc = 0;
        while (ra) {
            unsigned j = (unsigned)__builtin_ctz(ra);
            acc ^= (b >> (8 * j)) & 0xFF;
            ra &= ra - 1;
        }
        c |= acc << (8 * i);
    }
    return c;
}

std::uint64_t packed_xor(std::uint64_t a, std::uint64_t b, std::uint32_t) {
    return a ^ b;
}

std::uint64_t packed_affmat_mul(std::uint64_t a, std::uint64_t b, std::uint32_t n) {
    const std::uint64_t mmask = (1ULL << 56) - 1;
    std::uint64_t ma = a & mmask, mb = b & mmask;
    unsigned va = (unsigned)(a >> 56), vb = (unsigned)(b >> 56);
    std::uint64_t m = packed_bitmat_mul(ma, mb, n);
    unsigned v = va;
    for (unsigned i = 0; i < n; ++i) {
        unsigned row = (unsigned)((ma >> (8 * i)) & 0xFF);
        v ^= (unsigned)((__builtin_popcount(row & vb) & 1) << i);
    }
    return m | ((std::uint64_t)v << 56);
}

GroupElement unpack_bitmat(std::uint64_t w, std::uint32_t n) {
    return BitMat{(std::uint8_t)n, w};
}

GroupElement unpack_affmat(std::uint64_t w, std::uint32_t n) {
    return AffMat{BitMat{(std::uint8_t)n, w & ((1ULL << 56) - 1)},
                  (std::uint8_t)(w >> 56)};
}

FiniteGroup perm_group(std::string name, std::uint32_t degree, std::vector<Perm> gens) {
    FiniteGroup g;
    g.name = std::move(name);
    g.id = Perm::identity(degree);
    for (auto& p : gens) g.gens.emplace_back(std::move(p));
    g.mul = [](const GroupElement& a, const GroupElement& b) {
        return GroupElement(std::get<Perm>(a) * std::get<Perm>(b));
    };
    g.inv = [](const GroupElement& a) {
        return GroupElement(std::get<Perm>(a).inverse());
    };
    return g;
}

FiniteGroup bitmat_group(std::string name, std::uint8_t n, std::vector<BitMat> gens,
                         bool additive = false) {
    FiniteGroup g;
    g.name = std::move(name);
    g.id = additive ? BitMat::zero(n) : BitMat::identity(n);
    for (auto& m : gens) g.gens.emplace_back(m);
    g.packed_mul = additive ? packed_xor : packed_bitmat_mul;
    g.packed_ctx = n;
    g.packed_unpack = unpack_bitmat;
    if (additive) {
        g.mul = [](const GroupElement& a, const GroupElement& b) {
            const BitMat& x = std::get<BitMat>(a);
            const BitMat& y = std::get<BitMat>(b);
            return GroupElement(BitMat{x.n, x.b ^ y.b});
        };
        g.inv = [](const GroupElement& a) { return a; };
    } else {
        g.mul = [](const GroupElement& a, const GroupElement& b) {
            return GroupElement(std::get<BitMat>(a) * std::get<BitMat>(b));
        };
        g.inv = [](const GroupElement& a) {
            return GroupElement(std::get<BitMat>(a).inverse());
        };
    }
    return g;
}

std::vector<BitMat> gl_generators(std::uint8_t n) {
    std::vector<BitMat> gens;
    if (n == 1) return gens; // GL(1,2) is trivial
    for (std::uint8_t i = 0; i < n; ++i)
        for (std::uint8_t j = 0; j < n; ++j) {
            if (i == j) continue;
            BitMat e = BitMat::identity(n);
            e.set(i, j, true);
            gens.push_back(e);
        }
    return gens;
}

std::vector<BitMat> sym_generators(std::uint8_t n) {
    std::vector<BitMat> gens;
    for (std::uint8_t i = 0; i < n; ++i)
        for (std::uint8_t j = i; j < n; ++j) {
            BitMat e = BitMat::zero(n);
            e.set(i, j, true);
            e.set(j, i, true);
            gens.push_back(e);
        }
    return gens;
}

std::vector<BitMat> sp_generators(std::uint8_t n2) {
    // transvections at vectors of weight <= 2, ordered by the packed vector;
    // these generate Sp(2n,2), and the enumeration oracles re-verify the
    // group order against the classical formula
    std::vector<BitMat> gens;
    for (std::uint32_t w = 1; w < (1u << n2); ++w)
        if (__builtin_popcount(w) <= 2)
            gens.push_back(transvection(n2, (std::uint8_t)w));
    return gens;
}

FiniteGroup quaternion8() {
    // symbols 0..7 = 1,-1,i,-i,j,-j,k,-k; left regular representation
    auto mulq = [](std::uint8_t a, std::uint8_t b) -> std::uint8_t {
        static const int basis_prod[4][4] = {
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign_prod[4][4] = {
            {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
        int sa = (a & 1) ? -1 : 1, ba = a >> 1;
        int sb = (b & 1) ? -1 : 1, bb = b >> 1;
        int bc = basis_prod[ba][bb];
        int sc = sa * sb * sign_prod[ba][bb];
        return (std::uint8_t)((bc << 1) | (sc < 0 ? 1 : 0));
    };
    std::vector<Perm> gens;
    for (std::uint8_t gsym : {2, 4}) { // i and j
        Perm p;
        p.img.resize(8);
        for (std::uint8_t x = 0; x < 8; ++x) p.img[x] = mulq(gsym, x);
        gens.push_back(p);
    }
    return perm_group("quaternion8", 8, gens);
}

} // namespace

FiniteGroup build_group(const std::string& spec) {
    std::string name = spec;
    std::vector<std::uint32_t> args;
    auto lp = spec.find('(');
    if (lp != std::string::npos) {
        require(!spec.empty() && spec.back() == ')',
                "build_group: malformed spec '" + spec + "'");
        name = spec.substr(0, lp);
        std::string inner = spec.substr(lp + 1, spec.size() - lp - 2);
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            require(!tok.empty(), "build_group: empty argument in '" + spec + "'");
            args.push_back((std::uint32_t)std::stoul(tok));
        }
    }
    auto arg = [&](std::size_t i) -> std::uint32_t {
        require(args.size() > i, "build_group: missing argument in '" + spec + "'");
        return args[i];
    };

    if (name == "cyclic") {
        std::uint32_t n = arg(0);
        require(n >= 1 && n <= 255, "cyclic: size must be in [1,255]");
        if (n == 1) return perm_group(spec, 1, {});
        Perm rot;
        rot.img.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) rot.img[i] = (std::uint8_t)((i + 1) % n);
        return perm_group(spec, n, {rot});
    }
    if (name == "abelian" || name == "elementary_abelian") {
        std::vector<std::uint32_t> ns = args;
        if (name == "elementary_abelian") {
            std::uint32_t p = arg(0), k = arg(1);
            ns.assign(k, p);
        }
        require(!ns.empty(), "abelian: no factors");
        std::uint32_t deg = 0;
        for (std::uint32_t n : ns) {
            require(n >= 2, "abelian: factors must be >= 2");
            deg += n;
        }
        require(deg <= 255, "abelian: degree too large");
        std::vector<Perm> gens;
        std::uint32_t off = 0;
        for (std::uint32_t n : ns) {
            Perm p = Perm::identity(deg);
            for (std::uint32_t i = 0; i < n; ++i)
                p.img[off + i] = (std::uint8_t)(off + (i + 1) % n);
            gens.push_back(p);
            off += n;
        }
        return perm_group(spec, deg, gens);
    }
    if (name == "dihedral" || name == "dihedral8") {
        std::uint32_t n = (name == "dihedral8") ? 4 : arg(0);
        require(n >= 3 && n <= 255, "dihedral: size parameter in [3,255]");
        Perm rot = Perm::identity(n), ref = Perm::identity(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            rot.img[i] = (std::uint8_t)((i + 1) % n);
            ref.img[i] = (std::uint8_t)((n - i) % n);
        }
        FiniteGroup g = perm_group(spec, n, {rot, ref});
        if (name == "dihedral8") g.name = "dihedral8";
        return g;
    }
    if (name == "quaternion8") return quaternion8();
    if (name == "gl") {
        std::uint8_t n = (std::uint8_t)arg(0);
        require(n >= 1 && n <= 8, "gl: dimension in [1,8]");
        return bitmat_group(spec, n, gl_generators(n));
    }
    if (name == "sp") {
        std::uint8_t n = (std::uint8_t)arg(0);
        require(n >= 1 && n <= 4, "sp: parameter n in [1,4] (V has dimension 2n)");
        return bitmat_group(spec, (std::uint8_t)(2 * n),
                            sp_generators((std::uint8_t)(2 * n)));
    }
    if (name == "u") {
        std::uint8_t n = (std::uint8_t)arg(0);
        require(n >= 1 && n <= 8, "u: dimension in [1,8]");
        return bitmat_group(spec, n, sym_generators(n), /*additive=*/true);
    }
    if (name == "p") {
        std::uint8_t n = (std::uint8_t)arg(0);
        require(n >= 1 && n <= 4, "p: dimension in [1,4]");
        std::vector<BitMat> gens;
        for (const auto& l : gl_generators(n)) gens.push_back(embed_gl(l));
        for (const auto& u : sym_generators(n)) gens.push_back(embed_sym(u));
        return bitmat_group(spec, (std::uint8_t)(2 * n), gens);
    }
    if (name == "asp") {
        std::uint8_t n = (std::uint8_t)arg(0);
        require(n >= 1 && n <= 3, "asp: parameter n in [1,3]");
        std::uint8_t n2 = (std::uint8_t)(2 * n);
        FiniteGroup g;
        g.name = spec;
        g.id = AffMat{BitMat::identity(n2), 0};
        for (const auto& m : sp_generators(n2)) g.gens.emplace_back(AffMat{m, 0});
        for (std::uint8_t i = 0; i < n2; ++i)
            g.gens.emplace_back(AffMat{BitMat::identity(n2), (std::uint8_t)(1u << i)});
        g.mul = [](const GroupElement& a, const GroupElement& b) {
            return GroupElement(std::get<AffMat>(a) * std::get<AffMat>(b));
        };
        g.inv = [](const GroupElement& a) {
            return GroupElement(std::get<AffMat>(a).inverse());
        };
        g.packed_mul = packed_affmat_mul;
        g.packed_ctx = n2;
        g.packed_unpack = unpack_affmat;
        return g;
    }
    throw ContractViolation("build_group: unknown builtin '" + spec + "'");
}

Perm parse_cycles(const std::string& text, std::uint32_t degree) {
    Perm p = Perm::identity(degree);
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace((unsigned char)text[i])) { ++i; continue; }
        require(text[i] == '(', "parse_cycles: expected '(' in '" + text + "'");
        ++i;
        std::vector<std::uint32_t> cyc;
        while (i < text.size() && text[i] != ')') {
            if (std::isspace((unsigned char)text[i]) || text[i] == ',') { ++i; continue; }
            require(std::isdigit((unsigned char)text[i]) != 0, "parse_cycles: expected digit");
            std::uint32_t v = 0;
            while (i < text.size() && std::isdigit((unsigned char)text[i]))
                v = v * 10 + (std::uint32_t)(text[i++] - '0');
            require(v >= 1 && v <= degree, "parse_cycles: point out of range");
            cyc.push_back(v - 1);
        }
        require(i < text.size(), "parse_cycles: unclosed cycle");
        ++i; // ')'
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            std::uint32_t from = cyc[t], to = cyc[(t + 1) % cyc.size()];
            require(p.img[from] == from, "parse_cycles: point repeated across cycles");
            if (cyc.size() > 1) p.img[from] = (std::uint8_t)to;
        }
    }
    return p;
}

FiniteGroup build_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group file: " + path);
    std::vector<std::string> gen_lines;
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r\n");
        line = line.substr(a, b - a + 1);
        if (line.rfind("builtin:", 0) == 0) {
            std::stringstream ss(line.substr(8));
            std::string nm, tok;
            ss >> nm;
            std::string spec = nm;
            std::vector<std::string> params;
            while (ss >> tok) params.push_back(tok);
            if (!params.empty()) {
                spec += "(";
                for (std::size_t i = 0; i < params.size(); ++i) {
                    if (i) spec += ",";
                    spec += params[i];
                }
                spec += ")";
            }
            return build_group(spec);
        }
        if (line.rfind("gen:", 0) == 0) {
            gen_lines.push_back(line.substr(4));
            continue;
        }
        throw ContractViolation("group file: unrecognized line '" + line + "'");
    }
    require(!gen_lines.empty(), "group file: no generators and no builtin");
    std::uint32_t degree = 1;
    for (const auto& s : gen_lines) {
        std::uint32_t v = 0;
        for (char ch : s) {
            if (std::isdigit((unsigned char)ch)) {
                v = v * 10 + (std::uint32_t)(ch - '0');
            } else {
                degree = std::max(degree, v);
                v = 0;
            }
        }
        degree = std::max(degree, v);
    }
    require(degree <= 255, "group file: degree exceeds 255");
    std::vector<Perm> gens;
    for (const auto& s : gen_lines) gens.push_back(parse_cycles(s, degree));
    return perm_group("file:" + path, degree, gens);
}

} // namespace isocat
