#include "charforge/symfun.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace charforge {

namespace {

void require_nonnegative(int i, const char* what) {
    if (i < 0) throw std::invalid_argument(std::string(what) + ": negative index " + std::to_string(i));
}

// Lazily computed sequence g_0, g_1, ... with g_k = 0 for k < 0 and g_0 = 1.
template <typename Fn>
class IndexedCache {
public:
    explicit IndexedCache(Fn fn) : fn_(std::move(fn)) {}

    const Polynomial& operator()(int k) {
        static const Polynomial zero;
        if (k < 0) return zero;
        auto it = cache_.find(k);
        if (it == cache_.end()) it = cache_.emplace(k, fn_(k)).first;
        return it->second;
    }

private:
    Fn fn_;
    std::map<int, Polynomial> cache_;
};

// Visit every size-i subset of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int m, int i, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(i));
    for (int k = 0; k < i; ++k) idx[static_cast<std::size_t>(k)] = k;
    while (true) {
        fn(std::span<const int>(idx));
        int k = i - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - i + k) --k;
        if (k < 0) return;
        ++idx[static_cast<std::size_t>(k)];
        for (int r = k + 1; r < i; ++r) idx[static_cast<std::size_t>(r)] = idx[static_cast<std::size_t>(r - 1)] + 1;
    }
}

}  // namespace

Polynomial elementary_sym(const GenericMatrix& a, int i, const DivisorBound& bound) {
    require_nonnegative(i, "elementary_sym");
    if (i == 0) return Polynomial(1L);
    if (i > a.size()) return {};
    Polynomial sum;
    for_each_subset(a.size(), i, [&](std::span<const int> idx) { sum += det(a.principal(idx), bound); });
    return sum;
}

Polynomial homogeneous_sym(const GenericMatrix& a, int i, const DivisorBound& bound) {
    require_nonnegative(i, "homogeneous_sym");
    if (i == 0) return Polynomial(1L);
    const int m = a.size();
    if (m == 0) return {};

    // Every sequence s in [m]^i is a rearrangement of exactly one weakly
    // increasing sequence r, and contributes prod_k a[r_k, s_k]. Walk the
    // multisets r and, for each, the distinct rearrangements s.
    bool single_terms = true;
    for (int r = 0; r < m && single_terms; ++r)
        for (int c = 0; c < m; ++c)
            if (a.at(r, c).term_count() > 1) {
                single_terms = false;
                break;
            }

    Polynomial sum;
    std::vector<int> rows(static_cast<std::size_t>(i), 0);
    std::vector<Monomial::Factor> factors;
    while (true) {
        std::vector<int> cols = rows;
        do {
            if (single_terms) {
                factors.clear();
                Integer coef(1);
                bool zero = false;
                for (int k = 0; k < i; ++k) {
                    const Polynomial& e = a.at(rows[static_cast<std::size_t>(k)], cols[static_cast<std::size_t>(k)]);
                    if (e.is_zero()) {
                        zero = true;
                        break;
                    }
                    const auto& [mono, c] = *e.terms().begin();
                    coef *= c;
                    factors.insert(factors.end(), mono.factors().begin(), mono.factors().end());
                }
                if (!zero) {
                    Monomial mono = Monomial::from_factors(factors);
                    if (bound.admits(mono)) sum.add_term(mono, coef);
                }
            } else {
                Polynomial term(1L);
                for (int k = 0; k < i && !term.is_zero(); ++k)
                    term = bound.mul(term, a.at(rows[static_cast<std::size_t>(k)], cols[static_cast<std::size_t>(k)]));
                sum += term;
            }
        } while (std::next_permutation(cols.begin(), cols.end()));

        // next weakly increasing sequence
        int k = i - 1;
        while (k >= 0 && rows[static_cast<std::size_t>(k)] == m - 1) --k;
        if (k < 0) break;
        const int v = rows[static_cast<std::size_t>(k)] + 1;
        for (int r = k; r < i; ++r) rows[static_cast<std::size_t>(r)] = v;
    }
    return sum;
}

Polynomial power_sum(const GenericMatrix& a, int k, const DivisorBound& bound) {
    if (k < 1) throw std::invalid_argument("power_sum: k must be positive");
    const int n = a.size();
    GenericMatrix acc = a;
    for (int step = 1; step < k; ++step) {
        GenericMatrix next(n);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                const Polynomial& x = acc.at(i, l);
                if (x.is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    if (!a.at(l, j).is_zero()) next.at(i, j) += bound.mul(x, a.at(l, j));
            }
        acc = std::move(next);
    }
    Polynomial tr;
    for (int i = 0; i < n; ++i) tr += acc.at(i, i);
    return bound.reduce(tr);
}

Polynomial schur_jt(const GenericMatrix& a, const Partition& lam, const DivisorBound& bound) {
    const int p = static_cast<int>(lam.length());
    IndexedCache h([&](int k) { return homogeneous_sym(a, k, bound); });
    GenericMatrix jt(p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) jt.at(i, j) = h(lam[static_cast<std::size_t>(i)] - i + j);
    return det(jt, bound);
}

Polynomial schur_dual_jt(const GenericMatrix& a, const Partition& lam, const DivisorBound& bound) {
    return skew_schur(a, SkewShape(lam, Partition{}), bound);
}

Polynomial skew_schur(const GenericMatrix& a, const SkewShape& s, const DivisorBound& bound) {
    const Partition outer = conjugate(s.outer());
    const Partition inner = conjugate(s.inner());
    const int p = static_cast<int>(outer.length());
    IndexedCache e([&](int k) { return elementary_sym(a, k, bound); });
    GenericMatrix jt(p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            jt.at(i, j) = e(outer[static_cast<std::size_t>(i)] - inner[static_cast<std::size_t>(j)] - i + j);
    return det(jt, bound);
}

Polynomial characteristic_polynomial(const GenericMatrix& a) {
    GenericMatrix m(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) m.at(i, j) = (i == j ? Polynomial::t() : Polynomial()) - a.at(i, j);
    return det(m);
}

GenericMatrix companion_matrix(std::span<const Polynomial> b, int offset) {
    if (b.empty()) throw std::invalid_argument("companion_matrix: empty entry list");
    if (offset < 0) throw std::invalid_argument("companion_matrix: negative offset");
    const int l = static_cast<int>(b.size());
    GenericMatrix m(offset + l);
    for (int k = 0; k + 1 < l; ++k) m.at(offset + k, offset + k + 1) = b[static_cast<std::size_t>(k)];
    m.at(offset + l - 1, offset) = b.back();
    return m;
}

std::vector<Polynomial> cycle_entries(int l, int offset) {
    if (l < 1) throw std::invalid_argument("cycle_entries: length must be positive");
    std::vector<Polynomial> b;
    for (int k = 1; k <= l; ++k) b.push_back(Polynomial::entry(offset + k, offset + (k % l) + 1));
    return b;
}

bool is_balanced(const Monomial& m) {
    std::map<int, long> net;
    for (const auto& [v, e] : m.factors()) {
        if (!v.is_entry()) throw std::invalid_argument("is_balanced: non-entry variable " + v.to_string());
        net[v.row] += e;
        net[v.col] -= e;
    }
    return std::all_of(net.begin(), net.end(), [](const auto& kv) { return kv.second == 0; });
}

Integer coeff_via_blocks(const Partition& lam, const Monomial& mono_c, const Monomial& mono_d, int k, int m) {
    if (k < 0 || k > m) throw std::invalid_argument("coeff_via_blocks: need 0 <= k <= m");
    auto check = [](const Monomial& mono, int lo, int hi, const char* name) {
        for (const auto& [v, e] : mono.factors()) {
            if (!v.is_entry() || v.row < lo || v.row > hi || v.col < lo || v.col > hi)
                throw std::invalid_argument(std::string("coeff_via_blocks: ") + name + " variable " + v.to_string() +
                                            " outside its block " + std::to_string(lo) + ".." + std::to_string(hi));
        }
    };
    check(mono_c, 1, k, "first-block");
    check(mono_d, k + 1, m, "second-block");

    const GenericMatrix c_block = GenericMatrix::generic(k);
    const GenericMatrix d_block = GenericMatrix::generic(m - k, k);
    const DivisorBound c_bound(mono_c);
    const DivisorBound d_bound(mono_d);

    Integer total(0);
    for (const Partition& nu : partitions_of(static_cast<int>(mono_c.degree()))) {
        if (!lam.contains(nu)) continue;
        const Integer first = coeff_of(schur_dual_jt(c_block, nu, c_bound), mono_c);
        if (first == 0) continue;
        const Integer second = coeff_of(skew_schur(d_block, SkewShape(lam, nu), d_bound), mono_d);
        total += first * second;
    }
    return total;
}

}  // namespace charforge
