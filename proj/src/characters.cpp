#include "charforge/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "charforge/symfun.hpp"

namespace charforge {

namespace {

void require_same_size(const Partition& lam, int n, const char* what) {
    if (lam.size() != n)
        throw std::invalid_argument(std::string(what) + ": |lambda| = " + std::to_string(lam.size()) +
                                    " but n = " + std::to_string(n));
}

Partition drop_first(const Partition& mu) {
    return Partition(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
}

Integer ordered_recursion(const Partition& lam, std::span<const int> lengths) {
    if (lengths.empty()) return Integer(lam.empty() ? 1 : 0);
    Integer total(0);
    for (const auto& [nu, ht] : border_strip_removals(lam, lengths.front())) {
        const Integer sub = ordered_recursion(nu, lengths.subspan(1));
        if (ht % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    return total;
}

void check_bound(int n, int max_n, const char* what) {
    if (n < 1 || n > max_n)
        throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) + " outside 1.." + std::to_string(max_n));
}

// chi^lam on each cycle type of S_n.
std::map<Partition, Integer> class_characters(const Partition& lam) {
    MnEvaluator mn;
    std::map<Partition, Integer> out;
    for (const Partition& mu : partitions_of(lam.size())) out.emplace(mu, mn(lam, mu));
    return out;
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        fn(images);
    } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace

CharacterQuery::CharacterQuery(Partition l, Partition m) : lam(std::move(l)), mu(std::move(m)) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("character query: |lambda| = " + std::to_string(lam.size()) +
                                    " differs from |mu| = " + std::to_string(mu.size()));
}

Integer MnEvaluator::operator()(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw std::invalid_argument("chi_mn: size mismatch");
    if (mu.empty()) return Integer(1);
    auto key = std::make_pair(lam, mu);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Partition rest = drop_first(mu);
    Integer total(0);
    for (const auto& [nu, ht] : border_strip_removals(lam, mu[0])) {
        const Integer sub = (*this)(nu, rest);
        if (ht % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
}

Integer chi_mn(const CharacterQuery& q) { return MnEvaluator{}(q.lam, q.mu); }
Integer chi_mn(const Partition& lam, const Partition& mu) { return chi_mn(CharacterQuery(lam, mu)); }

Integer chi_mn_ordered(const Partition& lam, std::span<const int> cycle_lengths) {
    require_same_size(lam, std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0), "chi_mn_ordered");
    for (int len : cycle_lengths)
        if (len < 1) throw std::invalid_argument("chi_mn_ordered: cycle lengths must be positive");
    return ordered_recursion(lam, cycle_lengths);
}

FSequence build_f(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("build_f: empty partition");
    Polynomial product(1L);
    for (std::size_t k = 0; k < mu.length(); ++k)
        product *= Polynomial(Monomial(VarId::t(), static_cast<unsigned>(mu[k]))) - Polynomial::u(static_cast<int>(k) + 1);

    FSequence seq{mu, mu.size(), std::vector<Polynomial>(static_cast<std::size_t>(mu.size()) + 1)};
    for (const auto& [mono, c] : product.terms()) {
        const unsigned te = mono.exponent(VarId::t());
        const int i = seq.m - static_cast<int>(te);
        const Monomial rest = te ? mono / Monomial(VarId::t(), te) : mono;
        seq.f[static_cast<std::size_t>(i)].add_term(rest, i % 2 == 0 ? c : Integer(-c));
    }
    return seq;
}

Integer chi_gj(const CharacterQuery& q) {
    const FSequence seq = build_f(q.mu);
    const Partition conj = conjugate(q.lam);
    const int p = static_cast<int>(conj.length());
    GenericMatrix jt(p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const int idx = conj[static_cast<std::size_t>(i)] - i + j;
            if (idx >= 0 && idx <= seq.m) jt.at(i, j) = seq.f[static_cast<std::size_t>(idx)];
        }
    std::vector<VarId> us;
    for (std::size_t k = 1; k <= q.mu.length(); ++k) us.push_back(VarId::u(static_cast<int>(k)));
    const Polynomial coeff = multilinear_coeff(det(jt), us);
    return coeff.coeff(Monomial{});
}

Integer chi_gj(const Partition& lam, const Partition& mu) { return chi_gj(CharacterQuery(lam, mu)); }

Integer chi_oracle(const Partition& lam, const Permutation& perm, Expansion mode) {
    require_same_size(lam, perm.size(), "chi_oracle");
    const Monomial target = permutation_monomial(perm.images());
    const DivisorBound bound = mode == Expansion::Truncated ? DivisorBound(target) : DivisorBound{};
    return coeff_of(schur_jt(GenericMatrix::generic(perm.size()), lam, bound), target);
}

Integer coeff_p(const Partition& lam, const Permutation& perm, Expansion mode) {
    require_same_size(lam, perm.size(), "coeff_p");
    const Monomial target = permutation_monomial(perm.images());
    const DivisorBound bound = mode == Expansion::Truncated ? DivisorBound(target) : DivisorBound{};
    const GenericMatrix a = GenericMatrix::generic(perm.size());
    Polynomial product(1L);
    for (int part : lam.parts()) product = bound.mul(product, power_sum(a, part, bound));
    return coeff_of(product, target);
}

Integer coeff_e(const Partition& lam, const Permutation& perm, Expansion mode) {
    require_same_size(lam, perm.size(), "coeff_e");
    const Monomial target = permutation_monomial(perm.images());
    const DivisorBound bound = mode == Expansion::Truncated ? DivisorBound(target) : DivisorBound{};
    const GenericMatrix a = GenericMatrix::generic(perm.size());
    Polynomial product(1L);
    for (int part : lam.parts()) product = bound.mul(product, elementary_sym(a, part, bound));
    return coeff_of(product, target);
}

Integer inner_e_p(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) return Integer(0);
    return Integer(epsilon_of(CycleType::of(mu))) * Integer(static_cast<long>(count_r(mu, lam)));
}

CharacterTable character_table(int n, int max_n) {
    check_bound(n, max_n, "character_table");
    CharacterTable table;
    table.n = n;
    table.lambdas = partitions_of(n);
    table.mus = table.lambdas;
    std::reverse(table.mus.begin(), table.mus.end());
    MnEvaluator mn;
    for (const Partition& lam : table.lambdas) {
        auto& row = table.rows[lam];
        for (const Partition& mu : table.mus) row.emplace(mu, mn(lam, mu));
    }
    return table;
}

Polynomial immanant(const GenericMatrix& a, const Partition& lam, int max_n) {
    check_bound(a.size(), max_n, "immanant");
    require_same_size(lam, a.size(), "immanant");
    const auto chars = class_characters(lam);
    Polynomial sum;
    for_each_permutation(a.size(), [&](const std::vector<int>& images) {
        const Integer& chi = chars.at(cycle_type(Permutation(images)).partition);
        if (chi == 0) return;
        Polynomial term{Integer(chi)};
        for (std::size_t i = 0; i < images.size() && !term.is_zero(); ++i)
            term *= a.at(static_cast<int>(i), images[i] - 1);
        sum += term;
    });
    return sum;
}

Integer immanant(const std::vector<std::vector<Integer>>& a, const Partition& lam, int max_n) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("immanant: matrix must be square");
    check_bound(n, max_n, "immanant");
    require_same_size(lam, n, "immanant");
    const auto chars = class_characters(lam);
    Integer sum(0);
    Integer term;
    for_each_permutation(n, [&](const std::vector<int>& images) {
        const Integer& chi = chars.at(cycle_type(Permutation(images)).partition);
        if (chi == 0) return;
        term = chi;
        for (std::size_t i = 0; i < images.size(); ++i) term *= a[i][static_cast<std::size_t>(images[i] - 1)];
        sum += term;
    });
    return sum;
}

}  // namespace charforge
