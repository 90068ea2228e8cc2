#pragma once

// Irreducible characters of the symmetric group and immanants.
//
// chi^lam(mu) is available by three independent routes:
//   chi_mn      border-strip (Murnaghan-Nakayama) recursion
//   chi_gj      multilinear coefficient of a dual Jacobi-Trudi determinant in the
//               coefficients f_i of prod_k (t^{mu_k} - u_k)
//   chi_oracle  coefficient of a[1,pi(1)]...a[n,pi(n)] in det(h_{lam_i - i + j})
//               on a generic n x n matrix

#include <map>
#include <span>
#include <vector>

#include "charforge/partitions.hpp"
#include "charforge/polyring.hpp"

namespace charforge {

/// A pair of partitions of the same n; construction rejects a size mismatch.
struct CharacterQuery {
    Partition lam;
    Partition mu;

    CharacterQuery(Partition lam, Partition mu);
};

struct CharacterTable {
    int n = 0;
    std::vector<Partition> lambdas;  // rows, (n) first
    std::vector<Partition> mus;      // columns, (1^n) first
    std::map<Partition, std::map<Partition, Integer>> rows;

    const Integer& at(const Partition& lam, const Partition& mu) const { return rows.at(lam).at(mu); }
};

/// Coefficients f_0..f_m of prod_k (t^{mu_k} - u_k) = f_0 t^m - f_1 t^{m-1} + ... +- f_m.
struct FSequence {
    Partition mu;
    int m = 0;
    std::vector<Polynomial> f;
};

/// Memoized border-strip recursion keyed on (lam, remaining parts of mu).
class MnEvaluator {
public:
    Integer operator()(const Partition& lam, const Partition& mu);

private:
    std::map<std::pair<Partition, Partition>, Integer> memo_;
};

Integer chi_mn(const CharacterQuery& q);
Integer chi_mn(const Partition& lam, const Partition& mu);

/// Unmemoized recursion consuming the cycle lengths in the order given.
Integer chi_mn_ordered(const Partition& lam, std::span<const int> cycle_lengths);

FSequence build_f(const Partition& mu);

Integer chi_gj(const CharacterQuery& q);
Integer chi_gj(const Partition& lam, const Partition& mu);

enum class Expansion {
    Truncated,  // arithmetic modulo monomials that cannot divide a_pi
    Full,       // expand every polynomial completely, then read the coefficient
};

Integer chi_oracle(const Partition& lam, const Permutation& perm, Expansion mode = Expansion::Truncated);

/// [a_pi] p_lam(omega), the product of traces of matrix powers.
Integer coeff_p(const Partition& lam, const Permutation& perm, Expansion mode = Expansion::Truncated);

/// [a_pi] e_lam(omega), the product of sums of principal minors.
Integer coeff_e(const Partition& lam, const Permutation& perm, Expansion mode = Expansion::Truncated);

/// <e_lam, p_mu> = eps_mu * R_{mu lam}; 0 when sizes differ.
Integer inner_e_p(const Partition& lam, const Partition& mu);

inline constexpr int kDefaultTableBound = 8;

CharacterTable character_table(int n, int max_n = kDefaultTableBound);

/// sum over pi in S_n of chi^lam(pi) a[1,pi(1)]...a[n,pi(n)].
Polynomial immanant(const GenericMatrix& a, const Partition& lam, int max_n = kDefaultTableBound);
Integer immanant(const std::vector<std::vector<Integer>>& a, const Partition& lam, int max_n = kDefaultTableBound);

}  // namespace charforge
