#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "charforge/characters.hpp"
#include "charforge/symfun.hpp"
#include "support/oracles.hpp"

using namespace charforge;

namespace {

Polynomial u(int k) { return Polynomial::u(k); }

long factorial(int n) {
    long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::vector<std::vector<Integer>> random_matrix(std::mt19937& rng, int n, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
    for (auto& row : m)
        for (auto& x : row) x = d(rng);
    return m;
}

}  // namespace

TEST_CASE("chi_mn") {
    CHECK(chi_mn(Partition{2, 2, 2, 1}, Partition{3, 2, 2}) == -1);
    CHECK(chi_mn(Partition{2, 2}, Partition{2, 2}) == 2);
    for (const Partition& mu : partitions_of(6)) CHECK(chi_mn(Partition{6}, mu) == 1);
    CHECK(chi_mn(CharacterQuery(Partition{}, Partition{})) == 1);
    CHECK_THROWS_AS(CharacterQuery(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("build_f") {
    const FSequence f = build_f(Partition{3, 2, 2});
    REQUIRE(f.m == 7);
    REQUIRE(f.f.size() == 8);
    CHECK(f.f[0] == Polynomial(1L));
    CHECK(f.f[1].is_zero());
    CHECK(f.f[2] == -u(2) - u(3));
    CHECK(f.f[3] == u(1));
    CHECK(f.f[4] == u(2) * u(3));
    CHECK(f.f[5] == -u(1) * u(2) - u(1) * u(3));
    CHECK(f.f[6].is_zero());
    CHECK(f.f[7] == u(1) * u(2) * u(3));

    const FSequence one = build_f(Partition{1});
    CHECK(one.f == std::vector<Polynomial>{Polynomial(1L), u(1)});
    CHECK_THROWS_AS(build_f(Partition{}), std::invalid_argument);

    SUBCASE("f reassembles the product") {
        for (int n = 1; n <= 6; ++n)
            for (const Partition& mu : partitions_of(n)) {
                const FSequence fs = build_f(mu);
                Polynomial product(1L);
                for (std::size_t k = 0; k < mu.length(); ++k)
                    product *= pow(Polynomial::t(), static_cast<unsigned>(mu[k])) - u(static_cast<int>(k) + 1);
                Polynomial rebuilt;
                for (int i = 0; i <= fs.m; ++i) {
                    const Polynomial term = fs.f[static_cast<std::size_t>(i)] * pow(Polynomial::t(), static_cast<unsigned>(fs.m - i));
                    if (i % 2 == 0)
                        rebuilt += term;
                    else
                        rebuilt -= term;
                }
                CAPTURE(mu.to_string());
                REQUIRE(rebuilt == product);
            }
    }
}

TEST_CASE("chi_gj") {
    CHECK(chi_gj(Partition{2, 2, 2, 1}, Partition{3, 2, 2}) == -1);
    CHECK(chi_gj(Partition{2, 2}, Partition{2, 2}) == 2);
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        CHECK(chi_gj(Partition(ones), Partition{n}) == (n % 2 == 1 ? 1 : -1));
    }
    CHECK_THROWS_AS(chi_gj(Partition{3}, Partition{2}), std::invalid_argument);
}

TEST_CASE("chi_oracle") {
    CHECK(chi_oracle(Partition{2, 2, 2, 1}, Permutation({2, 3, 1, 5, 4, 7, 6})) == -1);
    CHECK(chi_oracle(Partition{2}, Permutation::identity(2)) == 1);
    CHECK(chi_oracle(Partition{1, 1}, Permutation({2, 1})) == -1);
    CHECK(chi_oracle(Partition{1, 1}, Permutation({2, 1}), Expansion::Full) == -1);
    CHECK_THROWS_AS(chi_oracle(Partition{2}, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("coeff_p") {
    CHECK(coeff_p(Partition{2, 1}, Permutation({2, 1, 3})) == 2);
    CHECK(coeff_p(Partition{3}, Permutation::identity(3)) == 0);
    CHECK(coeff_p(Partition{1, 1}, Permutation::identity(2)) == 2);
    CHECK_THROWS_AS(coeff_p(Partition{1}, Permutation::identity(2)), std::invalid_argument);
}

TEST_CASE("inner_e_p") {
    CHECK(inner_e_p(Partition{2, 2}, Partition{2, 1, 1}) == -2);
    for (int n = 1; n <= 6; ++n) CHECK(inner_e_p(Partition{n}, Partition{n}) == (n % 2 == 0 ? -1 : 1));
    CHECK(inner_e_p(Partition{1, 1}, Partition{2}) == 0);
    CHECK(inner_e_p(Partition{2}, Partition{1}) == 0);
}

TEST_CASE("character_table") {
    const CharacterTable t2 = character_table(2);
    CHECK(t2.lambdas == std::vector<Partition>{{2}, {1, 1}});
    CHECK(t2.mus == std::vector<Partition>{{1, 1}, {2}});
    CHECK(t2.at(Partition{2}, Partition{1, 1}) == 1);
    CHECK(t2.at(Partition{2}, Partition{2}) == 1);
    CHECK(t2.at(Partition{1, 1}, Partition{1, 1}) == 1);
    CHECK(t2.at(Partition{1, 1}, Partition{2}) == -1);

    CHECK(character_table(4).at(Partition{2, 2}, Partition{2, 2}) == 2);
    CHECK(character_table(7).at(Partition{2, 2, 2, 1}, Partition{3, 2, 2}) == -1);
    CHECK(character_table(1).at(Partition{1}, Partition{1}) == 1);

    CHECK_THROWS_AS(character_table(0), std::out_of_range);
    CHECK_THROWS_AS(character_table(9), std::out_of_range);
    CHECK_NOTHROW(character_table(9, 9));

    const CharacterTable t6 = character_table(6);
    for (const Partition& mu : t6.mus) CHECK(t6.at(Partition{6}, mu) == 1);
    for (const Partition& lam : t6.lambdas) CHECK(t6.at(lam, Partition{1, 1, 1, 1, 1, 1}) > 0);
}

TEST_CASE("three methods agree") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                const Integer mn = chi_mn(lam, mu);
                CAPTURE(lam.to_string());
                CAPTURE(mu.to_string());
                REQUIRE(chi_gj(lam, mu) == mn);
                REQUIRE(chi_oracle(lam, Permutation::with_cycle_type(mu)) == mn);
            }
    for (int n = 5; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                CAPTURE(lam.to_string());
                CAPTURE(mu.to_string());
                REQUIRE(chi_gj(lam, mu) == chi_mn(lam, mu));
            }
}

TEST_CASE("oracle is a class function") {
    // every permutation of S_4, not just one representative per class
    for (const Partition& lam : partitions_of(4))
        for (const auto& p : oracle::all_permutations(4)) {
            const Permutation perm(p);
            REQUIRE(chi_oracle(lam, perm) == chi_mn(lam, cycle_type(perm).partition));
        }
}

TEST_CASE("border-strip recursion does not depend on part order or memo") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                std::vector<int> desc = mu.parts();
                std::vector<int> asc(desc.rbegin(), desc.rend());
                const Integer memo = chi_mn(lam, mu);
                CAPTURE(lam.to_string());
                CAPTURE(mu.to_string());
                REQUIRE(chi_mn_ordered(lam, desc) == memo);
                REQUIRE(chi_mn_ordered(lam, asc) == memo);
            }
    // a shared evaluator returns the same values as fresh ones
    MnEvaluator shared;
    for (const Partition& lam : partitions_of(7))
        for (const Partition& mu : partitions_of(7)) REQUIRE(shared(lam, mu) == chi_mn(lam, mu));
}

TEST_CASE("column orthogonality") {
    for (int n = 1; n <= 6; ++n) {
        const CharacterTable t = character_table(n);
        for (const Partition& l : t.mus)
            for (const Partition& m : t.mus) {
                Integer sum(0);
                for (const Partition& rho : t.lambdas) sum += t.at(rho, l) * t.at(rho, m);
                const Integer expected = l == m ? Integer(static_cast<long>(z_of(CycleType::of(l)))) : Integer(0);
                CAPTURE(l.to_string());
                CAPTURE(m.to_string());
                REQUIRE(sum == expected);
            }
    }
}

TEST_CASE("row orthogonality against class sizes") {
    for (int n = 1; n <= 6; ++n) {
        const CharacterTable t = character_table(n);
        for (const Partition& a : t.lambdas)
            for (const Partition& b : t.lambdas) {
                Integer sum(0);
                for (const Partition& mu : t.mus) sum += t.at(a, mu) * t.at(b, mu) * (factorial(n) / static_cast<long>(z_of(CycleType::of(mu))));
                REQUIRE(sum == (a == b ? Integer(static_cast<long>(factorial(n))) : Integer(0)));
            }
    }
}

TEST_CASE("dimensions square-sum to n!") {
    for (int n = 1; n <= 8; ++n) {
        const Partition id(std::vector<int>(static_cast<std::size_t>(n), 1));
        Integer sum(0);
        for (const Partition& lam : partitions_of(n)) {
            const Integer d = chi_mn(lam, id);
            REQUIRE(d > 0);
            sum += d * d;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("coefficients of e and p products at a permutation") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n)) {
            const Permutation pi = Permutation::with_cycle_type(mu);
            for (const Partition& lam : partitions_of(n)) {
                CAPTURE(lam.to_string());
                CAPTURE(mu.to_string());
                const Integer e_full = coeff_e(lam, pi, Expansion::Full);
                REQUIRE(e_full == inner_e_p(lam, mu));
                REQUIRE(coeff_e(lam, pi) == e_full);
                const Integer p_full = coeff_p(lam, pi, Expansion::Full);
                REQUIRE(p_full == (lam == mu ? Integer(static_cast<long>(z_of(CycleType::of(lam)))) : Integer(0)));
                REQUIRE(coeff_p(lam, pi) == p_full);
                REQUIRE(chi_oracle(lam, pi, Expansion::Full) == chi_mn(lam, mu));
            }
        }
}

TEST_CASE("immanant") {
    const GenericMatrix g3 = GenericMatrix::generic(3);
    CHECK(immanant(g3, Partition{1, 1, 1}) == det(g3));

    Polynomial perm;
    for (const auto& p : oracle::all_permutations(3)) perm += Polynomial(permutation_monomial(p));
    CHECK(immanant(g3, Partition{3}) == perm);

    const std::vector<std::vector<Integer>> ones(3, std::vector<Integer>(3, 1));
    CHECK(immanant(ones, Partition{2, 1}) == 0);

    // the same sum assembled from oracle characters, one per permutation
    Integer by_oracle(0);
    for (const auto& p : oracle::all_permutations(3)) by_oracle += chi_oracle(Partition{2, 1}, Permutation(p));
    CHECK(by_oracle == 0);

    CHECK_THROWS_AS(immanant(ones, Partition{2, 2}), std::invalid_argument);
    const std::vector<std::vector<Integer>> big(9, std::vector<Integer>(9, 1));
    CHECK_THROWS_AS(immanant(big, Partition{9}), std::out_of_range);

    SUBCASE("sign and trivial characters give det and permanent") {
        std::mt19937 rng(2026);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 1 + trial % 5;
            const auto m = random_matrix(rng, n, 9);
            const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
            CAPTURE(n);
            REQUIRE(immanant(m, column) == oracle::bareiss_det(m));
            REQUIRE(immanant(m, Partition{n}) == oracle::ryser_permanent(m));
        }
    }

    SUBCASE("numeric immanant equals the symbolic one evaluated") {
        std::mt19937 rng(5);
        const auto m = random_matrix(rng, 4, 5);
        for (const Partition& lam : partitions_of(4)) {
            const Polynomial sym = immanant(GenericMatrix::generic(4), lam);
            Integer value(0);
            for (const auto& [mon, c] : sym.terms()) {
                Integer term = c;
                for (const auto& [v, e] : mon.factors())
                    for (unsigned k = 0; k < e; ++k) term *= m[static_cast<std::size_t>(v.row - 1)][static_cast<std::size_t>(v.col - 1)];
                value += term;
            }
            REQUIRE(immanant(m, lam) == value);
        }
    }
}
