#pragma once

// Exact sparse multivariate polynomials over the integers.
//
// Variables are matrix entries a[i,j], auxiliary u[k], and a single t used for
// characteristic polynomials. Coefficients are GMP integers, so nothing here
// ever rounds or overflows.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace charforge {

using Integer = mpz_class;

struct VarId {
    enum class Kind : unsigned char { T = 0, U = 1, Entry = 2 };

    Kind kind = Kind::T;
    int row = 0;  // Entry: row index; U: variable index
    int col = 0;  // Entry only

    static VarId t() { return {Kind::T, 0, 0}; }
    static VarId u(int index) { return {Kind::U, index, 0}; }
    static VarId entry(int i, int j) { return {Kind::Entry, i, j}; }

    bool is_entry() const noexcept { return kind == Kind::Entry; }
    std::string to_string() const;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Canonical power product: strictly increasing variables, positive exponents.
class Monomial {
public:
    using Factor = std::pair<VarId, unsigned>;

    Monomial() = default;
    explicit Monomial(VarId v, unsigned exponent = 1);
    /// Accepts factors in any order, merging repeats.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    unsigned degree() const noexcept;
    unsigned exponent(VarId v) const noexcept;
    bool divides(const Monomial& other) const noexcept;

    std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Requires b to divide a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return a.factors_ <=> b.factors_;
    }

private:
    std::vector<Factor> factors_;
};

/// Product of the entries a[i, pi(i)].
Monomial permutation_monomial(std::span<const int> images);

class Polynomial {
public:
    using TermMap = std::map<Monomial, Integer>;

    Polynomial() = default;
    Polynomial(long value);  // NOLINT: constants convert implicitly
    Polynomial(const Integer& value);  // NOLINT
    Polynomial(Monomial m, Integer coefficient = 1);

    static Polynomial var(VarId v) { return Polynomial(Monomial(v)); }
    static Polynomial entry(int i, int j) { return var(VarId::entry(i, j)); }
    static Polynomial u(int k) { return var(VarId::u(k)); }
    static Polynomial t() { return var(VarId::t()); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    unsigned degree() const noexcept;
    Integer coeff(const Monomial& m) const;

    /// Adds c * m in place.
    void add_term(const Monomial& m, const Integer& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// e.g. "a[1,1]*a[2,2] - a[1,2]*a[2,1]"
    std::string to_string() const;

private:
    TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);
Integer coeff_of(const Polynomial& p, const Monomial& m);

/// Coefficient of the product of vars (each to the first power) as a polynomial in
/// the remaining variables. Throws on duplicate vars.
Polynomial multilinear_coeff(const Polynomial& p, std::span<const VarId> vars);

/// Arithmetic modulo the monomials that do not divide a fixed bound.
///
/// Those monomials span an ideal, so every coefficient of a divisor of the bound is
/// computed exactly while everything else is discarded early. An unset bound means
/// ordinary arithmetic.
class DivisorBound {
public:
    DivisorBound() = default;
    explicit DivisorBound(Monomial bound) : bound_(std::move(bound)) {}

    bool active() const noexcept { return bound_.has_value(); }
    bool admits(const Monomial& m) const noexcept { return !bound_ || m.divides(*bound_); }
    Polynomial reduce(const Polynomial& p) const;
    Polynomial mul(const Polynomial& a, const Polynomial& b) const;

private:
    std::optional<Monomial> bound_;
};

class GenericMatrix {
public:
    GenericMatrix() = default;
    explicit GenericMatrix(int size);
    explicit GenericMatrix(std::vector<std::vector<Polynomial>> rows);

    /// The m x m matrix of variables a[offset+i, offset+j].
    static GenericMatrix generic(int size, int offset = 0);
    static GenericMatrix identity(int size);
    static GenericMatrix from_integers(const std::vector<std::vector<Integer>>& rows);

    int size() const noexcept { return size_; }
    Polynomial& at(int i, int j) { return entries_[index(i, j)]; }
    const Polynomial& at(int i, int j) const { return entries_[index(i, j)]; }

    /// Principal submatrix on the given 0-based indices.
    GenericMatrix principal(std::span<const int> indices) const;

    friend GenericMatrix operator*(const GenericMatrix& a, const GenericMatrix& b);
    friend bool operator==(const GenericMatrix&, const GenericMatrix&) = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(j); }

    int size_ = 0;
    std::vector<Polynomial> entries_;
};

/// Block-diagonal matrix a (+) b.
GenericMatrix direct_sum(const GenericMatrix& a, const GenericMatrix& b);

/// Exact determinant by first-row Laplace expansion, memoized on the set of
/// remaining columns.
Polynomial det(const GenericMatrix& m, const DivisorBound& bound = {});

}  // namespace charforge
