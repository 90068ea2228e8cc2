#include "charforge/polyring.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace charforge {

std::string VarId::to_string() const {
    switch (kind) {
        case Kind::T: return "t";
        case Kind::U: return "u[" + std::to_string(row) + "]";
        case Kind::Entry: return "a[" + std::to_string(row) + "," + std::to_string(col) + "]";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(VarId v, unsigned exponent) {
    if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(v, e);
    }
    return m;
}

unsigned Monomial::degree() const noexcept {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

unsigned Monomial::exponent(VarId v) const noexcept {
    const auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                     [](const Factor& f, const VarId& key) { return f.first < key; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    auto it = other.factors_.begin();
    for (const auto& [v, e] : factors_) {
        while (it != other.factors_.end() && it->first < v) ++it;
        if (it == other.factors_.end() || it->first != v || it->second < e) return false;
        ++it;
    }
    return true;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += '*';
        s += v.to_string();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            out.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw std::invalid_argument("monomial division: " + b.to_string() + " does not divide " + a.to_string());
    Monomial out;
    auto j = b.factors_.begin();
    for (const auto& [v, e] : a.factors_) {
        unsigned rem = e;
        if (j != b.factors_.end() && j->first == v) {
            rem -= j->second;
            ++j;
        }
        if (rem > 0) out.factors_.emplace_back(v, rem);
    }
    return out;
}

Monomial permutation_monomial(std::span<const int> images) {
    std::vector<Monomial::Factor> f;
    f.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        f.emplace_back(VarId::entry(static_cast<int>(i) + 1, images[i]), 1u);
    return Monomial::from_factors(std::move(f));
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long value) {
    if (value != 0) terms_.emplace(Monomial{}, Integer(value));
}

Polynomial::Polynomial(const Integer& value) {
    if (value != 0) terms_.emplace(Monomial{}, value);
}

Polynomial::Polynomial(Monomial m, Integer coefficient) {
    if (coefficient != 0) terms_.emplace(std::move(m), std::move(coefficient));
}

unsigned Polynomial::degree() const noexcept {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Integer Polynomial::coeff(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    Integer prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ma * mb, prod);
        }
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        Integer mag = abs(c);
        if (first) {
            if (negative) s += '-';
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + "*";
            s += m.to_string();
        }
    }
    return s;
}

Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial r(1L);
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

Integer coeff_of(const Polynomial& p, const Monomial& m) { return p.coeff(m); }

Polynomial multilinear_coeff(const Polynomial& p, std::span<const VarId> vars) {
    std::vector<VarId> sorted(vars.begin(), vars.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("multilinear_coeff: duplicate variable");
    std::vector<Monomial::Factor> f;
    for (const auto& v : sorted) f.emplace_back(v, 1u);
    const Monomial target = Monomial::from_factors(std::move(f));

    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        if (!target.divides(m)) continue;
        bool linear = true;
        for (const auto& v : sorted) {
            if (m.exponent(v) != 1) {
                linear = false;
                break;
            }
        }
        if (linear) r.add_term(m / target, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// DivisorBound

Polynomial DivisorBound::reduce(const Polynomial& p) const {
    if (!bound_) return p;
    Polynomial r;
    for (const auto& [m, c] : p.terms())
        if (admits(m)) r.add_term(m, c);
    return r;
}

Polynomial DivisorBound::mul(const Polynomial& a, const Polynomial& b) const {
    if (!bound_) return a * b;
    Polynomial r;
    Integer prod;
    for (const auto& [ma, ca] : a.terms()) {
        if (!admits(ma)) continue;
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma * mb;
            if (!admits(m)) continue;
            prod = ca * cb;
            r.add_term(m, prod);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// GenericMatrix

GenericMatrix::GenericMatrix(int size) : size_(size) {
    if (size < 0) throw std::invalid_argument("matrix size must be non-negative");
    entries_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
}

GenericMatrix::GenericMatrix(std::vector<std::vector<Polynomial>> rows) : GenericMatrix(static_cast<int>(rows.size())) {
    for (int i = 0; i < size_; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != size_)
            throw std::invalid_argument("matrix must be square");
        for (int j = 0; j < size_; ++j) at(i, j) = std::move(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
}

GenericMatrix GenericMatrix::generic(int size, int offset) {
    GenericMatrix m(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m.at(i, j) = Polynomial::entry(offset + i + 1, offset + j + 1);
    return m;
}

GenericMatrix GenericMatrix::identity(int size) {
    GenericMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = Polynomial(1L);
    return m;
}

GenericMatrix GenericMatrix::from_integers(const std::vector<std::vector<Integer>>& rows) {
    GenericMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.size(); ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != m.size()) throw std::invalid_argument("matrix must be square");
        for (int j = 0; j < m.size(); ++j) m.at(i, j) = Polynomial(row[static_cast<std::size_t>(j)]);
    }
    return m;
}

GenericMatrix GenericMatrix::principal(std::span<const int> indices) const {
    GenericMatrix m(static_cast<int>(indices.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) m.at(i, j) = at(indices[static_cast<std::size_t>(i)], indices[static_cast<std::size_t>(j)]);
    return m;
}

GenericMatrix operator*(const GenericMatrix& a, const GenericMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix product: size mismatch");
    const int n = a.size();
    GenericMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Polynomial& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

GenericMatrix direct_sum(const GenericMatrix& a, const GenericMatrix& b) {
    GenericMatrix r(a.size() + b.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j) r.at(a.size() + i, a.size() + j) = b.at(i, j);
    return r;
}

// ---------------------------------------------------------------------------
// Determinant

namespace {

class LaplaceDet {
public:
    LaplaceDet(const GenericMatrix& m, const DivisorBound& bound) : m_(m), bound_(bound) {}

    // Determinant of rows [row, n) against the columns in mask, where
    // popcount(mask) == n - row.
    const Polynomial& minor(int row, std::uint64_t mask) {
        if (const auto it = memo_.find(mask); it != memo_.end()) return it->second;
        Polynomial acc;
        if (mask == 0) {
            acc = Polynomial(1L);
        } else {
            int sign = 1;
            for (int col = 0; col < m_.size(); ++col) {
                const std::uint64_t bit = std::uint64_t{1} << col;
                if (!(mask & bit)) continue;
                const Polynomial& entry = m_.at(row, col);
                if (!entry.is_zero()) {
                    const Polynomial& sub = minor(row + 1, mask & ~bit);
                    if (!sub.is_zero()) {
                        Polynomial term = bound_.mul(entry, sub);
                        if (sign > 0)
                            acc += term;
                        else
                            acc -= term;
                    }
                }
                sign = -sign;
            }
        }
        return memo_.emplace(mask, std::move(acc)).first->second;
    }

private:
    const GenericMatrix& m_;
    const DivisorBound& bound_;
    std::unordered_map<std::uint64_t, Polynomial> memo_;
};

}  // namespace

Polynomial det(const GenericMatrix& m, const DivisorBound& bound) {
    if (m.size() > 63) throw std::invalid_argument("det: matrix too large");
    if (m.size() == 0) return Polynomial(1L);
    LaplaceDet solver(m, bound);
    const std::uint64_t all = (std::uint64_t{1} << m.size()) - 1;
    return bound.reduce(solver.minor(0, all));
}

}  // namespace charforge
