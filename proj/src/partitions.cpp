#include "charforge/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace charforge {

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int v = 0;
        const auto* first = tok.data();
        const auto* last = tok.data() + tok.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (tok.empty() || ec != std::errc{} || ptr != last) {
            throw std::invalid_argument(std::string("malformed ") + what + " '" + std::string(text) + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) { return Partition(parse_int_list(text, "partition")); }

bool Partition::contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const { return join(parts_); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("permutation images must be a bijection on 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    return Permutation(parse_int_list(text, "permutation"));
}

Permutation Permutation::with_cycle_type(const Partition& mu) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(mu.size()));
    int start = 1;
    for (int len : mu.parts()) {
        for (int k = 0; k < len - 1; ++k) v.push_back(start + k + 1);
        v.push_back(start);
        start += len;
    }
    return Permutation(std::move(v));
}

CycleType CycleType::of(const Partition& p) {
    CycleType ct{p, {}};
    for (int part : p.parts()) ++ct.multiplicities[part];
    return ct;
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("skew shape " + outer_.to_string() + "/" + inner_.to_string() +
                                    ": inner partition not contained in outer");
}

SkewShape SkewShape::conjugate() const {
    return SkewShape(charforge::conjugate(outer_), charforge::conjugate(inner_));
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

CycleType cycle_type(const Permutation& perm) {
    const int n = perm.size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> lengths;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i - 1)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = perm(j)) {
            seen[static_cast<std::size_t>(j - 1)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return CycleType::of(Partition(std::move(lengths)));
}

bool is_border_strip(const SkewShape& s) {
    const Partition& lam = s.outer();
    const Partition& nu = s.inner();
    std::size_t first = lam.length();
    std::size_t last = 0;
    for (std::size_t i = 0; i < lam.length(); ++i) {
        if (lam[i] > nu[i]) {
            first = std::min(first, i);
            last = i;
        }
    }
    if (first == lam.length()) return false;  // no cells
    for (std::size_t i = first + 1; i <= last; ++i) {
        // an empty row inside the occupied range disconnects the shape
        if (lam[i] == nu[i]) return false;
        if (lam[i] != nu[i - 1] + 1) return false;
    }
    return true;
}

int height(const SkewShape& s) {
    if (!is_border_strip(s))
        throw std::invalid_argument("height: " + s.outer().to_string() + "/" + s.inner().to_string() +
                                    " is not a border strip");
    int rows = 0;
    for (std::size_t i = 0; i < s.outer().length(); ++i)
        if (s.outer()[i] > s.inner()[i]) ++rows;
    return rows - 1;
}

std::vector<std::pair<Partition, int>> border_strip_removals(const Partition& p, int l) {
    if (l < 1) throw std::invalid_argument("border_strip_removals: strip size must be positive");
    // Beta numbers beta_i = lam_i + (len - 1 - i) are distinct. Removing an l-strip
    // whose top cell lies in row i moves beta_i down by l into a free slot; the
    // strip height is the number of beta values jumped over.
    const int len = static_cast<int>(p.length());
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] + (len - 1 - i);

    std::vector<std::pair<Partition, int>> out;
    for (int i = 0; i < len; ++i) {
        const int target = beta[static_cast<std::size_t>(i)] - l;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int ht = 0;
        for (int b : beta)
            if (b > target && b < beta[static_cast<std::size_t>(i)]) ++ht;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts;
        for (int k = 0; k < len; ++k) {
            const int part = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
            if (part > 0) parts.push_back(part);
        }
        out.emplace_back(Partition(std::move(parts)), ht);
    }
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> subpartitions(const Partition& p) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int cap) {
        out.emplace_back(cur);
        if (row >= p.length()) return;
        for (int k = 1; k <= std::min(cap, p[row]); ++k) {
            cur.push_back(k);
            rec(row + 1, k);
            cur.pop_back();
        }
    };
    rec(0, p[0]);
    return out;
}

long long z_of(const CycleType& mu) {
    long long z = 1;
    for (const auto& [part, mult] : mu.multiplicities) {
        for (int k = 1; k <= mult; ++k) z *= static_cast<long long>(part) * k;
    }
    return z;
}

int epsilon_of(const CycleType& mu) {
    int even = 0;
    for (const auto& [part, mult] : mu.multiplicities)
        if (part % 2 == 0) even += mult;
    return even % 2 == 0 ? 1 : -1;
}

long long count_r(const Partition& mu, const Partition& lam) {
    if (mu.size() != lam.size()) return 0;
    std::vector<int> room(lam.parts());
    const auto& parts = mu.parts();
    std::function<long long(std::size_t)> rec = [&](std::size_t idx) -> long long {
        if (idx == parts.size()) {
            // every block is exactly filled since total sizes agree
            return 1;
        }
        long long total = 0;
        for (auto& r : room) {
            if (r < parts[idx]) continue;
            r -= parts[idx];
            total += rec(idx + 1);
            r += parts[idx];
        }
        return total;
    };
    return rec(0);
}

}  // namespace charforge
