#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charforge {

/// An integer partition stored as weakly decreasing positive parts.
///
/// Indexing past the last part yields 0, so callers may treat a partition
/// as an infinite sequence padded with zeros.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Parses "3,2,2"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return n_; }
    bool empty() const noexcept { return parts_.empty(); }

    bool contains(const Partition& inner) const noexcept;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// One-line notation: images[i] = pi(i + 1), values in 1..n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation parse(std::string_view text);
    /// The permutation (1..mu_1)(mu_1+1..mu_1+mu_2)... of the given cycle type.
    static Permutation with_cycle_type(const Partition& mu);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const noexcept { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

struct CycleType {
    Partition partition;
    std::map<int, int> multiplicities;  // part size -> j_i

    static CycleType of(const Partition& p);
};

/// The skew shape outer/inner; construction rejects inner not contained in outer.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int size() const noexcept { return outer_.size() - inner_.size(); }
    SkewShape conjugate() const;

private:
    Partition outer_;
    Partition inner_;
};

Partition conjugate(const Partition& p);
CycleType cycle_type(const Permutation& perm);

/// Connected skew shape with at least one cell and no 2x2 square.
bool is_border_strip(const SkewShape& s);

/// Number of occupied rows minus one. Throws if s is not a border strip.
int height(const SkewShape& s);

/// Every inner partition nu with outer/nu a border strip of the given size,
/// paired with the strip height, in order of the strip's top row.
std::vector<std::pair<Partition, int>> border_strip_removals(const Partition& p, int l);

/// Partitions of n in reverse lexicographic order, (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// All nu contained in p, including the empty partition and p itself.
std::vector<Partition> subpartitions(const Partition& p);

long long z_of(const CycleType& mu);
int epsilon_of(const CycleType& mu);

/// Ordered set partitions (B_1..B_p) of mu's part indices with block sums lam_j.
long long count_r(const Partition& mu, const Partition& lam);

}  // namespace charforge
