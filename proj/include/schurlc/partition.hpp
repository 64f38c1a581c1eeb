#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schurlc {

// Integer partition: weakly decreasing positive parts. The empty partition
// is the unique partition of 0. Canonical form never stores zero parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Builds (a^m, b^(r)) style shapes conveniently; zero parts are dropped.
    static Partition rectangle_pair(int a, int count_a, int b, int count_b);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // part(i) with 1-based i; out-of-range reads as 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    int first_part() const { return parts_.empty() ? 0 : parts_[0]; }

    bool contains(const Partition& inner) const;

    // Lexicographic order on part lists. Enumeration emits partitions in
    // descending order of this comparison; the "canonically smallest"
    // partition of n under it is (1^n).
    friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Skew shape outer/inner with containment enforced at construction.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }

    friend std::strong_ordering operator<=>(const SkewShape&, const SkewShape&) = default;

    std::string to_string() const;

private:
    Partition outer_;
    Partition inner_;
};

Partition conjugate(const Partition& p);

// True iff every column of the diagram has even length, i.e. every part of
// the conjugate is even.
bool is_column_even(const Partition& p);

// All partitions of n, descending lexicographic, optionally restricted to
// first part == first_part.
std::vector<Partition> enumerate_partitions(int n,
                                            std::optional<int> first_part = std::nullopt);

// Merge the parts of a and b into one weakly decreasing list v1 >= v2 >= ...
// and return ((v1,v3,v5,...), (v2,v4,v6,...)).
std::pair<Partition, Partition> sort_split(const Partition& a, const Partition& b);

// Coordinate-wise floor/ceil midpoints of two skew shapes: returns
// (floor((l+n)/2)/floor((m+r)/2), ceil((l+n)/2)/ceil((m+r)/2)).
std::pair<SkewShape, SkewShape> midpoint_shapes(const SkewShape& a, const SkewShape& b);

// Parses "3,3,2,2" or "3^2,2^2" (forms may be mixed per item); "-" and ""
// denote the empty partition. Throws std::invalid_argument naming the
// offending token on malformed input.
Partition parse_partition(const std::string& text);

}  // namespace schurlc
