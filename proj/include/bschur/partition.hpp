#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bschur {

/// Integer partition: parts sorted in weakly decreasing order, all positive.
/// The empty sequence represents the partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const;                       // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    /// 0-based part accessor; returns 0 beyond the last part.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& inner) const;
    std::string to_string() const;          // e.g. "(5,5,3,3,2)", "()" for empty

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n, first (n), last (1^n).
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions of n.
long long partition_count(int n);

/// True iff the Young diagram of shape admits a domino tiling.
/// Throws std::domain_error when |shape| is odd.
bool is_empty_two_core(const Partition& shape);

/// The ordered pair (lambda^-, lambda^+) with |lambda^-| + |lambda^+| = |shape|/2.
/// Computed on the 2-runner abacus; the component order matches the sign
/// colouring of domino tilings (top-left box '-').
std::pair<Partition, Partition> two_quotient(const Partition& shape);

/// Inverse of two_quotient.
Partition quotient_to_shape(const Partition& minus, const Partition& plus);

/// P^0(n): all shapes of 2n boxes with a domino tiling, in enumeration order.
std::vector<Partition> empty_two_core_shapes(int n);

/// True iff inner is contained in outer and outer/inner has at most one box
/// per column (interlacing condition).
bool is_horizontal_strip(const Partition& inner, const Partition& outer);

} // namespace bschur
