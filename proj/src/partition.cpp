#include "bschur/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int max_part) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n > 0 ? n : 1);
    return out;
}

long long partition_count(int n) {
    if (n < 0) return 0;
    // Euler recurrence via the dense table; n stays desk-scale here.
    std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int s = k; s <= n; ++s) p[static_cast<size_t>(s)] += p[static_cast<size_t>(s - k)];
    return p[static_cast<size_t>(n)];
}

// Beta-numbers for an even number L >= length of slots: beta_i = part_i + (L-1-i),
// strictly decreasing. With L even, beads on the even runner encode lambda^-
// and beads on the odd runner encode lambda^+.
static std::vector<long long> beta_numbers(const Partition& p, int L) {
    std::vector<long long> beta(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i)
        beta[static_cast<size_t>(i)] = p.part(i) + (L - 1 - i);
    return beta;
}

static int even_slot_count(const Partition& shape) {
    int L = shape.length() + (shape.length() % 2);
    return L;
}

bool is_empty_two_core(const Partition& shape) {
    if (shape.size() % 2 != 0)
        throw std::domain_error("is_empty_two_core: |shape| is odd");
    int L = even_slot_count(shape);
    auto beta = beta_numbers(shape, L);
    int evens = 0;
    for (long long b : beta)
        if (b % 2 == 0) ++evens;
    return evens == L / 2;
}

static Partition partition_from_descending(const std::vector<long long>& v) {
    // v strictly decreasing; subtract the staircase.
    int k = static_cast<int>(v.size());
    std::vector<int> parts;
    parts.reserve(v.size());
    for (int i = 0; i < k; ++i)
        parts.push_back(static_cast<int>(v[static_cast<size_t>(i)] - (k - 1 - i)));
    return Partition(parts);
}

std::pair<Partition, Partition> two_quotient(const Partition& shape) {
    if (!is_empty_two_core(shape))
        throw std::domain_error("two_quotient: shape " + shape.to_string() +
                                " has no domino tiling");
    int L = even_slot_count(shape);
    auto beta = beta_numbers(shape, L);
    std::vector<long long> ev, od;
    for (long long b : beta)
        (b % 2 == 0 ? ev : od).push_back(b / 2);
    return {partition_from_descending(ev), partition_from_descending(od)};
}

Partition quotient_to_shape(const Partition& minus, const Partition& plus) {
    int half = std::max(minus.length(), plus.length());
    int L = 2 * half;
    std::vector<long long> beta;
    beta.reserve(static_cast<size_t>(L));
    for (int i = 0; i < half; ++i) {
        beta.push_back(2LL * (minus.part(i) + (half - 1 - i)));
        beta.push_back(2LL * (plus.part(i) + (half - 1 - i)) + 1);
    }
    std::sort(beta.rbegin(), beta.rend());
    return partition_from_descending(beta);
}

std::vector<Partition> empty_two_core_shapes(int n) {
    std::vector<Partition> out;
    for (const auto& lambda : enumerate_partitions(2 * n))
        if (is_empty_two_core(lambda)) out.push_back(lambda);
    return out;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner)) return false;
    for (int i = 0; i + 1 < outer.length(); ++i)
        if (outer.part(i + 1) > inner.part(i)) return false;
    return true;
}

} // namespace bschur
