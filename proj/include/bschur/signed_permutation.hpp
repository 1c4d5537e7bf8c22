#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace bschur {

/// Element of the hyperoctahedral group B_n stored as its window of n signed
/// values; pi(-i) = -pi(i) is implicit.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> window);

    int n() const { return static_cast<int>(window_.size()); }
    /// 1-based window access with the pi(0) = 0 convention.
    int operator()(int i) const {
        return i == 0 ? 0 : window_[static_cast<size_t>(i - 1)];
    }
    const std::vector<int>& window() const { return window_; }

    bool operator==(const SignedPermutation&) const = default;
    auto operator<=>(const SignedPermutation&) const = default;

private:
    std::vector<int> window_;
};

/// Parses a comma-separated list of signed integers (spaces tolerated).
/// Throws std::invalid_argument naming the offending token on duplicates,
/// zeros, out-of-range values or malformed input.
SignedPermutation parse_signed_permutation(const std::string& text);

std::string to_string(const SignedPermutation& pi);

SignedPermutation identity_permutation(int n);

/// sigma with sigma(pi(i)) = i, extended by sigma(-j) = -sigma(j).
SignedPermutation inverse(const SignedPermutation& pi);

/// |B_n| = 2^n n!.
std::uint64_t signed_permutation_count(int n);

/// Unranks index in [0, 2^n n!): lexicographic permutation order on the
/// absolute window, sign bits in the low n bits of the index.
SignedPermutation signed_permutation_at(int n, std::uint64_t index);

/// Serial reference enumeration of B_n: absolute windows in lexicographic
/// order, all 2^n sign masks for each.
template <typename Visitor>
void for_each_signed_permutation(int n, Visitor&& visit) {
    std::vector<int> abs_window(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) abs_window[static_cast<size_t>(i)] = i + 1;
    std::vector<int> window(static_cast<size_t>(n));
    while (true) {
        const std::uint64_t masks = n >= 0 ? (1ULL << n) : 1;
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            for (int i = 0; i < n; ++i)
                window[static_cast<size_t>(i)] =
                    (mask >> i) & 1 ? -abs_window[static_cast<size_t>(i)]
                                    : abs_window[static_cast<size_t>(i)];
            visit(SignedPermutation(window));
        }
        if (!std::next_permutation(abs_window.begin(), abs_window.end())) break;
    }
}

/// Chunked map-reduce over B_n. jobs == 1 runs the serial reference path;
/// jobs == 0 uses the OpenMP default thread count. Partial accumulators are
/// merged in chunk order, so the result does not depend on scheduling.
template <typename Acc, typename Visit, typename Merge>
Acc bn_map_reduce(int n, int jobs, Acc init, Visit&& visit, Merge&& merge) {
    const std::uint64_t total = signed_permutation_count(n);
#ifdef _OPENMP
    if (jobs != 1 && total > 1024) {
        const int chunks = 64;
        std::vector<Acc> partial(chunks, init);
        if (jobs > 0) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
            for (int c = 0; c < chunks; ++c) {
                const std::uint64_t lo = total * c / chunks;
                const std::uint64_t hi = total * (c + 1) / chunks;
                for (std::uint64_t idx = lo; idx < hi; ++idx)
                    visit(partial[static_cast<size_t>(c)], signed_permutation_at(n, idx));
            }
        } else {
#pragma omp parallel for schedule(dynamic, 1)
            for (int c = 0; c < chunks; ++c) {
                const std::uint64_t lo = total * c / chunks;
                const std::uint64_t hi = total * (c + 1) / chunks;
                for (std::uint64_t idx = lo; idx < hi; ++idx)
                    visit(partial[static_cast<size_t>(c)], signed_permutation_at(n, idx));
            }
        }
        Acc acc = std::move(init);
        for (auto& p : partial) merge(acc, std::move(p));
        return acc;
    }
#else
    (void)jobs;
    (void)total;
#endif
    Acc acc = std::move(init);
    for_each_signed_permutation(n, [&](const SignedPermutation& pi) { visit(acc, pi); });
    return acc;
}

} // namespace bschur
