#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bschur/signed_permutation.hpp"
#include "bschur/tableaux.hpp"

namespace bschur {

/// Subset of {0,...,n-1} stored as a bit mask (bit i = member i).
struct DescentSet {
    std::uint32_t bits = 0;
    int n = 0;

    void add(int i) { bits |= 1u << i; }
    bool contains(int i) const { return (bits >> i) & 1u; }
    std::vector<int> members() const;
    static DescentSet from_members(const std::vector<int>& members, int n);

    bool operator==(const DescentSet&) const = default;
    auto operator<=>(const DescentSet&) const = default;
};

/// The pair (S, eps): S a sorted subset of [n] with n always a member, eps a
/// sign per element of S. extended[j-1] carries the block-constant sign at j.
struct SignedDescentSet {
    std::vector<int> s;
    std::string eps;       // '+'/'-' aligned with s
    std::string extended;  // length n
    int n = 0;

    static SignedDescentSet make(std::vector<int> s, std::string eps, int n);
    char extended_sign(int j) const { return extended[static_cast<size_t>(j - 1)]; }

    bool operator==(const SignedDescentSet&) const = default;
};

/// Des(pi) = {0 <= i <= n-1 : pi(i) > pi(i+1)} with pi(0) = 0.
DescentSet des_b(const SignedPermutation& pi);

/// Descents for the order -1 < -2 < ... < -n < 0 < 1 < ... < n.
DescentSet des_r(const SignedPermutation& pi);

SignedDescentSet sdes(const SignedPermutation& pi);

/// {s in S, s != n : extended(s)extended(s+1) in {++, --, +-}}.
DescentSet wdes(const SignedDescentSet& sd);

int neg_count(const SignedPermutation& pi);

/// {i : i+1 lies in a strictly lower row than i}; 0 is never a member.
DescentSet des_syt(const YoungTableau& t);

/// Domino descents: i > 0 when the top row of domino i+1 is strictly below
/// the top row of domino i; 0 when domino 1 is vertical.
DescentSet des_sdt(const DominoTableau& t);

SignedDescentSet sdes_bitableau(const BiTableau& b);

DescentSet des_r_bitableau(const BiTableau& b);

/// Type A descent set of an all-positive window (subset of [n-1]).
DescentSet des_a(const std::vector<int>& window);

} // namespace bschur
