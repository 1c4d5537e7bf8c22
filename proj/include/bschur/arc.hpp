#pragma once

#include <optional>
#include <string>

#include "bschur/signed_permutation.hpp"
#include "bschur/tableaux.hpp"

namespace bschur {

enum class ArcType { T1, T2, T3, T4, T5, T6 };

std::string to_string(ArcType t);

/// Type, defining parameters and (for type 3) the sign pattern 1..7 of
/// negative entries around the entries n and 1.
struct ArcClassification {
    ArcType type = ArcType::T1;
    int k = 0;
    int l = -1;        // only for T3/T4
    int pattern = 0;   // only for T3
    bool operator==(const ArcClassification&) const = default;
};

/// Prefix-interval definition with signs forced by the interval growth
/// direction (cyclic neighbours in Z_n, representatives 1..n).
bool is_signed_arc(const SignedPermutation& pi);

/// Equivalent characterisation by avoidance of 24 signed patterns of
/// length 3.
bool is_signed_arc_by_patterns(const SignedPermutation& pi);

/// Type A arc permutations: all-positive windows whose prefixes are cyclic
/// intervals (no sign conditions).
bool is_arc_permutation(const std::vector<int>& window);

/// Classifies a signed arc permutation into its unique type with parameters.
/// Throws std::domain_error on non-arc input, std::logic_error when no type
/// template matches (would falsify the partition claim).
ArcClassification classify(const SignedPermutation& pi);

/// The descent-preserving map onto standard domino tableaux; dispatches on
/// the type. Throws std::domain_error on non-arc input.
DominoTableau arc_to_domino(const SignedPermutation& pi);

/// Inverse map. The two-row shape family is shared by types 5 and 6, so a
/// caller-supplied tag disambiguates; it is ignored for the other shapes.
/// Throws std::domain_error for shapes outside the seven template families
/// or when the tag is required but absent.
SignedPermutation domino_to_arc(const DominoTableau& t,
                                std::optional<ArcType> which = std::nullopt);

/// Involution swapping Des and Des_r: negative values are reversed along
/// the involution on the negative positions, positives untouched.
SignedPermutation phi1(const SignedPermutation& pi);

/// Two-row bi-tableau construction on phi1 images of signed arc
/// permutations; preserves sDes and Des_r. Throws std::domain_error when
/// the input is outside phi1 of the signed arc set.
BiTableau phi2(const SignedPermutation& pi);

} // namespace bschur
