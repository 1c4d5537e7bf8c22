#pragma once

#include <utility>
#include <vector>

#include "bschur/signed_permutation.hpp"
#include "bschur/tableaux.hpp"

namespace bschur {

/// Robinson-Schensted row insertion of a word with distinct letters.
/// P holds the inserted letters, Q records 1..len.
/// Throws std::invalid_argument on duplicate letters.
std::pair<YoungTableau, YoungTableau> rs_insert(const std::vector<int>& word);

/// RS with caller-provided recording labels (one per letter, increasing).
std::pair<YoungTableau, YoungTableau> rs_insert(const std::vector<int>& word,
                                                const std::vector<int>& recording);

/// RS applied to the negative subsequence (absolute values, recording window
/// positions) giving (P1, Q1), and to the positive subsequence giving
/// (P2, Q2). Returns the pair (P1,P2), (Q1,Q2).
std::pair<BiTableau, BiTableau> bi_rs(const SignedPermutation& pi);

/// Sign-colouring bijection from domino tableaux to bi-tableaux: colour cell
/// (i,j) with '-' when i+j is even, send a domino to the first tableau when
/// its top-rightmost box is '-'; labels assemble along the 2-quotient growth.
BiTableau littlewood(const DominoTableau& t);

/// Inverse of littlewood by incremental growth; throws std::invalid_argument
/// when no valid domino placement exists (invalid bi-tableau).
DominoTableau littlewood_inverse(const BiTableau& b);

/// Canonical descent-preserving matching between standard bi-tableaux of
/// bi-shape two_quotient(lambda) and standard domino tableaux of shape
/// lambda: both sides are grouped by descent set (Des_r versus Des) and
/// paired in serialized order within each group. Throws std::logic_error
/// naming lambda and the descent set when the group multisets differ.
std::vector<std::pair<BiTableau, DominoTableau>> phi3_table(const Partition& lambda);

} // namespace bschur
