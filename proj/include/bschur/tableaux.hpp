#pragma once

#include <array>
#include <compare>
#include <utility>
#include <vector>

#include "bschur/partition.hpp"

namespace bschur {

/// Young tableau as rows of entries; rows are left-justified, row 1 on top.
struct YoungTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    int size() const;                       // number of cells
    bool empty() const { return rows.empty(); }
    /// 1-based cell access; caller guarantees the cell exists.
    int cell(int r, int c) const {
        return rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
    }

    bool operator==(const YoungTableau&) const = default;
    auto operator<=>(const YoungTableau&) const = default;
};

/// Entries exactly 1..n, rows and columns strictly increasing.
bool is_standard_young_tableau(const YoungTableau& t);
/// Entries >= min_label, rows weakly increasing, columns strictly increasing.
bool is_semistandard_young_tableau(const YoungTableau& t, int min_label);

enum class Orientation { Horizontal, Vertical };

/// One labeled domino; (row, col) is its top-left cell, 1-based, row 1 on top.
struct Domino {
    int row = 1;
    int col = 1;
    Orientation orient = Orientation::Horizontal;
    int label = 0;

    std::array<std::pair<int, int>, 2> cells() const {
        if (orient == Orientation::Horizontal)
            return {{{row, col}, {row, col + 1}}};
        return {{{row, col}, {row + 1, col}}};
    }
    int top_row() const { return row; }

    bool operator==(const Domino&) const = default;
    auto operator<=>(const Domino&) const = default;
};

enum class TableauKind { Standard, Semistandard };

/// Shape of 2n boxes tiled by n labeled dominoes. Canonical order of the
/// domino sequence is by label (ties by position for equal labels).
struct DominoTableau {
    std::vector<Domino> dominoes;
    Partition shape;
    TableauKind kind = TableauKind::Standard;

    int size() const { return static_cast<int>(dominoes.size()); }
    int vertical_count() const;

    bool operator==(const DominoTableau&) const = default;
    auto operator<=>(const DominoTableau&) const = default;
};

/// Sorts dominoes by (label, row, col) and fills in the shape field.
DominoTableau make_domino_tableau(std::vector<Domino> dominoes, TableauKind kind);

/// Full invariant check: exact tiling of the shape, label rules per kind,
/// including the rule that a vertical domino covering (1,1) is not labeled 0.
bool is_valid_domino_tableau(const DominoTableau& t);

/// Ordered pair of Young tableaux; t1 carries the negative side.
struct BiTableau {
    YoungTableau t1;
    YoungTableau t2;
    TableauKind kind = TableauKind::Standard;

    int size() const { return t1.size() + t2.size(); }

    bool operator==(const BiTableau&) const = default;
    auto operator<=>(const BiTableau&) const = default;
};

/// Standard: entries of t1 and t2 jointly are exactly 1..n. Semistandard:
/// entries >= 0 with zeroes only in t2.
bool is_valid_bitableau(const BiTableau& b);

/// Multiplicity vector (mu_0, mu_1, ...) of labels.
struct Weight {
    std::vector<int> multiplicities;
    bool operator==(const Weight&) const = default;
};

Weight weight_of(const DominoTableau& t);
Weight weight_of(const BiTableau& b);
Weight weight_of(const YoungTableau& t);

// -- Exhaustive enumerators ---------------------------------------------

std::vector<YoungTableau> enumerate_standard_young_tableaux(const Partition& shape);

/// Throws std::domain_error when the shape has no domino tiling.
std::vector<DominoTableau> enumerate_standard_domino_tableaux(const Partition& shape);

std::vector<YoungTableau> enumerate_semistandard_young_tableaux(const Partition& shape,
                                                                int min_label, int max_label);

/// Labels in {0..max_label} with the (1,1)-vertical-nonzero rule.
std::vector<DominoTableau> enumerate_semistandard_domino_tableaux(const Partition& shape,
                                                                  int max_label);

/// All standard bi-tableaux of the given bi-shape on 1..(|s1|+|s2|).
std::vector<BiTableau> enumerate_standard_bitableaux(const Partition& s1, const Partition& s2);

} // namespace bschur
