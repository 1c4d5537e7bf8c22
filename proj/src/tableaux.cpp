#include "bschur/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace bschur {

Partition YoungTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(parts);
}

int YoungTableau::size() const {
    int s = 0;
    for (const auto& r : rows) s += static_cast<int>(r.size());
    return s;
}

static bool rows_form_diagram(const YoungTableau& t) {
    for (size_t r = 0; r + 1 < t.rows.size(); ++r)
        if (t.rows[r].size() < t.rows[r + 1].size()) return false;
    return !t.rows.empty() ? !t.rows.back().empty() : true;
}

bool is_standard_young_tableau(const YoungTableau& t) {
    if (!rows_form_diagram(t)) return false;
    const int n = t.size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (const auto& row : t.rows)
        for (int v : row) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c + 1 < t.rows[r].size() && t.rows[r][c] >= t.rows[r][c + 1]) return false;
            if (r + 1 < t.rows.size() && c < t.rows[r + 1].size() &&
                t.rows[r][c] >= t.rows[r + 1][c])
                return false;
        }
    return true;
}

bool is_semistandard_young_tableau(const YoungTableau& t, int min_label) {
    if (!rows_form_diagram(t)) return false;
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t c = 0; c < t.rows[r].size(); ++c) {
            if (t.rows[r][c] < min_label) return false;
            if (c + 1 < t.rows[r].size() && t.rows[r][c] > t.rows[r][c + 1]) return false;
            if (r + 1 < t.rows.size() && c < t.rows[r + 1].size() &&
                t.rows[r][c] >= t.rows[r + 1][c])
                return false;
        }
    return true;
}

int DominoTableau::vertical_count() const {
    int c = 0;
    for (const auto& d : dominoes)
        if (d.orient == Orientation::Vertical) ++c;
    return c;
}

DominoTableau make_domino_tableau(std::vector<Domino> dominoes, TableauKind kind) {
    std::sort(dominoes.begin(), dominoes.end(), [](const Domino& a, const Domino& b) {
        return std::tie(a.label, a.row, a.col) < std::tie(b.label, b.row, b.col);
    });
    std::vector<int> row_len;
    for (const auto& d : dominoes)
        for (auto [r, c] : d.cells()) {
            if (static_cast<size_t>(r) > row_len.size()) row_len.resize(static_cast<size_t>(r), 0);
            row_len[static_cast<size_t>(r - 1)] = std::max(row_len[static_cast<size_t>(r - 1)], c);
        }
    DominoTableau t;
    t.dominoes = std::move(dominoes);
    t.shape = Partition(row_len);
    t.kind = kind;
    return t;
}

// Grid of domino indices; -1 marks uncovered. Returns false on overlap or
// out-of-shape cells.
static bool build_grid(const DominoTableau& t, std::vector<std::vector<int>>& grid) {
    const auto& shape = t.shape;
    grid.assign(static_cast<size_t>(shape.length()), {});
    for (int r = 0; r < shape.length(); ++r)
        grid[static_cast<size_t>(r)].assign(static_cast<size_t>(shape.part(r)), -1);
    for (size_t i = 0; i < t.dominoes.size(); ++i)
        for (auto [r, c] : t.dominoes[i].cells()) {
            if (r < 1 || r > shape.length() || c < 1 || c > shape.part(r - 1)) return false;
            int& slot = grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
            if (slot != -1) return false;
            slot = static_cast<int>(i);
        }
    for (const auto& row : grid)
        for (int v : row)
            if (v == -1) return false;
    return true;
}

bool is_valid_domino_tableau(const DominoTableau& t) {
    std::vector<std::vector<int>> grid;
    if (!build_grid(t, grid)) return false;
    const int n = t.size();
    const bool standard = t.kind == TableauKind::Standard;

    if (standard) {
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (const auto& d : t.dominoes) {
            if (d.label < 1 || d.label > n || seen[static_cast<size_t>(d.label)]) return false;
            seen[static_cast<size_t>(d.label)] = 1;
        }
    } else {
        for (const auto& d : t.dominoes)
            if (d.label < 0) return false;
        // A vertical covering (1,1) cannot be labeled 0.
        for (const auto& d : t.dominoes)
            if (d.row == 1 && d.col == 1 && d.orient == Orientation::Vertical && d.label == 0)
                return false;
    }

    auto label_at = [&](size_t r, size_t c) { return t.dominoes[static_cast<size_t>(grid[r][c])].label; };
    for (size_t r = 0; r < grid.size(); ++r)
        for (size_t c = 0; c < grid[r].size(); ++c) {
            if (c + 1 < grid[r].size() && grid[r][c] != grid[r][c + 1]) {
                if (standard ? label_at(r, c) >= label_at(r, c + 1)
                             : label_at(r, c) > label_at(r, c + 1))
                    return false;
            }
            if (r + 1 < grid.size() && c < grid[r + 1].size() && grid[r][c] != grid[r + 1][c]) {
                if (label_at(r, c) >= label_at(r + 1, c)) return false;
            }
        }
    return true;
}

bool is_valid_bitableau(const BiTableau& b) {
    if (b.kind == TableauKind::Standard) {
        if (!rows_form_diagram(b.t1) || !rows_form_diagram(b.t2)) return false;
        const int n = b.size();
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (const auto* t : {&b.t1, &b.t2})
            for (const auto& row : t->rows)
                for (int v : row) {
                    if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
                    seen[static_cast<size_t>(v)] = 1;
                }
        // Strictness within each tableau alone.
        auto strict = [](const YoungTableau& t) {
            for (size_t r = 0; r < t.rows.size(); ++r)
                for (size_t c = 0; c < t.rows[r].size(); ++c) {
                    if (c + 1 < t.rows[r].size() && t.rows[r][c] >= t.rows[r][c + 1]) return false;
                    if (r + 1 < t.rows.size() && c < t.rows[r + 1].size() &&
                        t.rows[r][c] >= t.rows[r + 1][c])
                        return false;
                }
            return true;
        };
        return strict(b.t1) && strict(b.t2);
    }
    if (!is_semistandard_young_tableau(b.t1, 1)) return false;  // zeroes only in t2
    return is_semistandard_young_tableau(b.t2, 0);
}

static Weight weight_from_labels(const std::vector<int>& labels) {
    Weight w;
    for (int l : labels) {
        if (static_cast<size_t>(l) >= w.multiplicities.size())
            w.multiplicities.resize(static_cast<size_t>(l) + 1, 0);
        ++w.multiplicities[static_cast<size_t>(l)];
    }
    while (!w.multiplicities.empty() && w.multiplicities.back() == 0) w.multiplicities.pop_back();
    return w;
}

Weight weight_of(const DominoTableau& t) {
    std::vector<int> labels;
    labels.reserve(t.dominoes.size());
    for (const auto& d : t.dominoes) labels.push_back(d.label);
    return weight_from_labels(labels);
}

Weight weight_of(const YoungTableau& t) {
    std::vector<int> labels;
    for (const auto& row : t.rows) labels.insert(labels.end(), row.begin(), row.end());
    return weight_from_labels(labels);
}

Weight weight_of(const BiTableau& b) {
    std::vector<int> labels;
    for (const auto* t : {&b.t1, &b.t2})
        for (const auto& row : t->rows) labels.insert(labels.end(), row.begin(), row.end());
    return weight_from_labels(labels);
}

std::vector<YoungTableau> enumerate_standard_young_tableaux(const Partition& shape) {
    std::vector<YoungTableau> out;
    const int n = shape.size();
    const int len = shape.length();
    std::vector<int> row_len(static_cast<size_t>(len), 0);
    YoungTableau t;
    t.rows.assign(static_cast<size_t>(len), {});

    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            YoungTableau done = t;
            while (!done.rows.empty() && done.rows.back().empty()) done.rows.pop_back();
            out.push_back(std::move(done));
            return;
        }
        for (int r = 0; r < len; ++r) {
            const int lr = row_len[static_cast<size_t>(r)];
            if (lr >= shape.part(r)) continue;
            if (r > 0 && row_len[static_cast<size_t>(r - 1)] <= lr) continue;
            t.rows[static_cast<size_t>(r)].push_back(v);
            ++row_len[static_cast<size_t>(r)];
            self(self, v + 1);
            --row_len[static_cast<size_t>(r)];
            t.rows[static_cast<size_t>(r)].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<DominoTableau> enumerate_standard_domino_tableaux(const Partition& shape) {
    if (!is_empty_two_core(shape))
        throw std::domain_error("enumerate_standard_domino_tableaux: shape " +
                                shape.to_string() + " has no domino tiling");
    std::vector<DominoTableau> out;
    const int n = shape.size() / 2;
    const int len = shape.length();
    std::vector<int> row_len(static_cast<size_t>(len), 0);
    std::vector<Domino> doms;

    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.push_back(make_domino_tableau(doms, TableauKind::Standard));
            return;
        }
        for (int r = 0; r < len; ++r) {
            const int lr = row_len[static_cast<size_t>(r)];
            // horizontal in row r+1
            if (lr + 2 <= shape.part(r) &&
                (r == 0 || row_len[static_cast<size_t>(r - 1)] >= lr + 2)) {
                doms.push_back({r + 1, lr + 1, Orientation::Horizontal, v});
                row_len[static_cast<size_t>(r)] += 2;
                self(self, v + 1);
                row_len[static_cast<size_t>(r)] -= 2;
                doms.pop_back();
            }
            // vertical across rows r+1, r+2
            if (r + 1 < len && lr == row_len[static_cast<size_t>(r + 1)] &&
                lr + 1 <= shape.part(r + 1) &&
                (r == 0 || row_len[static_cast<size_t>(r - 1)] >= lr + 1)) {
                doms.push_back({r + 1, lr + 1, Orientation::Vertical, v});
                ++row_len[static_cast<size_t>(r)];
                ++row_len[static_cast<size_t>(r + 1)];
                self(self, v + 1);
                --row_len[static_cast<size_t>(r)];
                --row_len[static_cast<size_t>(r + 1)];
                doms.pop_back();
            }
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<YoungTableau> enumerate_semistandard_young_tableaux(const Partition& shape,
                                                                int min_label, int max_label) {
    std::vector<YoungTableau> out;
    if (shape.empty()) {
        out.push_back(YoungTableau{});
        return out;
    }
    if (min_label > max_label) return out;
    const int len = shape.length();
    YoungTableau t;
    t.rows.assign(static_cast<size_t>(len), {});

    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == len) {
            out.push_back(t);
            return;
        }
        const auto [nr, nc] =
            (c + 1 < shape.part(r)) ? std::pair<int, int>{r, c + 1} : std::pair<int, int>{r + 1, 0};
        int lo = min_label;
        if (c > 0) lo = std::max(lo, t.rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, t.rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= max_label; ++v) {
            t.rows[static_cast<size_t>(r)].push_back(v);
            self(self, nr, nc);
            t.rows[static_cast<size_t>(r)].pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<DominoTableau> enumerate_semistandard_domino_tableaux(const Partition& shape,
                                                                  int max_label) {
    if (!is_empty_two_core(shape))
        throw std::domain_error("enumerate_semistandard_domino_tableaux: shape " +
                                shape.to_string() + " has no domino tiling");
    std::vector<DominoTableau> out;
    const int len = shape.length();
    std::vector<int> row_len(static_cast<size_t>(len), 0);
    std::vector<Domino> doms;
    const int total = shape.size();

    // Placement validity for the next domino of the running label class.
    // Same-label dominoes are column-disjoint and added left to right, so
    // cells above a new domino always carry strictly smaller labels.
    auto covered = [&]() {
        int s = 0;
        for (int l : row_len) s += l;
        return s;
    };

    auto place_class = [&](auto&& self_class, auto&& next_label, int label, int min_col) -> void {
        next_label(label + 1);
        // Left-to-right, column-disjoint growth within the class: the next
        // domino must start strictly right of the previous one.
        for (int r = 0; r < len; ++r) {
            const int lr = row_len[static_cast<size_t>(r)];
            // horizontal in row r+1 at columns lr+1, lr+2
            if (lr + 1 > min_col && lr + 2 <= shape.part(r) &&
                (r == 0 || row_len[static_cast<size_t>(r - 1)] >= lr + 2)) {
                doms.push_back({r + 1, lr + 1, Orientation::Horizontal, label});
                row_len[static_cast<size_t>(r)] += 2;
                self_class(self_class, next_label, label, lr + 2);
                row_len[static_cast<size_t>(r)] -= 2;
                doms.pop_back();
            }
            // vertical across rows r+1, r+2 at column lr+1
            if (r + 1 < len && lr + 1 > min_col && lr == row_len[static_cast<size_t>(r + 1)] &&
                lr + 1 <= shape.part(r + 1) &&
                (r == 0 || row_len[static_cast<size_t>(r - 1)] >= lr + 1) &&
                !(label == 0 && r == 0 && lr == 0)) {
                doms.push_back({r + 1, lr + 1, Orientation::Vertical, label});
                ++row_len[static_cast<size_t>(r)];
                ++row_len[static_cast<size_t>(r + 1)];
                self_class(self_class, next_label, label, lr + 1);
                --row_len[static_cast<size_t>(r)];
                --row_len[static_cast<size_t>(r + 1)];
                doms.pop_back();
            }
        }
    };

    auto rec = [&](auto&& self, int label) -> void {
        if (covered() == total) {
            out.push_back(make_domino_tableau(doms, TableauKind::Semistandard));
            return;
        }
        if (label > max_label) return;
        auto next = [&](int l) { self(self, l); };
        place_class(place_class, next, label, 0);
    };
    rec(rec, 0);
    return out;
}

std::vector<BiTableau> enumerate_standard_bitableaux(const Partition& s1, const Partition& s2) {
    const int n1 = s1.size();
    const int n = n1 + s2.size();
    auto base1 = enumerate_standard_young_tableaux(s1);
    auto base2 = enumerate_standard_young_tableaux(s2);

    auto relabel = [](const YoungTableau& t, const std::vector<int>& values) {
        YoungTableau r = t;
        for (auto& row : r.rows)
            for (auto& v : row) v = values[static_cast<size_t>(v - 1)];
        return r;
    };

    std::vector<BiTableau> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == n1) {
            std::vector<int> rest;
            std::vector<char> used(static_cast<size_t>(n) + 1, 0);
            for (int v : pick) used[static_cast<size_t>(v)] = 1;
            for (int v = 1; v <= n; ++v)
                if (!used[static_cast<size_t>(v)]) rest.push_back(v);
            for (const auto& a : base1)
                for (const auto& b : base2)
                    out.push_back(BiTableau{relabel(a, pick), relabel(b, rest),
                                            TableauKind::Standard});
            return;
        }
        for (int v = from; v <= n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace bschur
