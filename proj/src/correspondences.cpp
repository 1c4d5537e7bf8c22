#include "bschur/correspondences.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "bschur/descents.hpp"

namespace bschur {

std::pair<YoungTableau, YoungTableau> rs_insert(const std::vector<int>& word,
                                                const std::vector<int>& recording) {
    if (word.size() != recording.size())
        throw std::invalid_argument("rs_insert: word and recording lengths differ");
    {
        std::set<int> letters(word.begin(), word.end());
        if (letters.size() != word.size())
            throw std::invalid_argument("rs_insert: duplicate letters");
    }
    YoungTableau p, q;
    for (size_t step = 0; step < word.size(); ++step) {
        int v = word[step];
        size_t r = 0;
        while (true) {
            if (r == p.rows.size()) {
                p.rows.push_back({v});
                if (r == q.rows.size()) q.rows.push_back({});
                q.rows[r].push_back(recording[step]);
                break;
            }
            auto& row = p.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), v);
            if (it == row.end()) {
                row.push_back(v);
                q.rows[r].push_back(recording[step]);
                break;
            }
            std::swap(v, *it);
            ++r;
        }
    }
    return {p, q};
}

std::pair<YoungTableau, YoungTableau> rs_insert(const std::vector<int>& word) {
    std::vector<int> rec(word.size());
    for (size_t i = 0; i < rec.size(); ++i) rec[i] = static_cast<int>(i) + 1;
    return rs_insert(word, rec);
}

std::pair<BiTableau, BiTableau> bi_rs(const SignedPermutation& pi) {
    std::vector<int> neg_word, neg_pos, pos_word, pos_pos;
    for (int i = 1; i <= pi.n(); ++i) {
        if (pi(i) < 0) {
            neg_word.push_back(-pi(i));
            neg_pos.push_back(i);
        } else {
            pos_word.push_back(pi(i));
            pos_pos.push_back(i);
        }
    }
    auto [p1, q1] = rs_insert(neg_word, neg_pos);
    auto [p2, q2] = rs_insert(pos_word, pos_pos);
    return {BiTableau{p1, p2, TableauKind::Standard}, BiTableau{q1, q2, TableauKind::Standard}};
}

// '-' iff row+col is even (so the (1,1) box is '-').
static bool top_right_box_is_minus(const Domino& d) {
    if (d.orient == Orientation::Horizontal) return (d.row + d.col + 1) % 2 == 0;
    return (d.row + d.col) % 2 == 0;
}

// Adds the single cell of next/cur to the tableau with the given label.
// Returns (side, row, col) of the added cell, 1-based; side 0 = minus.
static std::array<int, 3> quotient_growth(const Partition& cur, const Partition& next) {
    auto [cm, cp] = two_quotient(cur);
    auto [nm, np] = two_quotient(next);
    for (int side = 0; side < 2; ++side) {
        const Partition& a = side == 0 ? cm : cp;
        const Partition& b = side == 0 ? nm : np;
        if (a == b) continue;
        for (int r = 0; r < b.length(); ++r)
            if (b.part(r) != a.part(r)) return {side, r + 1, b.part(r)};
    }
    throw std::logic_error("quotient_growth: shapes do not differ by one cell");
}

BiTableau littlewood(const DominoTableau& t) {
    auto doms = t.dominoes;
    std::sort(doms.begin(), doms.end(), [](const Domino& a, const Domino& b) {
        return std::tie(a.label, a.col, a.row) < std::tie(b.label, b.col, b.row);
    });

    std::vector<int> row_len;
    YoungTableau t1, t2;
    Partition cur;
    for (const auto& d : doms) {
        for (auto [r, c] : d.cells()) {
            if (static_cast<size_t>(r) > row_len.size()) row_len.resize(static_cast<size_t>(r), 0);
            row_len[static_cast<size_t>(r - 1)] = std::max(row_len[static_cast<size_t>(r - 1)], c);
        }
        Partition next(row_len);
        auto [side, r, c] = quotient_growth(cur, next);
        if ((side == 0) != top_right_box_is_minus(d))
            throw std::logic_error("littlewood: quotient growth disagrees with sign colouring");
        YoungTableau& target = side == 0 ? t1 : t2;
        if (static_cast<size_t>(r) > target.rows.size()) target.rows.push_back({});
        target.rows[static_cast<size_t>(r - 1)].push_back(d.label);
        if (static_cast<int>(target.rows[static_cast<size_t>(r - 1)].size()) != c)
            throw std::logic_error("littlewood: non-contiguous quotient growth");
        cur = next;
    }
    return BiTableau{t1, t2, t.kind};
}

namespace {

struct QuotientCell {
    int side;  // 0 = t1, 1 = t2
    int row, col;
};

struct GrowthState {
    Partition q1, q2;   // current quotient pair
    Partition shape;    // current domino-tableau shape
    std::vector<Domino> doms;
    std::vector<std::pair<int, std::vector<QuotientCell>>> classes;  // by label
    bool standard = true;

    int label_at(int r, int c) const {
        for (const auto& d : doms)
            for (auto [dr, dc] : d.cells())
                if (dr == r && dc == c) return d.label;
        return -1;
    }
};

bool quotient_cell_addable(const Partition& q, int r, int c) {
    return q.part(r - 1) == c - 1 && (r == 1 || q.part(r - 2) >= c);
}

Partition with_cell(const Partition& q, int r) {
    auto parts = q.parts();
    if (static_cast<size_t>(r) > parts.size()) parts.resize(static_cast<size_t>(r), 0);
    ++parts[static_cast<size_t>(r - 1)];
    return Partition(parts);
}

// Between equal labels the sign rule and semistandardness can admit more
// than one placement at a single step, so the growth searches over the
// admissible orders; the forward map stays the specification and the found
// tableau is checked against it.
bool grow(GrowthState& st, size_t class_idx, std::vector<char>& used, size_t placed,
          const BiTableau& target) {
    if (class_idx == st.classes.size()) {
        const DominoTableau t = make_domino_tableau(st.doms, target.kind);
        return littlewood(t) == target;
    }
    const auto& [label, cells] = st.classes[class_idx];
    if (placed == cells.size()) {
        std::vector<char> fresh_used;
        if (class_idx + 1 < st.classes.size())
            fresh_used.assign(st.classes[class_idx + 1].second.size(), 0);
        return grow(st, class_idx + 1, fresh_used, 0, target);
    }

    // Candidate growths at this step, smallest column first, verticals
    // before horizontals on ties.
    std::vector<std::pair<Domino, size_t>> candidates;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (used[i]) continue;
        const auto& cell = cells[i];
        const Partition& q = cell.side == 0 ? st.q1 : st.q2;
        if (!quotient_cell_addable(q, cell.row, cell.col)) continue;
        const Partition nq = with_cell(q, cell.row);
        const Partition next_shape =
            cell.side == 0 ? quotient_to_shape(nq, st.q2) : quotient_to_shape(st.q1, nq);
        std::vector<std::pair<int, int>> fresh;
        for (int r = 0; r < next_shape.length(); ++r)
            for (int c = st.shape.part(r); c < next_shape.part(r); ++c)
                fresh.emplace_back(r + 1, c + 1);
        if (fresh.size() != 2) continue;
        Domino d;
        d.label = label;
        if (fresh[0].first == fresh[1].first) {
            if (std::abs(fresh[0].second - fresh[1].second) != 1) continue;
            d.row = fresh[0].first;
            d.col = std::min(fresh[0].second, fresh[1].second);
            d.orient = Orientation::Horizontal;
        } else {
            if (fresh[0].second != fresh[1].second ||
                std::abs(fresh[0].first - fresh[1].first) != 1)
                continue;
            d.row = std::min(fresh[0].first, fresh[1].first);
            d.col = fresh[0].second;
            d.orient = Orientation::Vertical;
        }
        if (top_right_box_is_minus(d) != (cell.side == 0)) continue;
        if (!st.standard && label == 0 && d.row == 1 && d.col == 1 &&
            d.orient == Orientation::Vertical)
            continue;
        bool ok = true;
        for (auto [r, c] : d.cells()) {
            const int above = r > 1 ? st.label_at(r - 1, c) : -1;
            if (above != -1 && above >= label) {
                ok = false;
                break;
            }
            const int left = c > 1 ? st.label_at(r, c - 1) : -1;
            if (left != -1 && left > label) {
                ok = false;
                break;
            }
        }
        if (ok) candidates.emplace_back(d, i);
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return std::tuple(a.first.col, a.first.orient != Orientation::Vertical, a.first.row) <
               std::tuple(b.first.col, b.first.orient != Orientation::Vertical, b.first.row);
    });

    for (const auto& [d, i] : candidates) {
        const auto& cell = cells[i];
        const Partition save_q1 = st.q1, save_q2 = st.q2, save_shape = st.shape;
        if (cell.side == 0)
            st.q1 = with_cell(st.q1, cell.row);
        else
            st.q2 = with_cell(st.q2, cell.row);
        st.shape = quotient_to_shape(st.q1, st.q2);
        st.doms.push_back(d);
        used[i] = 1;
        if (grow(st, class_idx, used, placed + 1, target)) return true;
        used[i] = 0;
        st.doms.pop_back();
        st.q1 = save_q1;
        st.q2 = save_q2;
        st.shape = save_shape;
    }
    return false;
}

} // namespace

DominoTableau littlewood_inverse(const BiTableau& b) {
    if (!is_valid_bitableau(b))
        throw std::invalid_argument("littlewood_inverse: invalid bi-tableau");

    std::map<int, std::vector<QuotientCell>> by_label;
    for (int side = 0; side < 2; ++side) {
        const auto& t = side == 0 ? b.t1 : b.t2;
        for (size_t r = 0; r < t.rows.size(); ++r)
            for (size_t c = 0; c < t.rows[r].size(); ++c)
                by_label[t.rows[r][c]].push_back(
                    {side, static_cast<int>(r) + 1, static_cast<int>(c) + 1});
    }

    GrowthState st;
    st.standard = b.kind == TableauKind::Standard;
    for (auto& [label, cells] : by_label) st.classes.emplace_back(label, std::move(cells));

    std::vector<char> used;
    if (!st.classes.empty()) used.assign(st.classes.front().second.size(), 0);
    if (!grow(st, 0, used, 0, b))
        throw std::invalid_argument(
            "littlewood_inverse: no valid domino placement (invalid bi-tableau)");
    return make_domino_tableau(std::move(st.doms), b.kind);
}

std::vector<std::pair<BiTableau, DominoTableau>> phi3_table(const Partition& lambda) {
    const auto [minus, plus] = two_quotient(lambda);
    auto bis = enumerate_standard_bitableaux(minus, plus);
    auto doms = enumerate_standard_domino_tableaux(lambda);

    std::map<std::uint32_t, std::vector<BiTableau>> bi_groups;
    for (auto& b : bis) bi_groups[des_r_bitableau(b).bits].push_back(std::move(b));
    std::map<std::uint32_t, std::vector<DominoTableau>> dom_groups;
    for (auto& d : doms) dom_groups[des_sdt(d).bits].push_back(std::move(d));

    auto key_string = [&](std::uint32_t bits) {
        DescentSet d;
        d.bits = bits;
        d.n = lambda.size() / 2;
        std::string s = "{";
        for (int v : d.members()) s += std::to_string(v) + ",";
        if (s.size() > 1) s.pop_back();
        return s + "}";
    };

    std::vector<std::pair<BiTableau, DominoTableau>> out;
    for (auto& [bits, group] : bi_groups) {
        auto it = dom_groups.find(bits);
        if (it == dom_groups.end() || it->second.size() != group.size())
            throw std::logic_error("lemma violation: descent multisets differ for shape " +
                                   lambda.to_string() + " at descent set " + key_string(bits));
        std::sort(group.begin(), group.end());
        std::sort(it->second.begin(), it->second.end());
        for (size_t i = 0; i < group.size(); ++i)
            out.emplace_back(std::move(group[i]), std::move(it->second[i]));
    }
    size_t total = 0;
    for (const auto& [bits, group] : dom_groups) total += group.size();
    if (total != out.size())
        throw std::logic_error("lemma violation: descent multisets differ for shape " +
                               lambda.to_string());
    return out;
}

} // namespace bschur
