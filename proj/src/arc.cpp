#include "bschur/arc.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "bschur/descents.hpp"

namespace bschur {

std::string to_string(ArcType t) {
    switch (t) {
        case ArcType::T1: return "T1";
        case ArcType::T2: return "T2";
        case ArcType::T3: return "T3";
        case ArcType::T4: return "T4";
        case ArcType::T5: return "T5";
        case ArcType::T6: return "T6";
    }
    return "?";
}

// Cyclic neighbours in {1..n} with n+1 = 1.
static int cyc_next(int x, int n) { return x % n + 1; }
static int cyc_prev(int x, int n) { return (x + n - 2) % n + 1; }

bool is_signed_arc(const SignedPermutation& pi) {
    const int n = pi.n();
    std::vector<char> in(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int v = pi(i);
        const int x = std::abs(v);
        const bool below = i > 1 && in[static_cast<size_t>(cyc_prev(x, n))];
        const bool above = i > 1 && in[static_cast<size_t>(cyc_next(x, n))];
        // The prefix before step i+1 must stay a cyclic interval.
        if (i >= 2 && i <= n - 1 && !below && !above) return false;
        if (below && !above && v < 0) return false;
        if (above && !below && v > 0) return false;
        in[static_cast<size_t>(x)] = 1;
    }
    return true;
}

bool is_signed_arc_by_patterns(const SignedPermutation& pi) {
    const int n = pi.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                const int a = std::abs(pi(i));
                const int b = std::abs(pi(j));
                const int c = std::abs(pi(k));
                const int ra = 1 + (a > b) + (a > c);
                const int rb = 1 + (b > a) + (b > c);
                const int rc = 1 + (c > a) + (c > b);
                if (pi(j) < 0) {
                    // [+-1,-2,+-3], [+-2,-3,+-1], [+-3,-1,+-2]
                    if ((ra == 1 && rb == 2 && rc == 3) || (ra == 2 && rb == 3 && rc == 1) ||
                        (ra == 3 && rb == 1 && rc == 2))
                        return false;
                } else {
                    // [+-1,3,+-2], [+-2,1,+-3], [+-3,2,+-1]
                    if ((ra == 1 && rb == 3 && rc == 2) || (ra == 2 && rb == 1 && rc == 3) ||
                        (ra == 3 && rb == 2 && rc == 1))
                        return false;
                }
            }
    return true;
}

bool is_arc_permutation(const std::vector<int>& window) {
    const int n = static_cast<int>(window.size());
    std::vector<char> in(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int x = window[static_cast<size_t>(i - 1)];
        if (i >= 2 && i <= n - 1 && !in[static_cast<size_t>(cyc_prev(x, n))] &&
            !in[static_cast<size_t>(cyc_next(x, n))])
            return false;
        in[static_cast<size_t>(x)] = 1;
    }
    return true;
}

// -- type templates -------------------------------------------------------

static std::vector<int> t1_template(int n, int k) {
    std::vector<int> w;
    for (int v = k; v <= n; ++v) w.push_back(v);
    for (int v = 1; v < k; ++v) w.push_back(v);
    return w;
}

static std::vector<int> t2_template(int n, int k) {
    std::vector<int> w;
    if (k >= 2) {
        for (int v = k - 1; v >= 1; --v) w.push_back(-v);
        for (int v = n; v >= k; --v) w.push_back(-v);
    } else {
        for (int v = n; v >= 1; --v) w.push_back(-v);
    }
    return w;
}

static std::vector<int> t3_neg(int k, int l) {
    std::vector<int> w;
    for (int v = k; v >= l + 1; --v) w.push_back(-v);
    return w;
}

static std::vector<int> t3_pos(int n, int k, int l) {
    std::vector<int> w;
    for (int v = k + 1; v <= n; ++v) w.push_back(v);
    for (int v = 1; v <= l; ++v) w.push_back(v);
    return w;
}

static std::vector<int> t4_neg(int n, int k, int l) {
    std::vector<int> w;
    for (int v = k; v >= 1; --v) w.push_back(-v);
    for (int v = n; v >= l + 1; --v) w.push_back(-v);
    return w;
}

static std::vector<int> range_seq(int lo, int hi) {
    std::vector<int> w;
    for (int v = lo; v <= hi; ++v) w.push_back(v);
    return w;
}

// Sign pattern of a type 3 permutation: presence of a negative entry before
// n, between n and 1, and after 1.
static int t3_pattern_of(const SignedPermutation& pi) {
    const int n = pi.n();
    int pos_n = 0, pos_1 = 0;
    for (int i = 1; i <= n; ++i) {
        if (pi(i) == n) pos_n = i;
        if (pi(i) == 1) pos_1 = i;
    }
    bool before = false, between = false, after = false;
    for (int i = 1; i <= n; ++i) {
        if (pi(i) >= 0) continue;
        if (i < pos_n)
            before = true;
        else if (i < pos_1)
            between = true;
        else
            after = true;
    }
    if (before) {
        if (between) return after ? 1 : 2;
        return after ? 3 : 4;
    }
    if (between) return after ? 5 : 6;
    return 7;
}

ArcClassification classify(const SignedPermutation& pi) {
    if (!is_signed_arc(pi))
        throw std::domain_error("classify: not a signed arc permutation");
    const int n = pi.n();
    std::vector<int> neg, pos;
    for (int i = 1; i <= n; ++i) (pi(i) < 0 ? neg : pos).push_back(pi(i));
    bool one_pos = false, n_pos = false;
    for (int i = 1; i <= n; ++i) {
        if (std::abs(pi(i)) == 1) one_pos = pi(i) > 0;
        if (std::abs(pi(i)) == n) n_pos = pi(i) > 0;
    }

    auto mismatch = [&]() {
        return std::logic_error("classify: no type template matches " + to_string(pi));
    };

    ArcClassification c;
    if (one_pos && n_pos) {
        if (neg.empty()) {
            c.type = ArcType::T1;
            c.k = pi(1);
            if (pi.window() != t1_template(n, c.k)) throw mismatch();
        } else {
            c.type = ArcType::T3;
            c.k = -neg.front();
            c.l = -neg.back() - 1;
            if (!(1 <= c.l && c.l < c.k && c.k < n)) throw mismatch();
            if (neg != t3_neg(c.k, c.l) || pos != t3_pos(n, c.k, c.l)) throw mismatch();
            c.pattern = t3_pattern_of(pi);
        }
    } else if (!one_pos && !n_pos) {
        if (pos.empty()) {
            c.type = ArcType::T2;
            c.k = -pi(n);
            if (pi.window() != t2_template(n, c.k)) throw mismatch();
        } else {
            c.type = ArcType::T4;
            c.k = -neg.front();
            c.l = -neg.back() - 1;
            if (!(1 <= c.k && c.k < c.l && c.l < n)) throw mismatch();
            if (neg != t4_neg(n, c.k, c.l) || pos != range_seq(c.k + 1, c.l)) throw mismatch();
        }
    } else if (!one_pos && n_pos) {
        c.type = ArcType::T5;
        c.k = -neg.front();
        if (neg != t3_neg(c.k, 0) || pos != range_seq(c.k + 1, n)) throw mismatch();
    } else {
        c.type = ArcType::T6;
        c.k = static_cast<int>(pos.size());
        std::vector<int> tneg;
        for (int v = n; v >= c.k + 1; --v) tneg.push_back(-v);
        if (neg != tneg || pos != range_seq(1, c.k)) throw mismatch();
    }
    return c;
}

// -- the four construction rules ------------------------------------------

namespace {

class DominoBuilder {
public:
    // horizontal at the end of the first row
    void rule1(int label) { place_h(0, label); }
    // horizontal at the end of the second row, or vertical across rows 1-2;
    // exactly one keeps a legal partial tiling
    void rule2(int label) {
        const bool can_h = row(0) >= row(1) + 2;
        const bool can_v = row(0) == row(1);
        if (can_h == can_v) throw std::logic_error("rule 2 placement not uniquely valid");
        if (can_h)
            place_h(1, label);
        else
            place_v(0, label);
    }
    // horizontal at the end of the third row, or vertical across rows 2-3
    void rule3(int label) {
        const bool can_h = row(1) >= row(2) + 2;
        const bool can_v = row(1) == row(2) && row(0) >= row(1) + 1;
        if (can_h == can_v) throw std::logic_error("rule 3 placement not uniquely valid");
        if (can_h)
            place_h(2, label);
        else
            place_v(1, label);
    }
    // vertical across rows 3-4
    void rule4(int label) {
        if (row(2) != row(3) || row(1) < row(2) + 1)
            throw std::logic_error("rule 4 placement invalid");
        place_v(2, label);
    }
    void vertical_12(int label) { place_v(0, label); }
    std::vector<Domino> take() { return std::move(doms_); }

private:
    int row(int r) const {
        return r < static_cast<int>(rows_.size()) ? rows_[static_cast<size_t>(r)] : 0;
    }
    void ensure(int r) {
        if (static_cast<int>(rows_.size()) <= r) rows_.resize(static_cast<size_t>(r) + 1, 0);
    }
    void place_h(int r, int label) {
        if (r > 0 && row(r - 1) < row(r) + 2)
            throw std::logic_error("horizontal placement breaks the diagram");
        ensure(r);
        doms_.push_back({r + 1, rows_[static_cast<size_t>(r)] + 1, Orientation::Horizontal, label});
        rows_[static_cast<size_t>(r)] += 2;
    }
    void place_v(int r, int label) {
        if (row(r) != row(r + 1) || (r > 0 && row(r - 1) < row(r) + 1))
            throw std::logic_error("vertical placement breaks the diagram");
        ensure(r + 1);
        doms_.push_back({r + 1, rows_[static_cast<size_t>(r)] + 1, Orientation::Vertical, label});
        ++rows_[static_cast<size_t>(r)];
        ++rows_[static_cast<size_t>(r + 1)];
    }
    std::vector<int> rows_;
    std::vector<Domino> doms_;
};

} // namespace

static std::vector<int> t5_exceptional(int n) {
    std::vector<int> w{-1};
    for (int v = 2; v <= n; ++v) w.push_back(v);
    return w;
}

static std::vector<int> t6_exceptional(int n) {
    std::vector<int> w{-n};
    for (int v = 1; v < n; ++v) w.push_back(v);
    return w;
}

DominoTableau arc_to_domino(const SignedPermutation& pi) {
    const ArcClassification cls = classify(pi);
    const int n = pi.n();
    DominoBuilder b;
    auto by_sign = [&](int i) {
        if (pi(i) > 0)
            b.rule1(i);
        else
            b.rule2(i);
    };

    switch (cls.type) {
        case ArcType::T5:
        case ArcType::T6: {
            const auto exceptional =
                cls.type == ArcType::T5 ? t5_exceptional(n) : t6_exceptional(n);
            if (pi.window() == exceptional) {
                for (int i = 1; i <= n; ++i) b.vertical_12(i);
            } else {
                for (int i = 1; i <= n; ++i) by_sign(i);
            }
            break;
        }
        case ArcType::T1: {
            for (int i = 1; i <= n; ++i) {
                if (cls.k != 1 && pi(i) == 1)
                    b.rule3(i);
                else
                    b.rule1(i);
            }
            break;
        }
        case ArcType::T2: {
            b.vertical_12(1);
            for (int i = 2; i <= n; ++i) {
                if (cls.k != 1 && pi(i) == -n)
                    b.rule4(i);
                else
                    b.rule1(i);
            }
            break;
        }
        case ArcType::T4: {
            // The analogues of type 5's exceptional element: -1 first and
            // (-1, -n) the only negatives. The generic rules would land on
            // the type 2 shape family, so these go to all verticals with
            // Rule 4 at -n, mirroring the type 5 special case.
            const bool exceptional = cls.k == 1 && cls.l == n - 1 && pi(1) == -1;
            for (int i = 1; i <= n; ++i) {
                if (pi(i) == -n && i > 1)
                    b.rule4(i);
                else if (exceptional)
                    b.rule2(i);
                else
                    by_sign(i);
            }
            break;
        }
        case ArcType::T3: {
            int pos_n = 0, i1 = 0;
            for (int i = 1; i <= n; ++i) {
                if (pi(i) == n) pos_n = i;
                if (pi(i) == 1) i1 = i;
            }
            int bpos = 0, apos = 0, a2pos = 0;
            for (int i = 1; i < pos_n; ++i)
                if (pi(i) < 0) bpos = i;
            for (int i = pos_n + 1; i <= n; ++i)
                if (pi(i) < 0) {
                    if (apos == 0)
                        apos = i;
                    else if (a2pos == 0)
                        a2pos = i;
                }
            std::map<int, int> exception;  // step -> rule
            switch (cls.pattern) {
                case 1: exception = {{bpos + 1, 2}, {apos, 3}}; break;
                case 2: exception = {{bpos + 1, 2}, {i1, 2}, {apos, 3}}; break;
                case 3: exception = {{i1, 2}, {apos, 3}}; break;
                case 4: exception = {{bpos + 1, 2}, {i1, 3}}; break;
                case 5: exception = {{apos, 3}, {a2pos, 3}}; break;
                case 6:
                    if (a2pos != 0 && a2pos < i1)
                        exception = {{apos, 3}, {a2pos, 3}, {i1, 2}};
                    else
                        exception = {{apos, 3}, {i1, 3}};
                    break;
                case 7: exception = {{i1, 2}, {apos, 3}}; break;
                default: throw std::logic_error("arc_to_domino: bad type 3 pattern");
            }
            for (int i = 1; i <= n; ++i) {
                auto it = exception.find(i);
                if (it == exception.end())
                    by_sign(i);
                else if (it->second == 2)
                    b.rule2(i);
                else
                    b.rule3(i);
            }
            break;
        }
    }
    return make_domino_tableau(b.take(), TableauKind::Standard);
}

// -- inverse map -----------------------------------------------------------

static bool is_r1type(const Domino& d) {
    return d.orient == Orientation::Horizontal && d.row == 1;
}
static bool is_r2type(const Domino& d) {
    return (d.orient == Orientation::Horizontal && d.row == 2) ||
           (d.orient == Orientation::Vertical && d.row == 1);
}

static SignedPermutation fill_by_signs(const std::vector<char>& neg_at,  // 1-based
                                       const std::vector<int>& neg, const std::vector<int>& pos) {
    std::vector<int> w;
    size_t in = 0, ip = 0;
    for (size_t i = 1; i < neg_at.size(); ++i) {
        if (neg_at[i]) {
            if (in >= neg.size()) throw std::logic_error("inverse: sign word mismatch");
            w.push_back(neg[in++]);
        } else {
            if (ip >= pos.size()) throw std::logic_error("inverse: sign word mismatch");
            w.push_back(pos[ip++]);
        }
    }
    if (in != neg.size() || ip != pos.size())
        throw std::logic_error("inverse: sign word mismatch");
    return SignedPermutation(w);
}

static SignedPermutation t56_inverse(const DominoTableau& t, ArcType which) {
    const int n = t.size();
    const bool all_vertical = t.vertical_count() == n;
    if (all_vertical)
        return SignedPermutation(which == ArcType::T5 ? t5_exceptional(n) : t6_exceptional(n));
    std::vector<char> neg_at(static_cast<size_t>(n) + 1, 0);
    int negs = 0;
    for (const auto& d : t.dominoes)
        if (!is_r1type(d)) {
            neg_at[static_cast<size_t>(d.label)] = 1;
            ++negs;
        }
    if (which == ArcType::T5)
        return fill_by_signs(neg_at, t3_neg(negs, 0), range_seq(negs + 1, n));
    const int k = n - negs;
    std::vector<int> neg;
    for (int v = n; v >= k + 1; --v) neg.push_back(-v);
    return fill_by_signs(neg_at, neg, range_seq(1, k));
}

static SignedPermutation t4_inverse(const DominoTableau& t) {
    const int n = t.size();
    int i0 = 0;
    for (const auto& d : t.dominoes)
        if (d.orient == Orientation::Vertical && d.row == 3) i0 = d.label;
    if (t.vertical_count() == n) {
        // exceptional branch: -1 first, positives 2..n-1 in order, -n at the
        // position of the rows-3-4 vertical
        std::vector<int> w{-1};
        int next = 2;
        for (int i = 2; i <= n; ++i) w.push_back(i == i0 ? -n : next++);
        return SignedPermutation(w);
    }
    int k = 0, after = 0;
    for (const auto& d : t.dominoes)
        if (is_r2type(d)) (d.label < i0 ? k : after) += 1;
    const int l = n - 1 - after;
    std::vector<char> neg_at(static_cast<size_t>(n) + 1, 0);
    for (const auto& d : t.dominoes)
        if (is_r2type(d)) neg_at[static_cast<size_t>(d.label)] = 1;
    neg_at[static_cast<size_t>(i0)] = 1;
    return fill_by_signs(neg_at, t4_neg(n, k, l), range_seq(k + 1, l));
}

static SignedPermutation t3_inverse(const DominoTableau& t) {
    const int n = t.size();
    std::vector<Domino> by_label(static_cast<size_t>(n) + 1);
    for (const auto& d : t.dominoes) by_label[static_cast<size_t>(d.label)] = d;
    auto r1 = [&](int i) { return is_r1type(by_label[static_cast<size_t>(i)]); };
    auto r2 = [&](int i) { return is_r2type(by_label[static_cast<size_t>(i)]); };

    std::vector<int> v23;
    int hrow3 = 0;
    for (const auto& d : t.dominoes) {
        if (d.orient == Orientation::Vertical && d.row == 2) v23.push_back(d.label);
        if (d.orient == Orientation::Horizontal && d.row == 3) hrow3 = d.label;
    }
    std::sort(v23.begin(), v23.end());

    std::vector<char> neg_at(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) neg_at[static_cast<size_t>(i)] = r2(i);
    int i1 = 0;

    if (v23.size() == 2) {
        const int j1 = v23[0], j2 = v23[1];
        bool pattern5;
        if (j2 != j1 + 1) {
            pattern5 = true;
        } else {
            // Pattern 5 exactly when some Rule-2 domino follows a Rule-1
            // domino among the labels after the two verticals.
            int last_r2 = 0, first_r1 = n + 1;
            for (int i = j2 + 1; i <= n; ++i) {
                if (r2(i)) last_r2 = std::max(last_r2, i);
                if (r1(i)) first_r1 = std::min(first_r1, i);
            }
            pattern5 = last_r2 > first_r1;
        }
        neg_at[static_cast<size_t>(j1)] = 1;
        neg_at[static_cast<size_t>(j2)] = 1;
        if (pattern5) {
            const int start = (j2 == j1 + 1) ? j2 : j1;
            for (int i = start + 1; i <= n && i1 == 0; ++i)
                if (r1(i)) i1 = i;
        } else {
            int last_r2 = 0;
            for (int i = 1; i <= n; ++i)
                if (r2(i)) last_r2 = i;
            i1 = last_r2 > 0 ? last_r2 : j2;
            neg_at[static_cast<size_t>(i1)] = 0;
        }
    } else {
        const int i0 = hrow3;
        int cnt = 0, jmax = 0;
        for (int x = 1; x <= i0; ++x)
            if (r2(x)) {
                ++cnt;
                jmax = x;
            }
        if (cnt == 1 || r1(jmax - 1)) {
            // patterns 7 and 3 share the reconstruction: the greatest Rule-2
            // domino of T' is the entry 1, the row-3 horizontal the first
            // negative after n
            neg_at[static_cast<size_t>(i0)] = 1;
            i1 = jmax;
            neg_at[static_cast<size_t>(i1)] = 0;
        } else {
            bool r2_after = false;
            for (int x = i0 + 1; x <= n; ++x)
                if (r2(x)) r2_after = true;
            if (!r2_after) {
                // pattern 4: the row-3 horizontal is the entry 1
                i1 = i0;
                neg_at[static_cast<size_t>(jmax)] = 0;  // the b+1 exception
            } else {
                bool suffix_descent = false;
                for (int x = i0 + 1; x < n; ++x)
                    if (by_label[static_cast<size_t>(x + 1)].top_row() >
                        by_label[static_cast<size_t>(x)].top_row())
                        suffix_descent = true;
                neg_at[static_cast<size_t>(i0)] = 1;
                neg_at[static_cast<size_t>(jmax)] = 0;  // the b+1 exception
                if (suffix_descent) {
                    // pattern 1: the entry 1 is the first Rule-1 domino after a
                    for (int x = i0 + 1; x <= n && i1 == 0; ++x)
                        if (r1(x)) i1 = x;
                } else {
                    // pattern 2: the entry 1 is the greatest Rule-2 domino
                    for (int x = 1; x <= n; ++x)
                        if (r2(x)) i1 = x;
                    neg_at[static_cast<size_t>(i1)] = 0;
                }
            }
        }
    }
    if (i1 == 0) throw std::logic_error("t3_inverse: failed to locate the entry 1");

    int before = 0, after = 0;
    for (int x = 1; x <= n; ++x)
        if (!neg_at[static_cast<size_t>(x)]) (x < i1 ? before : after) += 1;
    --after;  // the entry 1 itself
    const int k = n - before;
    const int l = after + 1;
    return fill_by_signs(neg_at, t3_neg(k, l), t3_pos(n, k, l));
}

SignedPermutation domino_to_arc(const DominoTableau& t, std::optional<ArcType> which) {
    if (t.kind != TableauKind::Standard || !is_valid_domino_tableau(t))
        throw std::domain_error("domino_to_arc: not a valid standard domino tableau");
    const int n = t.size();
    const Partition& sh = t.shape;
    const int len = sh.length();

    if (len == 1) return SignedPermutation(t1_template(n, 1));
    if (len == 2 && sh.part(1) == 1) return SignedPermutation(t2_template(n, 1));
    if (len == 2) {
        if (!which || (*which != ArcType::T5 && *which != ArcType::T6))
            throw std::domain_error("domino_to_arc: shape " + sh.to_string() +
                                    " needs a T5/T6 tag");
        return t56_inverse(t, *which);
    }
    if (len == 3 && sh.part(1) == 1 && sh.part(2) == 1) {
        int i0 = 0;
        for (const auto& d : t.dominoes)
            if (d.orient == Orientation::Vertical && d.row == 2) i0 = d.label;
        return SignedPermutation(t1_template(n, n - i0 + 2));
    }
    if (len == 3 && sh.part(2) == 2) return t3_inverse(t);
    if (len == 4 && sh.part(1) == 1 && sh.part(2) == 1 && sh.part(3) == 1) {
        int i0 = 0;
        for (const auto& d : t.dominoes)
            if (d.orient == Orientation::Vertical && d.row == 3) i0 = d.label;
        return SignedPermutation(t2_template(n, i0));
    }
    if (len == 4 && sh.part(2) == 1 && sh.part(3) == 1) return t4_inverse(t);
    throw std::domain_error("domino_to_arc: shape " + sh.to_string() +
                            " is outside the seven template families");
}

SignedPermutation phi1(const SignedPermutation& pi) {
    const int n = pi.n();
    std::vector<int> negpos;
    for (int i = 1; i <= n; ++i)
        if (pi(i) < 0) negpos.push_back(i);
    std::sort(negpos.begin(), negpos.end(), [&](int a, int b) { return pi(a) < pi(b); });
    std::vector<int> w = pi.window();
    const size_t cnt = negpos.size();
    for (size_t k = 0; k < cnt; ++k)
        w[static_cast<size_t>(negpos[k] - 1)] = pi(negpos[cnt - 1 - k]);
    return SignedPermutation(w);
}

BiTableau phi2(const SignedPermutation& pi) {
    if (!is_signed_arc(phi1(pi)))
        throw std::domain_error("phi2: input is not the phi1 image of a signed arc permutation");
    const int n = pi.n();
    YoungTableau t1, t2;
    auto append = [](YoungTableau& t, size_t row, int label) {
        while (t.rows.size() <= row) t.rows.push_back({});
        t.rows[row].push_back(label);
    };
    bool seen_pos_n = false, seen_neg_n = false;
    for (int i = 1; i <= n; ++i) {
        const int v = pi(i);
        if (v > 1)
            append(t2, 0, i);
        else if (v < -1)
            append(t1, 0, i);
        else if (v == 1)
            append(t2, seen_pos_n ? 1 : 0, i);
        else
            append(t1, seen_neg_n ? 1 : 0, i);
        if (v == n) seen_pos_n = true;
        if (v == -n) seen_neg_n = true;
    }
    BiTableau b{t1, t2, TableauKind::Standard};
    if (!is_valid_bitableau(b))
        throw std::logic_error("phi2: produced an invalid bi-tableau");
    return b;
}

} // namespace bschur
