#include "bschur/descents.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace bschur {

std::vector<int> DescentSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

DescentSet DescentSet::from_members(const std::vector<int>& members, int n) {
    DescentSet d;
    d.n = n;
    for (int i : members) {
        if (i < 0 || i >= n)
            throw std::invalid_argument("DescentSet: member out of range");
        d.add(i);
    }
    return d;
}

SignedDescentSet SignedDescentSet::make(std::vector<int> s, std::string eps, int n) {
    if (s.size() != eps.size() || s.empty() || s.back() != n)
        throw std::invalid_argument("SignedDescentSet: S must end with n and align with eps");
    SignedDescentSet sd;
    sd.s = std::move(s);
    sd.eps = std::move(eps);
    sd.n = n;
    sd.extended.assign(static_cast<size_t>(n), '+');
    int prev = 0;
    for (size_t i = 0; i < sd.s.size(); ++i) {
        for (int j = prev + 1; j <= sd.s[i]; ++j)
            sd.extended[static_cast<size_t>(j - 1)] = sd.eps[i];
        prev = sd.s[i];
    }
    return sd;
}

DescentSet des_b(const SignedPermutation& pi) {
    DescentSet d;
    d.n = pi.n();
    for (int i = 0; i < pi.n(); ++i)
        if (pi(i) > pi(i + 1)) d.add(i);
    return d;
}

// Rank in the order -1 < -2 < ... < -n < 0 < 1 < ... < n.
static int rank_r(int v, int n) {
    if (v < 0) return -v - 1;
    return n + v;
}

DescentSet des_r(const SignedPermutation& pi) {
    DescentSet d;
    const int n = pi.n();
    d.n = n;
    for (int i = 0; i < n; ++i)
        if (rank_r(pi(i), n) > rank_r(pi(i + 1), n)) d.add(i);
    return d;
}

SignedDescentSet sdes(const SignedPermutation& pi) {
    const int n = pi.n();
    std::vector<int> s;
    std::string eps;
    for (int i = 1; i < n; ++i) {
        bool member;
        if (pi(i) > 0)
            member = pi(i) > pi(i + 1);
        else
            member = pi(i + 1) > 0 || -pi(i) > std::abs(pi(i + 1));
        if (member) {
            s.push_back(i);
            eps.push_back(pi(i) > 0 ? '+' : '-');
        }
    }
    s.push_back(n);
    eps.push_back(pi(n) > 0 ? '+' : '-');
    return SignedDescentSet::make(std::move(s), std::move(eps), n);
}

DescentSet wdes(const SignedDescentSet& sd) {
    DescentSet d;
    d.n = sd.n;
    for (size_t i = 0; i < sd.s.size(); ++i) {
        const int s = sd.s[i];
        if (s == sd.n) continue;
        const char a = sd.extended_sign(s);
        const char b = sd.extended_sign(s + 1);
        if (!(a == '-' && b == '+')) d.add(s);
    }
    return d;
}

int neg_count(const SignedPermutation& pi) {
    int c = 0;
    for (int v : pi.window())
        if (v < 0) ++c;
    return c;
}

DescentSet des_syt(const YoungTableau& t) {
    const int n = t.size();
    std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (int v : t.rows[r]) row_of[static_cast<size_t>(v)] = static_cast<int>(r) + 1;
    DescentSet d;
    d.n = n;
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<size_t>(i + 1)] > row_of[static_cast<size_t>(i)]) d.add(i);
    return d;
}

DescentSet des_sdt(const DominoTableau& t) {
    const int n = t.size();
    std::vector<int> top(static_cast<size_t>(n) + 1, 0);
    bool first_vertical = false;
    for (const auto& d : t.dominoes) {
        top[static_cast<size_t>(d.label)] = d.top_row();
        if (d.label == 1 && d.orient == Orientation::Vertical) first_vertical = true;
    }
    DescentSet d;
    d.n = n;
    if (first_vertical) d.add(0);
    for (int i = 1; i < n; ++i)
        if (top[static_cast<size_t>(i + 1)] > top[static_cast<size_t>(i)]) d.add(i);
    return d;
}

// side 1/2 and row of every value of a standard bi-tableau.
static void locate(const BiTableau& b, std::vector<int>& side, std::vector<int>& row) {
    const int n = b.size();
    side.assign(static_cast<size_t>(n) + 1, 0);
    row.assign(static_cast<size_t>(n) + 1, 0);
    for (int which = 1; which <= 2; ++which) {
        const auto& t = which == 1 ? b.t1 : b.t2;
        for (size_t r = 0; r < t.rows.size(); ++r)
            for (int v : t.rows[r]) {
                side[static_cast<size_t>(v)] = which;
                row[static_cast<size_t>(v)] = static_cast<int>(r) + 1;
            }
    }
}

SignedDescentSet sdes_bitableau(const BiTableau& b) {
    const int n = b.size();
    std::vector<int> side, row;
    locate(b, side, row);
    std::vector<int> s;
    std::string eps;
    for (int i = 1; i < n; ++i) {
        const bool member = side[static_cast<size_t>(i)] != side[static_cast<size_t>(i + 1)] ||
                            row[static_cast<size_t>(i + 1)] > row[static_cast<size_t>(i)];
        if (member) {
            s.push_back(i);
            eps.push_back(side[static_cast<size_t>(i)] == 1 ? '-' : '+');
        }
    }
    s.push_back(n);
    eps.push_back(side[static_cast<size_t>(n)] == 1 ? '-' : '+');
    return SignedDescentSet::make(std::move(s), std::move(eps), n);
}

DescentSet des_r_bitableau(const BiTableau& b) {
    const int n = b.size();
    std::vector<int> side, row;
    locate(b, side, row);
    DescentSet d;
    d.n = n;
    if (n > 0 && side[1] == 1) d.add(0);
    for (int i = 1; i < n; ++i) {
        const auto si = side[static_cast<size_t>(i)];
        const auto sj = side[static_cast<size_t>(i + 1)];
        if (si == sj && row[static_cast<size_t>(i + 1)] > row[static_cast<size_t>(i)])
            d.add(i);
        else if (si == 2 && sj == 1)
            d.add(i);
    }
    return d;
}

DescentSet des_a(const std::vector<int>& window) {
    DescentSet d;
    d.n = static_cast<int>(window.size());
    for (size_t i = 0; i + 1 < window.size(); ++i)
        if (window[i] > window[i + 1]) d.add(static_cast<int>(i) + 1);
    return d;
}

} // namespace bschur
