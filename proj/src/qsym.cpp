#include "bschur/qsym.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bschur {

// Sum over chains lo_first <= i_1 <= ... <= i_n <= m with i_{j+1} strictly
// greater when j is in strict_at; exps[i_j] accumulate into monomials.
static void chain_sum(QPoly& out, int n, int m, int first_lo, const DescentSet& strict_at) {
    if (n == 0) {
        out += QPoly::one(m + 1);
        return;
    }
    QPoly::Exponents exps(static_cast<size_t>(m) + 1, 0);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos > n) {
            out.add_term(exps, 1);
            return;
        }
        for (int v = lo; v <= m; ++v) {
            ++exps[static_cast<size_t>(v)];
            self(self, pos + 1, v + (pos < n && strict_at.contains(pos) ? 1 : 0));
            --exps[static_cast<size_t>(v)];
        }
    };
    rec(rec, 1, first_lo);
}

QPoly fundamental_f(const DescentSet& i_set, int n, int m) {
    if (i_set.contains(0))
        throw std::invalid_argument("fundamental_f: 0 is not a valid member of I");
    QPoly out(m + 1);
    chain_sum(out, n, m, 1, i_set);
    return out;
}

QPoly chow_f(const DescentSet& i_set, int n, int m) {
    QPoly out(m + 1);
    chain_sum(out, n, m, i_set.contains(0) ? 1 : 0, i_set);
    return out;
}

QPoly poirier_f(const SignedDescentSet& sd, int m) {
    const int n = sd.n;
    if (n == 0) return QPoly::one(m + 1);
    QPoly out(m + 1);
    const DescentSet w = wdes(sd);
    // The two substituted alphabets interleave into one total order,
    //   x_0 < x_1^* < x_1 < x_2^* < x_2 < ...,
    // where a '-' position draws from the starred copy (x_a^*, a >= 1) and
    // a '+' position from the plain copy (x_a, a >= 0). Encode x_a^* as
    // rank 2a and x_a as rank 2a+1; letters weakly increase in rank,
    // strictly at wDes positions.
    QPoly::Exponents exps(static_cast<size_t>(m) + 1, 0);
    auto rec = [&](auto&& self, int pos, int lo_rank) -> void {
        if (pos > n) {
            out.add_term(exps, 1);
            return;
        }
        const bool minus = sd.extended_sign(pos) == '-';
        for (int a = minus ? 1 : 0; a <= m; ++a) {
            const int rank = 2 * a + (minus ? 0 : 1);
            if (rank < lo_rank) continue;
            ++exps[static_cast<size_t>(a)];
            self(self, pos + 1, rank + (pos < n && w.contains(pos) ? 1 : 0));
            --exps[static_cast<size_t>(a)];
        }
    };
    rec(rec, 1, 0);
    return out;
}

QPoly schur(const Partition& lambda, int m, bool include_x0) {
    QPoly out(m + 1);
    const int min_label = include_x0 ? 0 : 1;
    for (const auto& t : enumerate_semistandard_young_tableaux(lambda, min_label, m)) {
        QPoly::Exponents exps(static_cast<size_t>(m) + 1, 0);
        for (const auto& row : t.rows)
            for (int v : row) ++exps[static_cast<size_t>(v)];
        out.add_term(exps, 1);
    }
    return out;
}

QPoly domino_function(const Partition& lambda, int m) {
    QPoly out(m + 1);
    for (const auto& t : enumerate_semistandard_domino_tableaux(lambda, m)) {
        QPoly::Exponents exps(static_cast<size_t>(m) + 1, 0);
        for (const auto& d : t.dominoes) ++exps[static_cast<size_t>(d.label)];
        out.add_term(exps, 1);
    }
    return out;
}

QPoly type_b_schur(const Partition& rho, int n, int m) {
    if (rho.size() > n)
        throw std::domain_error("type_b_schur: |rho| exceeds n");
    QPoly::Exponents x0(static_cast<size_t>(m) + 1, 0);
    x0[0] = n - rho.size();
    return QPoly::monomial(x0, 1, m + 1) * schur(rho, m, false);
}

long long lr_coefficient(const Partition& rho, const Partition& alpha, const Partition& nu) {
    if (rho.size() != alpha.size() + nu.size()) return 0;
    if (!rho.contains(alpha)) return 0;
    if (nu.empty()) return 1;  // rho == alpha here

    // Fill the skew cells of rho/alpha in reverse reading order (rows top to
    // bottom, right to left within a row); the lattice condition is checked
    // on prefixes as values are placed.
    const int rows = rho.length();
    const int values = nu.length();
    std::vector<std::pair<int, int>> order;  // 0-based (row, col)
    for (int r = 0; r < rows; ++r)
        for (int c = rho.part(r) - 1; c >= alpha.part(r); --c) order.emplace_back(r, c);

    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        fill[static_cast<size_t>(r)].assign(static_cast<size_t>(rho.part(r)), 0);
    std::vector<int> count(static_cast<size_t>(values) + 1, 0);

    long long total = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == order.size()) {
            ++total;
            return;
        }
        const auto [r, c] = order[idx];
        for (int v = 1; v <= values; ++v) {
            if (count[static_cast<size_t>(v)] >= nu.part(v - 1)) continue;
            if (v >= 2 && count[static_cast<size_t>(v)] + 1 > count[static_cast<size_t>(v - 1)])
                continue;  // lattice
            // weakly increasing along the row, left to right
            if (c + 1 < rho.part(r) && v > fill[static_cast<size_t>(r)][static_cast<size_t>(c + 1)])
                continue;
            // strictly increasing down the column (cells of alpha unconstrained)
            if (r > 0 && c >= alpha.part(r - 1) &&
                v <= fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)])
                continue;
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++count[static_cast<size_t>(v)];
            rec(idx + 1);
            --count[static_cast<size_t>(v)];
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
    };
    rec(0);
    return total;
}

QPoly sb_expansion_to_poly(const SBExpansion& e, int m) {
    QPoly out(m + 1);
    for (const auto& [rho, c] : e.coefficients)
        out += type_b_schur(rho, e.n, m) * c;
    return out;
}

SBExpansion g_in_sb(const Partition& lambda) {
    const auto [minus, plus] = two_quotient(lambda);
    const int n = lambda.size() / 2;
    SBExpansion out;
    out.n = n;

    // All nu with lambda^+/nu a horizontal strip: interlacing choice per row.
    std::vector<Partition> strips;
    {
        std::vector<int> nu(static_cast<size_t>(plus.length()), 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == plus.length()) {
                strips.push_back(Partition(nu));
                return;
            }
            const int lo = plus.part(i + 1);
            const int hi = plus.part(i);
            for (int v = lo; v <= hi; ++v) {
                // keep nu weakly decreasing
                if (i > 0 && v > nu[static_cast<size_t>(i - 1)]) continue;
                nu[static_cast<size_t>(i)] = v;
                self(self, i + 1);
            }
            nu[static_cast<size_t>(i)] = 0;
        };
        rec(rec, 0);
    }

    for (const auto& nu : strips) {
        const int d = minus.size() + nu.size();
        for (const auto& rho : enumerate_partitions(d)) {
            const long long k = lr_coefficient(rho, minus, nu);
            if (k != 0) out.coefficients[rho] += k;
        }
    }
    for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
        it = it->second == 0 ? out.coefficients.erase(it) : std::next(it);
    return out;
}

std::map<Partition, long long> schur_decompose_xstar(QPoly q) {
    std::map<Partition, long long> out;
    const int m = q.num_vars() - 1;
    while (!q.is_zero()) {
        // Lexicographically largest exponent vector; x_0 must be unused.
        const auto& [exps, coef] = *q.terms().rbegin();
        if (exps[0] != 0)
            throw std::domain_error("schur_decompose_xstar: polynomial uses x_0");
        std::vector<int> lead(exps.begin() + 1, exps.end());
        for (size_t i = 0; i + 1 < lead.size(); ++i)
            if (lead[i] < lead[i + 1])
                throw std::domain_error("schur_decompose_xstar: not symmetric in x_1..x_m");
        const Partition mu{std::vector<int>(lead.begin(), lead.end())};
        const long long c = coef;
        out[mu] += c;
        q -= schur(mu, m, false) * c;
    }
    return out;
}

SBExpansion decompose_lambda_b(const QPoly& p, int n) {
    const int m = p.num_vars() - 1;
    if (m < n)
        throw std::invalid_argument("decompose_lambda_b: need at least n+1 variables");
    if (!p.is_zero() && p.degree() != n)
        throw std::invalid_argument("decompose_lambda_b: polynomial degree differs from n");

    // Split by the x_0 exponent.
    std::map<int, QPoly> groups;
    for (const auto& [exps, coef] : p.terms()) {
        auto stripped = exps;
        const int k = stripped[0];
        stripped[0] = 0;
        groups.emplace(k, QPoly(m + 1)).first->second.add_term(stripped, coef);
    }

    SBExpansion out;
    out.n = n;
    for (auto& [k, q] : groups) {
        std::map<Partition, long long> part;
        try {
            part = schur_decompose_xstar(std::move(q));
        } catch (const std::domain_error&) {
            throw std::domain_error("not in Lambda^B_n: x_0^" + std::to_string(k) +
                                    " group is not symmetric in x_1..x_m");
        }
        for (const auto& [rho, c] : part) {
            if (rho.size() != n - k)
                throw std::logic_error("decompose_lambda_b: degree bookkeeping failed");
            out.coefficients[rho] += c;
        }
    }
    return out;
}

QPoly qsym_of_set(const std::vector<DescentSet>& descents, int n, int m) {
    QPoly out(m + 1);
    for (const auto& d : descents) out += chow_f(d, n, m);
    return out;
}

} // namespace bschur
