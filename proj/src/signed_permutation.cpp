#include "bschur/signed_permutation.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bschur {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = static_cast<int>(window_.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : window_) {
        const int a = std::abs(v);
        if (a == 0 || a > n || seen[static_cast<size_t>(a)])
            throw std::invalid_argument("SignedPermutation: window is not a signed permutation");
        seen[static_cast<size_t>(a)] = 1;
    }
}

SignedPermutation parse_signed_permutation(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            tokens.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty() || !tokens.empty()) tokens.push_back(cur);

    std::vector<int> window;
    std::vector<char> seen(tokens.size() + 1, 0);
    for (const auto& tok : tokens) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse error: malformed token \"" + tok + "\"");
        }
        if (pos != tok.size())
            throw std::invalid_argument("parse error: malformed token \"" + tok + "\"");
        if (value == 0)
            throw std::invalid_argument("parse error: value 0 in token \"" + tok + "\"");
        const int a = std::abs(value);
        if (a > static_cast<int>(tokens.size()))
            throw std::invalid_argument("parse error: |" + tok + "| exceeds the entry count " +
                                        std::to_string(tokens.size()));
        if (seen[static_cast<size_t>(a)])
            throw std::invalid_argument("parse error: duplicate absolute value " +
                                        std::to_string(a));
        seen[static_cast<size_t>(a)] = 1;
        window.push_back(value);
    }
    return SignedPermutation(window);
}

std::string to_string(const SignedPermutation& pi) {
    std::ostringstream os;
    for (int i = 1; i <= pi.n(); ++i) {
        if (i > 1) os << ',';
        os << pi(i);
    }
    return os.str();
}

SignedPermutation identity_permutation(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    return SignedPermutation(w);
}

SignedPermutation inverse(const SignedPermutation& pi) {
    const int n = pi.n();
    std::vector<int> w(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const int v = pi(i);
        if (v > 0)
            w[static_cast<size_t>(v - 1)] = i;
        else
            w[static_cast<size_t>(-v - 1)] = -i;
    }
    return SignedPermutation(w);
}

std::uint64_t signed_permutation_count(int n) {
    std::uint64_t c = 1;
    for (int i = 1; i <= n; ++i) c *= static_cast<std::uint64_t>(i);
    return c << n;
}

SignedPermutation signed_permutation_at(int n, std::uint64_t index) {
    const std::uint64_t mask = n > 0 ? index & ((1ULL << n) - 1) : 0;
    std::uint64_t rank = n > 0 ? index >> n : 0;

    // Factoradic unranking of the absolute window in lexicographic order.
    std::vector<std::uint64_t> fact(static_cast<size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i)
        fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * static_cast<std::uint64_t>(i);
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i + 1;
    std::vector<int> window(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = fact[static_cast<size_t>(n - 1 - i)];
        const size_t j = static_cast<size_t>(rank / f);
        rank %= f;
        int v = pool[j];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
        window[static_cast<size_t>(i)] = (mask >> i) & 1 ? -v : v;
    }
    return SignedPermutation(window);
}

} // namespace bschur
