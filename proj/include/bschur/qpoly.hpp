#pragma once

#include <map>
#include <string>
#include <vector>

namespace bschur {

/// Homogeneous polynomial with exact integer coefficients over the truncated
/// alphabet x_0..x_m (num_vars = m+1). Terms map exponent sequences to
/// nonzero coefficients; all stored terms share the same total degree.
class QPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, long long>;

    QPoly() = default;
    explicit QPoly(int num_vars) : num_vars_(num_vars) {}
    static QPoly one(int num_vars);
    static QPoly monomial(const Exponents& exps, long long coef, int num_vars);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    /// Common degree of the stored terms; -1 for the zero polynomial.
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    long long coefficient(const Exponents& exps) const;

    /// Adds coef * x^exps, erasing the term if it cancels. Enforces the
    /// homogeneity and variable-count invariants.
    void add_term(const Exponents& exps, long long coef);

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    QPoly& operator*=(long long scalar);
    friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
    friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
    friend QPoly operator*(QPoly a, long long s) { a *= s; return a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);

    bool operator==(const QPoly&) const = default;

    std::string to_string() const;

private:
    int num_vars_ = 0;
    int degree_ = -1;
    TermMap terms_;
};

} // namespace bschur
