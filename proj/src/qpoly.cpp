#include "bschur/qpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bschur {

QPoly QPoly::one(int num_vars) {
    QPoly p(num_vars);
    p.add_term(Exponents(static_cast<size_t>(num_vars), 0), 1);
    return p;
}

QPoly QPoly::monomial(const Exponents& exps, long long coef, int num_vars) {
    QPoly p(num_vars);
    p.add_term(exps, coef);
    return p;
}

long long QPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0 : it->second;
}

void QPoly::add_term(const Exponents& exps, long long coef) {
    if (coef == 0) return;
    if (static_cast<int>(exps.size()) != num_vars_)
        throw std::logic_error("QPoly: exponent length does not match variable count");
    const int deg = std::accumulate(exps.begin(), exps.end(), 0);
    if (degree_ == -1)
        degree_ = deg;
    else if (deg != degree_)
        throw std::logic_error("QPoly: mixing degrees in a homogeneous polynomial");
    auto [it, inserted] = terms_.emplace(exps, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
    if (terms_.empty()) degree_ = -1;
}

QPoly& QPoly::operator+=(const QPoly& other) {
    if (other.is_zero()) return *this;
    if (is_zero() && num_vars_ == 0) num_vars_ = other.num_vars_;
    if (num_vars_ != other.num_vars_)
        throw std::logic_error("QPoly: variable counts differ");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
    if (other.is_zero()) return *this;
    if (is_zero() && num_vars_ == 0) num_vars_ = other.num_vars_;
    if (num_vars_ != other.num_vars_)
        throw std::logic_error("QPoly: variable counts differ");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

QPoly& QPoly::operator*=(long long scalar) {
    if (scalar == 0) {
        terms_.clear();
        degree_ = -1;
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.num_vars_ != b.num_vars_ && !a.is_zero() && !b.is_zero())
        throw std::logic_error("QPoly: variable counts differ");
    QPoly out(a.num_vars_);
    QPoly::Exponents e(static_cast<size_t>(a.num_vars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const long long a = c >= 0 ? c : -c;
        bool printed = false;
        if (a != 1) {
            os << a;
            printed = true;
        }
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) {
                if (printed) os << "*";
                os << "x" << i;
                if (e[i] > 1) os << "^" << e[i];
                printed = true;
            }
        if (!printed) os << 1;
    }
    return os.str();
}

} // namespace bschur
