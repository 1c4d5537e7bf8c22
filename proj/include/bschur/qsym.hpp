#pragma once

#include <map>

#include "bschur/descents.hpp"
#include "bschur/partition.hpp"
#include "bschur/qpoly.hpp"

namespace bschur {

/// Gessel's fundamental quasisymmetric function F_I in the variables
/// x_1..x_m (x_0 present in the ambient alphabet but unused).
/// I is a subset of [n-1]; membership of 0 is rejected.
QPoly fundamental_f(const DescentSet& i_set, int n, int m);

/// Chow's type B fundamental F^B_I over x_0..x_m with the anchor i_0 = 0;
/// I is a subset of {0} u [n-1].
QPoly chow_f(const DescentSet& i_set, int n, int m);

/// Poirier's fundamental quasisymmetric function evaluated at (X*, X):
/// letters at '-' positions draw from x_1..x_m, letters at '+' positions
/// from x_0..x_m via the index shift y_i -> x_{i-1}.
QPoly poirier_f(const SignedDescentSet& sd, int m);

/// Schur polynomial by semistandard enumeration. include_x0 selects the
/// alphabet X (labels >= 0) versus X* (labels >= 1); either way the result
/// lives in the ambient x_0..x_m variables.
QPoly schur(const Partition& lambda, int m, bool include_x0);

/// G_lambda: generating function of semistandard domino tableaux with labels
/// in {0..m}. Throws std::domain_error when lambda has no domino tiling.
QPoly domino_function(const Partition& lambda, int m);

/// s^B_{(n-|rho|,rho)} = x_0^{n-|rho|} s_rho(X*). Throws when |rho| > n.
QPoly type_b_schur(const Partition& rho, int n, int m);

/// Littlewood-Richardson coefficient k^rho_{alpha nu} by enumeration of
/// lattice skew fillings of rho/alpha with content nu.
long long lr_coefficient(const Partition& rho, const Partition& alpha, const Partition& nu);

/// Expansion sum_rho c_rho s^B_{(n-|rho|,rho)}; zero coefficients omitted.
struct SBExpansion {
    std::map<Partition, long long> coefficients;
    int n = 0;
    bool operator==(const SBExpansion&) const = default;
};

QPoly sb_expansion_to_poly(const SBExpansion& e, int m);

/// Coefficients a^lambda_rho = sum over nu with lambda^+/nu a horizontal
/// strip of k^rho_{lambda^- nu}.
SBExpansion g_in_sb(const Partition& lambda);

/// Decomposes a homogeneous degree-n polynomial in x_0..x_m (m >= n) over
/// the s^B basis: groups terms by the x_0 exponent and eliminates each
/// group against Schur polynomials at the lexicographically leading
/// monomial. Throws std::domain_error("not in Lambda^B_n ...") when a group
/// is not symmetric in x_1..x_m.
SBExpansion decompose_lambda_b(const QPoly& p, int n);

/// Schur-basis decomposition of a symmetric polynomial in x_1..x_m by
/// leading-monomial elimination. Used as the independent oracle for the
/// Littlewood-Richardson rule.
std::map<Partition, long long> schur_decompose_xstar(QPoly q);

/// Sum of F^B over a multiset of descent sets.
QPoly qsym_of_set(const std::vector<DescentSet>& descents, int n, int m);

} // namespace bschur
