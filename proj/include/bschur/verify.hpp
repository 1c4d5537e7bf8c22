#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace bschur {

enum class VerifyMode { Multiset, Polynomial };

/// One verification record; witness is null on pass, otherwise a minimal
/// counterexample in enumeration order. summary is a short human line for
/// stderr and is not serialized.
struct VerifyReport {
    std::string identity;
    int n = 0;
    std::string mode;
    bool pass = false;
    double elapsed = 0.0;
    nlohmann::json witness;
    std::string summary;
};

nlohmann::json to_json(const VerifyReport& r);

/// The known identity tags in canonical order.
const std::vector<std::string>& identity_tags();

/// Largest n accepted without --force.
int identity_bound(const std::string& tag, VerifyMode mode);

/// Runs one identity at rank n. Throws std::invalid_argument for unknown
/// tags and std::domain_error for out-of-range n without force.
VerifyReport verify_identity(const std::string& tag, int n, VerifyMode mode, int jobs,
                             bool force);

} // namespace bschur
