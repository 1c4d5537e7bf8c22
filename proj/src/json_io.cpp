#include "bschur/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace bschur {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

json to_json(const SignedPermutation& pi) { return json(to_string(pi)); }

SignedPermutation signed_permutation_from_json(const json& j) {
    return parse_signed_permutation(j.get<std::string>());
}

json to_json(const YoungTableau& t) { return json{{"rows", t.rows}}; }

YoungTableau young_tableau_from_json(const json& j) {
    YoungTableau t;
    t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    return t;
}

json to_json(const DominoTableau& t) {
    json doms = json::array();
    auto sorted = t.dominoes;
    std::sort(sorted.begin(), sorted.end(), [](const Domino& a, const Domino& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    for (const auto& d : sorted)
        doms.push_back(json{{"row", d.row},
                            {"col", d.col},
                            {"orient", d.orient == Orientation::Horizontal ? "H" : "V"},
                            {"label", d.label}});
    return json{{"shape", t.shape.parts()},
                {"kind", t.kind == TableauKind::Standard ? "standard" : "semistandard"},
                {"dominoes", doms}};
}

DominoTableau domino_tableau_from_json(const json& j) {
    std::vector<Domino> doms;
    for (const auto& dj : j.at("dominoes")) {
        Domino d;
        d.row = dj.at("row").get<int>();
        d.col = dj.at("col").get<int>();
        const std::string orient = dj.at("orient").get<std::string>();
        if (orient != "H" && orient != "V")
            throw std::invalid_argument("domino orient must be \"H\" or \"V\"");
        d.orient = orient == "H" ? Orientation::Horizontal : Orientation::Vertical;
        d.label = dj.at("label").get<int>();
        doms.push_back(d);
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "standard" && kind != "semistandard")
        throw std::invalid_argument("tableau kind must be \"standard\" or \"semistandard\"");
    DominoTableau t = make_domino_tableau(
        std::move(doms), kind == "standard" ? TableauKind::Standard : TableauKind::Semistandard);
    if (j.contains("shape") && partition_from_json(j.at("shape")) != t.shape)
        throw std::invalid_argument("domino tableau shape does not match its dominoes");
    return t;
}

json to_json(const BiTableau& b) {
    return json{{"t1", to_json(b.t1)},
                {"t2", to_json(b.t2)},
                {"kind", b.kind == TableauKind::Standard ? "standard" : "semistandard"}};
}

BiTableau bitableau_from_json(const json& j) {
    BiTableau b;
    b.t1 = young_tableau_from_json(j.at("t1"));
    b.t2 = young_tableau_from_json(j.at("t2"));
    const std::string kind = j.value("kind", "standard");
    b.kind = kind == "standard" ? TableauKind::Standard : TableauKind::Semistandard;
    return b;
}

json to_json(const DescentSet& d) { return json(d.members()); }

json to_json(const SignedDescentSet& sd) {
    return json{{"S", sd.s}, {"eps", sd.eps}};
}

json to_json(const QPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exps", e}, {"coef", c}});
    return json{{"degree", p.degree()}, {"vars", p.num_vars()}, {"terms", terms}};
}

QPoly qpoly_from_json(const json& j) {
    QPoly p(j.at("vars").get<int>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exps").get<std::vector<int>>(), t.at("coef").get<long long>());
    return p;
}

json to_json(const SBExpansion& e) {
    json coefs = json::array();
    for (const auto& [rho, c] : e.coefficients)
        coefs.push_back(json{{"rho", rho.parts()}, {"coef", c}});
    return json{{"n", e.n}, {"coefficients", coefs}};
}

json to_json(const ArcClassification& c) {
    json j{{"type", to_string(c.type)}, {"k", c.k}};
    if (c.type == ArcType::T3 || c.type == ArcType::T4) j["l"] = c.l;
    if (c.type == ArcType::T3) j["pattern"] = "P" + std::to_string(c.pattern);
    return j;
}

json to_json(const Weight& w) { return json(w.multiplicities); }

} // namespace bschur
