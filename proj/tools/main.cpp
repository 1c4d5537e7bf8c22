// Command-line surface: enumeration, maps between the combinatorial
// families, tableau rendering, and exhaustive identity verification.
// Records go to stdout as newline-delimited JSON; human summaries to stderr.
// Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "bschur/arc.hpp"
#include "bschur/correspondences.hpp"
#include "bschur/descents.hpp"
#include "bschur/json_io.hpp"
#include "bschur/partition.hpp"
#include "bschur/qsym.hpp"
#include "bschur/render.hpp"
#include "bschur/signed_permutation.hpp"
#include "bschur/tableaux.hpp"
#include "bschur/verify.hpp"

using nlohmann::json;
using namespace bschur;

namespace {

Partition parse_shape(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) parts.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    return Partition(parts);
}

json read_stdin_json() {
    json j;
    std::cin >> j;
    return j;
}

int cmd_enumerate(const std::string& kind, int n, const std::string& family,
                  const std::string& shape_text) {
    long long count = 0;
    if (kind == "perms" || kind == "arc") {
        const bool arcs_only = kind == "arc";
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            if (arcs_only && !is_signed_arc(pi)) return;
            json rec{{"perm", to_string(pi)},
                     {"des", to_json(des_b(pi))},
                     {"des_r", to_json(des_r(pi))}};
            if (arcs_only) rec["type"] = to_json(classify(pi));
            std::cout << rec.dump() << "\n";
            ++count;
        });
    } else if (kind == "tableaux") {
        const Partition shape = parse_shape(shape_text);
        if (family == "domino") {
            for (const auto& t : enumerate_standard_domino_tableaux(shape)) {
                std::cout << json{{"tableau", to_json(t)}, {"des", to_json(des_sdt(t))}}.dump()
                          << "\n";
                ++count;
            }
        } else if (family == "young") {
            for (const auto& t : enumerate_standard_young_tableaux(shape)) {
                std::cout << json{{"tableau", to_json(t)}, {"des", to_json(des_syt(t))}}.dump()
                          << "\n";
                ++count;
            }
        } else {
            std::cerr << "enumerate: --family must be young or domino\n";
            return 2;
        }
    } else {
        std::cerr << "enumerate: --kind must be perms, arc or tableaux\n";
        return 2;
    }
    std::cerr << count << " records\n";
    return 0;
}

int cmd_map(const std::string& name, const std::string& perm_text, const std::string& kind) {
    json rec{{"name", name}};
    if (name == "rs") {
        const SignedPermutation pi = parse_signed_permutation(perm_text);
        std::vector<int> word;
        for (int v : pi.window()) {
            if (v < 0) throw std::invalid_argument("map rs: window must be all positive");
            word.push_back(v);
        }
        auto [p, q] = rs_insert(word);
        rec["input"] = to_string(pi);
        rec["P"] = to_json(p);
        rec["Q"] = to_json(q);
        rec["des_input"] = to_json(des_a(pi.window()));
        rec["des_P"] = to_json(des_syt(p));
        rec["des_Q"] = to_json(des_syt(q));
    } else if (name == "birs") {
        const SignedPermutation pi = parse_signed_permutation(perm_text);
        auto [p, q] = bi_rs(pi);
        rec["input"] = to_string(pi);
        rec["P"] = to_json(p);
        rec["Q"] = to_json(q);
        rec["sdes_input"] = to_json(sdes(pi));
        rec["sdes_Q"] = to_json(sdes_bitableau(q));
        rec["des_r_input"] = to_json(des_r(pi));
        rec["des_r_Q"] = to_json(des_r_bitableau(q));
    } else if (name == "phi1") {
        const SignedPermutation pi = parse_signed_permutation(perm_text);
        const SignedPermutation img = phi1(pi);
        rec["input"] = to_string(pi);
        rec["output"] = to_string(img);
        rec["des_input"] = to_json(des_b(pi));
        rec["des_r_output"] = to_json(des_r(img));
    } else if (name == "phi2") {
        const SignedPermutation pi = parse_signed_permutation(perm_text);
        const BiTableau b = phi2(pi);
        rec["input"] = to_string(pi);
        rec["output"] = to_json(b);
        rec["des_r_input"] = to_json(des_r(pi));
        rec["des_r_output"] = to_json(des_r_bitableau(b));
    } else if (name == "phi3") {
        const BiTableau b = bitableau_from_json(read_stdin_json());
        const Partition lambda = quotient_to_shape(b.t1.shape(), b.t2.shape());
        for (const auto& [bi, dom] : phi3_table(lambda))
            if (bi == b) {
                rec["input"] = to_json(b);
                rec["output"] = to_json(dom);
                rec["des_r_input"] = to_json(des_r_bitableau(b));
                rec["des_output"] = to_json(des_sdt(dom));
                std::cout << rec.dump() << "\n";
                return 0;
            }
        throw std::domain_error("map phi3: bi-tableau not found in the matching table");
    } else if (name == "arc2domino") {
        const SignedPermutation pi = parse_signed_permutation(perm_text);
        const DominoTableau t = arc_to_domino(pi);
        rec["input"] = to_string(pi);
        rec["type"] = to_json(classify(pi));
        rec["output"] = to_json(t);
        rec["des_input"] = to_json(des_b(pi));
        rec["des_output"] = to_json(des_sdt(t));
    } else if (name == "domino2arc") {
        const DominoTableau t = domino_tableau_from_json(read_stdin_json());
        std::optional<ArcType> which;
        if (kind == "t5" || kind == "T5") which = ArcType::T5;
        if (kind == "t6" || kind == "T6") which = ArcType::T6;
        const SignedPermutation pi = domino_to_arc(t, which);
        rec["input"] = to_json(t);
        rec["output"] = to_string(pi);
        rec["des_input"] = to_json(des_sdt(t));
        rec["des_output"] = to_json(des_b(pi));
    } else if (name == "littlewood") {
        const json j = read_stdin_json();
        if (j.contains("dominoes")) {
            const DominoTableau t = domino_tableau_from_json(j);
            const BiTableau b = littlewood(t);
            rec["input"] = to_json(t);
            rec["output"] = to_json(b);
            rec["weight"] = to_json(weight_of(t));
        } else {
            const BiTableau b = bitableau_from_json(j);
            const DominoTableau t = littlewood_inverse(b);
            rec["input"] = to_json(b);
            rec["output"] = to_json(t);
            rec["weight"] = to_json(weight_of(t));
        }
    } else {
        std::cerr << "map: unknown --name " << name << "\n";
        return 2;
    }
    std::cout << rec.dump() << "\n";
    return 0;
}

int cmd_render(const std::string& format) {
    const json j = read_stdin_json();
    std::string text;
    if (j.contains("dominoes")) {
        const DominoTableau t = domino_tableau_from_json(j);
        text = format == "ascii" ? render_ascii(t) : render_latex(t);
        if (format == "json") text = to_json(t).dump() + "\n";
    } else if (j.contains("t1")) {
        const BiTableau b = bitableau_from_json(j);
        text = format == "ascii" ? render_ascii(b) : render_latex(b);
        if (format == "json") text = to_json(b).dump() + "\n";
    } else {
        const YoungTableau t = young_tableau_from_json(j);
        text = format == "ascii" ? render_ascii(t) : render_latex(t);
        if (format == "json") text = to_json(t).dump() + "\n";
    }
    std::cout << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of signed permutations, domino tableaux and "
                 "type B quasisymmetric functions"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "stream a combinatorial family as NDJSON");
    std::string kind = "perms", family = "young", shape_text;
    int n = 0;
    enumerate->add_option("--kind", kind, "perms | arc | tableaux");
    enumerate->add_option("--n", n, "rank");
    enumerate->add_option("--family", family, "young | domino");
    enumerate->add_option("--shape", shape_text, "comma-separated partition, e.g. 3,3");

    // map
    auto* map_cmd = app.add_subcommand("map", "apply one of the bijections");
    std::string map_name, perm_text, map_kind;
    map_cmd->add_option("--name", map_name,
                        "arc2domino | domino2arc | phi1 | phi2 | phi3 | littlewood | birs | rs")
        ->required();
    map_cmd->add_option("--perm", perm_text, "signed permutation, comma-separated");
    map_cmd->add_option("--kind", map_kind, "t5 | t6 tag for domino2arc on two-row shapes");

    // verify
    auto* verify = app.add_subcommand("verify", "check identities by exhaustive enumeration");
    std::string identity, mode_text = "multiset";
    bool all = false, force = false;
    int jobs = 0;
    int vn = 3;
    verify->add_option("--identity", identity, "identity tag");
    verify->add_flag("--all", all, "run every identity tag");
    verify->add_option("--n", vn, "rank");
    verify->add_option("--mode", mode_text, "multiset | polynomial");
    verify->add_option("--jobs", jobs, "worker threads (0 = default)");
    verify->add_flag("--force", force, "override desk-scale bounds");

    // render
    auto* render = app.add_subcommand("render", "render a tableau read from stdin as JSON");
    std::string format = "ascii";
    render->add_option("--format", format, "ascii | json | latex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(kind, n, family, shape_text);
        if (map_cmd->parsed()) return cmd_map(map_name, perm_text, map_kind);
        if (render->parsed()) return cmd_render(format);

        // verify
        VerifyMode mode;
        if (mode_text == "multiset")
            mode = VerifyMode::Multiset;
        else if (mode_text == "polynomial")
            mode = VerifyMode::Polynomial;
        else {
            std::cerr << "verify: --mode must be multiset or polynomial\n";
            return 2;
        }
        std::vector<std::string> tags;
        if (all)
            tags = identity_tags();
        else if (!identity.empty())
            tags.push_back(identity);
        else {
            std::cerr << "verify: provide --identity <tag> or --all\n";
            return 2;
        }
        bool ok = true;
        for (const auto& tag : tags) {
            VerifyReport r = verify_identity(tag, vn, mode, jobs, force);
            std::cout << to_json(r).dump() << "\n";
            std::cerr << (r.pass ? "pass" : "FAIL") << "  " << r.identity << " (n=" << r.n
                      << ", " << r.mode << ") " << r.elapsed << "s"
                      << (r.summary.empty() ? "" : "  [" + r.summary + "]") << "\n";
            ok = ok && r.pass;
        }
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
