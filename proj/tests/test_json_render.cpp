#include <doctest.h>

#include <stdexcept>

#include "bschur/json_io.hpp"
#include "bschur/render.hpp"

using namespace bschur;
using nlohmann::json;

TEST_CASE("permutation and partition json") {
    const auto pi = parse_signed_permutation("-3,8,5,-2,1,-9,-7,4,-6");
    CHECK(signed_permutation_from_json(to_json(pi)) == pi);
    CHECK(to_json(pi).get<std::string>() == "-3,8,5,-2,1,-9,-7,4,-6");
    const Partition p({5, 5, 3, 3, 2});
    CHECK(partition_from_json(to_json(p)) == p);
}

TEST_CASE("tableau json round-trips over enumerated families") {
    for (const auto& lambda : empty_two_core_shapes(3))
        for (const auto& t : enumerate_standard_domino_tableaux(lambda))
            CHECK(domino_tableau_from_json(to_json(t)) == t);
    for (const auto& t : enumerate_semistandard_domino_tableaux(Partition({4, 2}), 3))
        CHECK(domino_tableau_from_json(to_json(t)) == t);
    for (const auto& t : enumerate_standard_young_tableaux(Partition({3, 2})))
        CHECK(young_tableau_from_json(to_json(t)) == t);
    for (const auto& b : enumerate_standard_bitableaux(Partition({2}), Partition({1, 1})))
        CHECK(bitableau_from_json(to_json(b)) == b);
}

TEST_CASE("domino json schema fields") {
    const auto t = make_domino_tableau(
        {{1, 1, Orientation::Vertical, 1}, {1, 2, Orientation::Horizontal, 2}},
        TableauKind::Standard);
    const json j = to_json(t);
    CHECK(j.at("kind") == "standard");
    CHECK(j.at("shape") == json({3, 1}));
    CHECK(j.at("dominoes")[0].at("orient") == "V");
    CHECK(j.at("dominoes")[1].at("col") == 2);  // sorted by (row, col)

    json bad = j;
    bad["dominoes"][0]["orient"] = "X";
    CHECK_THROWS_AS(domino_tableau_from_json(bad), std::invalid_argument);
    json wrong_shape = j;
    wrong_shape["shape"] = {4};
    CHECK_THROWS_AS(domino_tableau_from_json(wrong_shape), std::invalid_argument);
}

TEST_CASE("descent and polynomial json") {
    DescentSet d = DescentSet::from_members({0, 2, 3}, 5);
    CHECK(to_json(d) == json({0, 2, 3}));
    const auto sd = sdes(parse_signed_permutation("-3,8,5,-2,1,-9,-7,4,-6"));
    CHECK(to_json(sd).at("eps") == "-++-+--+-");
    CHECK(to_json(sd).at("S") == json({1, 2, 3, 4, 5, 6, 7, 8, 9}));

    const QPoly q = chow_f(DescentSet::from_members({0}, 2), 2, 2);
    const json jq = to_json(q);
    CHECK(jq.at("degree") == 2);
    CHECK(jq.at("vars") == 3);
    CHECK(qpoly_from_json(jq) == q);
    // terms sorted lexicographically by exponent sequence
    CHECK(jq.at("terms")[0].at("exps") == json({0, 0, 2}));
}

TEST_CASE("classification json") {
    const auto c = classify(parse_signed_permutation("-4,-3,5,6,7,-2,1"));
    const json j = to_json(c);
    CHECK(j.at("type") == "T3");
    CHECK(j.at("k") == 4);
    CHECK(j.at("l") == 1);
    CHECK(j.at("pattern") == "P2");
    const json j5 = to_json(classify(parse_signed_permutation("-1,2,3")));
    CHECK_FALSE(j5.contains("pattern"));
}

TEST_CASE("ascii rendering") {
    CHECK(render_ascii(YoungTableau{}) == "");
    CHECK(render_ascii(DominoTableau{}) == "");

    const auto single = make_domino_tableau({{1, 1, Orientation::Horizontal, 1}},
                                            TableauKind::Standard);
    CHECK(render_ascii(single) ==
          "┌───┐\n"
          "│ 1 │\n"
          "└───┘\n");

    const YoungTableau y{{{1, 2}, {3}}};
    CHECK(render_ascii(y) ==
          "┌─┬─┐\n"
          "│1│2│\n"
          "├─┼─┘\n"
          "│3│\n"
          "└─┘\n");

    // vertical dominoes carry the label on the joined middle row
    const auto vert = make_domino_tableau({{1, 1, Orientation::Vertical, 1}},
                                          TableauKind::Standard);
    CHECK(render_ascii(vert) ==
          "┌─┐\n"
          "│ │\n"
          "│1│\n"
          "│ │\n"
          "└─┘\n");

    // the nine-domino fixture, checked against its JSON form elsewhere
    const auto q = make_domino_tableau({{1, 1, Orientation::Vertical, 1},
                                        {1, 2, Orientation::Horizontal, 2},
                                        {2, 2, Orientation::Horizontal, 3},
                                        {3, 1, Orientation::Horizontal, 4},
                                        {1, 4, Orientation::Vertical, 5},
                                        {4, 1, Orientation::Vertical, 6},
                                        {4, 2, Orientation::Vertical, 7},
                                        {1, 5, Orientation::Vertical, 8},
                                        {3, 3, Orientation::Vertical, 9}},
                                       TableauKind::Standard);
    CHECK(render_ascii(q) ==
          "┌─┬───┬─┬─┐\n"
          "│ │ 2 │ │ │\n"
          "│1├───┤5│8│\n"
          "│ │ 3 │ │ │\n"
          "├─┴─┬─┼─┴─┘\n"
          "│ 4 │ │\n"
          "├─┬─┤9│\n"
          "│ │ │ │\n"
          "│6│7├─┘\n"
          "│ │ │\n"
          "└─┴─┘\n");
}

TEST_CASE("latex rendering emits tabulars") {
    const auto t = make_domino_tableau({{1, 1, Orientation::Horizontal, 1}},
                                       TableauKind::Standard);
    const std::string tex = render_latex(t);
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    CHECK(tex.find("tikz") == std::string::npos);
}
