#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>

#include "bschur/arc.hpp"
#include "bschur/descents.hpp"

using namespace bschur;

namespace {

std::set<std::vector<int>> arc_windows(int n) {
    std::set<std::vector<int>> out;
    for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
        if (is_signed_arc(pi)) out.insert(pi.window());
    });
    return out;
}

// Shape families per type for rank n.
std::vector<Partition> type_shapes(ArcType type, int n) {
    std::vector<Partition> out;
    auto add = [&](std::vector<int> parts) {
        for (int p : parts)
            if (p <= 0) return;
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) return;
        out.push_back(Partition(parts));
    };
    switch (type) {
        case ArcType::T1:
            add({2 * n});
            add({2 * n - 2, 1, 1});
            break;
        case ArcType::T2:
            add({2 * n - 1, 1});
            add({2 * n - 3, 1, 1, 1});
            break;
        case ArcType::T3:
            for (int a = 2; a <= 2 * n; ++a)
                if (2 * n - a - 2 >= 2 && a >= 2 * n - a - 2) add({a, 2 * n - a - 2, 2});
            break;
        case ArcType::T4:
            for (int a = 2; a <= 2 * n; ++a)
                if (2 * n - a - 2 >= 2 && a >= 2 * n - a - 2) add({a, 2 * n - a - 2, 1, 1});
            break;
        case ArcType::T5:
        case ArcType::T6:
            for (int a = 2; a <= 2 * n; ++a)
                if (2 * n - a >= 2 && a >= 2 * n - a) add({a, 2 * n - a});
            break;
    }
    return out;
}

} // namespace

TEST_CASE("signed arc recognition") {
    CHECK(is_signed_arc(identity_permutation(5)));
    CHECK(is_signed_arc(parse_signed_permutation("-3,4,5,-2,-1,-7,6")));
    CHECK_FALSE(is_signed_arc(parse_signed_permutation("2,1,3")));
    CHECK_FALSE(is_signed_arc(parse_signed_permutation("1,3,2")));
    CHECK(is_signed_arc(parse_signed_permutation("-1")));
}

TEST_CASE("the rank-3 signed arc set matches the explicit 24-element listing") {
    std::set<std::vector<int>> expected;
    auto add = [&](std::vector<std::vector<int>> windows) {
        for (auto& w : windows) expected.insert(w);
    };
    add({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}});
    add({{1, 2, -3}, {1, -3, 2}, {-3, 1, 2}});
    add({{3, 1, -2}, {3, -2, 1}, {-2, 3, 1}});
    add({{2, 3, -1}, {2, -1, 3}, {-1, 2, 3}});
    add({{1, -3, -2}, {-3, 1, -2}, {-3, -2, 1}});
    add({{2, -1, -3}, {-1, 2, -3}, {-1, -3, 2}});
    add({{3, -2, -1}, {-2, 3, -1}, {-2, -1, 3}});
    add({{-3, -2, -1}, {-2, -1, -3}, {-1, -3, -2}});
    CHECK(expected.size() == 24);
    CHECK(arc_windows(3) == expected);
}

TEST_CASE("the two arc definitions agree exhaustively") {
    for (int n = 0; n <= 5; ++n)
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            CHECK(is_signed_arc(pi) == is_signed_arc_by_patterns(pi));
        });
}

TEST_CASE("type A arc permutations") {
    CHECK(is_arc_permutation({1, 2, 3, 4}));
    CHECK(is_arc_permutation({3, 2, 1}));
    CHECK_FALSE(is_arc_permutation({1, 3, 2, 4}));
    CHECK_FALSE(is_arc_permutation({2, 4, 3, 1}));
}

TEST_CASE("classification fixtures") {
    const auto t5 = classify(parse_signed_permutation("-5,6,-4,7,-3,-2,-1"));
    CHECK(t5.type == ArcType::T5);
    CHECK(t5.k == 5);

    const auto t1 = classify(parse_signed_permutation("4,5,6,7,1,2,3"));
    CHECK(t1.type == ArcType::T1);
    CHECK(t1.k == 4);

    const auto t3 = classify(parse_signed_permutation("-4,-3,5,6,7,-2,1"));
    CHECK(t3.type == ArcType::T3);
    CHECK(t3.k == 4);
    CHECK(t3.l == 1);
    CHECK(t3.pattern == 2);

    const auto t2 = classify(parse_signed_permutation("-3,-2,-1,-7,-6,-5,-4"));
    CHECK(t2.type == ArcType::T2);
    CHECK(t2.k == 4);

    const auto t4 = classify(parse_signed_permutation("-3,4,-2,-1,-7,5,-6"));
    CHECK(t4.type == ArcType::T4);
    CHECK(t4.k == 3);
    CHECK(t4.l == 5);

    const auto t6 = classify(parse_signed_permutation("1,-7,-6,2,-5,3,-4"));
    CHECK(t6.type == ArcType::T6);
    CHECK(t6.k == 3);

    CHECK_THROWS_AS(classify(parse_signed_permutation("2,1,3")), std::domain_error);
}

TEST_CASE("classification succeeds on every signed arc permutation") {
    for (int n = 1; n <= 5; ++n) {
        std::map<ArcType, long long> counts;
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            if (!is_signed_arc(pi)) return;
            ++counts[classify(pi).type];  // classify throws on template mismatch
        });
        long long total = 0;
        for (const auto& [t, c] : counts) total += c;
        long long expected = 0;
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            if (is_signed_arc(pi)) ++expected;
        });
        CHECK(total == expected);
    }
}

TEST_CASE("worked arc-to-domino images") {
    CHECK(arc_to_domino(parse_signed_permutation("-5,6,-4,7,-3,-2,-1")) ==
          make_domino_tableau({{1, 1, Orientation::Vertical, 1},
                               {1, 2, Orientation::Horizontal, 2},
                               {2, 2, Orientation::Horizontal, 3},
                               {1, 4, Orientation::Horizontal, 4},
                               {2, 4, Orientation::Horizontal, 5},
                               {1, 6, Orientation::Vertical, 6},
                               {1, 7, Orientation::Vertical, 7}},
                              TableauKind::Standard));

    const auto t1_img = arc_to_domino(parse_signed_permutation("4,5,6,7,1,2,3"));
    CHECK(t1_img.shape == Partition({12, 1, 1}));
    CHECK(t1_img.dominoes[4] == Domino{2, 1, Orientation::Vertical, 5});

    const auto t2_img = arc_to_domino(parse_signed_permutation("-3,-2,-1,-7,-6,-5,-4"));
    CHECK(t2_img.shape == Partition({11, 1, 1, 1}));
    CHECK(t2_img.dominoes[3] == Domino{3, 1, Orientation::Vertical, 4});

    CHECK(arc_to_domino(parse_signed_permutation("-3,4,-2,-1,-7,5,-6")) ==
          make_domino_tableau({{1, 1, Orientation::Vertical, 1},
                               {1, 2, Orientation::Horizontal, 2},
                               {2, 2, Orientation::Horizontal, 3},
                               {1, 4, Orientation::Vertical, 4},
                               {3, 1, Orientation::Vertical, 5},
                               {1, 5, Orientation::Horizontal, 6},
                               {2, 5, Orientation::Horizontal, 7}},
                              TableauKind::Standard));

    CHECK(arc_to_domino(parse_signed_permutation("-4,-3,5,6,7,-2,1")) ==
          make_domino_tableau({{1, 1, Orientation::Vertical, 1},
                               {1, 2, Orientation::Vertical, 2},
                               {1, 3, Orientation::Vertical, 3},
                               {1, 4, Orientation::Horizontal, 4},
                               {1, 6, Orientation::Horizontal, 5},
                               {3, 1, Orientation::Horizontal, 6},
                               {2, 4, Orientation::Horizontal, 7}},
                              TableauKind::Standard));

    CHECK(arc_to_domino(identity_permutation(4)).shape == Partition({8}));
    CHECK(arc_to_domino(parse_signed_permutation("-1,2,3,4")).shape == Partition({4, 4}));
    CHECK(arc_to_domino(parse_signed_permutation("-4,1,2,3")).shape == Partition({4, 4}));
}

TEST_CASE("descent preservation, exhaustively") {
    for (int n = 1; n <= 6; ++n)
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            if (!is_signed_arc(pi)) return;
            CHECK(des_sdt(arc_to_domino(pi)) == des_b(pi));
        });
}

TEST_CASE("round-trip and per-type bijectivity") {
    for (int n = 1; n <= 5; ++n) {
        std::map<ArcType, std::set<DominoTableau>> images;
        std::map<ArcType, long long> counts;
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            if (!is_signed_arc(pi)) return;
            const ArcClassification cls = classify(pi);
            const DominoTableau t = arc_to_domino(pi);
            const bool two_row = t.shape.length() <= 2 && t.shape.part(1) >= 2;
            const auto back = domino_to_arc(
                t, two_row ? std::optional<ArcType>(cls.type) : std::nullopt);
            CHECK(back == pi);
            images[cls.type].insert(t);
            ++counts[cls.type];
        });
        for (const auto& [type, set] : images) {
            CHECK(static_cast<long long>(set.size()) == counts[type]);  // injective
            std::set<DominoTableau> expected;
            for (const auto& shape : type_shapes(type, n))
                for (const auto& t : enumerate_standard_domino_tableaux(shape))
                    expected.insert(t);
            CHECK(set == expected);  // onto the stated shape family
        }
    }
}

TEST_CASE("the two-row family needs the type tag, and both inverses are arcs") {
    const auto t5 = parse_signed_permutation("2,3,-1");
    const auto t6 = parse_signed_permutation("1,2,-3");
    const auto img5 = arc_to_domino(t5);
    const auto img6 = arc_to_domino(t6);
    CHECK(img5 == img6);  // shared image, disambiguated by the tag
    CHECK(domino_to_arc(img5, ArcType::T5) == t5);
    CHECK(domino_to_arc(img5, ArcType::T6) == t6);
    CHECK_THROWS_AS(domino_to_arc(img5), std::domain_error);

    // the exceptional elements of both types share the all-vertical image
    const auto e5 = parse_signed_permutation("-1,2,3");
    const auto e6 = parse_signed_permutation("-3,1,2");
    CHECK(arc_to_domino(e5) == arc_to_domino(e6));
    CHECK(arc_to_domino(e5).vertical_count() == 3);
    CHECK(domino_to_arc(arc_to_domino(e5), ArcType::T5) == e5);
    CHECK(domino_to_arc(arc_to_domino(e6), ArcType::T6) == e6);
}

TEST_CASE("shapes outside the template families are rejected") {
    // (2,2,2) with n=3 is a type 3 shape; (4,2,2,1,1) for n=5 is not listed
    const auto bad = enumerate_standard_domino_tableaux(Partition({4, 2, 2, 1, 1}));
    REQUIRE_FALSE(bad.empty());
    CHECK_THROWS_AS(domino_to_arc(bad.front()), std::domain_error);
}

TEST_CASE("subsequence law for signed arc permutations") {
    for (int n = 1; n <= 5; ++n)
        for_each_signed_permutation(n, [&](const SignedPermutation& pi) {
            if (!is_signed_arc(pi)) return;
            std::vector<int> pos, neg;
            for (int v : pi.window()) (v > 0 ? pos : neg).push_back(v);
            auto cyc = [n](int x) { return x % n + 1; };
            for (size_t i = 0; i + 1 < pos.size(); ++i)
                CHECK(pos[i + 1] == cyc(pos[i]));
            for (size_t i = 0; i + 1 < neg.size(); ++i)
                CHECK(-neg[i + 1] == (-neg[i] + n - 2) % n + 1);  // -1 + 1 = -n
            if (!pos.empty() && !neg.empty()) CHECK(pos.front() == cyc(-neg.front()));
        });
}
