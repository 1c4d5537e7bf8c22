#include <doctest.h>

#include <stdexcept>

#include <set>

#include "bschur/signed_permutation.hpp"

using namespace bschur;

TEST_CASE("parsing") {
    CHECK(parse_signed_permutation("1,2,3") == identity_permutation(3));
    CHECK(parse_signed_permutation("-3,8,5,-2,1,-9,-7,4,-6").window() ==
          std::vector<int>{-3, 8, 5, -2, 1, -9, -7, 4, -6});
    CHECK(parse_signed_permutation(" -3, 8 ,5,-2,1,-9,-7,4,-6").n() == 9);
    CHECK(parse_signed_permutation("").n() == 0);

    CHECK_THROWS_WITH_AS(parse_signed_permutation("2,2,1"),
                         "parse error: duplicate absolute value 2", std::invalid_argument);
    CHECK_THROWS_AS(parse_signed_permutation("1,0,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_signed_permutation("5,1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_signed_permutation("1,x,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_signed_permutation("1,2,"), std::invalid_argument);
}

TEST_CASE("to_string round-trips") {
    const auto pi = parse_signed_permutation("-3,8,5,-2,1,-9,-7,4,-6");
    CHECK(parse_signed_permutation(to_string(pi)) == pi);
}

TEST_CASE("inverse") {
    CHECK(inverse(identity_permutation(4)) == identity_permutation(4));
    CHECK(inverse(parse_signed_permutation("-1")) == parse_signed_permutation("-1"));
    const auto pi = parse_signed_permutation("-3,8,5,-2,1,-9,-7,4,-6");
    CHECK(inverse(pi) == parse_signed_permutation("5,-4,-1,8,3,-9,-7,2,-6"));
    CHECK(inverse(inverse(pi)) == pi);
}

TEST_CASE("enumeration counts") {
    for (int n = 0; n <= 5; ++n) {
        std::uint64_t count = 0;
        for_each_signed_permutation(n, [&](const SignedPermutation&) { ++count; });
        CHECK(count == signed_permutation_count(n));
    }
    CHECK(signed_permutation_count(1) == 2);
    CHECK(signed_permutation_count(3) == 48);
    CHECK(signed_permutation_count(5) == 3840);
}

TEST_CASE("unranking covers the group exactly once") {
    const int n = 4;
    std::set<std::vector<int>> from_unrank, from_serial;
    for (std::uint64_t i = 0; i < signed_permutation_count(n); ++i)
        from_unrank.insert(signed_permutation_at(n, i).window());
    for_each_signed_permutation(
        n, [&](const SignedPermutation& pi) { from_serial.insert(pi.window()); });
    CHECK(from_unrank.size() == signed_permutation_count(n));
    CHECK(from_unrank == from_serial);
}
