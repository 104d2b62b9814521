#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "collatz/similarity.hpp"
#include "oracles.hpp"

namespace {

// Longest-common-substring lengths for the twelve visually similar curves,
// encoding length on the diagonal.
const std::vector<std::uint64_t> kSimilarNs = {27, 31, 41, 47, 54, 55,
                                               62, 63, 71, 73, 82, 83};
const std::size_t kSimilarTable[12][12] = {
    {70, 67, 69, 66, 70, 66, 68, 60, 65, 66, 69, 66},
    {67, 67, 67, 66, 67, 66, 67, 60, 65, 66, 67, 66},
    {69, 67, 69, 66, 69, 66, 68, 60, 65, 66, 69, 66},
    {66, 66, 66, 66, 66, 66, 66, 60, 65, 66, 66, 66},
    {70, 67, 69, 66, 71, 66, 68, 60, 65, 66, 69, 66},
    {66, 66, 66, 66, 66, 71, 66, 60, 65, 71, 66, 70},
    {68, 67, 68, 66, 68, 66, 68, 60, 65, 66, 68, 66},
    {60, 60, 60, 60, 60, 60, 60, 68, 60, 60, 60, 60},
    {65, 65, 65, 65, 65, 65, 65, 60, 65, 65, 65, 65},
    {66, 66, 66, 66, 66, 71, 66, 60, 65, 73, 66, 70},
    {69, 67, 69, 66, 69, 66, 68, 60, 65, 66, 70, 66},
    {66, 66, 66, 66, 66, 70, 66, 60, 65, 70, 66, 70},
};

}  // namespace

TEST_CASE("longest_common_substring basics") {
    const auto r = collatz::longest_common_substring("ababc", "abc");
    CHECK(r.length == 3);
    CHECK(r.offset_a == 2);
    CHECK(r.offset_b == 0);

    CHECK(collatz::longest_common_substring("", "101").length == 0);
    CHECK(collatz::longest_common_substring("101", "").length == 0);
    CHECK(collatz::longest_common_substring("000", "111").length == 0);

    // Ties break to the smallest offset in a, then in b.
    const auto tie = collatz::longest_common_substring("0110", "11");
    CHECK(tie.length == 2);
    CHECK(tie.offset_a == 1);
    CHECK(tie.offset_b == 0);
}

TEST_CASE("known encoding pairs") {
    const auto e27 = collatz::encode(27).bits;
    const auto e31 = collatz::encode(31).bits;
    const auto e55 = collatz::encode(55).bits;
    const auto e73 = collatz::encode(73).bits;
    CHECK(collatz::longest_common_substring(e27, e31).length == 67);
    CHECK(collatz::longest_common_substring(e55, e73).length == 71);
}

TEST_CASE("longest_common_prefix") {
    CHECK(collatz::longest_common_prefix("1110", "1101") == 2);
    CHECK(collatz::longest_common_prefix("abc", "abc") == 3);
    CHECK(collatz::longest_common_prefix("", "x") == 0);

    const auto e27 = collatz::encode(27).bits;
    const auto e63 = collatz::encode(63).bits;
    CHECK(collatz::longest_common_prefix(e27, e63) == 60);
    CHECK(collatz::longest_common_prefix(e27, collatz::encode(31).bits) >= 60);
}

TEST_CASE("lcs matches cubic brute force on random pairs") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = testing_oracles::random_bits(rng, trial % 41);
        const auto b = testing_oracles::random_bits(rng, (trial * 7 + 3) % 41);
        CAPTURE(a, b);
        const auto got = collatz::longest_common_substring(a, b);
        CHECK(got.length == testing_oracles::lcs_by_brute_force(a, b));
        // The witness offsets really point at a common run.
        CHECK(a.substr(got.offset_a, got.length) == b.substr(got.offset_b, got.length));
        CHECK(collatz::longest_common_prefix(a, b) <= got.length);
    }
}

TEST_CASE("similarity_matrix reproduces the twelve-curve table") {
    const auto m = collatz::similarity_matrix(kSimilarNs);
    REQUIRE(m.ns == kSimilarNs);
    REQUIRE(m.lcs.size() == 12);
    for (std::size_t i = 0; i < 12; ++i) {
        REQUIRE(m.lcs[i].size() == 12);
        for (std::size_t j = 0; j < 12; ++j) {
            CAPTURE(i, j);
            CHECK(m.lcs[i][j] == kSimilarTable[i][j]);
        }
    }
}

TEST_CASE("similarity_matrix shape and invariants") {
    const auto single = collatz::similarity_matrix({2});
    CHECK(single.lcs == std::vector<std::vector<std::size_t>>{{1}});

    // "11100" vs "1110" share a 4-bit run.
    const auto pair = collatz::similarity_matrix({3, 5});
    CHECK(pair.lcs[0][0] == 5);
    CHECK(pair.lcs[1][1] == 4);
    CHECK(pair.lcs[0][1] == 4);
    CHECK(pair.lcs[1][0] == 4);

    std::mt19937 rng(88);
    std::uniform_int_distribution<std::uint64_t> pick(2, 500);
    std::vector<std::uint64_t> ns;
    for (int i = 0; i < 8; ++i) {
        ns.push_back(pick(rng));
    }
    const auto m = collatz::similarity_matrix(ns);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        CHECK(m.lcs[i][i] == collatz::encode(ns[i]).bits.size());
        for (std::size_t j = 0; j < ns.size(); ++j) {
            CHECK(m.lcs[i][j] == m.lcs[j][i]);
            CHECK(m.lcs[i][j] <= std::min(m.lcs[i][i], m.lcs[j][j]));
        }
    }

    CHECK_THROWS_AS(collatz::similarity_matrix({3, 1}), collatz::DomainError);
}
