#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "galetope/errors.hpp"
#include "galetope/face.hpp"

using namespace galetope;

namespace {

// Independent characterization: a set splits into disjoint consecutive pairs
// iff every maximal run of consecutive integers has even length.
bool paired_oracle(const Face& f) {
    const auto& v = f.vertices();
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
        if ((j - i + 1) % 2 != 0) return false;
        i = j + 1;
    }
    return true;
}

Face subset_from_mask(unsigned mask) {
    std::vector<int> v;
    for (int b = 0; b < 16; ++b)
        if (mask & (1u << b)) v.push_back(b);
    return Face(v);
}

} // namespace

TEST_CASE("faces sort and collapse duplicates") {
    CHECK(Face({3, 1, 2, 1}) == Face({1, 2, 3}));
    CHECK(Face{}.empty());
    CHECK(Face({5}).max_vertex() == 5);
    CHECK_THROWS_AS(Face({-1, 2}), InvalidInputError);
    CHECK(Face({0, 2}).subset_of(Face({0, 1, 2})));
    CHECK_FALSE(Face({0, 3}).subset_of(Face({0, 1, 2})));
    CHECK(Face({0, 1, 4}).intersect(Face({1, 2, 4})) == Face({1, 4}));
    CHECK(Face({0, 1}).with(3) == Face({0, 1, 3}));
}

TEST_CASE("gale condition on small sets") {
    CHECK(is_gale_subset(Face({1, 2, 4, 5}), 6));
    CHECK_FALSE(is_gale_subset(Face({1, 2, 3}), 5));
    CHECK(is_gale_subset(Face({0, 1, 2, 3}), 4)); // empty complement
    CHECK(is_gale_subset(Face{}, 4));
    CHECK_THROWS_AS(is_gale_subset(Face({4}), 4), InvalidInputError);
}

TEST_CASE("gale condition is invariant under order reversal") {
    const int n = 8;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const Face f = subset_from_mask(mask);
        std::vector<int> rev;
        for (int v : f) rev.push_back(n - 1 - v);
        CHECK(is_gale_subset(f, n) == is_gale_subset(Face(rev), n));
    }
}

TEST_CASE("paired sets") {
    CHECK(is_paired_set(Face({2, 3, 6, 7})));
    CHECK_FALSE(is_paired_set(Face({1, 3, 4})));
    CHECK(is_paired_set(Face{}));
    CHECK_FALSE(is_paired_set(Face({0, 2})));
    CHECK(is_paired_set(Face({0, 1})));
}

TEST_CASE("paired sets agree with the run-length characterization") {
    for (unsigned mask = 0; mask < (1u << 12); ++mask) {
        const Face f = subset_from_mask(mask);
        CHECK(is_paired_set(f) == paired_oracle(f));
    }
}
