#include <doctest.h>

#include <stdexcept>

#include "p2quot/path.hpp"
#include "p2quot/smallres.hpp"

using namespace p2quot;

namespace {
Polarization ints(std::vector<long long> w) { return Polarization::from_ints(w); }
Subset sub(std::vector<int> idx, int n) { return Subset::from_indices(idx, n); }
}  // namespace

TEST_CASE("stable_sandwich keeps every strict sign") {
    Polarization wall = ints({9, 4, 4, 4, 4, 4, 1});
    // both chambers adjacent to the wall contain it in their closure
    CHECK(stable_sandwich(wall, ints({9, 4, 4, 4, 4, 3, 1})));
    CHECK(stable_sandwich(wall, ints({8, 4, 4, 4, 4, 4, 1})));
    CHECK(stable_sandwich(wall, wall));
    // moving the big weight elsewhere flips strict signs
    CHECK_FALSE(stable_sandwich(wall, ints({1, 4, 4, 4, 4, 4, 9})));
    CHECK_FALSE(stable_sandwich(wall, ints({4, 4, 4, 4, 4, 4, 2})));
    CHECK_THROWS_AS(stable_sandwich(wall, ints({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("is_small separates the two sides of a pair wall") {
    Polarization wall = ints({9, 4, 4, 4, 4, 4, 1});

    SmallnessReport good = is_small(wall, ints({9, 4, 4, 4, 4, 3, 1}));
    CHECK(good.verdict);
    CHECK(good.sandwich_ok);
    CHECK(good.chamber_ok);
    REQUIRE(good.per_wall.size() == 1);
    CHECK(good.per_wall[0].wall == sub({1, 7}, 7));
    CHECK(good.per_wall[0].side == -1);
    CHECK(good.per_wall[0].realized_dim == 1);
    CHECK(good.per_wall[0].required_dims == std::vector<int>{1});
    CHECK(good.per_wall[0].ok);

    // the other side contracts with 2-dimensional fibers, too big here
    SmallnessReport bad = is_small(wall, ints({8, 4, 4, 4, 4, 4, 1}));
    CHECK_FALSE(bad.verdict);
    CHECK(bad.sandwich_ok);
    CHECK(bad.chamber_ok);
    REQUIRE(bad.per_wall.size() == 1);
    CHECK(bad.per_wall[0].side == 1);
    CHECK(bad.per_wall[0].realized_dim == 2);
    CHECK_FALSE(bad.per_wall[0].ok);

    // the wall point itself is not a chamber candidate
    SmallnessReport self = is_small(wall, wall);
    CHECK_FALSE(self.verdict);
    CHECK_FALSE(self.chamber_ok);
    CHECK(self.per_wall[0].side == 0);
}

TEST_CASE("is_small handles several walls at once") {
    SmallnessReport rep =
        is_small(ints({19, 16, 7, 7, 6, 2, 2, 1}), ints({19, 16, 7, 6, 6, 2, 1, 1}));
    CHECK(rep.verdict);
    REQUIRE(rep.per_wall.size() == 3);
    CHECK(rep.per_wall[0].wall == sub({3, 4, 5}, 8));
    CHECK(rep.per_wall[0].side == 1);
    CHECK(rep.per_wall[0].realized_dim == 2);
    CHECK(rep.per_wall[1].wall == sub({2, 6, 7}, 8));
    CHECK(rep.per_wall[1].side == 1);
    CHECK(rep.per_wall[2].wall == sub({1, 8}, 8));
    CHECK(rep.per_wall[2].side == -1);
    CHECK(rep.per_wall[2].realized_dim == 1);
}

TEST_CASE("is_small requires a wall target") {
    CHECK_THROWS_WITH_AS(is_small(ints({7, 5, 4, 3, 2, 1}), ints({7, 5, 4, 3, 2, 1})),
                         "the target does not lie on a wall", std::invalid_argument);
    CHECK_THROWS_AS(is_small(ints({9, 4, 4, 4, 4, 4, 1}), ints({1, 1, 1})),
                    std::invalid_argument);
}

TEST_CASE("find_small_resolution lands in a small chamber") {
    struct Example {
        std::vector<long long> wall;
        std::vector<long long> expected;
    };
    const Example examples[] = {
        {{9, 4, 4, 4, 4, 4, 1}, {27, 11, 12, 12, 12, 12, 3}},
        {{19, 16, 7, 7, 6, 2, 2, 1}, {57, 48, 21, 21, 18, 6, 6, 4}},
        {{1, 1, 1, 1, 1, 1}, {2, 3, 3, 3, 3, 3}},
        {{6, 6, 6, 6, 2, 1}, {18, 18, 18, 18, 5, 3}},
    };
    for (const Example& e : examples) {
        Polarization cand = find_small_resolution(ints(e.wall));
        CHECK(cand.weights() == ints(e.expected).weights());
        CHECK(is_small(ints(e.wall), cand).verdict);
    }

    // scaled input resolves to the same candidate
    Polarization doubled = find_small_resolution(ints({2, 2, 2, 2, 2, 2}));
    CHECK(doubled.weights() == ints({2, 3, 3, 3, 3, 3}).weights());

    CHECK_THROWS_WITH_AS(find_small_resolution(ints({7, 5, 4, 3, 2, 1})),
                         "the target does not lie on a wall", std::invalid_argument);
}

TEST_CASE("every small resolution computes the same polynomial") {
    // two independent small chambers over the same three-wall point
    Polarization wall = ints({19, 16, 7, 7, 6, 2, 2, 1});
    Polarization found = find_small_resolution(wall);
    Polarization alt = ints({19, 16, 7, 6, 6, 2, 1, 1});
    REQUIRE(is_small(wall, alt).verdict);
    Poly expected({1, 0, 5, 0, 12, 0, 16, 0, 17, 0, 16, 0, 12, 0, 5, 0, 1});
    CHECK(chamber_poincare(found) == expected);
    CHECK(chamber_poincare(alt) == expected);
    CHECK(ip(wall) == expected);
}
