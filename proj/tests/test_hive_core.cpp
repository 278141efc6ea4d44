#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "hive/border.hpp"
#include "hive/coords.hpp"
#include "hive/labeling.hpp"
#include "hive/partition.hpp"
#include "hive/rhombus.hpp"

using namespace hive;

TEST_CASE("partition invariants", "[partition]") {
    CHECK(Partition{2, 1} == Partition{2, 1, 0, 0});
    CHECK(Partition{}.empty());
    CHECK(Partition{4, 4, 3, 2}.weight() == 13);
    CHECK(Partition{3, 1}.part(1) == 3);
    CHECK(Partition{3, 1}.part(5) == 0);
    CHECK_THROWS_AS((Partition{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition{-1}, std::invalid_argument);

    CHECK(Partition::parse("2,1") == Partition{2, 1});
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("") == Partition{});
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);

    CHECK(Partition{2, 1}.scaled(3) == Partition{6, 3});
    CHECK(Partition{2, 1}.plus(Partition{1, 1, 1}) == Partition{3, 2, 1});
    CHECK(Partition{2, 1}.contained_in(Partition{3, 2, 1}));
    CHECK_FALSE(Partition{4}.contained_in(Partition{3, 2, 1}));
}

TEST_CASE("coordinate scheme", "[coords]") {
    for (int n = 0; n <= 8; ++n) {
        auto coords = all_coords(n);
        CHECK(coords.size() == vertex_count(n));
        std::set<std::size_t> seen;
        for (auto c : coords) {
            CHECK(valid_coord(n, c));
            seen.insert(coord_index(n, c));
        }
        CHECK(seen.size() == coords.size());
        CHECK(*seen.rbegin() == coords.size() - 1);
    }
    CHECK(border_coords(3).size() == 9);
    CHECK(interior_coords(3).size() == 1);
    CHECK(interior_coords(3)[0] == HiveCoord{2, 1});
    CHECK(interior_coords(5).size() == 6);

    CHECK(is_border(3, {1, 2}));
    CHECK(is_border(3, {2, 0}));
    CHECK(is_border(3, {2, 2}));
    CHECK_FALSE(is_border(3, {2, 1}));
}

TEST_CASE("all_rhombi counts and validity", "[rhombus]") {
    CHECK(all_rhombi(1).empty());
    CHECK(all_rhombi(2).size() == 3);
    CHECK(all_rhombi(3).size() == 9);

    SECTION("n=2 has one rhombus per orientation") {
        auto rs = all_rhombi(2);
        std::map<Orientation, int> per;
        for (auto& r : rs) per[r.orientation]++;
        CHECK(per[Orientation::R1] == 1);
        CHECK(per[Orientation::R2] == 1);
        CHECK(per[Orientation::R3] == 1);
    }

    SECTION("all four vertices valid, every rhombus distinct, n <= 8") {
        for (int n = 0; n <= 8; ++n) {
            auto rs = all_rhombi(n);
            CHECK(rs.size() == static_cast<std::size_t>(3 * n * (n - 1) / 2));
            std::set<std::array<HiveCoord, 4>> vertex_sets;
            for (auto& r : rs) {
                auto vs = rhombus_vertices(r);
                for (auto v : vs) CHECK(valid_coord(n, v));
                std::sort(vs.begin(), vs.end());
                CHECK(vertex_sets.insert(vs).second);  // no pair repeats
            }
        }
    }
}

// Border of the worked example: lambda = (2,1), mu = (2,1), nu = (3,2,1).
static Border example_border() {
    return border_from_triple(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, 3);
}

TEST_CASE("border_from_triple values", "[border]") {
    Border b = example_border();
    CHECK(b.at({1, 0}) == 0);
    CHECK(b.at({1, 1}) == 2);
    CHECK(b.at({1, 2}) == 3);
    CHECK(b.at({1, 3}) == 3);
    CHECK(b.at({2, 0}) == 3);
    CHECK(b.at({3, 0}) == 5);
    CHECK(b.at({4, 0}) == 6);
    CHECK(b.at({2, 2}) == 5);
    CHECK(b.at({3, 1}) == 6);

    CHECK(lambda_of(b) == Partition{2, 1});
    CHECK(mu_of(b) == Partition{2, 1});
    CHECK(nu_of(b) == Partition{3, 2, 1});

    SECTION("corner consistency") {
        CHECK(b.at({1, 3}) == Rational(Partition{2, 1}.weight()));
        CHECK(b.at({4, 0}) == Rational(Partition{3, 2, 1}.weight()));
    }

    SECTION("errors") {
        CHECK_THROWS_AS(border_from_triple(Partition{1}, Partition{1}, Partition{3}, 2),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            border_from_triple(Partition{1, 1, 1}, Partition{}, Partition{1, 1, 1}, 2),
            std::invalid_argument);
    }

    SECTION("all-zero triple") {
        Border z = border_from_triple(Partition{}, Partition{}, Partition{}, 1);
        for (auto& v : z.values()) CHECK(v == 0);
    }

    SECTION("mu empty forces flat bottom") {
        Border f = border_from_triple(Partition{2, 1}, Partition{}, Partition{2, 1}, 3);
        for (int i = 1; i <= 4; ++i) CHECK(f.at({i, 4 - i}) == 3);
        CHECK(f.at({2, 0}) == 2);
        CHECK(f.at({3, 0}) == 3);
    }

    SECTION("integer partitions give integral borders") {
        CHECK(is_integral(b));
    }
}

TEST_CASE("check_labeling on the worked example", "[rhombus]") {
    Border b = example_border();

    SECTION("x = 4 is a hive") {
        Labeling h = labeling_from_border(b, {Rational(4)});
        CHECK(check_labeling(h).empty());
        CHECK(is_integral(h));
    }
    SECTION("x = 5 is a hive") {
        CHECK(check_labeling(labeling_from_border(b, {Rational(5)})).empty());
    }
    SECTION("x = 6 violates x <= 5") {
        auto bad = check_labeling(labeling_from_border(b, {Rational(6)}));
        REQUIRE_FALSE(bad.empty());
        for (auto& v : bad) CHECK(v.deficit > 0);
    }
    SECTION("x = 7/2 violates 4 <= x and is non-integral") {
        Labeling h = labeling_from_border(b, {Rational(7, 2)});
        CHECK_FALSE(check_labeling(h).empty());
        CHECK_FALSE(is_integral(h));
    }
    SECTION("all-zero labeling is a hive for any n") {
        for (int n = 1; n <= 5; ++n) {
            Labeling z(n, std::vector<Rational>(vertex_count(n), Rational(0)));
            CHECK(check_labeling(z).empty());
        }
    }
}

TEST_CASE("restriction is a retraction of the section", "[border]") {
    Border b = example_border();
    Labeling h = labeling_from_border(b, {Rational(17, 5)});  // arbitrary interior
    CHECK(restrict_to_border(h) == b);
}

TEST_CASE("regular borders", "[border]") {
    CHECK(is_regular_border(example_border()));
    CHECK_FALSE(is_regular_border(
        border_from_triple(Partition{1, 1}, Partition{1}, Partition{2, 1}, 3)));
    Border z = border_from_triple(Partition{}, Partition{}, Partition{}, 2);
    CHECK_FALSE(is_regular_border(z));
}

TEST_CASE("rational helpers", "[rational]") {
    CHECK(rational_to_string(Rational(7, 2)) == "7/2");
    CHECK(rational_to_string(Rational(-3)) == "-3");
    CHECK(rational_from_string("7/2") == Rational(7, 2));
    CHECK(rational_from_string("-3") == Rational(-3));
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
    CHECK(floor_rat(Rational(7, 2)) == 3);
    CHECK(floor_rat(Rational(-7, 2)) == -4);
    CHECK(ceil_rat(Rational(-7, 2)) == -3);
    CHECK(is_integer(Rational(4)));
    CHECK_FALSE(is_integer(Rational(7, 2)));
}
