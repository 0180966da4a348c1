#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cacti/cactus/d1.hpp"
#include "cacti/cactus/datum.hpp"
#include "cacti/cactus/operad_check.hpp"
#include "cacti/cactus/twisted.hpp"

using namespace cacti::cactus;

TEST_CASE("validate basics") {
    CHECK(validate(unit_cactus().datum).empty());
    CHECK(validate(corona(2).datum).empty());
    CHECK(loops(corona(2).datum).size() == 2);
    CHECK(loops(unit_cactus().datum).size() == 1);

    // interleaving classes: {0, 2, 4} and {1, 3} cannot coexist
    CactusDatum bad;
    bad.breakpoints = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
    bad.classes = {{0, 2, 4}, {1, 3}};
    auto v = validate(bad);
    REQUIRE(!v.empty());
    CHECK(v.front().rule == "interleaving");

    CactusDatum singleton;
    singleton.breakpoints = {Rational(0), Rational(1, 2), Rational(1)};
    singleton.classes = {{0, 2}, {1}};
    CHECK(!validate(singleton).empty());
}

TEST_CASE("two-lobed loops") {
    LabelledCactus tl = two_lobed(Rational(1, 2), Rational(3, 4));
    auto ls = loops(tl.datum);
    REQUIRE(ls.size() == 2);
    // loop through the base class: edges [0, s] and [t, 1]
    CHECK(ls[0].edges == std::vector<int>{0, 2});
    CHECK(ls[1].edges == std::vector<int>{1});
    CHECK(ls[0].length == Rational(3, 4));
    CHECK(ls[1].length == Rational(1, 4));
}

TEST_CASE("loop edges partition the circle") {
    for (const auto& c : standard_seed_library()) {
        auto ls = loops(c.datum);
        std::vector<int> count(c.datum.segments(), 0);
        for (const auto& l : ls)
            for (int e : l.edges) count[e]++;
        for (int k : count) CHECK(k == 1);
    }
}

TEST_CASE("compose unit laws and corona growth") {
    LabelledCactus c2 = corona(2);
    CHECK(compose(c2, 1, unit_cactus()) == c2);
    CHECK(compose(unit_cactus(), 1, c2) == c2);

    // 2-corona into slot 1 of the 2-corona at {0, 1/2, 1}: 3-corona at {0, 1/4, 1/2, 1}
    LabelledCactus c = compose(c2, 1, c2);
    CHECK(c.arity() == 3);
    REQUIRE(c.datum.breakpoints.size() == 4);
    CHECK(c.datum.breakpoints[1] == Rational(1, 4));
    CHECK(c.datum.breakpoints[2] == Rational(1, 2));
    CHECK(c.datum.classes.size() == 1);

    LabelledCactus tl = two_lobed(Rational(1, 2), Rational(3, 4));
    LabelledCactus chain = compose(tl, 1, tl);
    CHECK(chain.arity() == 3);
    CHECK(euler_characteristic(chain.datum) == 1);
}

TEST_CASE("euler characteristic is 1") {
    CHECK(euler_characteristic(unit_cactus().datum) == 1);
    CHECK(euler_characteristic(corona(2).datum) == 1);
    CHECK(euler_characteristic(two_lobed(Rational(1, 2), Rational(3, 4)).datum) == 1);
}

TEST_CASE("operad property suite at depth 2") {
    OperadReport rep = operad_check(standard_seed_library(), 2);
    INFO(rep.failure);
    CHECK(rep.ok);
    CHECK(rep.composites_checked > 0);
}

TEST_CASE("corrupted composition is detected") {
    ComposeFn bad = [](const LabelledCactus& a, int i, const LabelledCactus& b) {
        LabelledCactus c = compose(a, i, b);
        if (c.arity() >= 2) std::swap(c.labels[0], c.labels[1]);
        return c;
    };
    OperadReport rep = operad_check(standard_seed_library(), 1, bad);
    CHECK(!rep.ok);
}

TEST_CASE("stratum-wise continuity: composed breakpoints are affine in a perturbation") {
    // perturb the middle breakpoint of the outer two-lobed cactus by eps
    auto composed = [](const Rational& eps) {
        LabelledCactus outer = two_lobed(Rational(1, 2) + eps, Rational(3, 4));
        LabelledCactus inner = corona(2);
        return compose(outer, 1, inner).datum.breakpoints;
    };
    auto b0 = composed(Rational(0));
    auto b1 = composed(Rational(1, 100));
    auto b2 = composed(Rational(1, 50));
    REQUIRE(b0.size() == b1.size());
    REQUIRE(b1.size() == b2.size());
    for (size_t i = 0; i < b0.size(); ++i) {
        // three collinear samples: b2 - b0 == 2 (b1 - b0)
        CHECK(b2[i] - b0[i] == 2 * (b1[i] - b0[i]));
    }
}

TEST_CASE("json round trip") {
    for (const auto& c : standard_seed_library()) {
        LabelledCactus back = cactus_from_json(to_json(c));
        CHECK(back == c);
    }
}

TEST_CASE("d1 compose examples") {
    IntervalPartition u = d1_unit();
    IntervalPartition halves = d1_make({Rational(0), Rational(1, 2), Rational(1)});
    IntervalPartition thirds = d1_make({Rational(0), Rational(1, 3), Rational(1)});

    CHECK(d1_compose(halves, 1, u) == halves);
    CHECK(d1_compose(u, 1, halves) == halves);

    IntervalPartition c = d1_compose(halves, 1, thirds);
    REQUIRE(c.cuts.size() == 4);
    CHECK(c.cuts[1] == Rational(1, 6));
    CHECK(c.cuts[2] == Rational(1, 2));
}

TEST_CASE("d1 strict associativity on seeded random rationals") {
    std::mt19937 rng(20240817);
    auto random_partition = [&](int parts) {
        std::set<Rational> cuts{Rational(0), Rational(1)};
        while (static_cast<int>(cuts.size()) < parts + 1) {
            int den = 2 + rng() % 16;
            int num = 1 + rng() % (den - 1);
            cuts.insert(frac(num, den));
        }
        return d1_make(std::vector<Rational>(cuts.begin(), cuts.end()));
    };
    for (int trial = 0; trial < 200; ++trial) {
        IntervalPartition a = random_partition(1 + rng() % 3);
        IntervalPartition b = random_partition(1 + rng() % 3);
        IntervalPartition c = random_partition(1 + rng() % 3);
        int i = 1 + rng() % a.arity();
        int j = 1 + rng() % b.arity();
        IntervalPartition lhs = d1_compose(d1_compose(a, i, b), i - 1 + j, c);
        IntervalPartition rhs = d1_compose(a, i, d1_compose(b, j, c));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("twisted trees: defining relations") {
    int M = 5;
    // two-level tree, all labels equal: contracts to a single node
    TwistedTree inner = twisted_node({2, 1}, 3, {twisted_leaf(1), twisted_leaf(2)});
    TwistedTree outer = twisted_node({1, 2}, 3, {inner, twisted_leaf(3)});
    // leaves renumber under explicit construction; build via compose instead
    TwistedTree base = twisted_node({1, 2}, 3, {twisted_leaf(1), twisted_leaf(2)});
    TwistedTree grafted = tree_compose(base, 1, twisted_node({2, 1}, 3, {twisted_leaf(1), twisted_leaf(2)}));
    REQUIRE(tree_valid(grafted, M));
    TwistedTree reduced = tree_reduce(grafted, M);
    CHECK(reduced.children.size() == 3);
    for (const auto& c : reduced.children) CHECK(c.is_leaf);

    // (1,t) ~ (1,t'): unary nodes are label-free, and they dissolve
    TwistedTree unary_a = twisted_node({1}, 0, {twisted_leaf(1)});
    TwistedTree with_unary = tree_compose(base, 2, unary_a);
    CHECK(tree_equal(with_unary, base, M));

    // distinct labels: irreducible, and Z/M rotation acts freely
    TwistedTree mixed = tree_compose(base, 1, twisted_node({1, 2}, 1, {twisted_leaf(1), twisted_leaf(2)}));
    TwistedTree mixed_reduced = tree_reduce(mixed, M);
    CHECK(!mixed_reduced.children[0].is_leaf);
    for (int d = 1; d < M; ++d) CHECK(!(tree_rotate(mixed_reduced, d, M) == mixed_reduced));
    CHECK(tree_rotate(mixed_reduced, M, M) == mixed_reduced);
}

TEST_CASE("twisted trees: local confluence sweep") {
    // all trees with up to 3 internal binary nodes, labels in Z/M, M <= 4
    for (int M = 1; M <= 4; ++M) {
        std::vector<TwistedTree> shapes;
        for (int l1 = 0; l1 < M; ++l1) {
            TwistedTree a = twisted_node({2, 1}, l1, {twisted_leaf(1), twisted_leaf(2)});
            shapes.push_back(a);
            for (int l2 = 0; l2 < M; ++l2) {
                TwistedTree b =
                    tree_compose(a, 1, twisted_node({1, 2}, l2, {twisted_leaf(1), twisted_leaf(2)}));
                shapes.push_back(b);
                for (int l3 = 0; l3 < M; ++l3) {
                    shapes.push_back(tree_compose(
                        b, 3, twisted_node({2, 1}, l3, {twisted_leaf(1), twisted_leaf(2)})));
                    shapes.push_back(tree_compose(
                        b, 1, twisted_node({1, 2}, l3, {twisted_leaf(1), twisted_leaf(2)})));
                }
            }
        }
        for (const auto& t : shapes) {
            TwistedTree canonical = tree_reduce(t, M);
            for (const auto& step : one_step_reductions(t, M)) {
                CHECK(tree_reduce(step, M) == canonical);
            }
        }
    }
}

TEST_CASE("twisted tree composition is associative on reduced forms") {
    int M = 4;
    TwistedTree x = twisted_node({2, 1}, 1, {twisted_leaf(1), twisted_leaf(2)});
    TwistedTree y = twisted_node({1, 2}, 2, {twisted_leaf(1), twisted_leaf(2)});
    TwistedTree z = twisted_node({1, 2}, 1, {twisted_leaf(1), twisted_leaf(2)});
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            TwistedTree lhs = tree_compose(tree_compose(x, i, y), i - 1 + j, z);
            TwistedTree rhs = tree_compose(x, i, tree_compose(y, j, z));
            CHECK(tree_equal(lhs, rhs, M));
        }
}
