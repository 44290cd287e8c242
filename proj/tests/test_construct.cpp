#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "golden.hpp"
#include "qcldpc/construct.hpp"
#include "qcldpc/girth.hpp"
#include "qcldpc/tanner.hpp"

using namespace qcldpc;

namespace {

std::set<std::int64_t> value_set(const ForbiddenSet& fs) {
    std::set<std::int64_t> s;
    for (const auto& e : fs.entries) s.insert(e.value);
    return s;
}

// Random partial matrix that satisfies the construction rules, built with
// the production forbidden sets but randomized choices.
struct Partial {
    ExponentMatrix e;
    int col;   // column whose `slot` is the next to fill
    int slot;  // 1..3
};

Partial random_partial(std::mt19937_64& rng, int girth_target) {
    int nv = 4 + static_cast<int>(rng() % 3);
    ExponentMatrix e(4, nv);
    int upto_col = 1 + static_cast<int>(rng() % (nv - 1));
    int done_slots = static_cast<int>(rng() % 3);
    auto deg = LiftingDegree::free();
    for (int col = 1; col <= upto_col; ++col) {
        int max_slot = (col == upto_col) ? done_slots : 3;
        for (int s = 1; s <= max_slot; ++s) {
            auto fs = forbidden_for(girth_target, e, col, static_cast<Slot>(s), deg);
            auto bad = value_set(fs);
            std::vector<std::int64_t> cand;
            for (std::int64_t v = 1; v <= 400; ++v)
                if (!bad.count(v)) cand.push_back(v);
            REQUIRE(!cand.empty());
            e.at(s, col) = cand[rng() % cand.size()];
        }
    }
    return Partial{std::move(e), upto_col, done_slots + 1};
}

}  // namespace

TEST_CASE("first-column forbidden sets match the published rules") {
    ExponentMatrix e(4, 6);
    auto deg = LiftingDegree::free();

    // Choosing i_2 with only the zero column placed: just {0}.
    CHECK(value_set(forbidden_for(6, e, 1, Slot::i, deg)) == std::set<std::int64_t>{0});
    CHECK(value_set(forbidden_for(8, e, 1, Slot::i, deg)) == std::set<std::int64_t>{0});

    // After i_2 = 1: the j rule excludes {0, 1}.
    e.at(1, 1) = 1;
    CHECK(value_set(forbidden_for(6, e, 1, Slot::j, deg)) == std::set<std::int64_t>{0, 1});
    CHECK(value_set(forbidden_for(8, e, 1, Slot::j, deg)) == std::set<std::int64_t>{0, 1, 2});

    // Tags and index tuples are attached to every entry.
    auto fs = forbidden_for(6, e, 1, Slot::j, deg);
    for (const auto& entry : fs.entries) {
        CHECK(!entry.rule.empty());
        CHECK(entry.idx[0] >= 0);
    }
}

TEST_CASE("golden constructions reproduce the reference matrices") {
    CHECK(construct(6, 6, Strategy::smallest()) == golden::g6_smallest());
    CHECK(construct(6, 6, Strategy::max_plus()) == golden::g6_maxplus());
    CHECK(construct(8, 6, Strategy::smallest()) == golden::g8_smallest());
    CHECK(construct(8, 6, Strategy::max_plus()) == golden::g8_maxplus());
    CHECK(construct(10, 6, Strategy::smallest()) == golden::g10_smallest());
    CHECK(construct(12, 6, Strategy::smallest()) == golden::g12_smallest());
}

TEST_CASE("max-plus rows grow strictly") {
    for (int g : {6, 8}) {
        auto e = construct(g, 6, Strategy::max_plus());
        for (int r = 1; r < 4; ++r)
            for (int c = 1; c < 6; ++c) CHECK(e.at(r, c) > e.at(r, c - 1));
    }
}

TEST_CASE("golden minimal lifting degrees") {
    CHECK(min_lift(golden::g6_maxplus(), 6) == 7);
    CHECK(min_lift(golden::g8_smallest(), 8) == 85);
    CHECK(min_lift(golden::g8_maxplus(), 8) == 111);
    CHECK(min_lift(golden::g8_maxplus_reduced(), 8) == 105);
    CHECK(min_lift(golden::g10_smallest(), 10) == 347);
    CHECK(min_lift(golden::g12_smallest(), 12) == 1881);
}

TEST_CASE("min_lift rejects matrices that fail over the integers") {
    ExponentMatrix dup(4, 4);
    for (int r = 1; r < 4; ++r) {
        dup.at(r, 1) = r;
        dup.at(r, 2) = r;  // duplicate column: girth 4 everywhere
        dup.at(r, 3) = 5 * r;
    }
    CHECK_THROWS_AS(min_lift(dup, 6), std::invalid_argument);
}

TEST_CASE("the conditions still fail one step below the minimal lift") {
    struct Case {
        ExponentMatrix e;
        int g;
        std::int64_t n;
    } cases[] = {
        {golden::g6_maxplus(), 6, 7},
        {golden::g8_smallest(), 8, 85},
        {golden::g8_maxplus_reduced(), 8, 105},
        {golden::g10_smallest(), 10, 347},
    };
    for (const auto& c : cases) {
        auto below = LiftingDegree::finite(c.n - 1);
        bool fails = false;
        switch (c.g) {
            case 6: fails = check_distinct_g6(c.e, below).has_value(); break;
            case 8: fails = check_distinct_g8(c.e, below).has_value(); break;
            default: fails = check_distinct_g10(c.e, below).has_value(); break;
        }
        CHECK(fails);
    }
}

TEST_CASE("construction output always satisfies its target over the integers") {
    std::mt19937_64 seeds(555);
    auto free_deg = LiftingDegree::free();
    for (int g : {6, 8, 10, 12}) {
        // Bound scales with the target: girth-12 columns reach the thousands.
        std::int64_t bound = g <= 8 ? 800 : 10000;
        for (int t = 0; t < 3; ++t) {
            int nv = 4 + static_cast<int>(seeds() % 3);
            auto e = construct(g, nv, Strategy::random(seeds(), bound));
            bool ok = false;
            switch (g) {
                case 6: ok = !check_distinct_g6(e, free_deg); break;
                case 8: ok = !check_distinct_g8(e, free_deg); break;
                case 10: ok = !check_distinct_g10(e, free_deg); break;
                case 12: ok = !check_distinct_g12(e, free_deg); break;
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("lift at the minimal degree passes the brute-force oracle") {
    struct Case {
        ExponentMatrix e;
        int g;
    } cases[] = {
        {construct(6, 5, Strategy::random(11, 100)), 6},
        {construct(8, 5, Strategy::random(12, 400)), 8},
        {construct(6, 6, Strategy::smallest()), 6},
    };
    for (const auto& c : cases) {
        std::int64_t n = min_lift(c.e, c.g);
        auto g = qc_girth(c.e, n, 12);
        REQUIRE(g.has_value());
        CHECK(*g >= c.g);
    }
}

TEST_CASE("g6 forbidden sets are exactly the collision-creating values") {
    // Two independent routes: the published rule formulas versus solving the
    // six distinctness sets pairwise, and versus a direct value scan.
    std::mt19937_64 rng(8080);
    auto deg = LiftingDegree::free();
    for (int t = 0; t < 25; ++t) {
        Partial p = random_partial(rng, 6);
        auto rules = value_set(forbidden_for(6, p.e, p.col, static_cast<Slot>(p.slot), deg));

        auto sets = girth_sets(6, 4, p.col + 1);
        auto filled = [&p](int r, int c) {
            if (c < p.col) return true;
            if (c > p.col) return false;
            return r < p.slot;
        };
        std::set<std::int64_t> solved;
        for (std::int64_t v : solve_forbidden(sets, p.e, p.slot, p.col, deg, filled))
            solved.insert(v);
        CHECK(rules == solved);

        auto filled_with = [&p](int r, int c) {
            if (c < p.col) return true;
            if (c > p.col) return false;
            return r <= p.slot;
        };
        for (std::int64_t v = -30; v <= 30; ++v) {
            ExponentMatrix e2 = p.e;
            e2.at(p.slot, p.col) = v;
            bool collides = find_collision_partial(sets, e2, deg, filled_with).has_value();
            CHECK(collides == (rules.count(v) != 0));
        }
    }
}

TEST_CASE("g8 forbidden sets are sound for the exact girth conditions") {
    // The published g>6 rules are deliberately stronger than the bare
    // necessary-and-sufficient sets (they also break some 8-cycle patterns),
    // so soundness here means: every exact-condition violation is excluded,
    // and every allowed value keeps the exact partial conditions clean.
    std::mt19937_64 rng(9090);
    auto deg = LiftingDegree::free();
    for (int t = 0; t < 25; ++t) {
        Partial p = random_partial(rng, 8);
        auto rules = value_set(forbidden_for(8, p.e, p.col, static_cast<Slot>(p.slot), deg));

        std::vector<DistinctnessSet> sets = girth_sets(6, 4, p.col + 1);
        for (auto& s : girth_sets(8, 4, p.col + 1)) sets.push_back(std::move(s));
        auto filled = [&p](int r, int c) {
            if (c < p.col) return true;
            if (c > p.col) return false;
            return r < p.slot;
        };
        for (std::int64_t v : solve_forbidden(sets, p.e, p.slot, p.col, deg, filled))
            CHECK(rules.count(v) == 1);

        auto filled_with = [&p](int r, int c) {
            if (c < p.col) return true;
            if (c > p.col) return false;
            return r <= p.slot;
        };
        for (std::int64_t v = -30; v <= 30; ++v) {
            if (rules.count(v)) continue;
            ExponentMatrix e2 = p.e;
            e2.at(p.slot, p.col) = v;
            CHECK(!find_collision_partial(sets, e2, deg, filled_with).has_value());
        }
    }
}

TEST_CASE("random strategy is reproducible and can exhaust its bound") {
    auto a = construct(6, 5, Strategy::random(42, 50));
    auto b = construct(6, 5, Strategy::random(42, 50));
    CHECK(a == b);
    auto c = construct(6, 5, Strategy::random(43, 50));
    CHECK(!(a == c));  // overwhelmingly likely under a different seed

    // bound 1 dies at the j slot of column 2: both 0 and 1 are forbidden.
    CHECK_THROWS_AS(construct(6, 6, Strategy::random(1, 1)), ConstructError);
    CHECK_THROWS_AS(Strategy::random(1, 0), std::invalid_argument);
}

TEST_CASE("modular construction at N = 7 with backtracking") {
    auto got = construct_for_n(6, 6, 7, Strategy::smallest(), true);
    REQUIRE(got.has_value());
    CHECK(!check_distinct_g6(*got, LiftingDegree::finite(7)));
    CHECK(qc_girth(*got, 7, 12) == 6);

    // The greedy pass without backtracking may or may not finish; if it
    // does, the result must also pass.
    auto greedy = construct_for_n(6, 6, 7, Strategy::smallest(), false);
    if (greedy) CHECK(!check_distinct_g6(*greedy, LiftingDegree::finite(7)));
}

TEST_CASE("modular construction failure is exact for tiny spaces") {
    auto got = construct_for_n(6, 2, 3, Strategy::smallest(), true);
    CHECK(!got.has_value());

    // Exhaustive confirmation: no (i,j,k) for the second column works mod 3.
    bool any = false;
    for (std::int64_t i = 0; i < 3 && !any; ++i)
        for (std::int64_t j = 0; j < 3 && !any; ++j)
            for (std::int64_t k = 0; k < 3 && !any; ++k) {
                ExponentMatrix e(4, 2);
                e.at(1, 1) = i;
                e.at(2, 1) = j;
                e.at(3, 1) = k;
                any = !check_distinct_g6(e, LiftingDegree::finite(3));
            }
    CHECK(!any);

    // N = 5 leaves room: the same search succeeds.
    auto ok = construct_for_n(6, 2, 5, Strategy::smallest(), true);
    REQUIRE(ok.has_value());
    CHECK(!check_distinct_g6(*ok, LiftingDegree::finite(5)));
}

TEST_CASE("modular construction honors the strategy order deterministically") {
    auto a = construct_for_n(8, 4, 40, Strategy::random(7, 39), true);
    auto b = construct_for_n(8, 4, 40, Strategy::random(7, 39), true);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
    CHECK(!check_distinct_g8(*a, LiftingDegree::finite(40)));
}
