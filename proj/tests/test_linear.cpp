#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace amt;
using namespace amt::test;

TEST_CASE("the complement table") {
    auto mk = [](Rel rel) { return make_sum_atom({Term{Int(1), "x"}}, rel, Int(0)); };
    CHECK(complement(mk(Rel::Le)).rel == Rel::Gt);
    CHECK(complement(mk(Rel::Eq)).rel == Rel::Ne);
    CHECK(complement(mk(Rel::Ne)).rel == Rel::Eq);
    CHECK(complement(mk(Rel::Lt)).rel == Rel::Ge);
    CHECK(complement(mk(Rel::Gt)).rel == Rel::Le);
    CHECK(complement(mk(Rel::Ge)).rel == Rel::Lt);
    CHECK(complement(s1()) == s3());
}

TEST_CASE("complement is involutive") {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        TheoryAtom s = random_sum_atom(rng);
        CHECK(complement(complement(s)) == s);
        TheoryAtom d = random_diff_atom(rng);
        CHECK(complement(complement(d)) == d);
    }
    TheoryAtom d = make_diff_atom("x", "y", Int(3));
    CHECK(complement(complement(d)) == d);
}

TEST_CASE("the difference complement has the -k-1 denotation") {
    TheoryAtom d = make_diff_atom("x", "y", Int(3));
    TheoryAtom c = complement(d);
    CHECK(c == make_diff_atom("y", "x", Int(-4)));
    for (long long x = -6; x <= 6; ++x) {
        for (long long y = -6; y <= 6; ++y) {
            Valuation v = to_valuation(Assign{{"x", x}, {"y", y}});
            CHECK(den_contains(c, v) == (y - x <= -4));
            CHECK(den_contains(d, v) != den_contains(c, v));
        }
    }
}

TEST_CASE("denotation membership") {
    CHECK(den_contains(s1(), to_valuation({{"x", 2}, {"y", 2}})));
    CHECK_FALSE(den_contains(s1(), to_valuation({{"x", 2}})));
    TheoryAtom d = make_sum_atom({Term{Int(1), "y"}, Term{Int(-1), "x"}}, Rel::Le, Int(-4));
    CHECK(den_contains(d, to_valuation({{"x", 0}, {"y", -4}})));
    CHECK_FALSE(den_contains(d, to_valuation({{"x", 0}, {"y", -3}})));

    Valuation frac;
    frac.set("x", Value(Rat(1, 2)));
    frac.set("y", Value(Rat(7, 2)));
    CHECK_FALSE(den_contains(s1(), frac, NumericDomain::Int));
    CHECK(den_contains(s1(), frac, NumericDomain::Rat));

    Valuation truthy;
    truthy.set("x", Value(Truth{}));
    truthy.set("y", Value(Int(2)));
    CHECK_FALSE(den_contains(s1(), truthy, NumericDomain::Int));
    CHECK_FALSE(den_contains(s1(), truthy, NumericDomain::Rat));
}

TEST_CASE("denotation membership is upward persistent and frame-local") {
    Rng rng(7);
    for (int round = 0; round < 300; ++round) {
        TheoryAtom s = random_sum_atom(rng);
        Valuation v;
        for (const auto& var : s.vars()) {
            v.set(var, Value(Int(rng.below(7) - 3)));
        }
        bool base = den_contains(s, v);
        Valuation bigger = v;
        bigger.set("extra", Value(Int(rng.below(7) - 3)));
        bigger.set("other", Value(Truth{}));
        // extending the valuation never flips membership
        CHECK(den_contains(s, bigger) == base);
    }
}

TEST_CASE("substitution folds a variable into the constant") {
    Rng rng(9);
    for (int round = 0; round < 300; ++round) {
        TheoryAtom s = random_sum_atom(rng);
        Valuation v;
        for (const auto& var : s.vars()) {
            v.set(var, Value(Int(rng.below(7) - 3)));
        }
        if (!den_contains(s, v)) {
            continue;
        }
        std::string var = *s.vars().begin();
        auto subst = substitute(s, var, *as_integer(*v.get(var)));
        if (std::holds_alternative<bool>(subst)) {
            CHECK(std::get<bool>(subst));
        } else {
            CHECK(den_contains(std::get<TheoryAtom>(subst), v));
        }
    }
}

TEST_CASE("absolute complement, exhaustively per atom") {
    Rng rng(13);
    for (int round = 0; round < 60; ++round) {
        TheoryAtom s = rng.below(2) == 0 ? random_sum_atom(rng) : random_diff_atom(rng);
        auto var_set = s.vars();
        std::vector<std::string> vars(var_set.begin(), var_set.end());
        for_each_assignment(vars, -3, 3, [&](const Assign& a) {
            Valuation v = to_valuation(a);
            CHECK(den_contains(s, v) != den_contains(complement(s), v));
            return false;
        });
    }
}

TEST_CASE("boxed integer satisfiability") {
    Bounds box;
    box.lo = -5;
    box.hi = 5;
    auto witness = sat_lin_int({s1(), s2()}, box);
    REQUIRE(witness.has_value());
    CHECK(den_contains(s1(), *witness));
    CHECK(den_contains(s2(), *witness));

    CHECK_FALSE(sat_lin_int({s1(), s3()}, box).has_value());

    TheoryAtom ge1 = make_sum_atom({Term{Int(1), "x"}}, Rel::Ge, Int(1));
    TheoryAtom le0 = make_sum_atom({Term{Int(1), "x"}}, Rel::Le, Int(0));
    CHECK_FALSE(sat_lin_int({ge1, le0}, box).has_value());

    CHECK(sat_lin_int({}, box).has_value());

    Bounds tiny;
    tiny.lo = -1000;
    tiny.hi = 1000;
    CHECK_THROWS_AS(sat_lin_int({s1(), s2()}, tiny, 1000), BoxTooLarge);
}

TEST_CASE("per-variable bounds restrict the search") {
    Bounds box;
    box.lo = -5;
    box.hi = 5;
    box.per_var["x"] = {3, 5};
    auto witness = sat_lin_int({s1()}, box);
    REQUIRE(witness.has_value());
    CHECK(*as_integer(*witness->get("x")) >= 3);
}

TEST_CASE("difference solving by negative cycles") {
    CHECK_FALSE(sat_diff({make_diff_atom("x", "y", Int(-1)), make_diff_atom("y", "x", Int(-1))}).has_value());

    auto single = sat_diff({make_diff_atom("x", "y", Int(10))});
    REQUIRE(single.has_value());
    CHECK(den_contains(make_diff_atom("x", "y", Int(10)), *single));

    auto equal = sat_diff({make_diff_atom("x", "y", Int(0)), make_diff_atom("y", "x", Int(0))});
    REQUIRE(equal.has_value());
    CHECK(*as_integer(*equal->get("x")) == *as_integer(*equal->get("y")));

    CHECK(sat_diff({}).has_value());
    CHECK_THROWS_AS(sat_diff({s1()}), Error);
}

TEST_CASE("difference solving agrees with boxed brute force") {
    Rng rng(17);
    Bounds box;
    box.lo = -12;
    box.hi = 12;
    for (int round = 0; round < 200; ++round) {
        std::set<TheoryAtom> atoms;
        int n = 1 + rng.below(4);
        for (int i = 0; i < n; ++i) {
            atoms.insert(random_diff_atom(rng));
        }
        auto exact = sat_diff(atoms);
        auto boxed = oracle_sat(atoms, box.lo, box.hi);
        // The box is wide enough to contain any Bellman-Ford witness for
        // constants in [-4,4] over three variables.
        CHECK(exact.has_value() == boxed.has_value());
        if (exact) {
            for (const auto& s : atoms) {
                CHECK(den_contains(s, *exact));
            }
        }
    }
}

TEST_CASE("rational satisfiability by elimination") {
    CHECK_FALSE(sat_lin_rat({s1(), s3()}).has_value());

    TheoryAtom twice = make_sum_atom({Term{Int(2), "x"}}, Rel::Eq, Int(1));
    auto half = sat_lin_rat({twice});
    REQUIRE(half.has_value());
    CHECK(*as_rational(*half->get("x")) == Rat(1, 2));

    TheoryAtom pos = make_sum_atom({Term{Int(1), "x"}}, Rel::Gt, Int(0));
    TheoryAtom lt1 = make_sum_atom({Term{Int(1), "x"}}, Rel::Lt, Int(1));
    auto open = sat_lin_rat({pos, lt1});
    REQUIRE(open.has_value());
    Rat v = *as_rational(*open->get("x"));
    CHECK(v > 0);
    CHECK(v < 1);

    CHECK(sat_lin_rat({}).has_value());
}

TEST_CASE("rational solving vs integer solving on random sets") {
    Rng rng(19);
    Bounds box;
    box.lo = -3;
    box.hi = 3;
    for (int round = 0; round < 250; ++round) {
        std::set<TheoryAtom> atoms = random_sum_set(rng, 3);
        auto rat = sat_lin_rat(atoms);
        if (rat) {
            for (const auto& s : atoms) {
                CHECK(den_contains(s, *rat, NumericDomain::Rat));
            }
        }
        // Integer solvability implies rational solvability.
        if (sat_lin_int(atoms, box)) {
            CHECK(rat.has_value());
        }
    }
}

TEST_CASE("rational disequality case splits") {
    TheoryAtom base = make_sum_atom({Term{Int(1), "x"}, Term{Int(1), "y"}}, Rel::Eq, Int(0));
    std::set<TheoryAtom> atoms = {base};
    for (int i = 0; i < 3; ++i) {
        atoms.insert(make_sum_atom({Term{Int(1), "x"}, Term{Int(i + 2), "y"}}, Rel::Ne, Int(i)));
    }
    auto witness = sat_lin_rat(atoms);
    REQUIRE(witness.has_value());
    for (const auto& s : atoms) {
        CHECK(den_contains(s, *witness, NumericDomain::Rat));
    }
    CHECK_THROWS_AS(sat_lin_rat(atoms, 2), CaseSplitLimit);
}

TEST_CASE("handles wire the matching solver and flags") {
    Bounds box;
    box.lo = -5;
    box.hi = 5;
    TheoryHandle L = make_handle(TheoryKind::LinInt, box);
    CHECK(L.absolute_complement);
    CHECK(L.is_satisfiable({s1(), s2()}));
    CHECK_FALSE(L.is_satisfiable({s1(), s3()}));
    CHECK(L.vars_of(s1()) == std::set<std::string>{"x", "y"});

    TheoryHandle D = make_handle(TheoryKind::DiffInt);
    TheoryAtom d = make_diff_atom("x", "y", Int(3));
    CHECK(D.complement(d) == make_diff_atom("y", "x", Int(-4)));
    CHECK(D.is_satisfiable({d}));

    TheoryHandle R = make_handle(TheoryKind::LinRat);
    CHECK(R.is_satisfiable({}));
    TheoryAtom twice = make_sum_atom({Term{Int(2), "x"}}, Rel::Eq, Int(1));
    CHECK(R.is_satisfiable({twice}));
    CHECK_FALSE(L.is_satisfiable({twice}));
}

TEST_CASE("boxed satisfiability equals brute-force intersection") {
    Rng rng(29);
    Bounds box;
    box.lo = -3;
    box.hi = 3;
    for (int round = 0; round < 400; ++round) {
        std::set<TheoryAtom> atoms = random_sum_set(rng, 4);
        auto fast = sat_lin_int(atoms, box);
        auto brute = oracle_sat(atoms, -3, 3);
        CHECK(fast.has_value() == brute.has_value());
        if (fast) {
            for (const auto& s : atoms) {
                CHECK(den_contains(s, *fast));
            }
        }
    }
}
