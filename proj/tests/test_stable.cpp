#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace amt;
using namespace amt::test;

namespace {

TheoryHandle lin(long long lo = -5, long long hi = 5) {
    Bounds b;
    b.lo = lo;
    b.hi = hi;
    return make_handle(TheoryKind::LinInt, b);
}

AtomSet atoms(std::initializer_list<Atom> list) { return AtomSet(list); }

} // namespace

TEST_CASE("reduct") {
    Program p = parse_program("b :- not a.");
    Program dropped = reduct(p, atoms({Atom::regular("a")}));
    CHECK(dropped.rules.empty());
    Program kept = reduct(p, {});
    REQUIRE(kept.rules.size() == 1);
    CHECK(kept.rules[0].is_fact());
    CHECK(kept.rules[0].head == Atom::regular("b"));

    Program positive = parse_program("a.\nb :- a.");
    Program same = reduct(positive, atoms({Atom::regular("a"), Atom::regular("b")}));
    CHECK(same.rules.size() == 2);
    for (const auto& r : same.rules) {
        CHECK(r.nbody.empty());
    }
}

TEST_CASE("least model") {
    CHECK(least_model(parse_program("a.\nb :- a.")) == atoms({Atom::regular("a"), Atom::regular("b")}));
    CHECK(least_model(parse_program("")).empty());

    // The transformed program for solution {s1,s2}: facts flow through.
    std::string text = "a :- &sum{x;y} = 4.\n&sum{y;z} = 2 :- a.\n&sum{x;y} = 4.\n";
    CHECK(least_model(parse_program(text)) ==
          atoms({Atom::regular("a"), Atom::theory(s1()), Atom::theory(s2())}));
}

TEST_CASE("stable models of classic programs") {
    auto models = stable_models(parse_program("a :- not b.\nb :- not a."));
    REQUIRE(models.size() == 2);
    CHECK(std::find(models.begin(), models.end(), atoms({Atom::regular("a")})) != models.end());
    CHECK(std::find(models.begin(), models.end(), atoms({Atom::regular("b")})) != models.end());

    models = stable_models(parse_program("a :- a."));
    REQUIRE(models.size() == 1);
    CHECK(models[0].empty());

    // The transformed program for solution {s3} keeps exactly X2.
    std::string text = "a :- &sum{x;y} = 4.\n&sum{y;z} = 2 :- a.\n&sum{x;y} != 4.\n"
                       ":- &sum{y;z} = 2.\n:- &sum{y;z} != 2.\n";
    models = stable_models(parse_program(text));
    REQUIRE(models.size() == 1);
    CHECK(models[0] == atoms({Atom::theory(s3())}));

    CHECK_THROWS_AS(stable_models(parse_program("a :- b."), 1), TooManyAtoms);
}

TEST_CASE("stable models respect constraints") {
    auto models = stable_models(parse_program("a :- not b.\nb :- not a.\n:- a."));
    REQUIRE(models.size() == 1);
    CHECK(models[0] == atoms({Atom::regular("b")}));
    CHECK(stable_models(parse_program(":- .")).empty());
    CHECK(stable_models(parse_program(":- not a.")).empty());
}

TEST_CASE("the transformation adds facts and guards") {
    Program p = paper_program();

    Program t1 = transform(p, {s3()}, p.externals);
    CHECK(t1.rules.size() == 5);
    bool fact_s3 = false;
    int guards = 0;
    for (const auto& r : t1.rules) {
        if (r.is_fact() && r.head == Atom::theory(s3())) {
            fact_s3 = true;
        }
        if (r.is_constraint() && !r.pbody.empty()) {
            const Atom& a = *r.pbody.begin();
            CHECK((a == Atom::theory(s2()) || a == Atom::theory(s4())));
            ++guards;
        }
    }
    CHECK(fact_s3);
    CHECK(guards == 2);

    Program t2 = transform(p, {s1(), s2()}, p.externals);
    CHECK(t2.rules.size() == 4);
    bool fact_s1 = false;
    bool guard_s4 = false;
    for (const auto& r : t2.rules) {
        fact_s1 |= r.is_fact() && r.head == Atom::theory(s1());
        guard_s4 |= r.is_constraint() && r.pbody.count(Atom::theory(s4())) == 1;
    }
    CHECK(fact_s1);
    CHECK(guard_s4);

    Program empty = infer_partition(parse_program(""));
    CHECK(transform(empty, {}, {}).rules.empty());
}

TEST_CASE("stable models modulo the theory on the running example") {
    Program p = paper_program();
    auto models = te_stable_models(p, lin());
    REQUIRE(models.size() == 2);

    const AtomSet x1 = atoms({Atom::regular("a"), Atom::theory(s1()), Atom::theory(s2())});
    const AtomSet x2 = atoms({Atom::theory(s3())});
    CHECK(models[0].atoms == x1);
    CHECK(models[1].atoms == x2);

    // X1 is justified by exactly {s1,s2}; X2 by {s3}, {s3,s2}, {s3,s4}.
    CHECK(models[0].solutions.size() == 1);
    CHECK(models[0].solutions[0].solution == std::set<TheoryAtom>{s1(), s2()});
    CHECK(models[1].solutions.size() == 3);
    for (const auto& sw : models[1].solutions) {
        CHECK(sw.solution.count(s3()) == 1);
    }

    // Witnesses certify the completed solution sets.
    for (const auto& m : models) {
        for (const auto& sw : m.solutions) {
            REQUIRE(sw.witness.has_value());
            for (const auto& s : sw.solution) {
                CHECK(den_contains(s, *sw.witness));
            }
        }
    }
}

TEST_CASE("founded complements never enter a stable model") {
    Program p = paper_program();
    for (const auto& m : te_stable_models(p, lin())) {
        CHECK(m.atoms.count(Atom::theory(s4())) == 0);
    }
}

TEST_CASE("contradictory external constraints leave no models") {
    Program p = infer_partition(parse_program(":- &sum{1*x} = 0.\n:- &sum{1*x} != 0."));
    CHECK(te_stable_models(p, lin()).empty());
}

TEST_CASE("the empty program has the empty stable model") {
    Program p = infer_partition(parse_program(""));
    auto models = te_stable_models(p, lin());
    REQUIRE(models.size() == 1);
    CHECK(models[0].atoms.empty());
}

TEST_CASE("complete-only solution enumeration loses no stable models") {
    // Over small universes, running the transformation for every
    // subset-solution reproduces the complete-only result.
    TheoryHandle th = lin(-4, 4);
    for (unsigned long long seed = 0; seed < 60; ++seed) {
        Program p = infer_partition(parse_program(corpus_program(seed)));
        if (p.universe.size() > 6) {
            continue;
        }
        std::set<AtomSet> complete_only;
        for (const auto& m : te_stable_models(p, th)) {
            complete_only.insert(m.atoms);
        }
        std::set<AtomSet> all;
        std::vector<TheoryAtom> universe(p.universe.begin(), p.universe.end());
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << universe.size()); ++mask) {
            std::set<TheoryAtom> s;
            for (std::size_t i = 0; i < universe.size(); ++i) {
                if ((mask >> i) & 1) {
                    s.insert(universe[i]);
                }
            }
            if (!is_solution(s, p.externals, th)) {
                continue;
            }
            for (const auto& x : stable_models(transform(p, s, p.externals))) {
                all.insert(x);
            }
        }
        CHECK(complete_only == all);
    }
}

TEST_CASE("every returned model is a classical model of its transformed program") {
    TheoryHandle th = lin(-4, 4);
    for (unsigned long long seed = 100; seed < 130; ++seed) {
        Program p = infer_partition(parse_program(corpus_program(seed)));
        for (const auto& m : te_stable_models(p, th)) {
            for (const auto& sw : m.solutions) {
                Program t = transform(p, sw.solution, p.externals);
                for (const auto& r : t.rules) {
                    bool pos = std::all_of(r.pbody.begin(), r.pbody.end(),
                                           [&](const Atom& a) { return m.atoms.count(a) != 0; });
                    bool neg = std::none_of(r.nbody.begin(), r.nbody.end(),
                                            [&](const Atom& a) { return m.atoms.count(a) != 0; });
                    if (pos && neg) {
                        CHECK((r.head.has_value() && m.atoms.count(*r.head) == 1));
                    }
                }
            }
        }
    }
}
