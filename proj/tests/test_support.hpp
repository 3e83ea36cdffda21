#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// re-implement denotation arithmetic and satisfiability by plain enumeration
// so they never share a code path with the solvers they check.

#include <amt/driver.hpp>
#include <amt/htc.hpp>
#include <amt/linear.hpp>
#include <amt/stable.hpp>
#include <amt/syntax.hpp>
#include <amt/theory.hpp>
#include <amt/translate.hpp>

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace amt::test {

using Assign = std::map<std::string, long long>;

// Independent denotation check over total integer assignments.
inline bool oracle_atom_holds(const TheoryAtom& s, const Assign& a) {
    long long sum = 0;
    for (const auto& term : s.terms) {
        auto it = a.find(term.var);
        if (it == a.end()) {
            return false;
        }
        sum += static_cast<long long>(term.coeff) * it->second;
    }
    long long rhs = static_cast<long long>(s.rhs);
    switch (s.rel) {
        case Rel::Le: return sum <= rhs;
        case Rel::Eq: return sum == rhs;
        case Rel::Ne: return sum != rhs;
        case Rel::Lt: return sum < rhs;
        case Rel::Gt: return sum > rhs;
        case Rel::Ge: return sum >= rhs;
    }
    return false;
}

inline std::vector<std::string> vars_of_set(const std::set<TheoryAtom>& atoms) {
    std::set<std::string> vars;
    for (const auto& s : atoms) {
        auto vs = s.vars();
        vars.insert(vs.begin(), vs.end());
    }
    return {vars.begin(), vars.end()};
}

inline void for_each_assignment(const std::vector<std::string>& vars, long long lo, long long hi,
                                const std::function<bool(const Assign&)>& fn) {
    Assign a;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == vars.size()) {
            return fn(a);
        }
        for (long long v = lo; v <= hi; ++v) {
            a[vars[i]] = v;
            if (self(self, i + 1)) {
                return true;
            }
        }
        a.erase(vars[i]);
        return false;
    };
    rec(rec, 0);
}

// Brute-force intersection of denotations over the box.
inline std::optional<Assign> oracle_sat(const std::set<TheoryAtom>& atoms, long long lo, long long hi) {
    std::optional<Assign> found;
    for_each_assignment(vars_of_set(atoms), lo, hi, [&](const Assign& a) {
        for (const auto& s : atoms) {
            if (!oracle_atom_holds(s, a)) {
                return false;
            }
        }
        found = a;
        return true;
    });
    return found;
}

// den(S) as an explicit assignment list over the box and variable set.
inline std::vector<Assign> oracle_den(const std::set<TheoryAtom>& atoms, const std::vector<std::string>& vars,
                                      long long lo, long long hi) {
    std::vector<Assign> out;
    for_each_assignment(vars, lo, hi, [&](const Assign& a) {
        for (const auto& s : atoms) {
            if (!oracle_atom_holds(s, a)) {
                return false;
            }
        }
        out.push_back(a);
        return false;
    });
    return out;
}

inline Valuation to_valuation(const Assign& a) {
    Valuation v;
    for (const auto& [var, value] : a) {
        v.set(var, Value(Int(value)));
    }
    return v;
}

struct Rng {
    std::mt19937_64 g;
    explicit Rng(unsigned long long seed) : g(seed ^ 0xA5A5A5A5DEADBEEFULL) {}
    int below(int n) { return static_cast<int>(g() % static_cast<unsigned long long>(n)); }
};

inline TheoryAtom random_sum_atom(Rng& rng, int nvars = 3, int max_coeff = 2, int max_const = 4) {
    static const std::vector<std::string> pool = {"x", "y", "z"};
    int nterms = 1 + rng.below(2);
    std::vector<Term> terms;
    for (int i = 0; i < nterms; ++i) {
        int c = rng.below(2 * max_coeff);
        int coeff = c < max_coeff ? c - max_coeff : c - max_coeff + 1;
        terms.push_back(Term{Int(coeff), pool[rng.below(nvars)]});
    }
    const Rel rels[] = {Rel::Le, Rel::Eq, Rel::Ne, Rel::Lt, Rel::Gt, Rel::Ge};
    return make_sum_atom(std::move(terms), rels[rng.below(6)], Int(rng.below(2 * max_const + 1) - max_const));
}

inline TheoryAtom random_diff_atom(Rng& rng, int nvars = 3, int max_const = 4) {
    static const std::vector<std::string> pool = {"x", "y", "z"};
    return make_diff_atom(pool[rng.below(nvars)], pool[rng.below(nvars)],
                          Int(rng.below(2 * max_const + 1) - max_const));
}

inline std::set<TheoryAtom> random_sum_set(Rng& rng, int max_atoms, int nvars = 3) {
    std::set<TheoryAtom> out;
    int n = 1 + rng.below(max_atoms);
    for (int i = 0; i < n; ++i) {
        out.insert(random_sum_atom(rng, nvars));
    }
    return out;
}

// The running example: s1 external with complement s3, s2 founded with
// complement s4.
inline TheoryAtom s1() { return make_sum_atom({Term{Int(1), "x"}, Term{Int(1), "y"}}, Rel::Eq, Int(4)); }
inline TheoryAtom s2() { return make_sum_atom({Term{Int(1), "y"}, Term{Int(1), "z"}}, Rel::Eq, Int(2)); }
inline TheoryAtom s3() { return complement(s1()); }
inline TheoryAtom s4() { return complement(s2()); }

inline Program paper_program() { return infer_partition(parse_program(example_program_text())); }

inline Formula F_lin(const TheoryAtom& s) { return Formula::atom(ConstraintAtom::linear(s)); }
inline Formula F_prop(const std::string& name) { return Formula::atom(ConstraintAtom::prop(name)); }
inline Formula F_def(const std::string& name) { return Formula::atom(ConstraintAtom::def_int(name)); }

inline Formula random_formula(Rng& rng, const std::vector<ConstraintAtom>& atoms, int depth) {
    if (depth == 0 || rng.below(3) == 0) {
        if (rng.below(8) == 0) {
            return Formula::bottom();
        }
        return Formula::atom(atoms[rng.below(static_cast<int>(atoms.size()))]);
    }
    switch (rng.below(4)) {
        case 0: return Formula::conj(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1));
        case 1: return Formula::disj(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1));
        case 2: return Formula::impl(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1));
        default: return Formula::neg(random_formula(rng, atoms, depth - 1));
    }
}

// A random h <= t pair over the signature box.
inline Interpretation random_interpretation(Rng& rng, const Signature& sig) {
    Valuation t;
    for (const auto& [name, dom] : sig.vars) {
        if (rng.below(3) == 0) {
            continue; // u
        }
        if (dom.kind == VarDomain::Kind::Prop) {
            t.set(name, Value(Truth{}));
        } else {
            long long width = dom.hi - dom.lo + 1;
            t.set(name, Value(Int(dom.lo + rng.below(static_cast<int>(width)))));
        }
    }
    Valuation h;
    for (const auto& [name, value] : t.defined) {
        if (rng.below(2) == 0) {
            h.set(name, value);
        }
    }
    return Interpretation{std::move(h), std::move(t)};
}

} // namespace amt::test
