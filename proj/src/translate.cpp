#include <amt/translate.hpp>

#include <amt/linear.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

namespace amt {

namespace {

using AtomMapper = std::function<Formula(const Atom&)>;

Formula map_regular(const Atom& a) { return Formula::atom(ConstraintAtom::prop(a.name())); }

Formula map_direct(const Atom& a) {
    if (a.is_regular()) {
        return map_regular(a);
    }
    return Formula::atom(ConstraintAtom::linear(a.theory_atom()));
}

Formula rule_formula(const Rule& r, const AtomMapper& map) {
    std::optional<Formula> body;
    auto add = [&](Formula f) { body = body ? Formula::conj(std::move(*body), std::move(f)) : std::move(f); };
    for (const auto& a : r.pbody) {
        add(map(a));
    }
    for (const auto& a : r.nbody) {
        add(Formula::neg(map(a)));
    }
    Formula head = r.head ? map(*r.head) : Formula::bottom();
    return body ? Formula::impl(std::move(*body), std::move(head)) : head;
}

Formula body_formula_or_top(const Rule& r, const AtomMapper& map) {
    std::optional<Formula> body;
    for (const auto& a : r.pbody) {
        body = body ? Formula::conj(std::move(*body), map(a)) : map(a);
    }
    for (const auto& a : r.nbody) {
        Formula lit = Formula::neg(map(a));
        body = body ? Formula::conj(std::move(*body), std::move(lit)) : std::move(lit);
    }
    return body ? *body : Formula::top();
}

void require_partition(const Program& p, const char* who) {
    if (!p.partitioned) {
        throw Error(std::string(who) + " requires an inferred partition");
    }
}

// One choice axiom per complementary pair, disjuncts in atom order.
std::vector<std::pair<TheoryAtom, TheoryAtom>>
complement_pairs(const std::set<TheoryAtom>& atoms, const std::function<TheoryAtom(const TheoryAtom&)>& comp) {
    std::vector<std::pair<TheoryAtom, TheoryAtom>> out;
    std::set<TheoryAtom> seen;
    for (const auto& s : atoms) {
        if (seen.count(s) != 0) {
            continue;
        }
        TheoryAtom c = comp(s);
        seen.insert(s);
        seen.insert(c);
        out.emplace_back(std::min(s, c), std::max(s, c));
    }
    return out;
}

Signature signature_for(const TheorySet& theory, const Program& p, const Bounds& bounds) {
    Signature sig = infer_signature({&theory}, bounds);
    for (const auto& name : p.regulars) {
        sig.declare_prop(name);
    }
    return sig;
}

std::string mangle_aux_name(const TheoryAtom& s) {
    std::string out = "__p_";
    for (char c : pretty(s)) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out.push_back(c);
        } else if (c != ' ') {
            out.push_back('_');
        }
    }
    return out;
}

} // namespace

TheorySet tau_program(const Program& p) {
    TheorySet out;
    for (const auto& r : p.rules) {
        out.insert(rule_formula(r, map_direct));
    }
    return out;
}

TranslationOutput tau(const Program& p, const TheoryHandle& th, const Bounds& bounds) {
    require_partition(p, "tau");
    TranslationOutput out;
    out.theory = tau_program(p);
    for (const auto& [s, c] : complement_pairs(p.externals, th.complement)) {
        out.theory.insert(Formula::disj(Formula::atom(ConstraintAtom::linear(s)),
                                        Formula::atom(ConstraintAtom::linear(c))));
    }
    out.signature = signature_for(out.theory, p, bounds);
    for (const auto& name : p.regulars) {
        out.atom_map.emplace(Atom::regular(name), ConstraintAtom::prop(name));
    }
    for (const auto& s : p.universe) {
        out.atom_map.emplace(Atom::theory(s), ConstraintAtom::linear(s));
    }
    return out;
}

TranslationOutput tau2(const Program& p, const TheoryHandle& th, const Bounds& bounds) {
    require_partition(p, "tau2");
    TranslationOutput out;

    std::set<std::string> taken = p.regulars;
    for (const auto& s : p.universe) {
        auto vars = s.vars();
        taken.insert(vars.begin(), vars.end());
    }
    for (const auto& s : p.universe) {
        std::string name = mangle_aux_name(s);
        while (taken.count(name) != 0) {
            name.push_back('_');
        }
        taken.insert(name);
        out.aux_props.emplace(s, name);
    }

    for (const auto& f : phi_theory(p.universe, p.externals, th)) {
        out.theory.insert(f);
    }

    // p(P): the propositional copy of the rules.
    auto map_aux = [&](const Atom& a) {
        if (a.is_regular()) {
            return map_regular(a);
        }
        return Formula::atom(ConstraintAtom::prop(out.aux_props.at(a.theory_atom())));
    };
    for (const auto& r : p.rules) {
        out.theory.insert(rule_formula(r, map_aux));
    }

    // Bridge: externals push their truth onto p_s, founded p_s may not hold
    // against a false constraint.
    for (const auto& s : p.universe) {
        Formula constraint = Formula::atom(ConstraintAtom::linear(s));
        Formula aux = Formula::atom(ConstraintAtom::prop(out.aux_props.at(s)));
        if (p.externals.count(s) != 0) {
            out.theory.insert(Formula::impl(constraint, aux));
        } else {
            out.theory.insert(Formula::impl(Formula::conj(Formula::neg(constraint), aux), Formula::bottom()));
        }
    }

    out.signature = signature_for(out.theory, p, bounds);
    for (const auto& name : p.regulars) {
        out.atom_map.emplace(Atom::regular(name), ConstraintAtom::prop(name));
    }
    for (const auto& s : p.universe) {
        out.atom_map.emplace(Atom::theory(s), ConstraintAtom::prop(out.aux_props.at(s)));
    }
    return out;
}

TheorySet phi_theory(const std::set<TheoryAtom>& universe, const std::set<TheoryAtom>& externals,
                     const TheoryHandle& th) {
    TheorySet out;
    for (const auto& s : universe) {
        Formula a = Formula::atom(ConstraintAtom::linear(s));
        out.insert(Formula::disj(a, Formula::neg(a)));
    }
    for (const auto& s : externals) {
        out.insert(Formula::impl(Formula::neg(Formula::atom(ConstraintAtom::linear(s))),
                                 Formula::atom(ConstraintAtom::linear(th.complement(s)))));
    }
    return out;
}

AtomSet project_equilibrium(const Valuation& t, const Program& p) {
    require_partition(p, "project_equilibrium");
    AtomSet x;
    for (const auto& name : p.regulars) {
        if (atom_den_contains(ConstraintAtom::prop(name), t)) {
            x.insert(Atom::regular(name));
        }
    }
    for (const auto& s : p.externals) {
        if (den_contains(s, t, NumericDomain::Int)) {
            x.insert(Atom::theory(s));
        }
    }
    for (const auto& r : p.rules) {
        if (!r.head || !r.head->is_theory()) {
            continue;
        }
        const TheoryAtom& s = r.head->theory_atom();
        if (p.externals.count(s) != 0 || x.count(*r.head) != 0) {
            continue;
        }
        if (eval(body_formula_or_top(r, map_direct), t, t)) {
            x.insert(*r.head);
        }
    }
    return x;
}

AtomSet project_aux(const Valuation& t, const Program& p, const TranslationOutput& tr) {
    AtomSet x;
    for (const auto& name : p.regulars) {
        if (atom_den_contains(ConstraintAtom::prop(name), t)) {
            x.insert(Atom::regular(name));
        }
    }
    for (const auto& [s, aux] : tr.aux_props) {
        if (atom_den_contains(ConstraintAtom::prop(aux), t)) {
            x.insert(Atom::theory(s));
        }
    }
    return x;
}

TheorySet defined_variant(const Program& p) {
    require_partition(p, "defined_variant");
    TheorySet out = tau_program(p);
    for (const auto& s : p.externals) {
        for (const auto& var : s.vars()) {
            out.insert(Formula::atom(ConstraintAtom::def_int(var)));
        }
    }
    return out;
}

std::array<TheorySet, 3> strong_equiv_theories(const Program& p) {
    require_partition(p, "strong_equiv_theories");
    TheorySet base = tau_program(p);

    TheorySet first = base;
    for (const auto& [s, c] : complement_pairs(p.universe, [](const TheoryAtom& s) { return complement(s); })) {
        first.insert(Formula::disj(Formula::atom(ConstraintAtom::linear(s)),
                                   Formula::atom(ConstraintAtom::linear(c))));
    }

    TheorySet second = base;
    for (const auto& s : p.externals) {
        Formula a = Formula::atom(ConstraintAtom::linear(s));
        second.insert(Formula::disj(a, Formula::neg(a)));
    }
    for (const auto& s : p.externals) {
        for (const auto& var : s.vars()) {
            second.insert(Formula::atom(ConstraintAtom::def_int(var)));
        }
    }

    TheorySet third = defined_variant(p);
    return {std::move(first), std::move(second), std::move(third)};
}

Program with_all_external(Program p) {
    std::set<TheoryAtom> atoms = p.head_theory_atoms();
    for (const auto& s : p.body_theory_atoms()) {
        atoms.insert(s);
    }
    atoms.insert(p.directives.begin(), p.directives.end());
    std::set<TheoryAtom> universe;
    for (const auto& s : atoms) {
        universe.insert(s);
        universe.insert(complement(s));
    }
    p.universe = universe;
    p.externals = universe;
    p.founded.clear();
    p.partitioned = true;
    return p;
}

Rule shift_head(const Rule& r, ShiftMode mode) {
    if (!r.head || !r.head->is_theory()) {
        throw HeadNotTheory("shift_head requires a theory-atom head");
    }
    Rule out;
    out.head = std::nullopt;
    out.pbody = r.pbody;
    out.nbody = r.nbody;
    if (mode == ShiftMode::DoubleNeg) {
        out.nbody.insert(*r.head);
    } else {
        out.pbody.insert(Atom::theory(complement(r.head->theory_atom())));
    }
    return out;
}

} // namespace amt
