#pragma once

#include <amt/htc.hpp>
#include <amt/stable.hpp>
#include <amt/syntax.hpp>
#include <amt/theory.hpp>

#include <array>
#include <map>

namespace amt {

struct TranslationOutput {
    TheorySet theory;
    Signature signature;
    std::map<Atom, ConstraintAtom> atom_map;
    // tau2 only: the auxiliary proposition variable of each universe atom.
    std::map<TheoryAtom, std::string> aux_props;
};

// Atom-level translation of the rules: one implication per rule, regular
// atoms becoming propositional constraint atoms and theory atoms linear
// constraint atoms.
TheorySet tau_program(const Program& p);

// The direct translation: tau_program plus one choice axiom
// tau(s) | tau(comp(s)) per complementary pair of external atoms.
TranslationOutput tau(const Program& p, const TheoryHandle& th, const Bounds& bounds);

// The auxiliary-proposition translation: choices and strictness implications
// over constraint atoms, a propositional copy of the program over fresh
// p_s variables, and bridge formulas tying the two levels together.
TranslationOutput tau2(const Program& p, const TheoryHandle& th, const Bounds& bounds);

// The solution-generating fragment on its own: one choice per universe atom
// and one strictness implication per external. Its equilibrium models
// project onto the complete solutions with witnesses in the box.
TheorySet phi_theory(const std::set<TheoryAtom>& universe, const std::set<TheoryAtom>& externals,
                     const TheoryHandle& th);

// Projects an equilibrium valuation of tau(P) onto a candidate stable model:
// regular and external atoms by denotation membership, founded atoms by a
// firing rule body.
AtomSet project_equilibrium(const Valuation& t, const Program& p);

// Projects an equilibrium valuation of tau2(P) through the p_s variables.
AtomSet project_aux(const Valuation& t, const Program& p, const TranslationOutput& tr);

// tau_program plus def(x) for every variable of an external atom; with the
// choice axioms this forms the strongly equivalent triple below.
TheorySet defined_variant(const Program& p);

// The three pairwise strongly equivalent theories: the direct translation
// with every universe atom treated as external, the variant with plain
// choices plus def atoms, and the def-atoms-only variant.
std::array<TheorySet, 3> strong_equiv_theories(const Program& p);

// Reinterprets every universe atom as external, dropping the founded side;
// the head/body occurrence restriction is not enforced in this mode.
Program with_all_external(Program p);

enum class ShiftMode { DoubleNeg, Complement };

// Moves a theory-atom head into the body, either negated or complemented.
// Sound when the head variables are forced defined. Throws HeadNotTheory.
Rule shift_head(const Rule& r, ShiftMode mode);

} // namespace amt
