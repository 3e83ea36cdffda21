#pragma once

#include <amt/syntax.hpp>
#include <amt/theory.hpp>
#include <amt/valuation.hpp>

#include <optional>
#include <set>
#include <vector>

namespace amt {

using AtomSet = std::set<Atom>;

// Gelfond-Lifschitz reduct: drops rules whose negative body intersects x and
// strips the negative bodies of the rest.
Program reduct(const Program& p, const AtomSet& x);

// Least fixpoint of the one-step consequence operator. Requires empty
// negative bodies; constraint rules never derive anything.
AtomSet least_model(const Program& p);

// All stable models, exhaustively over subsets of the occurring atoms.
// Throws TooManyAtoms past the cap.
std::vector<AtomSet> stable_models(const Program& p, std::size_t max_atoms = 22);

// The program transformation: P plus a fact for every external solution atom
// and a constraint against every universe atom outside solution and
// externals. The result is treated as a plain program; its partition fields
// are not meaningful.
Program transform(const Program& p, const std::set<TheoryAtom>& solution, const std::set<TheoryAtom>& externals);

struct SolutionWitness {
    std::set<TheoryAtom> solution;
    std::optional<Valuation> witness;
};

// One stable model with every solution that produces it. Several solutions
// may stand behind the same atom set; deduplication keys on the atoms only.
struct TeModel {
    AtomSet atoms;
    std::vector<SolutionWitness> solutions;
};

struct TeOptions {
    std::size_t max_atoms = 22;
    std::size_t max_universe = 20;
};

// Stable models modulo the theory: for every complete solution S over the
// program's universe, the stable models of the transformed program.
std::vector<TeModel> te_stable_models(const Program& p, const TheoryHandle& th, const TeOptions& opts = {});

} // namespace amt
