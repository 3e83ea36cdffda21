#pragma once

#include <amt/errors.hpp>
#include <amt/syntax.hpp>
#include <amt/valuation.hpp>

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace amt {

// A pluggable theory: the abstract triple (atoms, satisfiable sets,
// complement) plus the structure hooks needed by the translations. The
// satisfiability oracle is a predicate on finite atom sets since the set of
// satisfiable sets is infinite for every shipped theory.
struct TheoryHandle {
    std::string name;
    std::function<TheoryAtom(const TheoryAtom&)> complement;
    std::function<std::set<std::string>(const TheoryAtom&)> vars_of;
    std::function<bool(const std::set<TheoryAtom>&)> is_satisfiable;
    // Optional: a concrete assignment certifying a satisfiable set.
    std::function<std::optional<Valuation>(const std::set<TheoryAtom>&)> witness;
    // Optional: denotation membership for structured theories.
    std::function<bool(const TheoryAtom&, const Valuation&)> den_membership;
    // den(comp(s)) is the exact set complement of den(s).
    bool absolute_complement = false;
    // Closed satisfiable sets are admissible; no shipped theory sets this.
    bool paraconsistent = false;
};

// No atom occurs together with its complement.
bool is_consistent(const std::set<TheoryAtom>& atoms, const TheoryHandle& th);

// Every universe atom is decided. The universe must be closed under
// complement; throws UniverseNotClosed otherwise.
bool is_complete(const std::set<TheoryAtom>& atoms, const std::set<TheoryAtom>& universe, const TheoryHandle& th);

bool is_closed(const std::set<TheoryAtom>& atoms, const TheoryHandle& th);

// S ∪ comp(externals \ S): adds the complement of every undecided external.
std::set<TheoryAtom> complete_wrt(const std::set<TheoryAtom>& atoms, const std::set<TheoryAtom>& externals,
                                  const TheoryHandle& th);

// S is a solution when its completion w.r.t. the externals is satisfiable.
bool is_solution(const std::set<TheoryAtom>& atoms, const std::set<TheoryAtom>& externals, const TheoryHandle& th);

// All complete solutions S over a finite universe closed under complement.
// Only complete candidates are generated: per complementary pair the subset
// may contain either member or both, and pairs with an external member must
// contain at least one. Deterministic order; cap guards the 4^pairs blowup.
std::vector<std::set<TheoryAtom>>
enumerate_complete_solutions(const std::set<TheoryAtom>& universe, const std::set<TheoryAtom>& externals,
                             const TheoryHandle& th, std::size_t max_universe = 20);

// Entailment via the complement reduction: S entails s iff S ∪ {comp(s)} is
// unsatisfiable. Requires an absolute complement; throws NotAbsolute.
bool entails(const std::set<TheoryAtom>& atoms, const TheoryAtom& s, const TheoryHandle& th);

} // namespace amt
