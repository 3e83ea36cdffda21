#pragma once

#include <amt/syntax.hpp>
#include <amt/theory.hpp>
#include <amt/valuation.hpp>

#include <optional>
#include <set>
#include <variant>

namespace amt {

// Closed integer intervals bounding the search box of the integer linear
// theory (and of HT_c enumeration). The box is an honest restriction: results
// obtained under it are reported as relative to these bounds.
struct Bounds {
    long long lo = -10;
    long long hi = 10;
    std::map<std::string, std::pair<long long, long long>> per_var;

    std::pair<long long, long long> of(const std::string& var) const {
        auto it = per_var.find(var);
        return it == per_var.end() ? std::make_pair(lo, hi) : it->second;
    }
};

// Syntactic complement. Sum atoms flip the relation symbol; difference atoms
// x-y<=k rewrite to y-x<=-k-1, which has exactly the complementary
// denotation over the integers. Involutive for both kinds.
TheoryAtom complement(const TheoryAtom& atom);

enum class NumericDomain { Int, Rat };

// Denotation membership: every variable of the atom is defined with an
// integral (resp. rational) value and the linear relation holds.
bool den_contains(const TheoryAtom& atom, const Valuation& v, NumericDomain dom = NumericDomain::Int);

// Folds one variable's value into the constant. Yields a truth constant when
// the atom becomes ground.
std::variant<TheoryAtom, bool> substitute(const TheoryAtom& atom, const std::string& var, const Int& value);

// Exhaustive search over the box; complete relative to it, bounded-incomplete
// w.r.t. the full integers. Throws BoxTooLarge past max_cells.
std::optional<Valuation> sat_lin_int(const std::set<TheoryAtom>& atoms, const Bounds& bounds,
                                     long long max_cells = 10'000'000);

// Exact decision for difference constraints by negative-cycle detection;
// a witness is read off the shortest-path potentials.
std::optional<Valuation> sat_diff(const std::set<TheoryAtom>& atoms);

// Exact decision over the rationals by Fourier-Motzkin elimination with
// strict/non-strict bookkeeping; disequalities case-split into < and >.
std::optional<Valuation> sat_lin_rat(const std::set<TheoryAtom>& atoms, long long max_case_splits = 1 << 16);

enum class TheoryKind { LinInt, DiffInt, LinRat };

std::string_view theory_name(TheoryKind kind);

struct SolverCaps {
    long long max_cells = 10'000'000;
    long long max_case_splits = 1 << 16;
};

TheoryHandle make_handle(TheoryKind kind, Bounds bounds = {}, SolverCaps caps = {});

} // namespace amt
