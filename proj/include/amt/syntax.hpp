#pragma once

#include <amt/errors.hpp>
#include <amt/numeric.hpp>

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace amt {

enum class Rel { Le, Eq, Ne, Lt, Gt, Ge };

std::string_view rel_text(Rel rel);

// Complement table for the relation symbols: <= and >, = and !=, < and >=.
Rel rel_complement(Rel rel);

enum class AtomKind { Sum, Diff };

struct Term {
    Int coeff;
    std::string var;
};

int cmp3_term(const Term& a, const Term& b);
inline bool operator==(const Term& a, const Term& b) { return cmp3_term(a, b) == 0; }

// A linear or difference constraint expression. Identity is syntactic: the
// term list is order-sensitive, so "x+y=4" and "y+x=4" are distinct atoms
// unless the parser was asked to normalize.
struct TheoryAtom {
    AtomKind kind = AtomKind::Sum;
    std::vector<Term> terms;
    Rel rel = Rel::Le;
    Int rhs;

    std::set<std::string> vars() const;
    std::string text() const;
};

int cmp3_atom(const TheoryAtom& a, const TheoryAtom& b);
inline bool operator==(const TheoryAtom& a, const TheoryAtom& b) { return cmp3_atom(a, b) == 0; }
inline bool operator!=(const TheoryAtom& a, const TheoryAtom& b) { return cmp3_atom(a, b) != 0; }
inline bool operator<(const TheoryAtom& a, const TheoryAtom& b) { return cmp3_atom(a, b) < 0; }

TheoryAtom make_sum_atom(std::vector<Term> terms, Rel rel, Int rhs);
TheoryAtom make_diff_atom(std::string x, std::string y, Int rhs);

// Regular atoms and theory atoms live in disjoint namespaces.
struct Atom {
    static Atom regular(std::string name) { return Atom{std::move(name)}; }
    static Atom theory(TheoryAtom atom) { return Atom{std::move(atom)}; }

    bool is_regular() const { return std::holds_alternative<std::string>(repr); }
    bool is_theory() const { return !is_regular(); }
    const std::string& name() const { return std::get<std::string>(repr); }
    const TheoryAtom& theory_atom() const { return std::get<TheoryAtom>(repr); }
    std::string text() const { return is_regular() ? name() : theory_atom().text(); }

    std::variant<std::string, TheoryAtom> repr;
};

int cmp3_atom(const Atom& a, const Atom& b);
inline bool operator==(const Atom& a, const Atom& b) { return cmp3_atom(a, b) == 0; }
inline bool operator!=(const Atom& a, const Atom& b) { return cmp3_atom(a, b) != 0; }
inline bool operator<(const Atom& a, const Atom& b) { return cmp3_atom(a, b) < 0; }

// head == nullopt encodes an integrity constraint.
struct Rule {
    std::optional<Atom> head;
    std::set<Atom> pbody;
    std::set<Atom> nbody;

    bool is_constraint() const { return !head.has_value(); }
    bool is_fact() const { return head.has_value() && pbody.empty() && nbody.empty(); }
};

int cmp3_rule(const Rule& a, const Rule& b);
inline bool operator==(const Rule& a, const Rule& b) { return cmp3_rule(a, b) == 0; }
inline bool operator<(const Rule& a, const Rule& b) { return cmp3_rule(a, b) < 0; }

// A ground T-logic program with its founded/external partition. The universe
// is the relevant subset of the (conceptually infinite) set of theory atoms:
// atoms occurring in the program, complements of founded atoms, and
// complements of externals.
struct Program {
    std::vector<Rule> rules;
    std::set<std::string> regulars;
    std::set<TheoryAtom> directives; // from #external

    // Populated by infer_partition.
    std::set<TheoryAtom> universe;  // relevant theory atoms
    std::set<TheoryAtom> externals; // closed under complement
    std::set<TheoryAtom> founded;   // universe minus externals that occur in heads
    bool partitioned = false;

    std::set<TheoryAtom> head_theory_atoms() const;
    std::set<TheoryAtom> body_theory_atoms() const;
    std::set<Atom> occurring_atoms() const;
};

struct ParseOptions {
    // Sort the terms of every &sum atom by variable name (then coefficient),
    // identifying "x+y=4" with "y+x=4". Off by default: atoms are strings.
    bool normalize_terms = false;
};

Program parse_program(std::string_view text, const ParseOptions& opts = {});

// Computes the external/founded partition from occurrences and #external
// directives, and fixes the relevant universe. Throws PartitionConflict when
// a theory atom would need to be both founded and external.
Program infer_partition(Program p);

std::string pretty(const TheoryAtom& atom);
std::string pretty(const Atom& atom);
std::string pretty(const Rule& rule);
std::string pretty(const Program& program);

} // namespace amt
