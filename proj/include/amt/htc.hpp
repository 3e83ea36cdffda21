#pragma once

#include <amt/linear.hpp>
#include <amt/syntax.hpp>
#include <amt/valuation.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace amt {

// Constraint atoms: propositional "p=t", linear equations/difference
// constraints over integers, and def(x) holding when x has a defined integer
// value.
struct ConstraintAtom {
    struct PropTrue {
        std::string var;
    };
    struct DefInt {
        std::string var;
    };

    static ConstraintAtom prop(std::string var) { return ConstraintAtom{PropTrue{std::move(var)}}; }
    static ConstraintAtom linear(TheoryAtom atom) { return ConstraintAtom{std::move(atom)}; }
    static ConstraintAtom def_int(std::string var) { return ConstraintAtom{DefInt{std::move(var)}}; }

    bool is_prop() const { return std::holds_alternative<PropTrue>(repr); }
    bool is_linear() const { return std::holds_alternative<TheoryAtom>(repr); }
    bool is_def() const { return std::holds_alternative<DefInt>(repr); }

    const std::string& prop_var() const { return std::get<PropTrue>(repr).var; }
    const TheoryAtom& linear_atom() const { return std::get<TheoryAtom>(repr); }
    const std::string& def_var() const { return std::get<DefInt>(repr).var; }

    std::set<std::string> vars() const;
    std::string text() const;

    std::variant<PropTrue, TheoryAtom, DefInt> repr;
};

int cmp3_catom(const ConstraintAtom& a, const ConstraintAtom& b);
inline bool operator==(const ConstraintAtom& a, const ConstraintAtom& b) { return cmp3_catom(a, b) == 0; }
inline bool operator<(const ConstraintAtom& a, const ConstraintAtom& b) { return cmp3_catom(a, b) < 0; }

// Immutable formula tree; Top and Not are derived forms.
class Formula {
public:
    enum class Kind { Bottom, Atom, And, Or, Impl };

    static Formula bottom();
    static Formula top() { return impl(bottom(), bottom()); }
    static Formula atom(ConstraintAtom a);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula impl(Formula a, Formula b);
    static Formula neg(Formula a) { return impl(std::move(a), bottom()); }

    Kind kind() const;
    const ConstraintAtom& catom() const;
    Formula lhs() const;
    Formula rhs() const;

    std::set<std::string> vars() const;
    std::string text() const;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;

    friend int cmp3_formula(const Formula& a, const Formula& b);
};

int cmp3_formula(const Formula& a, const Formula& b);
inline bool operator==(const Formula& a, const Formula& b) { return cmp3_formula(a, b) == 0; }
inline bool operator<(const Formula& a, const Formula& b) { return cmp3_formula(a, b) < 0; }

using TheorySet = std::set<Formula>;

// Prefix/infix formula text: atoms as in the program grammar plus bare
// identifiers for propositions and def(x); connectives not, &, |, ->;
// constants bot and top; one formula per '.'-terminated statement.
TheorySet parse_formulas(std::string_view text);

struct VarDomain {
    enum class Kind { Prop, Int };
    Kind kind = Kind::Prop;
    long long lo = 0;
    long long hi = 0;
};

// Finite signature: propositional variables range over {t, u}, integer
// variables over a box extended with u.
struct Signature {
    std::map<std::string, VarDomain> vars;

    void declare_prop(const std::string& name);
    void declare_int(const std::string& name, long long lo, long long hi);
    void merge(const Signature& other);
};

// Signature covering every variable of the given theories, integer variables
// taking their box from the bounds. Throws SignatureMismatch when a name is
// used both propositionally and as an integer variable.
Signature infer_signature(const std::vector<const TheorySet*>& theories, const Bounds& bounds);

struct Interpretation {
    Valuation here;
    Valuation there;
};

bool atom_den_contains(const ConstraintAtom& atom, const Valuation& v);

// The five satisfaction clauses; implications are checked in both worlds.
bool eval(const Formula& f, const Valuation& here, const Valuation& there);
bool eval(const Formula& f, const Interpretation& i);
bool eval(const TheorySet& theory, const Valuation& here, const Valuation& there);

struct EnumLimits {
    long long max_interpretations = 10'000'000;
    int jobs = 0; // 0 = hardware concurrency
};

// All HT models over the signature's boxed valuations: t ranges over total
// choices of box value or u per variable, h over the sub-valuations of t.
// Deterministic enumeration order.
std::vector<Interpretation> ht_models(const TheorySet& theory, const Signature& sig, const EnumLimits& limits = {});
void for_each_ht_model(const TheorySet& theory, const Signature& sig, const EnumLimits& limits,
                       const std::function<void(const Interpretation&)>& fn);

// Equilibrium models: total models with no strictly smaller h-model.
std::vector<Valuation> equilibrium_models(const TheorySet& theory, const Signature& sig,
                                          const EnumLimits& limits = {});

// Some h < t defeating totality of t, if any; used to double-check
// minimality.
std::optional<Valuation> find_defeater(const TheorySet& theory, const Valuation& total, const Signature& sig);

bool htc_satisfiable(const TheorySet& theory, const Signature& sig, const EnumLimits& limits = {});

struct EquivResult {
    bool equivalent = false;
    std::optional<Interpretation> counterexample;
};

// HT-model-set equality over the boxed signature; a counterexample is the
// first interpretation (in enumeration order) in the symmetric difference.
EquivResult equiv_models(const TheorySet& a, const TheorySet& b, const Signature& sig,
                         const EnumLimits& limits = {});

} // namespace amt
