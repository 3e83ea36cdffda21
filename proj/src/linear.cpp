#include <amt/linear.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

namespace amt {

namespace {

bool rel_holds(int cmp, Rel rel) {
    switch (rel) {
        case Rel::Le: return cmp <= 0;
        case Rel::Eq: return cmp == 0;
        case Rel::Ne: return cmp != 0;
        case Rel::Lt: return cmp < 0;
        case Rel::Gt: return cmp > 0;
        case Rel::Ge: return cmp >= 0;
    }
    return false;
}

} // namespace

TheoryAtom complement(const TheoryAtom& atom) {
    TheoryAtom out = atom;
    if (atom.kind == AtomKind::Diff) {
        std::swap(out.terms[0].var, out.terms[1].var);
        out.rhs = -atom.rhs - 1;
        return out;
    }
    out.rel = rel_complement(atom.rel);
    return out;
}

bool den_contains(const TheoryAtom& atom, const Valuation& v, NumericDomain dom) {
    if (dom == NumericDomain::Int) {
        Int sum = 0;
        for (const auto& term : atom.terms) {
            const Value* val = v.get(term.var);
            if (val == nullptr) {
                return false;
            }
            auto n = as_integer(*val);
            if (!n) {
                return false;
            }
            sum += term.coeff * *n;
        }
        return rel_holds(cmp3(sum, atom.rhs), atom.rel);
    }
    Rat sum = 0;
    for (const auto& term : atom.terms) {
        const Value* val = v.get(term.var);
        if (val == nullptr) {
            return false;
        }
        auto q = as_rational(*val);
        if (!q) {
            return false;
        }
        sum += Rat(term.coeff) * *q;
    }
    return rel_holds(cmp3(sum, Rat(atom.rhs)), atom.rel);
}

std::variant<TheoryAtom, bool> substitute(const TheoryAtom& atom, const std::string& var, const Int& value) {
    TheoryAtom out;
    out.kind = AtomKind::Sum; // one term may drop, so the diff shape is lost
    out.rel = atom.rel;
    out.rhs = atom.rhs;
    for (const auto& term : atom.terms) {
        if (term.var == var) {
            out.rhs -= term.coeff * value;
        } else {
            out.terms.push_back(term);
        }
    }
    if (out.terms.empty()) {
        return rel_holds(cmp3(Int(0), out.rhs), out.rel);
    }
    return out;
}

std::optional<Valuation> sat_lin_int(const std::set<TheoryAtom>& atoms, const Bounds& bounds, long long max_cells) {
    std::set<std::string> var_set;
    for (const auto& s : atoms) {
        auto vs = s.vars();
        var_set.insert(vs.begin(), vs.end());
    }
    std::vector<std::string> vars(var_set.begin(), var_set.end());

    long long cells = 1;
    for (const auto& x : vars) {
        auto [lo, hi] = bounds.of(x);
        if (lo > hi) {
            return std::nullopt;
        }
        long long width = hi - lo + 1;
        if (cells > max_cells / width) {
            throw BoxTooLarge("search box exceeds " + std::to_string(max_cells) + " cells");
        }
        cells *= width;
    }

    Valuation v;
    auto assign = [&](auto&& self, std::size_t i) -> bool {
        if (i == vars.size()) {
            return std::all_of(atoms.begin(), atoms.end(),
                               [&](const TheoryAtom& s) { return den_contains(s, v, NumericDomain::Int); });
        }
        auto [lo, hi] = bounds.of(vars[i]);
        for (long long n = lo; n <= hi; ++n) {
            v.set(vars[i], Value(Int(n)));
            if (self(self, i + 1)) {
                return true;
            }
        }
        v.defined.erase(vars[i]);
        return false;
    };
    if (assign(assign, 0)) {
        return v;
    }
    return std::nullopt;
}

std::optional<Valuation> sat_diff(const std::set<TheoryAtom>& atoms) {
    std::set<std::string> var_set;
    for (const auto& s : atoms) {
        if (s.kind != AtomKind::Diff) {
            throw Error("sat_diff requires difference atoms, got " + pretty(s));
        }
        auto vs = s.vars();
        var_set.insert(vs.begin(), vs.end());
    }
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        index[vars[i]] = i;
    }

    // x - y <= k is the edge y -> x with weight k. A virtual source with
    // zero-weight edges to every node is simulated by starting all
    // distances at zero; Bellman-Ford then finds potentials unless some
    // cycle has negative weight.
    struct Edge {
        std::size_t from;
        std::size_t to;
        Int weight;
    };
    std::vector<Edge> edges;
    for (const auto& s : atoms) {
        edges.push_back(Edge{index[s.terms[1].var], index[s.terms[0].var], s.rhs});
    }

    std::vector<Int> dist(vars.size(), Int(0));
    for (std::size_t round = 0; round < vars.size(); ++round) {
        bool changed = false;
        for (const auto& e : edges) {
            if (dist[e.from] + e.weight < dist[e.to]) {
                dist[e.to] = dist[e.from] + e.weight;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
        if (round + 1 == vars.size()) {
            for (const auto& e : edges) {
                if (dist[e.from] + e.weight < dist[e.to]) {
                    return std::nullopt; // negative cycle
                }
            }
        }
    }

    Valuation v;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        v.set(vars[i], Value(dist[i]));
    }
    return v;
}

namespace {

// One rational linear constraint sum(coeffs) (<= | <) rhs, or an equality.
struct LinRow {
    std::map<std::string, Rat> coeffs;
    Rat rhs;
    bool strict = false;
    bool equality = false;

    bool constant() const { return coeffs.empty(); }

    bool constant_holds() const {
        if (equality) {
            return Rat(0) == rhs;
        }
        return strict ? Rat(0) < rhs : Rat(0) <= rhs;
    }
};

void add_term(LinRow& row, const std::string& var, const Rat& coeff) {
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = row.coeffs.emplace(var, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            row.coeffs.erase(it);
        }
    }
}

LinRow row_of_atom(const TheoryAtom& atom, bool flip_sign, bool strict, bool equality) {
    LinRow row;
    row.strict = strict;
    row.equality = equality;
    for (const auto& term : atom.terms) {
        add_term(row, term.var, flip_sign ? Rat(-term.coeff) : Rat(term.coeff));
    }
    row.rhs = flip_sign ? Rat(-atom.rhs) : Rat(atom.rhs);
    return row;
}

// Evaluates the row's linear expression under a (total for its vars)
// assignment.
Rat eval_expr(const std::map<std::string, Rat>& coeffs, const std::map<std::string, Rat>& assignment) {
    Rat sum = 0;
    for (const auto& [var, c] : coeffs) {
        sum += c * assignment.at(var);
    }
    return sum;
}

std::optional<std::map<std::string, Rat>> solve_branch(std::vector<LinRow> rows) {
    // Substitution records for equality-eliminated variables:
    // var = (rhs - coeffs·rest) / div.
    struct Subst {
        std::string var;
        std::map<std::string, Rat> coeffs;
        Rat rhs;
        Rat div;
    };
    std::vector<Subst> substs;

    // Eliminate equalities first.
    for (;;) {
        auto it = std::find_if(rows.begin(), rows.end(), [](const LinRow& r) { return r.equality && !r.constant(); });
        if (it == rows.end()) {
            break;
        }
        Subst sub;
        sub.var = it->coeffs.begin()->first;
        sub.div = it->coeffs.begin()->second;
        sub.rhs = it->rhs;
        sub.coeffs = it->coeffs;
        sub.coeffs.erase(sub.var);
        rows.erase(it);
        for (auto& row : rows) {
            auto found = row.coeffs.find(sub.var);
            if (found == row.coeffs.end()) {
                continue;
            }
            Rat factor = found->second / sub.div;
            row.coeffs.erase(found);
            for (const auto& [var, c] : sub.coeffs) {
                add_term(row, var, -factor * c);
            }
            row.rhs -= factor * sub.rhs;
        }
        substs.push_back(std::move(sub));
    }

    // Fourier-Motzkin on the remaining inequalities.
    struct Eliminated {
        std::string var;
        // Bounds as (expr, rhs, div, strict): var ⋚ (rhs - expr)/div.
        std::vector<LinRow> lowers;
        std::vector<LinRow> uppers;
    };
    std::vector<Eliminated> order;

    for (;;) {
        for (const auto& row : rows) {
            if (row.constant() && !row.constant_holds()) {
                return std::nullopt;
            }
        }
        std::string var;
        for (const auto& row : rows) {
            if (!row.constant()) {
                var = row.coeffs.begin()->first;
                break;
            }
        }
        if (var.empty()) {
            break;
        }
        Eliminated elim;
        elim.var = var;
        std::vector<LinRow> rest;
        for (auto& row : rows) {
            auto found = row.coeffs.find(var);
            if (found == row.coeffs.end()) {
                rest.push_back(std::move(row));
            } else if (found->second > 0) {
                elim.uppers.push_back(std::move(row));
            } else {
                elim.lowers.push_back(std::move(row));
            }
        }
        // Combine every lower with every upper.
        for (const auto& lo : elim.lowers) {
            Rat cl = lo.coeffs.at(var); // negative
            for (const auto& up : elim.uppers) {
                Rat cu = up.coeffs.at(var); // positive
                LinRow combined;
                combined.strict = lo.strict || up.strict;
                for (const auto& [v, c] : lo.coeffs) {
                    if (v != var) {
                        add_term(combined, v, c * cu);
                    }
                }
                for (const auto& [v, c] : up.coeffs) {
                    if (v != var) {
                        add_term(combined, v, -c * cl);
                    }
                }
                combined.rhs = lo.rhs * cu - up.rhs * cl;
                rest.push_back(std::move(combined));
            }
        }
        rows = std::move(rest);
        order.push_back(std::move(elim));
    }

    // Assign eliminated variables in reverse order.
    std::map<std::string, Rat> assignment;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::optional<Rat> lo;
        std::optional<Rat> hi;
        bool lo_strict = false;
        bool hi_strict = false;
        auto eval_bound = [&](const LinRow& row) {
            std::map<std::string, Rat> rest_coeffs = row.coeffs;
            rest_coeffs.erase(it->var);
            return (row.rhs - eval_expr(rest_coeffs, assignment)) / row.coeffs.at(it->var);
        };
        for (const auto& row : it->lowers) {
            Rat bound = eval_bound(row); // negative coefficient flips <= into >=
            if (!lo || bound > *lo) {
                lo = bound;
                lo_strict = row.strict;
            } else if (bound == *lo) {
                lo_strict = lo_strict || row.strict;
            }
        }
        for (const auto& row : it->uppers) {
            Rat bound = eval_bound(row);
            if (!hi || bound < *hi) {
                hi = bound;
                hi_strict = row.strict;
            } else if (bound == *hi) {
                hi_strict = hi_strict || row.strict;
            }
        }
        Rat value;
        if (lo && hi) {
            value = *lo == *hi ? *lo : (*lo + *hi) / 2;
        } else if (lo) {
            value = lo_strict ? *lo + 1 : *lo;
        } else if (hi) {
            value = hi_strict ? *hi - 1 : *hi;
        } else {
            value = 0;
        }
        assignment[it->var] = value;
    }
    for (auto it = substs.rbegin(); it != substs.rend(); ++it) {
        assignment[it->var] = (it->rhs - eval_expr(it->coeffs, assignment)) / it->div;
    }
    return assignment;
}

} // namespace

std::optional<Valuation> sat_lin_rat(const std::set<TheoryAtom>& atoms, long long max_case_splits) {
    std::vector<LinRow> base;
    std::vector<TheoryAtom> splits;
    for (const auto& atom : atoms) {
        switch (atom.rel) {
            case Rel::Le: base.push_back(row_of_atom(atom, false, false, false)); break;
            case Rel::Lt: base.push_back(row_of_atom(atom, false, true, false)); break;
            case Rel::Ge: base.push_back(row_of_atom(atom, true, false, false)); break;
            case Rel::Gt: base.push_back(row_of_atom(atom, true, true, false)); break;
            case Rel::Eq: base.push_back(row_of_atom(atom, false, false, true)); break;
            case Rel::Ne: splits.push_back(atom); break;
        }
    }
    if (splits.size() < 63 && (1LL << splits.size()) > max_case_splits) {
        throw CaseSplitLimit("too many disequalities: 2^" + std::to_string(splits.size()) + " branches");
    }
    if (splits.size() >= 63) {
        throw CaseSplitLimit("too many disequalities: " + std::to_string(splits.size()));
    }

    const long long branches = 1LL << splits.size();
    for (long long mask = 0; mask < branches; ++mask) {
        std::vector<LinRow> rows = base;
        for (std::size_t i = 0; i < splits.size(); ++i) {
            // Each != splits into a strict < or a strict > branch.
            bool greater = (mask >> i) & 1;
            rows.push_back(row_of_atom(splits[i], greater, true, false));
        }
        if (auto assignment = solve_branch(std::move(rows))) {
            Valuation v;
            for (const auto& atom : atoms) {
                for (const auto& var : atom.vars()) {
                    auto it = assignment->find(var);
                    Rat q = it == assignment->end() ? Rat(0) : it->second;
                    if (boost::multiprecision::denominator(q) == 1) {
                        v.set(var, Value(Int(boost::multiprecision::numerator(q))));
                    } else {
                        v.set(var, Value(q));
                    }
                }
            }
            return v;
        }
    }
    return std::nullopt;
}

std::string_view theory_name(TheoryKind kind) {
    switch (kind) {
        case TheoryKind::LinInt: return "lin-int";
        case TheoryKind::DiffInt: return "diff-int";
        case TheoryKind::LinRat: return "lin-rat";
    }
    return "?";
}

TheoryHandle make_handle(TheoryKind kind, Bounds bounds, SolverCaps caps) {
    TheoryHandle handle;
    handle.name = std::string(theory_name(kind));
    handle.complement = [](const TheoryAtom& s) { return complement(s); };
    handle.vars_of = [](const TheoryAtom& s) { return s.vars(); };
    handle.absolute_complement = true;
    switch (kind) {
        case TheoryKind::LinInt:
            handle.witness = [bounds, caps](const std::set<TheoryAtom>& atoms) {
                return sat_lin_int(atoms, bounds, caps.max_cells);
            };
            handle.den_membership = [](const TheoryAtom& s, const Valuation& v) {
                return den_contains(s, v, NumericDomain::Int);
            };
            break;
        case TheoryKind::DiffInt:
            handle.witness = [](const std::set<TheoryAtom>& atoms) { return sat_diff(atoms); };
            handle.den_membership = [](const TheoryAtom& s, const Valuation& v) {
                return den_contains(s, v, NumericDomain::Int);
            };
            break;
        case TheoryKind::LinRat:
            handle.witness = [caps](const std::set<TheoryAtom>& atoms) {
                return sat_lin_rat(atoms, caps.max_case_splits);
            };
            handle.den_membership = [](const TheoryAtom& s, const Valuation& v) {
                return den_contains(s, v, NumericDomain::Rat);
            };
            break;
    }
    handle.is_satisfiable = [witness = handle.witness](const std::set<TheoryAtom>& atoms) {
        return witness(atoms).has_value();
    };
    return handle;
}

std::string valuation_text(const Valuation& v) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [var, val] : v.defined) {
        if (!first) {
            out << ", ";
        }
        first = false;
        out << var << "=" << value_text(val);
    }
    out << "}";
    return out.str();
}

} // namespace amt
