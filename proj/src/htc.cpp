#include <amt/htc.hpp>

#include "token_stream.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

namespace amt {

std::set<std::string> ConstraintAtom::vars() const {
    if (is_prop()) {
        return {prop_var()};
    }
    if (is_def()) {
        return {def_var()};
    }
    return linear_atom().vars();
}

std::string ConstraintAtom::text() const {
    if (is_prop()) {
        return prop_var();
    }
    if (is_def()) {
        return "def(" + def_var() + ")";
    }
    return linear_atom().text();
}

int cmp3_catom(const ConstraintAtom& a, const ConstraintAtom& b) {
    if (a.repr.index() != b.repr.index()) {
        return a.repr.index() < b.repr.index() ? -1 : 1;
    }
    if (a.is_prop()) {
        return cmp3(a.prop_var(), b.prop_var());
    }
    if (a.is_linear()) {
        return cmp3_atom(a.linear_atom(), b.linear_atom());
    }
    return cmp3(a.def_var(), b.def_var());
}

struct Formula::Node {
    Kind kind = Kind::Bottom;
    std::optional<ConstraintAtom> atom;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
};

Formula Formula::bottom() { return Formula(std::make_shared<Node>(Node{Kind::Bottom, std::nullopt, nullptr, nullptr})); }

Formula Formula::atom(ConstraintAtom a) {
    return Formula(std::make_shared<Node>(Node{Kind::Atom, std::move(a), nullptr, nullptr}));
}

Formula Formula::conj(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::And, std::nullopt, std::move(a.node_), std::move(b.node_)}));
}

Formula Formula::disj(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::Or, std::nullopt, std::move(a.node_), std::move(b.node_)}));
}

Formula Formula::impl(Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{Kind::Impl, std::nullopt, std::move(a.node_), std::move(b.node_)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const ConstraintAtom& Formula::catom() const { return *node_->atom; }
Formula Formula::lhs() const { return Formula(node_->a); }
Formula Formula::rhs() const { return Formula(node_->b); }

std::set<std::string> Formula::vars() const {
    std::set<std::string> out;
    auto walk = [&](auto&& self, const Node* n) -> void {
        if (n == nullptr) {
            return;
        }
        if (n->atom) {
            auto vs = n->atom->vars();
            out.insert(vs.begin(), vs.end());
        }
        self(self, n->a.get());
        self(self, n->b.get());
    };
    walk(walk, node_.get());
    return out;
}

int cmp3_formula(const Formula& a, const Formula& b) {
    const Formula::Node* x = a.node_.get();
    const Formula::Node* y = b.node_.get();
    auto walk = [](auto&& self, const Formula::Node* x, const Formula::Node* y) -> int {
        if (x == y) {
            return 0;
        }
        if (x->kind != y->kind) {
            return x->kind < y->kind ? -1 : 1;
        }
        if (x->kind == Formula::Kind::Bottom) {
            return 0;
        }
        if (x->kind == Formula::Kind::Atom) {
            return cmp3_catom(*x->atom, *y->atom);
        }
        if (int c = self(self, x->a.get(), y->a.get())) {
            return c;
        }
        return self(self, x->b.get(), y->b.get());
    };
    return walk(walk, x, y);
}

namespace {

bool is_bottom(const Formula& f) { return f.kind() == Formula::Kind::Bottom; }

int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Impl: return 0;
        case Formula::Kind::Or: return 1;
        case Formula::Kind::And: return 2;
        default: return 3;
    }
}

void print_formula(std::ostream& out, const Formula& f, int parent_prec) {
    if (f.kind() == Formula::Kind::Bottom) {
        out << "bot";
        return;
    }
    if (f.kind() == Formula::Kind::Atom) {
        out << f.catom().text();
        return;
    }
    if (f.kind() == Formula::Kind::Impl && is_bottom(f.rhs())) {
        if (is_bottom(f.lhs())) {
            out << "top";
            return;
        }
        out << "not ";
        print_formula(out, f.lhs(), 3);
        return;
    }
    int prec = precedence(f.kind());
    bool parens = prec < parent_prec;
    if (parens) {
        out << "(";
    }
    const char* op = f.kind() == Formula::Kind::And ? " & " : f.kind() == Formula::Kind::Or ? " | " : " -> ";
    // -> is right-associative; & and | associate to the left.
    int lhs_prec = f.kind() == Formula::Kind::Impl ? prec + 1 : prec;
    int rhs_prec = f.kind() == Formula::Kind::Impl ? prec : prec + 1;
    print_formula(out, f.lhs(), lhs_prec);
    out << op;
    print_formula(out, f.rhs(), rhs_prec);
    if (parens) {
        out << ")";
    }
}

} // namespace

std::string Formula::text() const {
    std::ostringstream out;
    print_formula(out, *this, 0);
    return out.str();
}

namespace {

struct LexHolder {
    detail::Lexer owned;
};

struct FormulaParser : LexHolder, detail::AtomParser {
    explicit FormulaParser(std::string_view text)
        : LexHolder{detail::Lexer(text)}
        , detail::AtomParser{owned, false} {}

    Formula parse_formula() {
        Formula a = parse_or();
        if (at(Token::Arrow)) {
            lex.advance();
            return Formula::impl(std::move(a), parse_formula());
        }
        return a;
    }

    Formula parse_or() {
        Formula a = parse_and();
        while (at(Token::Pipe)) {
            lex.advance();
            a = Formula::disj(std::move(a), parse_and());
        }
        return a;
    }

    Formula parse_and() {
        Formula a = parse_unary();
        while (at(Token::Amp)) {
            lex.advance();
            a = Formula::conj(std::move(a), parse_unary());
        }
        return a;
    }

    Formula parse_unary() {
        if (at(Token::Not)) {
            lex.advance();
            return Formula::neg(parse_unary());
        }
        if (at(Token::LParen)) {
            lex.advance();
            Formula f = parse_formula();
            expect(Token::RParen, "')'");
            return f;
        }
        if (at(Token::AmpSum) || at(Token::AmpDiff)) {
            return Formula::atom(ConstraintAtom::linear(parse_tatom()));
        }
        if (at(Token::Ident)) {
            std::string word = lex.tok.value;
            lex.advance();
            if (word == "bot") {
                return Formula::bottom();
            }
            if (word == "top") {
                return Formula::top();
            }
            if (word == "def" && at(Token::LParen)) {
                lex.advance();
                std::string name = parse_ident();
                expect(Token::RParen, "')'");
                return Formula::atom(ConstraintAtom::def_int(std::move(name)));
            }
            return Formula::atom(ConstraintAtom::prop(std::move(word)));
        }
        lex.fail("expected formula");
    }

    TheorySet run() {
        TheorySet out;
        while (!at(Token::End)) {
            Formula f = parse_formula();
            expect(Token::Dot, "'.'");
            out.insert(std::move(f));
        }
        return out;
    }
};

} // namespace

TheorySet parse_formulas(std::string_view text) { return FormulaParser(text).run(); }

void Signature::declare_prop(const std::string& name) {
    auto [it, inserted] = vars.emplace(name, VarDomain{VarDomain::Kind::Prop, 0, 0});
    if (!inserted && it->second.kind != VarDomain::Kind::Prop) {
        throw SignatureMismatch("variable '" + name + "' is used both propositionally and as an integer");
    }
}

void Signature::declare_int(const std::string& name, long long lo, long long hi) {
    auto [it, inserted] = vars.emplace(name, VarDomain{VarDomain::Kind::Int, lo, hi});
    if (!inserted) {
        if (it->second.kind != VarDomain::Kind::Int) {
            throw SignatureMismatch("variable '" + name + "' is used both propositionally and as an integer");
        }
        it->second.lo = std::min(it->second.lo, lo);
        it->second.hi = std::max(it->second.hi, hi);
    }
}

void Signature::merge(const Signature& other) {
    for (const auto& [name, dom] : other.vars) {
        if (dom.kind == VarDomain::Kind::Prop) {
            declare_prop(name);
        } else {
            declare_int(name, dom.lo, dom.hi);
        }
    }
}

Signature infer_signature(const std::vector<const TheorySet*>& theories, const Bounds& bounds) {
    Signature sig;
    auto declare_atom = [&](const ConstraintAtom& c) {
        if (c.is_prop()) {
            sig.declare_prop(c.prop_var());
        } else if (c.is_def()) {
            auto [lo, hi] = bounds.of(c.def_var());
            sig.declare_int(c.def_var(), lo, hi);
        } else {
            for (const auto& var : c.linear_atom().vars()) {
                auto [lo, hi] = bounds.of(var);
                sig.declare_int(var, lo, hi);
            }
        }
    };
    auto walk = [&](auto&& self, const Formula& f) -> void {
        switch (f.kind()) {
            case Formula::Kind::Bottom: return;
            case Formula::Kind::Atom: declare_atom(f.catom()); return;
            default:
                self(self, f.lhs());
                self(self, f.rhs());
        }
    };
    for (const TheorySet* theory : theories) {
        for (const auto& f : *theory) {
            walk(walk, f);
        }
    }
    return sig;
}

bool atom_den_contains(const ConstraintAtom& atom, const Valuation& v) {
    if (atom.is_prop()) {
        const Value* val = v.get(atom.prop_var());
        return val != nullptr && is_truth(*val);
    }
    if (atom.is_def()) {
        const Value* val = v.get(atom.def_var());
        return val != nullptr && as_integer(*val).has_value();
    }
    return den_contains(atom.linear_atom(), v, NumericDomain::Int);
}

bool eval(const Formula& f, const Valuation& here, const Valuation& there) {
    switch (f.kind()) {
        case Formula::Kind::Bottom:
            return false;
        case Formula::Kind::Atom:
            return atom_den_contains(f.catom(), here);
        case Formula::Kind::And:
            return eval(f.lhs(), here, there) && eval(f.rhs(), here, there);
        case Formula::Kind::Or:
            return eval(f.lhs(), here, there) || eval(f.rhs(), here, there);
        case Formula::Kind::Impl: {
            bool at_here = !eval(f.lhs(), here, there) || eval(f.rhs(), here, there);
            bool at_there = !eval(f.lhs(), there, there) || eval(f.rhs(), there, there);
            return at_here && at_there;
        }
    }
    return false;
}

bool eval(const Formula& f, const Interpretation& i) { return eval(f, i.here, i.there); }

bool eval(const TheorySet& theory, const Valuation& here, const Valuation& there) {
    return std::all_of(theory.begin(), theory.end(), [&](const Formula& f) { return eval(f, here, there); });
}

// ------------------------------------------------------------------
// Compiled box enumeration.
//
// Variables get indices and every candidate t-valuation is a mixed-radix
// index: digit 0 is u, digit i>0 the i-th domain value. Because h agrees
// with t wherever h is defined, the truth of an atom at any h below t is
// "its variables are defined in h" + "the arithmetic holds at t". That keeps
// the per-h work to mask tests only.
// ------------------------------------------------------------------

namespace {

constexpr std::size_t kMaxScanVars = 62;

struct CompiledAtom {
    enum class Type { Prop, Linear, Def };
    Type type = Type::Prop;
    std::uint64_t vars_mask = 0;
    bool def_over_int = false;
    std::vector<std::pair<std::size_t, Int>> terms;
    Int rhs;
    Rel rel = Rel::Le;
};

struct CompiledNode {
    Formula::Kind kind = Formula::Kind::Bottom;
    int atom = -1;
    int a = -1;
    int b = -1;
};

bool rel_holds_int(const Int& lhs, const Int& rhs, Rel rel) {
    switch (rel) {
        case Rel::Le: return lhs <= rhs;
        case Rel::Eq: return lhs == rhs;
        case Rel::Ne: return lhs != rhs;
        case Rel::Lt: return lhs < rhs;
        case Rel::Gt: return lhs > rhs;
        case Rel::Ge: return lhs >= rhs;
    }
    return false;
}

class BoxScan {
public:
    BoxScan(const Signature& sig, std::vector<const TheorySet*> theories, const EnumLimits& limits) {
        if (sig.vars.size() > kMaxScanVars) {
            throw BoxTooLarge("signature has " + std::to_string(sig.vars.size()) + " variables, cap is " +
                              std::to_string(kMaxScanVars));
        }
        for (const auto& [name, dom] : sig.vars) {
            index_[name] = names_.size();
            names_.push_back(name);
            doms_.push_back(dom);
            long long values = dom.kind == VarDomain::Kind::Prop ? 1 : dom.hi - dom.lo + 1;
            if (values < 0) {
                values = 0;
            }
            radix_.push_back(values + 1); // +1 for u
        }
        total_ = 1;
        for (long long r : radix_) {
            if (r == 0 || total_ > static_cast<std::uint64_t>(limits.max_interpretations) / r) {
                throw BoxTooLarge("candidate valuations exceed " + std::to_string(limits.max_interpretations));
            }
            total_ *= r;
        }
        for (const TheorySet* theory : theories) {
            std::vector<int> roots;
            for (const auto& f : *theory) {
                roots.push_back(compile(f));
            }
            roots_.push_back(std::move(roots));
        }
    }

    std::uint64_t total() const { return total_; }

    struct Workspace {
        std::vector<long long> value;
        std::uint64_t def_mask = 0;
        std::vector<char> atom_true; // at t
        std::vector<char> node_t;    // classical truth at t per node
    };

    Workspace make_workspace() const {
        Workspace ws;
        ws.value.resize(names_.size(), 0);
        ws.atom_true.resize(atoms_.size(), 0);
        ws.node_t.resize(nodes_.size(), 0);
        return ws;
    }

    void load(std::uint64_t index, Workspace& ws) const {
        ws.def_mask = 0;
        for (std::size_t i = 0; i < radix_.size(); ++i) {
            long long digit = static_cast<long long>(index % radix_[i]);
            index /= radix_[i];
            if (digit > 0) {
                ws.def_mask |= std::uint64_t(1) << i;
                ws.value[i] = doms_[i].kind == VarDomain::Kind::Prop ? 0 : doms_[i].lo + digit - 1;
            }
        }
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            ws.atom_true[i] = static_cast<char>(atom_at_t(atoms_[i], ws));
        }
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            const CompiledNode& n = nodes_[i];
            switch (n.kind) {
                case Formula::Kind::Bottom: ws.node_t[i] = 0; break;
                case Formula::Kind::Atom: ws.node_t[i] = ws.atom_true[n.atom]; break;
                case Formula::Kind::And: ws.node_t[i] = ws.node_t[n.a] && ws.node_t[n.b]; break;
                case Formula::Kind::Or: ws.node_t[i] = ws.node_t[n.a] || ws.node_t[n.b]; break;
                case Formula::Kind::Impl: ws.node_t[i] = !ws.node_t[n.a] || ws.node_t[n.b]; break;
            }
        }
    }

    bool theory_at_t(std::size_t theory, const Workspace& ws) const {
        for (int root : roots_[theory]) {
            if (!ws.node_t[root]) {
                return false;
            }
        }
        return true;
    }

    bool theory_at_h(std::size_t theory, std::uint64_t h_mask, const Workspace& ws) const {
        for (int root : roots_[theory]) {
            if (!node_at_h(root, h_mask, ws)) {
                return false;
            }
        }
        return true;
    }

    Valuation valuation_of(const Workspace& ws, std::uint64_t mask) const {
        Valuation v;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if ((mask >> i) & 1) {
                if (doms_[i].kind == VarDomain::Kind::Prop) {
                    v.set(names_[i], Value(Truth{}));
                } else {
                    v.set(names_[i], Value(Int(ws.value[i])));
                }
            }
        }
        return v;
    }

private:
    bool atom_at_t(const CompiledAtom& atom, const Workspace& ws) const {
        if ((atom.vars_mask & ws.def_mask) != atom.vars_mask) {
            return false;
        }
        switch (atom.type) {
            case CompiledAtom::Type::Prop:
                return true;
            case CompiledAtom::Type::Def:
                return atom.def_over_int;
            case CompiledAtom::Type::Linear: {
                Int sum = 0;
                for (const auto& [var, coeff] : atom.terms) {
                    sum += coeff * ws.value[var];
                }
                return rel_holds_int(sum, atom.rhs, atom.rel);
            }
        }
        return false;
    }

    bool node_at_h(int node, std::uint64_t h_mask, const Workspace& ws) const {
        const CompiledNode& n = nodes_[node];
        switch (n.kind) {
            case Formula::Kind::Bottom:
                return false;
            case Formula::Kind::Atom: {
                const CompiledAtom& atom = atoms_[n.atom];
                return ws.atom_true[n.atom] && (atom.vars_mask & h_mask) == atom.vars_mask;
            }
            case Formula::Kind::And:
                return node_at_h(n.a, h_mask, ws) && node_at_h(n.b, h_mask, ws);
            case Formula::Kind::Or:
                return node_at_h(n.a, h_mask, ws) || node_at_h(n.b, h_mask, ws);
            case Formula::Kind::Impl:
                // The t-world conjunct is the node's classical truth at t.
                return ws.node_t[node] && (!node_at_h(n.a, h_mask, ws) || node_at_h(n.b, h_mask, ws));
        }
        return false;
    }

    std::size_t var_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) {
            throw SignatureMismatch("variable '" + name + "' is not declared in the signature");
        }
        return it->second;
    }

    int compile_atom(const ConstraintAtom& c) {
        auto it = atom_index_.find(c);
        if (it != atom_index_.end()) {
            return it->second;
        }
        CompiledAtom out;
        if (c.is_prop()) {
            std::size_t i = var_index(c.prop_var());
            if (doms_[i].kind != VarDomain::Kind::Prop) {
                throw SignatureMismatch("variable '" + c.prop_var() + "' is not propositional");
            }
            out.type = CompiledAtom::Type::Prop;
            out.vars_mask = std::uint64_t(1) << i;
        } else if (c.is_def()) {
            std::size_t i = var_index(c.def_var());
            out.type = CompiledAtom::Type::Def;
            out.vars_mask = std::uint64_t(1) << i;
            out.def_over_int = doms_[i].kind == VarDomain::Kind::Int;
        } else {
            out.type = CompiledAtom::Type::Linear;
            const TheoryAtom& s = c.linear_atom();
            out.rel = s.rel;
            out.rhs = s.rhs;
            for (const auto& term : s.terms) {
                std::size_t i = var_index(term.var);
                if (doms_[i].kind != VarDomain::Kind::Int) {
                    throw SignatureMismatch("variable '" + term.var + "' is not an integer variable");
                }
                out.vars_mask |= std::uint64_t(1) << i;
                out.terms.emplace_back(i, term.coeff);
            }
        }
        int id = static_cast<int>(atoms_.size());
        atoms_.push_back(std::move(out));
        atom_index_.emplace(c, id);
        return id;
    }

    int compile(const Formula& f) {
        CompiledNode node;
        node.kind = f.kind();
        switch (f.kind()) {
            case Formula::Kind::Bottom:
                break;
            case Formula::Kind::Atom:
                node.atom = compile_atom(f.catom());
                break;
            default:
                node.a = compile(f.lhs());
                node.b = compile(f.rhs());
        }
        nodes_.push_back(node);
        return static_cast<int>(nodes_.size() - 1);
    }

    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
    std::vector<VarDomain> doms_;
    std::vector<long long> radix_;
    std::uint64_t total_ = 1;
    std::vector<CompiledAtom> atoms_;
    std::map<ConstraintAtom, int> atom_index_;
    std::vector<CompiledNode> nodes_;
    std::vector<std::vector<int>> roots_;
};

int effective_jobs(int jobs) {
    if (jobs > 0) {
        return jobs;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, n) into contiguous chunks, runs fn on each, and returns the
// results in chunk order, which keeps every caller deterministic.
template <typename Fn>
auto map_chunks(std::uint64_t n, int jobs, Fn fn) {
    using Result = decltype(fn(std::uint64_t(0), std::uint64_t(0)));
    int workers = effective_jobs(jobs);
    std::uint64_t chunk = std::max<std::uint64_t>(1, (n + workers - 1) / workers);
    std::vector<std::future<Result>> futures;
    for (std::uint64_t begin = 0; begin < n; begin += chunk) {
        std::uint64_t end = std::min(n, begin + chunk);
        futures.push_back(std::async(std::launch::async, fn, begin, end));
    }
    std::vector<Result> results;
    results.reserve(futures.size());
    for (auto& f : futures) {
        results.push_back(f.get());
    }
    return results;
}

} // namespace

void for_each_ht_model(const TheorySet& theory, const Signature& sig, const EnumLimits& limits,
                       const std::function<void(const Interpretation&)>& fn) {
    BoxScan scan(sig, {&theory}, limits);
    BoxScan::Workspace ws = scan.make_workspace();
    for (std::uint64_t i = 0; i < scan.total(); ++i) {
        scan.load(i, ws);
        const std::uint64_t full = ws.def_mask;
        std::uint64_t sub = full;
        for (;;) {
            if (scan.theory_at_h(0, sub, ws)) {
                fn(Interpretation{scan.valuation_of(ws, sub), scan.valuation_of(ws, full)});
            }
            if (sub == 0) {
                break;
            }
            sub = (sub - 1) & full;
        }
    }
}

std::vector<Interpretation> ht_models(const TheorySet& theory, const Signature& sig, const EnumLimits& limits) {
    std::vector<Interpretation> out;
    for_each_ht_model(theory, sig, limits, [&](const Interpretation& i) { out.push_back(i); });
    return out;
}

std::vector<Valuation> equilibrium_models(const TheorySet& theory, const Signature& sig, const EnumLimits& limits) {
    BoxScan scan(sig, {&theory}, limits);
    auto chunks = map_chunks(scan.total(), limits.jobs, [&](std::uint64_t begin, std::uint64_t end) {
        BoxScan::Workspace ws = scan.make_workspace();
        std::vector<Valuation> local;
        for (std::uint64_t i = begin; i < end; ++i) {
            scan.load(i, ws);
            if (!scan.theory_at_t(0, ws)) {
                continue;
            }
            const std::uint64_t full = ws.def_mask;
            bool minimal = true;
            if (full != 0) {
                for (std::uint64_t sub = (full - 1) & full;; sub = (sub - 1) & full) {
                    if (scan.theory_at_h(0, sub, ws)) {
                        minimal = false;
                        break;
                    }
                    if (sub == 0) {
                        break;
                    }
                }
            }
            if (minimal) {
                local.push_back(scan.valuation_of(ws, full));
            }
        }
        return local;
    });
    std::vector<Valuation> out;
    for (auto& part : chunks) {
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

std::optional<Valuation> find_defeater(const TheorySet& theory, const Valuation& total, const Signature& sig) {
    std::vector<std::string> vars;
    for (const auto& [name, value] : total.defined) {
        (void)value;
        vars.push_back(name);
    }
    if (vars.size() > kMaxScanVars) {
        throw BoxTooLarge("too many defined variables to sweep");
    }
    (void)sig;
    const std::uint64_t count = std::uint64_t(1) << vars.size();
    for (std::uint64_t mask = 0; mask + 1 < count; ++mask) {
        Valuation h;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if ((mask >> i) & 1) {
                h.set(vars[i], *total.get(vars[i]));
            }
        }
        if (eval(theory, h, total)) {
            return h;
        }
    }
    return std::nullopt;
}

bool htc_satisfiable(const TheorySet& theory, const Signature& sig, const EnumLimits& limits) {
    // Persistence makes total models enough: any <h,t> model yields <t,t>.
    BoxScan scan(sig, {&theory}, limits);
    BoxScan::Workspace ws = scan.make_workspace();
    for (std::uint64_t i = 0; i < scan.total(); ++i) {
        scan.load(i, ws);
        if (scan.theory_at_t(0, ws)) {
            return true;
        }
    }
    return false;
}

EquivResult equiv_models(const TheorySet& a, const TheorySet& b, const Signature& sig, const EnumLimits& limits) {
    BoxScan scan(sig, {&a, &b}, limits);
    struct Hit {
        std::uint64_t index = 0;
        Interpretation interp;
    };
    auto chunks = map_chunks(scan.total(), limits.jobs, [&](std::uint64_t begin, std::uint64_t end) {
        BoxScan::Workspace ws = scan.make_workspace();
        std::optional<Hit> hit;
        for (std::uint64_t i = begin; i < end && !hit; ++i) {
            scan.load(i, ws);
            const std::uint64_t full = ws.def_mask;
            std::uint64_t sub = full;
            for (;;) {
                if (scan.theory_at_h(0, sub, ws) != scan.theory_at_h(1, sub, ws)) {
                    hit = Hit{i, Interpretation{scan.valuation_of(ws, sub), scan.valuation_of(ws, full)}};
                    break;
                }
                if (sub == 0) {
                    break;
                }
                sub = (sub - 1) & full;
            }
        }
        return hit;
    });
    for (const auto& hit : chunks) {
        if (hit) {
            return EquivResult{false, hit->interp};
        }
    }
    return EquivResult{true, std::nullopt};
}

} // namespace amt
