#include <amt/syntax.hpp>

#include <amt/linear.hpp>

#include "token_stream.hpp"

#include <algorithm>
#include <sstream>

namespace amt {

std::string_view rel_text(Rel rel) {
    switch (rel) {
        case Rel::Le: return "<=";
        case Rel::Eq: return "=";
        case Rel::Ne: return "!=";
        case Rel::Lt: return "<";
        case Rel::Gt: return ">";
        case Rel::Ge: return ">=";
    }
    return "?";
}

Rel rel_complement(Rel rel) {
    switch (rel) {
        case Rel::Le: return Rel::Gt;
        case Rel::Eq: return Rel::Ne;
        case Rel::Ne: return Rel::Eq;
        case Rel::Lt: return Rel::Ge;
        case Rel::Gt: return Rel::Le;
        case Rel::Ge: return Rel::Lt;
    }
    return rel;
}

int cmp3_term(const Term& a, const Term& b) {
    if (int c = cmp3(a.var, b.var)) { return c; }
    return cmp3(a.coeff, b.coeff);
}

std::set<std::string> TheoryAtom::vars() const {
    std::set<std::string> out;
    for (const auto& t : terms) {
        out.insert(t.var);
    }
    return out;
}

std::string TheoryAtom::text() const { return pretty(*this); }

int cmp3_atom(const TheoryAtom& a, const TheoryAtom& b) {
    if (a.kind != b.kind) { return a.kind < b.kind ? -1 : 1; }
    if (int c = cmp3(a.terms.size(), b.terms.size())) { return c; }
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (int c = cmp3_term(a.terms[i], b.terms[i])) { return c; }
    }
    if (a.rel != b.rel) { return a.rel < b.rel ? -1 : 1; }
    return cmp3(a.rhs, b.rhs);
}

TheoryAtom make_sum_atom(std::vector<Term> terms, Rel rel, Int rhs) {
    TheoryAtom atom;
    atom.kind = AtomKind::Sum;
    atom.terms = std::move(terms);
    atom.rel = rel;
    atom.rhs = std::move(rhs);
    return atom;
}

TheoryAtom make_diff_atom(std::string x, std::string y, Int rhs) {
    TheoryAtom atom;
    atom.kind = AtomKind::Diff;
    atom.terms = {Term{Int(1), std::move(x)}, Term{Int(-1), std::move(y)}};
    atom.rel = Rel::Le;
    atom.rhs = std::move(rhs);
    return atom;
}

int cmp3_atom(const Atom& a, const Atom& b) {
    if (a.repr.index() != b.repr.index()) {
        return a.repr.index() < b.repr.index() ? -1 : 1;
    }
    if (a.is_regular()) {
        return cmp3(a.name(), b.name());
    }
    return cmp3_atom(a.theory_atom(), b.theory_atom());
}

int cmp3_rule(const Rule& a, const Rule& b) {
    if (a.head.has_value() != b.head.has_value()) {
        return a.head.has_value() ? 1 : -1;
    }
    if (a.head && b.head) {
        if (int c = cmp3_atom(*a.head, *b.head)) { return c; }
    }
    auto cmp_sets = [](const std::set<Atom>& x, const std::set<Atom>& y) {
        auto ix = x.begin();
        auto iy = y.begin();
        for (; ix != x.end() && iy != y.end(); ++ix, ++iy) {
            if (int c = cmp3_atom(*ix, *iy)) { return c; }
        }
        if (ix != x.end()) { return 1; }
        if (iy != y.end()) { return -1; }
        return 0;
    };
    if (int c = cmp_sets(a.pbody, b.pbody)) { return c; }
    return cmp_sets(a.nbody, b.nbody);
}

std::set<TheoryAtom> Program::head_theory_atoms() const {
    std::set<TheoryAtom> out;
    for (const auto& r : rules) {
        if (r.head && r.head->is_theory()) {
            out.insert(r.head->theory_atom());
        }
    }
    return out;
}

std::set<TheoryAtom> Program::body_theory_atoms() const {
    std::set<TheoryAtom> out;
    for (const auto& r : rules) {
        for (const auto* body : {&r.pbody, &r.nbody}) {
            for (const auto& a : *body) {
                if (a.is_theory()) {
                    out.insert(a.theory_atom());
                }
            }
        }
    }
    return out;
}

std::set<Atom> Program::occurring_atoms() const {
    std::set<Atom> out;
    for (const auto& r : rules) {
        if (r.head) {
            out.insert(*r.head);
        }
        out.insert(r.pbody.begin(), r.pbody.end());
        out.insert(r.nbody.begin(), r.nbody.end());
    }
    return out;
}

namespace detail {

TheoryAtom AtomParser::parse_tatom() {
    if (at(Token::AmpSum)) {
        lex.advance();
        expect(Token::LBrace, "'{'");
        std::vector<Term> terms;
        while (true) {
            Term t;
            if (at(Token::Number) || at(Token::Minus)) {
                t.coeff = parse_int();
                expect(Token::Star, "'*'");
            } else {
                t.coeff = 1;
            }
            t.var = parse_ident();
            terms.push_back(std::move(t));
            if (at(Token::Semi)) {
                lex.advance();
                continue;
            }
            break;
        }
        expect(Token::RBrace, "'}'");
        if (!at(Token::Rel_)) {
            lex.fail("expected relation symbol");
        }
        Rel rel = lex.tok.rel;
        lex.advance();
        Int rhs = parse_int();
        if (normalize_terms) {
            std::stable_sort(terms.begin(), terms.end(),
                             [](const Term& a, const Term& b) { return cmp3_term(a, b) < 0; });
        }
        return make_sum_atom(std::move(terms), rel, std::move(rhs));
    }
    if (at(Token::AmpDiff)) {
        lex.advance();
        expect(Token::LBrace, "'{'");
        std::string x = parse_ident();
        expect(Token::Minus, "'-'");
        std::string y = parse_ident();
        expect(Token::RBrace, "'}'");
        if (!at(Token::Rel_) || lex.tok.rel != Rel::Le) {
            lex.fail("difference constraints only support '<='");
        }
        lex.advance();
        Int rhs = parse_int();
        return make_diff_atom(std::move(x), std::move(y), std::move(rhs));
    }
    lex.fail("expected theory atom");
}

} // namespace detail

namespace {

struct LexHolder {
    detail::Lexer owned;
};

struct ProgramParser : LexHolder, detail::AtomParser {
    ProgramParser(std::string_view text, const ParseOptions& o)
        : LexHolder{detail::Lexer(text)}
        , detail::AtomParser{owned, o.normalize_terms} {}

    Atom parse_atom() {
        if (at(Token::Ident)) {
            return Atom::regular(parse_ident());
        }
        return Atom::theory(parse_tatom());
    }

    void parse_body(Rule& rule, bool allow_empty) {
        if (allow_empty && at(Token::Dot)) {
            return; // ":- ." is the inconsistent constraint
        }
        while (true) {
            bool neg = false;
            if (at(Token::Not)) {
                neg = true;
                lex.advance();
            }
            Atom a = parse_atom();
            (neg ? rule.nbody : rule.pbody).insert(std::move(a));
            if (at(Token::Comma)) {
                lex.advance();
                continue;
            }
            break;
        }
    }

    Program run() {
        Program prog;
        while (!at(Token::End)) {
            if (at(Token::External)) {
                int l = lex.tok.line;
                int c = lex.tok.col;
                lex.advance();
                TheoryAtom atom = parse_tatom();
                expect(Token::Dot, "'.'");
                if (!prog.directives.insert(atom).second) {
                    throw ParseError("duplicate #external directive for " + pretty(atom), l, c);
                }
                continue;
            }
            Rule rule;
            if (at(Token::If)) {
                lex.advance();
                parse_body(rule, /*allow_empty=*/true);
            } else {
                rule.head = parse_atom();
                if (at(Token::If)) {
                    lex.advance();
                    parse_body(rule, /*allow_empty=*/false);
                }
            }
            expect(Token::Dot, "'.'");
            prog.rules.push_back(std::move(rule));
        }
        for (const auto& r : prog.rules) {
            if (r.head && r.head->is_regular()) {
                prog.regulars.insert(r.head->name());
            }
            for (const auto* body : {&r.pbody, &r.nbody}) {
                for (const auto& a : *body) {
                    if (a.is_regular()) {
                        prog.regulars.insert(a.name());
                    }
                }
            }
        }
        return prog;
    }
};

} // namespace

Program parse_program(std::string_view text, const ParseOptions& opts) {
    return ProgramParser(text, opts).run();
}

Program infer_partition(Program p) {
    const std::set<TheoryAtom> heads = p.head_theory_atoms();
    std::set<TheoryAtom> ext = p.body_theory_atoms();
    ext.insert(p.directives.begin(), p.directives.end());
    for (const auto& s : std::set<TheoryAtom>(ext)) {
        ext.insert(complement(s));
    }
    for (const auto& s : heads) {
        if (ext.count(s) != 0) {
            throw PartitionConflict("theory atom " + pretty(s) +
                                    " occurs in a rule head but is external (body or #external occurrence of "
                                    "the atom or its complement)");
        }
    }
    p.externals = ext;
    p.founded = heads;
    p.universe = ext;
    for (const auto& s : heads) {
        p.universe.insert(s);
        p.universe.insert(complement(s));
    }
    p.partitioned = true;
    return p;
}

std::string pretty(const TheoryAtom& atom) {
    std::ostringstream out;
    if (atom.kind == AtomKind::Diff) {
        out << "&diff{" << atom.terms.at(0).var << "-" << atom.terms.at(1).var << "} <= " << atom.rhs;
        return out.str();
    }
    out << "&sum{";
    bool first = true;
    for (const auto& t : atom.terms) {
        if (!first) {
            out << ";";
        }
        first = false;
        if (t.coeff == 1) {
            out << t.var;
        } else {
            out << t.coeff << "*" << t.var;
        }
    }
    out << "} " << rel_text(atom.rel) << " " << atom.rhs;
    return out.str();
}

std::string pretty(const Atom& atom) { return atom.text(); }

std::string pretty(const Rule& rule) {
    std::ostringstream out;
    if (rule.head) {
        out << pretty(*rule.head);
    }
    if (!rule.pbody.empty() || !rule.nbody.empty() || rule.is_constraint()) {
        if (rule.head) {
            out << " ";
        }
        out << ":-";
        bool first = true;
        for (const auto& a : rule.pbody) {
            out << (first ? " " : ", ") << pretty(a);
            first = false;
        }
        for (const auto& a : rule.nbody) {
            out << (first ? " not " : ", not ") << pretty(a);
            first = false;
        }
    }
    out << ".";
    return out.str();
}

std::string pretty(const Program& program) {
    std::ostringstream out;
    for (const auto& s : program.directives) {
        out << "#external " << pretty(s) << ".\n";
    }
    for (const auto& r : program.rules) {
        out << pretty(r) << "\n";
    }
    return out.str();
}

} // namespace amt
