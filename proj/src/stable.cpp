#include <amt/stable.hpp>

#include <algorithm>

namespace amt {

Program reduct(const Program& p, const AtomSet& x) {
    Program out;
    for (const auto& r : p.rules) {
        bool blocked = std::any_of(r.nbody.begin(), r.nbody.end(),
                                   [&](const Atom& a) { return x.count(a) != 0; });
        if (blocked) {
            continue;
        }
        Rule stripped;
        stripped.head = r.head;
        stripped.pbody = r.pbody;
        out.rules.push_back(std::move(stripped));
    }
    return out;
}

AtomSet least_model(const Program& p) {
    AtomSet model;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : p.rules) {
            if (!r.head || model.count(*r.head) != 0) {
                continue;
            }
            bool fires = std::all_of(r.pbody.begin(), r.pbody.end(),
                                     [&](const Atom& a) { return model.count(a) != 0; });
            if (fires) {
                model.insert(*r.head);
                changed = true;
            }
        }
    }
    return model;
}

namespace {

bool constraints_hold(const Program& p, const AtomSet& x) {
    for (const auto& r : p.rules) {
        if (!r.is_constraint()) {
            continue;
        }
        bool pos = std::all_of(r.pbody.begin(), r.pbody.end(), [&](const Atom& a) { return x.count(a) != 0; });
        bool neg = std::none_of(r.nbody.begin(), r.nbody.end(), [&](const Atom& a) { return x.count(a) != 0; });
        if (pos && neg) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<AtomSet> stable_models(const Program& p, std::size_t max_atoms) {
    const std::set<Atom> occurring = p.occurring_atoms();
    if (occurring.size() > max_atoms) {
        throw TooManyAtoms("program has " + std::to_string(occurring.size()) + " atoms, cap is " +
                           std::to_string(max_atoms));
    }
    std::vector<Atom> atoms(occurring.begin(), occurring.end());
    std::vector<AtomSet> out;
    const std::uint64_t count = std::uint64_t(1) << atoms.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        AtomSet x;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if ((mask >> i) & 1) {
                x.insert(atoms[i]);
            }
        }
        Program r = reduct(p, x);
        if (least_model(r) == x && constraints_hold(r, x)) {
            out.push_back(std::move(x));
        }
    }
    return out;
}

Program transform(const Program& p, const std::set<TheoryAtom>& solution, const std::set<TheoryAtom>& externals) {
    Program out = p;
    for (const auto& s : solution) {
        if (externals.count(s) != 0) {
            Rule fact;
            fact.head = Atom::theory(s);
            out.rules.push_back(std::move(fact));
        }
    }
    for (const auto& s : p.universe) {
        if (solution.count(s) == 0 && externals.count(s) == 0) {
            Rule constraint;
            constraint.pbody.insert(Atom::theory(s));
            out.rules.push_back(std::move(constraint));
        }
    }
    return out;
}

std::vector<TeModel> te_stable_models(const Program& p, const TheoryHandle& th, const TeOptions& opts) {
    if (!p.partitioned) {
        throw Error("te_stable_models requires an inferred partition");
    }
    std::vector<TeModel> out;
    auto find = [&](const AtomSet& x) -> TeModel* {
        for (auto& m : out) {
            if (m.atoms == x) {
                return &m;
            }
        }
        return nullptr;
    };
    for (const auto& solution : enumerate_complete_solutions(p.universe, p.externals, th, opts.max_universe)) {
        std::optional<Valuation> witness;
        if (th.witness) {
            witness = th.witness(complete_wrt(solution, p.externals, th));
        }
        for (auto& x : stable_models(transform(p, solution, p.externals), opts.max_atoms)) {
            if (TeModel* existing = find(x)) {
                existing->solutions.push_back(SolutionWitness{solution, witness});
            } else {
                out.push_back(TeModel{std::move(x), {SolutionWitness{solution, witness}}});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const TeModel& a, const TeModel& b) { return a.atoms < b.atoms; });
    return out;
}

} // namespace amt
