#include <amt/theory.hpp>

#include <algorithm>

namespace amt {

bool is_consistent(const std::set<TheoryAtom>& atoms, const TheoryHandle& th) {
    for (const auto& s : atoms) {
        if (atoms.count(th.complement(s)) != 0) {
            return false;
        }
    }
    return true;
}

bool is_complete(const std::set<TheoryAtom>& atoms, const std::set<TheoryAtom>& universe, const TheoryHandle& th) {
    for (const auto& s : universe) {
        if (universe.count(th.complement(s)) == 0) {
            throw UniverseNotClosed("universe lacks the complement of " + pretty(s));
        }
    }
    return std::all_of(universe.begin(), universe.end(), [&](const TheoryAtom& s) {
        return atoms.count(s) != 0 || atoms.count(th.complement(s)) != 0;
    });
}

bool is_closed(const std::set<TheoryAtom>& atoms, const TheoryHandle& th) {
    return std::all_of(atoms.begin(), atoms.end(), [&](const TheoryAtom& s) {
        return atoms.count(th.complement(s)) != 0;
    });
}

std::set<TheoryAtom> complete_wrt(const std::set<TheoryAtom>& atoms, const std::set<TheoryAtom>& externals,
                                  const TheoryHandle& th) {
    std::set<TheoryAtom> out = atoms;
    for (const auto& s : externals) {
        if (atoms.count(s) == 0) {
            out.insert(th.complement(s));
        }
    }
    return out;
}

bool is_solution(const std::set<TheoryAtom>& atoms, const std::set<TheoryAtom>& externals, const TheoryHandle& th) {
    return th.is_satisfiable(complete_wrt(atoms, externals, th));
}

std::vector<std::set<TheoryAtom>>
enumerate_complete_solutions(const std::set<TheoryAtom>& universe, const std::set<TheoryAtom>& externals,
                             const TheoryHandle& th, std::size_t max_universe) {
    if (universe.size() > max_universe) {
        throw UniverseTooLarge("universe has " + std::to_string(universe.size()) + " atoms, cap is " +
                               std::to_string(max_universe));
    }
    for (const auto& s : universe) {
        if (universe.count(th.complement(s)) == 0) {
            throw UniverseNotClosed("universe lacks the complement of " + pretty(s));
        }
    }

    // Group the universe into complementary pairs.
    struct Pair {
        TheoryAtom a;
        TheoryAtom b;
        bool external = false;
    };
    std::vector<Pair> pairs;
    std::set<TheoryAtom> seen;
    for (const auto& s : universe) {
        if (seen.count(s) != 0) {
            continue;
        }
        TheoryAtom c = th.complement(s);
        seen.insert(s);
        seen.insert(c);
        pairs.push_back(Pair{s, c, externals.count(s) != 0 || externals.count(c) != 0});
    }

    std::vector<std::set<TheoryAtom>> found;
    std::set<TheoryAtom> current;
    // Per pair: skip both (non-external pairs only), take one, the other, or both.
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == pairs.size()) {
            if (is_solution(current, externals, th)) {
                found.push_back(current);
            }
            return;
        }
        const Pair& p = pairs[i];
        if (!p.external) {
            self(self, i + 1);
        }
        current.insert(p.a);
        self(self, i + 1);
        current.insert(p.b);
        self(self, i + 1);
        current.erase(p.a);
        self(self, i + 1);
        current.erase(p.b);
    };
    recurse(recurse, 0);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

bool entails(const std::set<TheoryAtom>& atoms, const TheoryAtom& s, const TheoryHandle& th) {
    if (!th.absolute_complement) {
        throw NotAbsolute("entailment via complement requires an absolute complement; theory '" + th.name +
                          "' does not declare one");
    }
    std::set<TheoryAtom> query = atoms;
    query.insert(th.complement(s));
    return !th.is_satisfiable(query);
}

} // namespace amt
