#include <amt/driver.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

namespace amt {

namespace {

using OrderedJson = nlohmann::ordered_json;

int log_level() {
    static int level = [] {
        const char* env = std::getenv("AMT_KERNEL_LOG");
        return env == nullptr ? 0 : std::atoi(env);
    }();
    return level;
}

std::string bounds_caveat(const Bounds& bounds) {
    std::ostringstream out;
    out << "results are relative to integer bounds [" << bounds.lo << "," << bounds.hi << "]";
    if (!bounds.per_var.empty()) {
        out << " with per-variable overrides";
    }
    return out.str();
}

OrderedJson json_value(const Value& v) {
    if (is_truth(v)) {
        return true;
    }
    if (auto n = as_integer(v)) {
        if (*n >= std::numeric_limits<long long>::min() && *n <= std::numeric_limits<long long>::max()) {
            return static_cast<long long>(*n);
        }
        return to_string(*n);
    }
    return value_text(v);
}

OrderedJson json_valuation(const Valuation& v) {
    OrderedJson out = OrderedJson::object();
    for (const auto& [var, val] : v.defined) {
        out[var] = json_value(val);
    }
    return out;
}

OrderedJson json_atom_set(const AtomSet& atoms) {
    OrderedJson regular = OrderedJson::array();
    OrderedJson theory = OrderedJson::array();
    for (const auto& a : atoms) {
        if (a.is_regular()) {
            regular.push_back(a.name());
        } else {
            theory.push_back(pretty(a.theory_atom()));
        }
    }
    return OrderedJson{{"regular", regular}, {"theory", theory}};
}

std::string atom_set_text(const AtomSet& atoms) {
    if (atoms.empty()) {
        return "(empty)";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& a : atoms) {
        out << (first ? "" : ", ") << pretty(a);
        first = false;
    }
    return out.str();
}

std::string solution_text(const std::set<TheoryAtom>& solution) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& s : solution) {
        out << (first ? "" : ", ") << pretty(s);
        first = false;
    }
    out << "}";
    return out.str();
}

} // namespace

void kernel_log(int level, const std::string& message) {
    if (log_level() >= level) {
        std::cerr << "[amt] " << message << "\n";
    }
}

std::string_view mode_name(Mode mode) {
    switch (mode) {
        case Mode::Transform: return "transform";
        case Mode::HtcTau: return "htc-tau";
        case Mode::HtcTau2: return "htc-tau2";
    }
    return "?";
}

TheoryHandle RunConfig::handle() const {
    return make_handle(theory, bounds, SolverCaps{max_box_cells, max_case_splits});
}

EnumLimits RunConfig::enum_limits() const { return EnumLimits{max_interpretations, jobs}; }

ParseOptions RunConfig::parse_options() const { return ParseOptions{normalize}; }

bool Report::success_exit() const {
    if (equivalent.has_value()) {
        return *equivalent;
    }
    if (agree.has_value()) {
        return *agree;
    }
    return !models.empty();
}

std::string Report::to_json() const {
    OrderedJson out;
    out["schema"] = 1;
    out["command"] = command;
    if (!mode.empty()) {
        out["mode"] = mode;
    }
    out["theory"] = theory;
    OrderedJson jb;
    jb["lo"] = bounds.lo;
    jb["hi"] = bounds.hi;
    if (!bounds.per_var.empty()) {
        OrderedJson vars = OrderedJson::object();
        for (const auto& [var, range] : bounds.per_var) {
            vars[var] = OrderedJson{{"lo", range.first}, {"hi", range.second}};
        }
        jb["vars"] = vars;
    }
    out["bounds"] = jb;
    out["caveat"] = caveat;
    if (agree.has_value() || !equivalent.has_value()) {
        OrderedJson models_json = OrderedJson::array();
        for (const auto& m : models) {
            OrderedJson jm;
            jm["atoms"] = json_atom_set(m.atoms);
            jm["witness"] = m.witness ? json_valuation(*m.witness) : OrderedJson(nullptr);
            OrderedJson sols = OrderedJson::array();
            for (const auto& s : m.solutions) {
                OrderedJson sol = OrderedJson::array();
                for (const auto& atom : s) {
                    sol.push_back(pretty(atom));
                }
                sols.push_back(sol);
            }
            jm["solutions"] = sols;
            models_json.push_back(jm);
        }
        out["models"] = models_json;
    }
    if (agree.has_value()) {
        out["agree"] = *agree;
        OrderedJson counts = OrderedJson::object();
        for (const auto& [name, n] : mode_model_counts) {
            counts[name] = n;
        }
        out["mode_models"] = counts;
        if (mismatch) {
            out["mismatch"] = *mismatch;
        }
    }
    if (equivalent.has_value()) {
        out["equivalent"] = *equivalent;
        if (counterexample) {
            out["counterexample"] = OrderedJson{{"here", json_valuation(counterexample->here)},
                                                {"there", json_valuation(counterexample->there)}};
        }
    }
    return out.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream out;
    if (equivalent.has_value()) {
        out << (*equivalent ? "equivalent" : "not equivalent") << " (" << caveat << ")\n";
        if (counterexample) {
            out << "counterexample: h=" << valuation_text(counterexample->here)
                << " t=" << valuation_text(counterexample->there) << "\n";
        }
        return out.str();
    }
    if (agree.has_value()) {
        out << "modes";
        for (const auto& [name, n] : mode_model_counts) {
            out << " " << name << "=" << n;
        }
        out << "\n";
        out << (*agree ? "agree" : "DISAGREE") << " (" << caveat << ")\n";
        if (mismatch) {
            out << "mismatch: " << *mismatch << "\n";
        }
        return out.str();
    }
    out << models.size() << " model(s) [" << mode << ", " << theory << "; " << caveat << "]\n";
    std::size_t i = 1;
    for (const auto& m : models) {
        out << "model " << i++ << ": " << atom_set_text(m.atoms) << "\n";
        if (m.witness) {
            out << "  witness: " << valuation_text(*m.witness) << "\n";
        }
        for (const auto& s : m.solutions) {
            out << "  solution: " << solution_text(s) << "\n";
        }
    }
    return out.str();
}

std::string Report::render(bool json) const { return json ? to_json() : to_text(); }

namespace {

std::vector<ModelEntry> solve_transform(const Program& p, const RunConfig& config) {
    TheoryHandle handle = config.handle();
    std::vector<ModelEntry> out;
    for (const auto& m : te_stable_models(p, handle, TeOptions{config.max_atoms, config.max_universe})) {
        ModelEntry entry;
        entry.atoms = m.atoms;
        for (const auto& sw : m.solutions) {
            entry.solutions.push_back(sw.solution);
            if (!entry.witness && sw.witness) {
                entry.witness = sw.witness;
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

Valuation integer_part(const Valuation& t, const Signature& sig) {
    Valuation out;
    for (const auto& [var, val] : t.defined) {
        auto it = sig.vars.find(var);
        if (it != sig.vars.end() && it->second.kind == VarDomain::Kind::Int) {
            out.set(var, val);
        }
    }
    return out;
}

std::vector<ModelEntry> solve_htc(const Program& p, const RunConfig& config, Mode mode,
                                  CorruptMode corrupt = CorruptMode::None) {
    if (config.theory == TheoryKind::LinRat) {
        throw Error("HT_c enumeration requires an integer domain; use --mode transform with lin-rat");
    }
    TheoryHandle handle = config.handle();
    TranslationOutput tr =
        mode == Mode::HtcTau ? tau(p, handle, config.bounds) : tau2(p, handle, config.bounds);
    if (corrupt == CorruptMode::DropChoiceAxioms && mode == Mode::HtcTau) {
        // Test hook: lose the external choice axioms but keep the signature.
        Signature sig = tr.signature;
        tr.theory = tau_program(p);
        tr.signature = sig;
    }
    if (corrupt == CorruptMode::DropBridge && mode == Mode::HtcTau2) {
        TheorySet cleaned;
        for (const auto& f : tr.theory) {
            bool is_bridge =
                f.kind() == Formula::Kind::Impl && f.rhs().kind() == Formula::Kind::Atom &&
                f.rhs().catom().is_prop() && f.lhs().kind() == Formula::Kind::Atom &&
                f.lhs().catom().is_linear();
            if (!is_bridge) {
                cleaned.insert(f);
            }
        }
        tr.theory = std::move(cleaned);
    }
    kernel_log(1, std::string(mode_name(mode)) + ": " + std::to_string(tr.theory.size()) + " formulas, " +
                      std::to_string(tr.signature.vars.size()) + " variables");

    std::vector<ModelEntry> out;
    auto find = [&](const AtomSet& x) -> ModelEntry* {
        for (auto& m : out) {
            if (m.atoms == x) {
                return &m;
            }
        }
        return nullptr;
    };
    for (const auto& t : equilibrium_models(tr.theory, tr.signature, config.enum_limits())) {
        AtomSet x = mode == Mode::HtcTau ? project_equilibrium(t, p) : project_aux(t, p, tr);
        std::set<TheoryAtom> solution;
        for (const auto& s : p.universe) {
            if (den_contains(s, t, NumericDomain::Int)) {
                solution.insert(s);
            }
        }
        if (ModelEntry* existing = find(x)) {
            if (std::find(existing->solutions.begin(), existing->solutions.end(), solution) ==
                existing->solutions.end()) {
                existing->solutions.push_back(std::move(solution));
            }
        } else {
            ModelEntry entry;
            entry.atoms = std::move(x);
            entry.witness = integer_part(t, tr.signature);
            entry.solutions.push_back(std::move(solution));
            out.push_back(std::move(entry));
        }
    }
    std::sort(out.begin(), out.end(), [](const ModelEntry& a, const ModelEntry& b) { return a.atoms < b.atoms; });
    return out;
}

std::vector<ModelEntry> solve_mode(const Program& p, const RunConfig& config, Mode mode,
                                   CorruptMode corrupt = CorruptMode::None) {
    return mode == Mode::Transform ? solve_transform(p, config) : solve_htc(p, config, mode, corrupt);
}

Report base_report(std::string command, const RunConfig& config) {
    Report report;
    report.command = std::move(command);
    report.theory = std::string(theory_name(config.theory));
    report.bounds = config.bounds;
    report.caveat = bounds_caveat(config.bounds);
    return report;
}

} // namespace

Report cmd_solve(const std::string& program_text, const RunConfig& config) {
    Program p = infer_partition(parse_program(program_text, config.parse_options()));
    Report report = base_report("solve", config);
    report.mode = std::string(mode_name(config.mode));
    report.models = solve_mode(p, config, config.mode);
    return report;
}

Report cmd_diff(const std::string& program_text, const RunConfig& config, CorruptMode corrupt) {
    Program p = infer_partition(parse_program(program_text, config.parse_options()));
    Report report = base_report("diff", config);
    report.mode = "diff";

    const Mode modes[] = {Mode::Transform, Mode::HtcTau, Mode::HtcTau2};
    std::vector<std::vector<AtomSet>> model_sets;
    std::vector<std::vector<ModelEntry>> entries;
    for (Mode mode : modes) {
        auto models = solve_mode(p, config, mode, corrupt);
        std::vector<AtomSet> atoms;
        for (const auto& m : models) {
            atoms.push_back(m.atoms);
        }
        std::sort(atoms.begin(), atoms.end());
        report.mode_model_counts.emplace_back(std::string(mode_name(mode)), atoms.size());
        model_sets.push_back(std::move(atoms));
        entries.push_back(std::move(models));
    }
    report.models = entries[0];
    bool agree = model_sets[0] == model_sets[1] && model_sets[0] == model_sets[2];
    report.agree = agree;
    if (!agree) {
        // The minimal differing model: smallest atom set present in some
        // modes but not all, by size then lexicographic order.
        std::vector<AtomSet> differing;
        for (std::size_t i = 0; i < 3; ++i) {
            for (const auto& x : model_sets[i]) {
                bool everywhere = true;
                for (std::size_t j = 0; j < 3; ++j) {
                    if (std::find(model_sets[j].begin(), model_sets[j].end(), x) == model_sets[j].end()) {
                        everywhere = false;
                        break;
                    }
                }
                if (!everywhere) {
                    differing.push_back(x);
                }
            }
        }
        auto smaller = [](const AtomSet& a, const AtomSet& b) {
            if (a.size() != b.size()) {
                return a.size() < b.size();
            }
            return a < b;
        };
        std::sort(differing.begin(), differing.end(), smaller);
        std::ostringstream info;
        info << "{" << atom_set_text(differing.front()) << "} found in";
        for (std::size_t i = 0; i < 3; ++i) {
            if (std::find(model_sets[i].begin(), model_sets[i].end(), differing.front()) != model_sets[i].end()) {
                info << " " << mode_name(modes[i]);
            }
        }
        report.mismatch = info.str();
    }
    return report;
}

namespace {

TheorySet theory_from_input(const std::string& text, const RunConfig& config, InputKind kind) {
    if (kind != InputKind::TheoryInput) {
        try {
            Program p = infer_partition(parse_program(text, config.parse_options()));
            return tau(p, config.handle(), config.bounds).theory;
        } catch (const ParseError&) {
            if (kind == InputKind::ProgramInput) {
                throw;
            }
        }
    }
    return parse_formulas(text);
}

} // namespace

Report cmd_equiv(const std::string& text_a, const std::string& text_b, const RunConfig& config, InputKind kind) {
    TheorySet a = theory_from_input(text_a, config, kind);
    TheorySet b = theory_from_input(text_b, config, kind);
    Signature sig = infer_signature({&a, &b}, config.bounds);
    Report report = base_report("equiv", config);
    report.mode = "equiv";
    EquivResult result = equiv_models(a, b, sig, config.enum_limits());
    report.equivalent = result.equivalent;
    report.counterexample = result.counterexample;
    return report;
}

std::string example_program_text() {
    return "a :- &sum{x;y} = 4.\n"
           "&sum{y;z} = 2 :- a.\n";
}

std::string corpus_program(unsigned long long seed, TheoryKind theory) {
    std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ULL);
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned long long>(n)); };

    const std::vector<std::string> var_pool = {"x", "y", "z"};
    const std::vector<std::string> reg_pool = {"a", "b", "c"};
    const int nvars = 1 + pick(3);
    const int nregs = pick(4);
    const int npairs = 1 + pick(2);

    auto random_atom = [&]() {
        if (theory == TheoryKind::DiffInt) {
            return make_diff_atom(var_pool[pick(nvars)], var_pool[pick(nvars)], Int(pick(9) - 4));
        }
        const int nterms = 1 + pick(2);
        std::vector<Term> terms;
        for (int i = 0; i < nterms; ++i) {
            int coeff = pick(4);
            terms.push_back(Term{Int(coeff < 2 ? coeff - 2 : coeff - 1), var_pool[pick(nvars)]});
        }
        const Rel rels[] = {Rel::Le, Rel::Eq, Rel::Ne, Rel::Lt, Rel::Gt, Rel::Ge};
        return make_sum_atom(std::move(terms), rels[pick(6)], Int(pick(9) - 4));
    };

    struct PairInfo {
        TheoryAtom atom;
        bool head_role = false;
    };
    std::vector<PairInfo> pairs;
    std::set<TheoryAtom> taken;
    for (int i = 0; i < npairs; ++i) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            TheoryAtom atom = random_atom();
            if (taken.count(atom) != 0 || taken.count(complement(atom)) != 0) {
                continue;
            }
            taken.insert(atom);
            taken.insert(complement(atom));
            pairs.push_back(PairInfo{std::move(atom), pick(2) == 0});
            break;
        }
    }

    std::vector<const PairInfo*> head_pairs;
    std::vector<const PairInfo*> body_pairs;
    for (const auto& p : pairs) {
        (p.head_role ? head_pairs : body_pairs).push_back(&p);
    }

    std::ostringstream out;
    out << "% corpus seed " << seed << "\n";
    std::set<TheoryAtom> body_used;
    const int nrules = 1 + pick(4);
    for (int i = 0; i < nrules; ++i) {
        // Head: a regular atom, a founded theory atom, or a constraint.
        std::string head;
        const int head_options = (nregs > 0 ? 1 : 0) + (head_pairs.empty() ? 0 : 1) + 1;
        int choice = pick(head_options);
        if (nregs > 0 && choice == 0) {
            head = reg_pool[pick(nregs)];
        } else if (!head_pairs.empty() && choice == (nregs > 0 ? 1 : 0)) {
            const PairInfo* p = head_pairs[pick(static_cast<int>(head_pairs.size()))];
            head = pretty(pick(2) == 0 ? p->atom : complement(p->atom));
        }

        std::vector<std::string> literals;
        const int nlits = pick(3);
        for (int j = 0; j < nlits; ++j) {
            const bool neg = pick(3) == 0;
            std::string atom_text;
            const bool use_theory = !body_pairs.empty() && (nregs == 0 || pick(2) == 0);
            if (use_theory) {
                const PairInfo* p = body_pairs[pick(static_cast<int>(body_pairs.size()))];
                TheoryAtom atom = pick(2) == 0 ? p->atom : complement(p->atom);
                body_used.insert(atom);
                body_used.insert(complement(atom));
                atom_text = pretty(atom);
            } else if (nregs > 0) {
                atom_text = reg_pool[pick(nregs)];
            } else {
                continue;
            }
            literals.push_back((neg ? "not " : "") + atom_text);
        }

        if (head.empty() && literals.empty()) {
            continue; // skip the always-false constraint in random programs
        }
        out << head;
        if (!literals.empty()) {
            out << (head.empty() ? ":- " : " :- ");
            for (std::size_t j = 0; j < literals.size(); ++j) {
                out << (j == 0 ? "" : ", ") << literals[j];
            }
        }
        out << ".\n";
    }
    // Unused body pairs sometimes stay relevant through a directive.
    for (const PairInfo* p : body_pairs) {
        if (body_used.count(p->atom) == 0 && pick(2) == 0) {
            out << "#external " << pretty(p->atom) << ".\n";
        }
    }
    return out.str();
}

} // namespace amt
