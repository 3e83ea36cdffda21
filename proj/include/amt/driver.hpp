#pragma once

#include <amt/htc.hpp>
#include <amt/linear.hpp>
#include <amt/stable.hpp>
#include <amt/syntax.hpp>
#include <amt/translate.hpp>

#include <optional>
#include <string>
#include <vector>

namespace amt {

enum class Mode { Transform, HtcTau, HtcTau2 };

std::string_view mode_name(Mode mode);

struct RunConfig {
    TheoryKind theory = TheoryKind::LinInt;
    Bounds bounds;
    Mode mode = Mode::Transform;
    std::size_t max_atoms = 22;
    std::size_t max_universe = 20;
    long long max_box_cells = 10'000'000;
    long long max_interpretations = 10'000'000;
    long long max_case_splits = 1 << 16;
    int jobs = 0; // 0 = all cores
    bool normalize = false;
    bool json = false;
    unsigned long long seed = 0;

    TheoryHandle handle() const;
    EnumLimits enum_limits() const;
    ParseOptions parse_options() const;
};

struct ModelEntry {
    AtomSet atoms;
    std::optional<Valuation> witness;
    std::vector<std::set<TheoryAtom>> solutions;
};

struct Report {
    std::string command;
    std::string mode;
    std::string theory;
    Bounds bounds;
    std::string caveat;
    std::vector<ModelEntry> models;
    // diff
    std::optional<bool> agree;
    std::optional<std::string> mismatch;
    std::vector<std::pair<std::string, std::size_t>> mode_model_counts;
    // equiv
    std::optional<bool> equivalent;
    std::optional<Interpretation> counterexample;

    bool success_exit() const;
    std::string to_json() const;
    std::string to_text() const;
    std::string render(bool json) const;
};

Report cmd_solve(const std::string& program_text, const RunConfig& config);

// Fault-injection hooks for the differential driver; used by tests to show
// that a broken translation is detected.
enum class CorruptMode { None, DropChoiceAxioms, DropBridge };

Report cmd_diff(const std::string& program_text, const RunConfig& config, CorruptMode corrupt = CorruptMode::None);

enum class InputKind { Auto, ProgramInput, TheoryInput };

Report cmd_equiv(const std::string& text_a, const std::string& text_b, const RunConfig& config,
                 InputKind kind = InputKind::Auto);

// Seeded random T-logic program over the default corpus shape: up to three
// regular atoms, two complementary theory-atom pairs, four rules, small
// coefficients and constants.
std::string corpus_program(unsigned long long seed, TheoryKind theory = TheoryKind::LinInt);

// The running example used throughout: a regular atom fed by an external
// linear equation and feeding a founded one.
std::string example_program_text();

void kernel_log(int level, const std::string& message);

} // namespace amt
