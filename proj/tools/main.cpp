#include <amt/driver.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw amt::Error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::pair<long long, long long> parse_range(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos) {
        throw amt::Error("expected LO..HI, got '" + text + "'");
    }
    try {
        long long lo = std::stoll(text.substr(0, sep));
        long long hi = std::stoll(text.substr(sep + 2));
        if (lo > hi) {
            throw amt::Error("empty range '" + text + "'");
        }
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw amt::Error("expected LO..HI, got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw amt::Error("range out of bounds: '" + text + "'");
    }
}

struct CommonOpts {
    std::string bounds;
    std::vector<std::string> bound_vars;
    std::string theory = "lin-int";
    std::string format = "text";
    amt::RunConfig config;

    void attach(CLI::App& cmd) {
        cmd.add_option("--theory", theory, "Theory: lin-int|diff-int|lin-rat")->capture_default_str();
        cmd.add_option("--bounds", bounds, "Global integer bounds LO..HI (default -10..10)");
        cmd.add_option("--bound-var", bound_vars, "Per-variable bounds x=LO..HI")->take_all();
        cmd.add_option("--format", format, "Output format: text|json")->capture_default_str();
        cmd.add_option("--jobs", config.jobs, "Worker threads (0 = all cores)")->capture_default_str();
        cmd.add_option("--max-atoms", config.max_atoms, "Stable-model atom cap")->capture_default_str();
        cmd.add_option("--max-universe", config.max_universe, "Theory-atom universe cap")->capture_default_str();
        cmd.add_option("--max-box-cells", config.max_box_cells, "Integer search box cap")->capture_default_str();
        cmd.add_option("--max-interpretations", config.max_interpretations, "HT valuation cap")
            ->capture_default_str();
        cmd.add_flag("--normalize", config.normalize, "Sort the terms of &sum atoms");
    }

    amt::RunConfig finish() {
        if (theory == "lin-int") {
            config.theory = amt::TheoryKind::LinInt;
        } else if (theory == "diff-int") {
            config.theory = amt::TheoryKind::DiffInt;
        } else if (theory == "lin-rat") {
            config.theory = amt::TheoryKind::LinRat;
        } else {
            throw amt::Error("unknown theory '" + theory + "'");
        }
        if (!bounds.empty()) {
            auto [lo, hi] = parse_range(bounds);
            config.bounds.lo = lo;
            config.bounds.hi = hi;
        }
        for (const auto& spec : bound_vars) {
            auto eq = spec.find('=');
            if (eq == std::string::npos) {
                throw amt::Error("expected x=LO..HI, got '" + spec + "'");
            }
            config.bounds.per_var[spec.substr(0, eq)] = parse_range(spec.substr(eq + 1));
        }
        if (format != "text" && format != "json") {
            throw amt::Error("unknown format '" + format + "'");
        }
        config.json = format == "json";
        return config;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"T-logic program laboratory: stable models modulo theories, HT_c translations, and their "
                 "differential comparison"};
    app.require_subcommand(1);

    std::string program_file;
    std::string file_a;
    std::string file_b;
    std::string mode = "transform";
    std::string equiv_kind = "auto";
    unsigned long long seed = 0;
    int corpus_count = 1;
    std::string corpus_theory = "lin-int";

    CommonOpts solve_opts;
    auto* solve = app.add_subcommand("solve", "Enumerate stable models modulo the theory");
    solve->add_option("file", program_file, "Program file ('-' for stdin)")->required();
    solve->add_option("--mode", mode, "transform|htc-tau|htc-tau2")->capture_default_str();
    solve_opts.attach(*solve);

    CommonOpts diff_opts;
    auto* diff = app.add_subcommand("diff", "Run all three modes and compare the model sets");
    diff->add_option("file", program_file, "Program file ('-' for stdin)")->required();
    diff_opts.attach(*diff);

    CommonOpts equiv_opts;
    auto* equiv = app.add_subcommand("equiv", "Check HT_c equivalence of two inputs over the box");
    equiv->add_option("a", file_a, "First input (program or theory file)")->required();
    equiv->add_option("b", file_b, "Second input (program or theory file)")->required();
    equiv->add_option("--kind", equiv_kind, "Input kind: auto|program|theory")->capture_default_str();
    equiv_opts.attach(*equiv);

    auto* corpus = app.add_subcommand("corpus", "Emit seeded random programs");
    corpus->add_option("--seed", seed, "Corpus seed")->capture_default_str();
    corpus->add_option("--count", corpus_count, "Number of programs")->capture_default_str();
    corpus->add_option("--theory", corpus_theory, "lin-int|diff-int")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            amt::RunConfig config = solve_opts.finish();
            if (mode == "transform") {
                config.mode = amt::Mode::Transform;
            } else if (mode == "htc-tau") {
                config.mode = amt::Mode::HtcTau;
            } else if (mode == "htc-tau2") {
                config.mode = amt::Mode::HtcTau2;
            } else {
                throw amt::Error("unknown mode '" + mode + "'");
            }
            std::string text = program_file == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                                   : read_file(program_file);
            amt::Report report = amt::cmd_solve(text, config);
            std::cout << report.render(config.json);
            return report.success_exit() ? 0 : 1;
        }
        if (diff->parsed()) {
            amt::RunConfig config = diff_opts.finish();
            std::string text = program_file == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                                   : read_file(program_file);
            amt::Report report = amt::cmd_diff(text, config);
            std::cout << report.render(config.json);
            return report.success_exit() ? 0 : 1;
        }
        if (equiv->parsed()) {
            amt::RunConfig config = equiv_opts.finish();
            amt::InputKind kind = amt::InputKind::Auto;
            if (equiv_kind == "program") {
                kind = amt::InputKind::ProgramInput;
            } else if (equiv_kind == "theory") {
                kind = amt::InputKind::TheoryInput;
            } else if (equiv_kind != "auto") {
                throw amt::Error("unknown input kind '" + equiv_kind + "'");
            }
            amt::Report report = amt::cmd_equiv(read_file(file_a), read_file(file_b), config, kind);
            std::cout << report.render(config.json);
            return report.success_exit() ? 0 : 1;
        }
        if (corpus->parsed()) {
            amt::TheoryKind kind = amt::TheoryKind::LinInt;
            if (corpus_theory == "diff-int") {
                kind = amt::TheoryKind::DiffInt;
            } else if (corpus_theory != "lin-int") {
                throw amt::Error("corpus supports lin-int and diff-int");
            }
            for (int i = 0; i < corpus_count; ++i) {
                if (i > 0) {
                    std::cout << "%% ---\n";
                }
                std::cout << amt::corpus_program(seed + static_cast<unsigned long long>(i), kind);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
