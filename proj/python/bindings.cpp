#include <amt/driver.hpp>

#include <pybind11/pybind11.h>

#include <string>

namespace py = pybind11;

namespace {

amt::RunConfig config_from_args(const std::string& theory, const std::string& mode, long long lo, long long hi,
                                int jobs) {
    amt::RunConfig config;
    if (theory == "lin-int") {
        config.theory = amt::TheoryKind::LinInt;
    } else if (theory == "diff-int") {
        config.theory = amt::TheoryKind::DiffInt;
    } else if (theory == "lin-rat") {
        config.theory = amt::TheoryKind::LinRat;
    } else {
        throw amt::Error("unknown theory '" + theory + "'");
    }
    if (mode == "transform") {
        config.mode = amt::Mode::Transform;
    } else if (mode == "htc-tau") {
        config.mode = amt::Mode::HtcTau;
    } else if (mode == "htc-tau2") {
        config.mode = amt::Mode::HtcTau2;
    } else {
        throw amt::Error("unknown mode '" + mode + "'");
    }
    config.bounds.lo = lo;
    config.bounds.hi = hi;
    config.jobs = jobs;
    return config;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stable models modulo theories, HT_c translations, and differential checks";

    m.def(
        "solve_json",
        [](const std::string& program, const std::string& mode, const std::string& theory, long long lo,
           long long hi, int jobs) {
            return amt::cmd_solve(program, config_from_args(theory, mode, lo, hi, jobs)).to_json();
        },
        py::arg("program"), py::arg("mode") = "transform", py::arg("theory") = "lin-int", py::arg("lo") = -10,
        py::arg("hi") = 10, py::arg("jobs") = 0);

    m.def(
        "diff_json",
        [](const std::string& program, const std::string& theory, long long lo, long long hi, int jobs) {
            return amt::cmd_diff(program, config_from_args(theory, "transform", lo, hi, jobs)).to_json();
        },
        py::arg("program"), py::arg("theory") = "lin-int", py::arg("lo") = -10, py::arg("hi") = 10,
        py::arg("jobs") = 0);

    m.def(
        "equiv_json",
        [](const std::string& a, const std::string& b, const std::string& theory, long long lo, long long hi,
           int jobs) {
            return amt::cmd_equiv(a, b, config_from_args(theory, "transform", lo, hi, jobs)).to_json();
        },
        py::arg("a"), py::arg("b"), py::arg("theory") = "lin-int", py::arg("lo") = -10, py::arg("hi") = 10,
        py::arg("jobs") = 0);

    m.def(
        "pretty",
        [](const std::string& program, bool normalize) {
            amt::ParseOptions opts;
            opts.normalize_terms = normalize;
            return amt::pretty(amt::parse_program(program, opts));
        },
        py::arg("program"), py::arg("normalize") = false);

    m.def(
        "corpus",
        [](unsigned long long seed, const std::string& theory) {
            return amt::corpus_program(seed, theory == "diff-int" ? amt::TheoryKind::DiffInt
                                                                  : amt::TheoryKind::LinInt);
        },
        py::arg("seed"), py::arg("theory") = "lin-int");

    m.def("example_program", &amt::example_program_text);

    py::register_exception<amt::Error>(m, "AmtError");
}
