#include "wres/cli_report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the boundary noncommutative residue for the Witten deformation (n = 7)"};

    wres::VerifyOptions opts;
    std::string format = "text";
    std::string out_path;
    app.add_option("--case", opts.cases, "Case id 1..15 (repeatable; default all)")->check(CLI::Range(1, 15));
    app.add_option("--mode", opts.mode, "strict: exit 1 on any reference discrepancy; report: always exit 0")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, wres::CompareMode>{{"strict", wres::CompareMode::strict},
                                                     {"report", wres::CompareMode::report}}));
    app.add_flag("--oracle", opts.oracle, "Run the numeric oracle on every case");
    app.add_option("--policy", opts.policy, "Reading of the ambiguous table entry")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, wres::AmbiguityPolicy>{{"diagonal", wres::AmbiguityPolicy::diagonal},
                                                         {"zero", wres::AmbiguityPolicy::zero}}));
    app.add_option("--format", format, "text or structured (JSON)")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--out", out_path, "Write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    wres::VerifyOutcome res = wres::run_verify(opts);
    std::string body = format == "structured" ? wres::render_structured(res.document) : wres::render_text(res.document);
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << body;
    }
    if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
    return res.exit_code;
}
