#include "gzeta/job.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"Burnside-ring calculator: tables of marks, symmetric-power series, "
                 "equivariant Euler characteristics and monodromy zeta functions"};

    std::string input = "-";
    app.add_option("job", input, "job document (JSON), or - for stdin")->capture_default_str();

    gzeta::JobOverrides overrides;
    int order = -1;
    app.add_option("--order", order, "override the truncation order of the document");
    std::string format;
    app.add_option("--format", format, "override the output format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    auto* strict_flag = app.add_flag("--strict,!--no-strict",
                                     "toggle strict stratum validation (default: strict)");

    CLI11_PARSE(app, argc, argv);

    if (order >= 0) overrides.order = order;
    if (!format.empty())
        overrides.format = format == "text" ? gzeta::OutputFormat::Text
                                            : gzeta::OutputFormat::Structured;
    if (strict_flag->count() > 0) overrides.strict = strict_flag->as<bool>();

    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(input);
        if (!f) {
            std::cerr << "cannot open " << input << "\n";
            return 2;
        }
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }

    return gzeta::run_to_streams(text, overrides, std::cout, std::cerr);
}
