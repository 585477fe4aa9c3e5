// Acceptance suite: one PASS/FAIL line per criterion.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "omegacat/verify/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::uint64_t seed = 1;
    app.add_option("--seed", seed);
    CLI11_PARSE(app, argc, argv);

    std::size_t failed = 0;
    for (std::size_t i = 0; i < omegacat::verify::criteria().size(); ++i) {
        omegacat::verify::CriterionResult r;
        try {
            r = omegacat::verify::run_criterion(i, seed);
        } catch (const omegacat::InternalInconsistency& e) {
            std::cout << "FAIL [" << i + 1 << "] internal inconsistency: " << e.what() << std::endl;
            return 3;
        }
        char time[32];
        std::snprintf(time, sizeof time, " (%.2fs)", r.seconds);
        std::cout << omegacat::verify::format_line(r) << time << std::endl;
        failed += !r.passed;
    }
    std::cout << omegacat::verify::criteria().size() - failed << "/" << omegacat::verify::criteria().size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
