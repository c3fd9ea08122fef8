// Acceptance runner: one line per criterion, exit 0 iff every executed
// criterion passed. `--criterion N` runs a single check (used by ctest to
// register each criterion separately), `--seed S` fixes the randomized
// instances.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "fspec/acceptance.hpp"

int main(int argc, char** argv) {
    fspec::AcceptanceConfig cfg;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            cfg.seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N] [--seed S]\n", argv[0]);
            return 2;
        }
    }

    bool all_pass = true;
    if (only != 0) {
        const auto r = fspec::run_criterion(only, cfg);
        std::puts(fspec::format_result(r).c_str());
        all_pass = r.passed;
    } else {
        for (const auto& r : fspec::run_acceptance(cfg)) {
            std::puts(fspec::format_result(r).c_str());
            all_pass = all_pass && r.passed;
        }
    }
    return all_pass ? 0 : 1;
}
