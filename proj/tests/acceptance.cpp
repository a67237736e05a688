// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "suite.hpp"

int main(int argc, char** argv) {
    ptg::suite::Options opt;
    if (const char* env = std::getenv("PTG_JOBS")) opt.jobs = std::max(1, std::atoi(env));
    for (int i = 1; i < argc; ++i) opt.only.push_back(std::atoi(argv[i]));
    bool ok = true;
    ptg::suite::run_all(opt, [&](const ptg::suite::CriterionResult& r) {
        std::cout << ptg::suite::format(r) << std::endl;
        ok = ok && r.pass;
    });
    return ok ? 0 : 1;
}
