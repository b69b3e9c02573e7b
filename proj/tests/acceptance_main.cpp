#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "dualcat/acceptance.hpp"

namespace {

int usage() {
    std::cerr << "usage: dualcat_acceptance [--level smoke|full] [--jobs N]\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    dualcat::acceptance::Options opts;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--level" && i + 1 < argc) {
            const std::string level = argv[++i];
            if (level == "smoke")
                opts.level = dualcat::acceptance::Level::smoke;
            else if (level == "full")
                opts.level = dualcat::acceptance::Level::full;
            else
                return usage();
        } else if (arg == "--jobs" && i + 1 < argc) {
            opts.jobs = std::atoi(argv[++i]);
        } else {
            return usage();
        }
    }

    auto results = dualcat::acceptance::run_all(opts, std::cout, &std::cerr);
    size_t passed = 0;
    for (const auto& r : results)
        if (r.pass) ++passed;
    const bool ok = dualcat::acceptance::all_passed(results);
    std::cout << "RESULT: " << (ok ? "PASS" : "FAIL") << " (" << passed << "/" << results.size()
              << " criteria)\n";
    return ok ? 0 : 1;
}
