// Writes the fixed test domains as .mpt files, plus plans for the CLI tests.
#include "mptplan/format.hpp"
#include "mptplan/plan_io.hpp"

#include "../tests/support/domains.hpp"

#include <fstream>
#include <iostream>

using namespace mptplan;

int main(int argc, char **argv) {
    if (argc != 2) {
        std::cerr << "usage: make_benchmarks <output-dir>\n";
        return 3;
    }
    std::filesystem::path dir(argv[1]);
    std::filesystem::create_directories(dir / "plans");
    for (const auto &nt : testing::benchmark_suite())
        write_mpt_file(dir / (nt.name + ".mpt"), nt.task);

    Task grid = testing::grid_task();
    Plan good, bad;
    for (const std::string &name : testing::grid_hand_plan()) {
        good.steps.push_back(find_operator(grid, name));
        if (name != "unlock-c22")
            bad.steps.push_back(good.steps.back());
    }
    std::ofstream(dir / "plans" / "grid_hand.plan") << format_plan(grid, good);
    std::ofstream(dir / "plans" / "grid_without_unlock.plan") << format_plan(grid, bad);
    return 0;
}
