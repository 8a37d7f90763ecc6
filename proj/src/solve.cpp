#include "mptplan/solve.hpp"

#include "mptplan/causal_graph.hpp"
#include "mptplan/compiled_task.hpp"
#include "mptplan/format.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

namespace mptplan {

std::string to_string(RunOutcome outcome) {
    switch (outcome) {
    case RunOutcome::Solved: return "solved";
    case RunOutcome::Unsolvable: return "unsolvable";
    case RunOutcome::Timeout: return "timeout";
    case RunOutcome::Memory: return "memory";
    case RunOutcome::Failed: return "failed";
    case RunOutcome::Error: return "error";
    }
    return "?";
}

namespace {
RunOutcome from_search(SearchOutcome outcome) {
    switch (outcome) {
    case SearchOutcome::Solved: return RunOutcome::Solved;
    case SearchOutcome::Unsolvable: return RunOutcome::Unsolvable;
    case SearchOutcome::Timeout: return RunOutcome::Timeout;
    case SearchOutcome::MemoryExceeded: return RunOutcome::Memory;
    case SearchOutcome::Failed: return RunOutcome::Failed;
    }
    return RunOutcome::Error;
}
}  // namespace

SolveReport solve(const Task &task, Configuration config, const SearchLimits &limits) {
    SolveReport report;
    Budget budget(limits);
    RelevantTask relevant = prune_irrelevant(task, build_causal_graph(task));
    CompiledTask compiled = compile_task(relevant.task);
    report.search = run_configuration(compiled, config, budget);
    report.search.stats.seconds = budget.elapsed();
    report.outcome = from_search(report.search.outcome);
    if (report.outcome != RunOutcome::Solved)
        return report;
    report.plan = relevant.to_original(report.search.plan);
    report.verdict = validate_plan(task, report.plan);
    if (!report.verdict.valid()) {
        report.outcome = RunOutcome::Error;
        report.message = "search returned an invalid plan: " + report.verdict.message;
    }
    return report;
}

std::string BenchRow::to_csv() const {
    char time[32];
    std::snprintf(time, sizeof time, "%.3f", time_ms);
    return task + "," + config + "," + to_string(outcome) + "," + time + "," +
           (plan_length >= 0 ? std::to_string(plan_length) : "") + "," +
           std::to_string(expansions) + "," + std::to_string(evaluations) + "," +
           std::to_string(generated);
}

std::vector<BenchRow> bench(const std::filesystem::path &dir,
                            const std::vector<Configuration> &configs,
                            const SearchLimits &limits) {
    std::vector<std::filesystem::path> files;
    for (const auto &entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".mpt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<BenchRow> rows;
    for (const auto &file : files) {
        std::optional<Task> task;
        try {
            task = read_mpt_file(file);
        } catch (const std::exception &) {
        }
        for (Configuration config : configs) {
            BenchRow row;
            row.task = file.filename().string();
            row.config = to_string(config);
            if (!task) {
                rows.push_back(row);
                continue;
            }
            auto started = std::chrono::steady_clock::now();
            try {
                SolveReport report = solve(*task, config, limits);
                row.outcome = report.outcome;
                if (report.outcome == RunOutcome::Solved)
                    row.plan_length = static_cast<long>(report.plan.size());
                row.expansions = report.search.stats.expansions;
                row.evaluations = report.search.stats.evaluations;
                row.generated = report.search.stats.generated;
            } catch (const std::exception &) {
                row.outcome = RunOutcome::Error;
            }
            row.time_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started)
                              .count();
            rows.push_back(row);
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow> &rows) {
    std::string out = std::string(kBenchHeader) + "\n";
    for (const BenchRow &row : rows)
        out += row.to_csv() + "\n";
    return out;
}

}  // namespace mptplan
