#pragma once

#include "mptplan/search.hpp"
#include "mptplan/task.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace mptplan {

enum class RunOutcome { Solved, Unsolvable, Timeout, Memory, Failed, Error };
std::string to_string(RunOutcome outcome);

struct SolveReport {
    RunOutcome outcome = RunOutcome::Error;
    Plan plan;  // operator ids of the input task
    SearchResult search;
    Verdict verdict;
    std::string message;
};

/*
  Full pipeline: irrelevance pruning, knowledge compilation, search, mapping
  the plan back to the input task and validating it against that task. A plan
  that fails validation turns the run into an error.
*/
SolveReport solve(const Task &task, Configuration config, const SearchLimits &limits);

// CSV columns of the benchmark harness.
inline constexpr const char *kBenchHeader =
    "task,config,outcome,time_ms,plan_length,expansions,evaluations,generated";

struct BenchRow {
    std::string task;
    std::string config;
    RunOutcome outcome = RunOutcome::Error;
    double time_ms = 0;
    long plan_length = -1;
    long expansions = 0;
    long evaluations = 0;
    long generated = 0;

    std::string to_csv() const;
};

// Rows for every .mpt file in dir (sorted by path) times every configuration.
// Per-task failures become error rows.
std::vector<BenchRow> bench(const std::filesystem::path &dir,
                            const std::vector<Configuration> &configs,
                            const SearchLimits &limits);
std::string bench_csv(const std::vector<BenchRow> &rows);

}  // namespace mptplan
