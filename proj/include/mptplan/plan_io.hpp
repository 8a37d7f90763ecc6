#pragma once

#include "mptplan/search.hpp"
#include "mptplan/task.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace mptplan {

// One operator name per line followed by "; cost = N".
std::string format_plan(const Task &task, const Plan &plan);

/*
  Reads a plan written by format_plan. Blank lines and ';' comments are
  skipped; names may be wrapped in parentheses. Unknown names become id -1,
  which validate_plan reports as an unknown operator.
*/
Plan parse_plan(const Task &task, std::string_view text);
Plan read_plan_file(const Task &task, const std::filesystem::path &path);

// JSON object with the search statistics of a run.
std::string stats_json(const SearchResult &result, const std::string &config);

}  // namespace mptplan
