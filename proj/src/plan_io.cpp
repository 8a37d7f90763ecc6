#include "mptplan/plan_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace mptplan {

std::string format_plan(const Task &task, const Plan &plan) {
    std::string out;
    for (int id : plan.steps)
        out += task.operators.at(id).name + "\n";
    out += "; cost = " + std::to_string(plan.size()) + "\n";
    return out;
}

Plan parse_plan(const Task &task, std::string_view text) {
    std::unordered_map<std::string, int> ids;
    for (std::size_t i = 0; i < task.operators.size(); ++i)
        ids.emplace(task.operators[i].name, static_cast<int>(i));
    Plan plan;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == ';')
            continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string name = line.substr(first, last - first + 1);
        if (name.size() >= 2 && name.front() == '(' && name.back() == ')')
            name = name.substr(1, name.size() - 2);
        auto it = ids.find(name);
        plan.steps.push_back(it == ids.end() ? -1 : it->second);
    }
    return plan;
}

Plan read_plan_file(const Task &task, const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open plan file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_plan(task, buffer.str());
}

std::string stats_json(const SearchResult &result, const std::string &config) {
    const SearchStats &s = result.stats;
    nlohmann::json j;
    j["config"] = config;
    j["outcome"] = to_string(result.outcome);
    if (!result.solver.empty())
        j["solver"] = result.solver;
    j["plan_length"] = result.outcome == SearchOutcome::Solved
                           ? nlohmann::json(result.plan.size())
                           : nlohmann::json(nullptr);
    j["expansions"] = s.expansions;
    j["evaluations"] = s.evaluations;
    j["generated"] = s.generated;
    j["peak_frontier"] = s.peak_frontier;
    j["dead_ends"] = s.dead_ends;
    j["restarts"] = s.restarts;
    j["time"] = s.seconds;
    return j.dump(2) + "\n";
}

}  // namespace mptplan
