#include "mptplan/cg_heuristic.hpp"
#include "mptplan/compiled_task.hpp"
#include "mptplan/dot.hpp"
#include "mptplan/ff_heuristic.hpp"
#include "mptplan/format.hpp"
#include "mptplan/plan_io.hpp"
#include "mptplan/solve.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace mptplan;

namespace {
enum ExitCode {
    kOk = 0,
    kNegative = 1,   // unsolvable, invalid plan, search failed
    kTimeout = 2,
    kInputError = 3,
    kResource = 4,
};

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

int exit_code(RunOutcome outcome) {
    switch (outcome) {
    case RunOutcome::Solved: return kOk;
    case RunOutcome::Unsolvable:
    case RunOutcome::Failed:
    case RunOutcome::Error: return kNegative;
    case RunOutcome::Timeout: return kTimeout;
    case RunOutcome::Memory: return kResource;
    }
    return kResource;
}

SearchLimits make_limits(double timeout, std::size_t mem) {
    SearchLimits limits;
    if (timeout > 0)
        limits.time_seconds = timeout;
    limits.memory_mb = mem;
    return limits;
}

int run_solve(const std::string &task_path, const std::string &search, double timeout,
              std::size_t mem, const std::string &plan_file) {
    auto config = parse_configuration(search);
    if (!config) {
        std::cerr << "unknown search configuration: " << search << "\n";
        return kInputError;
    }
    Task task = read_mpt_file(task_path);
    SolveReport report = solve(task, *config, make_limits(timeout, mem));
    write_file(plan_file + ".json", stats_json(report.search, to_string(*config)));
    std::cout << "outcome: " << to_string(report.outcome) << "\n";
    if (!report.search.solver.empty())
        std::cout << "solver: " << report.search.solver << "\n";
    const SearchStats &s = report.search.stats;
    std::cout << "expansions: " << s.expansions << "\nevaluations: " << s.evaluations
              << "\ngenerated: " << s.generated << "\ntime: " << s.seconds << "\n";
    if (report.outcome == RunOutcome::Solved) {
        write_file(plan_file, format_plan(task, report.plan));
        std::cout << "plan length: " << report.plan.size() << "\nplan file: " << plan_file << "\n";
    }
    if (!report.message.empty())
        std::cerr << report.message << "\n";
    return exit_code(report.outcome);
}

int run_validate(const std::string &task_path, const std::string &plan_path) {
    Task task = read_mpt_file(task_path);
    Plan plan = read_plan_file(task, plan_path);
    Verdict verdict = validate_plan(task, plan);
    if (verdict.valid()) {
        std::cout << "valid plan of length " << plan.size() << "\n";
        return kOk;
    }
    std::cout << "invalid plan: step " << verdict.step << ": " << to_string(verdict.failure)
              << ": " << verdict.message << "\n";
    return kNegative;
}

int run_compile(const std::string &task_path, const std::string &dump_dir) {
    Task task = read_mpt_file(task_path);
    CompiledTask ct = compile_task(task);
    const PrunedCausalGraph &pruned = ct.pruned_causal_graph;
    std::cout << "variables: " << task.num_variables() << "\noperators: "
              << task.operators.size() << "\naxioms: " << task.axioms.size()
              << "\ncausal graph arcs: " << ct.causal_graph.arcs().size()
              << "\ndropped arcs: " << pruned.dropped_arcs().size() << "\n";
    std::ostringstream report;
    report << "order:";
    for (int v : pruned.order())
        report << " " << task.variables[v].name;
    report << "\n";
    for (const Arc &a : pruned.dropped_arcs())
        report << "dropped " << task.variables[a.from].name << " -> "
               << task.variables[a.to].name << " (weight "
               << ct.causal_graph.weight(a.from, a.to) << ")\n";
    std::cout << report.str();
    if (dump_dir.empty())
        return kOk;

    std::filesystem::path dir(dump_dir);
    std::filesystem::create_directories(dir);
    for (int v = 0; v < task.num_variables(); ++v) {
        const std::string &name = task.variables[v].name;
        write_file(dir / ("dtg_" + name + ".dot"), export_dot(task, ct.dtgs[v]));
        if (ct.extended_dtgs[v].extended)
            write_file(dir / ("extended_dtg_" + name + ".dot"),
                       export_dot(task, ct.extended_dtgs[v]));
        write_file(dir / ("pruned_dtg_" + name + ".dot"), export_dot(task, ct.pruned_dtgs[v]));
    }
    write_file(dir / "causal_graph.dot", export_dot(task, ct.causal_graph));
    write_file(dir / "pruned_causal_graph.dot", export_dot(task, ct.causal_graph, pruned));
    write_file(dir / "dropped_arcs.txt", report.str());
    return kOk;
}

int run_heuristic(const std::string &task_path, const std::string &kind,
                  const std::vector<int> &values) {
    Task task = read_mpt_file(task_path);
    CompiledTask ct = compile_task(task);
    State state = task.init;
    if (!values.empty()) {
        if (values.size() != task.variables.size()) {
            std::cerr << "--state needs one value per variable\n";
            return kInputError;
        }
        for (std::size_t v = 0; v < values.size(); ++v)
            if (values[v] < 0 || values[v] >= task.variables[v].domain_size) {
                std::cerr << "value out of range for " << task.variables[v].name << "\n";
                return kInputError;
            }
        state = task.make_state(values);
    }
    ExtendedState ext = ct.extended_state(state);
    std::unique_ptr<Heuristic> h;
    if (kind == "cg")
        h = std::make_unique<CausalGraphHeuristic>(ct);
    else if (kind == "ff")
        h = std::make_unique<FFHeuristic>(ct);
    else {
        std::cerr << "unknown heuristic: " << kind << "\n";
        return kInputError;
    }
    HeuristicResult r = h->evaluate(ext);
    std::cout << "h = " << (r.is_dead_end() ? std::string("infinity") : std::to_string(r.value))
              << "\npreferred:";
    for (int op : r.preferred)
        std::cout << " " << task.operators[op].name;
    std::cout << "\n";
    if (auto *ff = dynamic_cast<FFHeuristic *>(h.get()); ff && !r.is_dead_end()) {
        std::cout << "relaxed plan:\n";
        for (int op : ff->relaxed_plan().steps)
            std::cout << "  " << task.operators[op].name << "\n";
    }
    return kOk;
}

int run_bench(const std::string &dir, const std::string &configs_text, double timeout,
              std::size_t mem, const std::string &csv) {
    std::vector<Configuration> configs;
    std::istringstream in(configs_text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto config = parse_configuration(item);
        if (!config) {
            std::cerr << "unknown search configuration: " << item << "\n";
            return kInputError;
        }
        configs.push_back(*config);
    }
    if (!std::filesystem::is_directory(dir)) {
        std::cerr << "not a directory: " << dir << "\n";
        return kInputError;
    }
    std::string out = bench_csv(bench(dir, configs, make_limits(timeout, mem)));
    if (csv.empty())
        std::cout << out;
    else
        write_file(csv, out);
    return kOk;
}
}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Planner for multi-valued planning tasks"};
    app.require_subcommand(1);

    std::string task_path, plan_path, search = "g", plan_file = "sas_plan", dump_dir,
                kind = "cg", dir, configs = "g,gp,gp+,m,mp,f", csv;
    double timeout = 0;
    std::size_t mem = 0;
    std::vector<int> state;

    auto *solve_cmd = app.add_subcommand("solve", "Search for a plan");
    solve_cmd->add_option("task", task_path, "Task file (.mpt)")->required();
    solve_cmd->add_option("--search", search, "g, gp, gp+, m, mp, f or any");
    solve_cmd->add_option("--timeout", timeout, "Seconds (0: no limit)");
    solve_cmd->add_option("--mem", mem, "Megabytes of search memory (0: no limit)");
    solve_cmd->add_option("--plan-file", plan_file, "Plan output; statistics go to <file>.json");

    auto *validate_cmd = app.add_subcommand("validate", "Check a plan");
    validate_cmd->add_option("task", task_path)->required();
    validate_cmd->add_option("plan", plan_path)->required();

    auto *compile_cmd = app.add_subcommand("compile", "Run knowledge compilation");
    compile_cmd->add_option("task", task_path)->required();
    compile_cmd->add_option("--dump-kc", dump_dir, "Directory for DOT files and the arc report");

    auto *heuristic_cmd = app.add_subcommand("heuristic", "Evaluate a heuristic on one state");
    heuristic_cmd->add_option("task", task_path)->required();
    heuristic_cmd->add_option("--kind", kind, "cg or ff");
    heuristic_cmd->add_option("--state", state, "One value per variable (default: initial state)")
        ->delimiter(',');

    auto *bench_cmd = app.add_subcommand("bench", "Run configurations over a directory");
    bench_cmd->add_option("dir", dir)->required();
    bench_cmd->add_option("--configs", configs, "Comma-separated configurations");
    bench_cmd->add_option("--timeout", timeout, "Seconds per run (0: no limit)");
    bench_cmd->add_option("--mem", mem, "Megabytes per run (0: no limit)");
    bench_cmd->add_option("--csv", csv, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*solve_cmd)
            return run_solve(task_path, search, timeout, mem, plan_file);
        if (*validate_cmd)
            return run_validate(task_path, plan_path);
        if (*compile_cmd)
            return run_compile(task_path, dump_dir);
        if (*heuristic_cmd)
            return run_heuristic(task_path, kind, state);
        if (*bench_cmd)
            return run_bench(dir, configs, timeout, mem, csv);
    } catch (const DnfBlowup &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResource;
    } catch (const std::bad_alloc &) {
        std::cerr << "error: out of memory\n";
        return kResource;
    } catch (const MptError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
