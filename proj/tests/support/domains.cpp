#include "domains.hpp"

#include <algorithm>
#include <stdexcept>

namespace mptplan::testing {

int TaskBuilder::fluent(const std::string &name, std::vector<std::string> values) {
    Variable v;
    v.name = name;
    v.domain_size = static_cast<int>(values.size());
    v.value_names = std::move(values);
    task_.variables.push_back(std::move(v));
    init_.push_back(0);
    return task_.num_variables() - 1;
}

int TaskBuilder::derived(const std::string &name, std::vector<std::string> values,
                         int layer) {
    int id = fluent(name, std::move(values));
    task_.variables[id].kind = VariableKind::Derived;
    task_.variables[id].axiom_layer = layer;
    return id;
}

void TaskBuilder::init(int var, int value) {
    init_[var] = value;
}

void TaskBuilder::goal(int var, int value) {
    goal_.push_back({var, value});
}

void TaskBuilder::axiom(std::vector<Fact> body, int var, int value) {
    task_.axioms.push_back({PartialAssignment(std::move(body)), var, value});
}

int TaskBuilder::op(const std::string &name, std::vector<Fact> pre,
                    std::vector<Effect> effects) {
    task_.operators.push_back({name, PartialAssignment(std::move(pre)), std::move(effects)});
    return static_cast<int>(task_.operators.size()) - 1;
}

int TaskBuilder::op(const std::string &name, std::vector<Fact> pre, int var, int value) {
    return op(name, std::move(pre), std::vector<Effect>{{{}, var, value}});
}

Task TaskBuilder::build() const {
    Task t = task_;
    t.init = t.make_state(init_);
    t.goal = PartialAssignment(goal_);
    t.validate();
    return t;
}

int cell(int x, int y) {
    return (y - 1) * 3 + (x - 1);
}

std::string cell_name(int index) {
    return "c" + std::to_string(index % 3 + 1) + std::to_string(index / 3 + 1);
}

namespace {
std::vector<std::string> cell_names() {
    std::vector<std::string> names;
    for (int i = 0; i < 6; ++i)
        names.push_back(cell_name(i));
    return names;
}

std::vector<int> neighbours(int c) {
    int x = c % 3 + 1, y = c / 3 + 1;
    std::vector<int> out;
    if (x > 1)
        out.push_back(cell(x - 1, y));
    if (x < 3)
        out.push_back(cell(x + 1, y));
    if (y > 1)
        out.push_back(cell(x, y - 1));
    if (y < 2)
        out.push_back(cell(x, y + 1));
    std::sort(out.begin(), out.end());
    return out;
}

const int kLocked = cell(2, 1);

struct GridVars {
    int r, k, d;
};

// Shared by the plain and the freezing Grid; extra_move_pre is added to
// every move precondition.
GridVars build_grid(TaskBuilder &b, std::vector<Fact> extra_move_pre = {},
                    int *freeze_var = nullptr) {
    GridVars g;
    g.r = b.fluent("r", cell_names());
    auto key_values = cell_names();
    key_values.push_back("carried");
    g.k = b.fluent("k", key_values);
    g.d = b.fluent("d", {"closed", "open"});
    if (freeze_var)
        *freeze_var = b.derived("f", {"no", "yes"}, 0);
    b.init(g.r, cell(1, 1));
    b.init(g.k, cell(3, 2));
    b.init(g.d, 0);
    b.goal(g.k, kLocked);
    for (int a = 0; a < 6; ++a)
        for (int c : neighbours(a)) {
            std::vector<Fact> pre{{g.r, a}};
            if (c == kLocked)
                pre.push_back({g.d, 1});
            for (Fact f : extra_move_pre)
                pre.push_back(f);
            b.op("move-" + cell_name(a) + "-" + cell_name(c), pre, g.r, c);
        }
    for (int c = 0; c < 6; ++c)
        b.op("pickup-" + cell_name(c), {{g.r, c}, {g.k, c}}, g.k, 6);
    for (int c = 0; c < 6; ++c)
        b.op("drop-" + cell_name(c), {{g.r, c}, {g.k, 6}}, g.k, c);
    for (int c : neighbours(kLocked))
        b.op("unlock-" + cell_name(c), {{g.r, c}, {g.k, 6}, {g.d, 0}}, g.d, 1);
    return g;
}
}  // namespace

Task grid_task() {
    TaskBuilder b;
    build_grid(b);
    return b.build();
}

std::vector<std::string> grid_hand_plan() {
    return {"move-c11-c12", "move-c12-c22", "move-c22-c32", "pickup-c32",
            "move-c32-c22", "unlock-c22",   "move-c22-c21", "drop-c21"};
}

Task grid_task_with_lamp() {
    TaskBuilder b;
    build_grid(b);
    int lamp = b.fluent("lamp", {"off", "on"});
    b.op("switch-on", {{lamp, 0}}, lamp, 1);
    b.op("switch-off", {{lamp, 1}}, lamp, 0);
    return b.build();
}

Task grid_freezing_task() {
    TaskBuilder b;
    // f gets id 3; moves may only happen while it is undefined.
    int f = 3;
    GridVars g = build_grid(b, {{f, kUndefinedValue}}, &f);
    b.axiom({{g.d, 1}, {g.r, cell(1, 1)}}, f, 1);
    b.axiom({{g.d, 1}, {g.r, cell(3, 1)}}, f, 1);
    return b.build();
}

Task grid_arm_task() {
    TaskBuilder b;
    int r = b.fluent("r", cell_names());
    int a = b.fluent("a", {"empty", "full"});
    int l = b.fluent("l", {"closed", "open"});
    auto key_values = cell_names();
    key_values.push_back("carried");
    int k1 = b.fluent("k1", key_values);
    int k2 = b.fluent("k2", key_values);
    b.init(r, cell(1, 1));
    b.init(k1, cell(3, 2));
    b.init(k2, cell(1, 2));
    b.goal(k1, cell(1, 1));
    b.goal(k2, kLocked);
    for (int x = 0; x < 6; ++x)
        for (int c : neighbours(x)) {
            std::vector<Fact> pre{{r, x}};
            if (c == kLocked)
                pre.push_back({l, 1});
            b.op("move-" + cell_name(x) + "-" + cell_name(c), pre, r, c);
        }
    for (auto [k, key] : {std::pair{k1, "k1"}, std::pair{k2, "k2"}}) {
        for (int c = 0; c < 6; ++c)
            b.op(std::string("pickup-") + key + "-" + cell_name(c), {{r, c}, {k, c}, {a, 0}},
                 {{{}, k, 6}, {{}, a, 1}});
        for (int c = 0; c < 6; ++c)
            b.op(std::string("drop-") + key + "-" + cell_name(c), {{r, c}, {k, 6}},
                 {{{}, k, c}, {{}, a, 0}});
    }
    for (int c : neighbours(kLocked))
        b.op("unlock-" + cell_name(c), {{r, c}, {k1, 6}, {l, 0}}, l, 1);
    return b.build();
}

Task transport_task() {
    TaskBuilder b;
    const std::vector<std::string> places{"A", "B", "C", "D", "E", "F", "G"};
    const std::vector<std::string> vehicles{"c1", "c2", "c3", "t"};
    // Locations served by each vehicle and its road segments (place indices).
    const std::vector<std::vector<int>> serves{{0, 1, 2, 3}, {0, 1, 2, 3}, {4, 5, 6}, {3, 4}};
    const std::vector<std::pair<int, int>> city1{{0, 1}, {1, 2}, {2, 3}, {1, 3}};
    const std::vector<std::pair<int, int>> city2{{4, 5}, {5, 6}};
    const std::vector<std::pair<int, int>> highway{{3, 4}};
    const std::vector<std::vector<std::pair<int, int>>> roads{city1, city1, city2, highway};

    std::vector<int> vars;
    for (std::size_t i = 0; i < vehicles.size(); ++i) {
        std::vector<std::string> names;
        for (int p : serves[i])
            names.push_back(places[p]);
        vars.push_back(b.fluent(vehicles[i], names));
    }
    auto local = [&](std::size_t vehicle, int place) {
        const auto &s = serves[vehicle];
        return static_cast<int>(std::find(s.begin(), s.end(), place) - s.begin());
    };
    std::vector<std::string> parcel_values = places;
    for (const auto &v : vehicles)
        parcel_values.push_back("in-" + v);
    int p1 = b.fluent("p1", parcel_values);
    int p2 = b.fluent("p2", parcel_values);

    b.init(vars[0], local(0, 0));
    b.init(vars[1], local(1, 1));
    b.init(vars[2], local(2, 4));
    b.init(vars[3], local(3, 4));
    b.init(p1, 2);
    b.init(p2, 5);
    b.goal(p1, 6);
    b.goal(p2, 4);

    for (std::size_t i = 0; i < vehicles.size(); ++i)
        for (auto [x, y] : roads[i]) {
            b.op("drive-" + vehicles[i] + "-" + places[x] + "-" + places[y],
                 {{vars[i], local(i, x)}}, vars[i], local(i, y));
            b.op("drive-" + vehicles[i] + "-" + places[y] + "-" + places[x],
                 {{vars[i], local(i, y)}}, vars[i], local(i, x));
        }
    for (int p : {p1, p2}) {
        std::string parcel = p == p1 ? "p1" : "p2";
        for (std::size_t i = 0; i < vehicles.size(); ++i) {
            int inside = 7 + static_cast<int>(i);
            for (int place : serves[i]) {
                b.op("load-" + parcel + "-" + vehicles[i] + "-" + places[place],
                     {{vars[i], local(i, place)}, {p, place}}, p, inside);
                b.op("unload-" + parcel + "-" + vehicles[i] + "-" + places[place],
                     {{vars[i], local(i, place)}, {p, inside}}, p, place);
            }
        }
    }
    return b.build();
}

Task logistics_micro_task() {
    TaskBuilder b;
    // Locations: 0 = A (post office, city 1), 1 = B (airport, city 1),
    // 2 = C (post office, city 2), 3 = D (airport, city 2).
    const std::vector<std::string> places{"A", "B", "C", "D"};
    int t1 = b.fluent("t1", {"A", "B"});
    int t2 = b.fluent("t2", {"C", "D"});
    int a1 = b.fluent("a1", {"B", "D"});
    int a2 = b.fluent("a2", {"B", "D"});
    std::vector<std::string> package_values = places;
    for (std::string v : {"t1", "t2", "a1", "a2"})
        package_values.push_back("in-" + v);
    int p1 = b.fluent("p1", package_values);
    int p2 = b.fluent("p2", package_values);
    b.init(t1, 0);
    b.init(t2, 1);
    b.init(a1, 0);
    b.init(a2, 1);
    b.init(p1, 0);
    b.init(p2, 3);
    b.goal(p1, 2);
    b.goal(p2, 0);

    struct Vehicle {
        int var;
        std::string name;
        std::vector<int> serves;
    };
    const std::vector<Vehicle> fleet{
        {t1, "t1", {0, 1}}, {t2, "t2", {2, 3}}, {a1, "a1", {1, 3}}, {a2, "a2", {1, 3}}};
    for (const Vehicle &v : fleet) {
        b.op("move-" + v.name + "-" + places[v.serves[0]] + "-" + places[v.serves[1]],
             {{v.var, 0}}, v.var, 1);
        b.op("move-" + v.name + "-" + places[v.serves[1]] + "-" + places[v.serves[0]],
             {{v.var, 1}}, v.var, 0);
    }
    for (int p : {p1, p2}) {
        std::string package = p == p1 ? "p1" : "p2";
        for (std::size_t i = 0; i < fleet.size(); ++i) {
            const Vehicle &v = fleet[i];
            int inside = 4 + static_cast<int>(i);
            for (int j = 0; j < 2; ++j) {
                int place = v.serves[j];
                b.op("load-" + package + "-" + v.name + "-" + places[place],
                     {{v.var, j}, {p, place}}, p, inside);
                b.op("unload-" + package + "-" + v.name + "-" + places[place],
                     {{v.var, j}, {p, inside}}, p, place);
            }
        }
    }
    return b.build();
}

Task cg_blind_task() {
    TaskBuilder b;
    int u = b.fluent("u", {"start", "sink", "mid", "top", "detour"});
    int v = b.fluent("v", {"low", "middle", "high"});
    b.goal(v, 2);
    b.op("u-start-sink", {{u, 0}}, u, 1);
    b.op("u-start-detour", {{u, 0}}, u, 4);
    b.op("u-detour-mid", {{u, 4}}, u, 2);
    b.op("u-mid-top", {{u, 2}}, u, 3);
    b.op("v-raise-via-sink", {{v, 0}, {u, 1}}, v, 1);
    b.op("v-raise-via-mid", {{v, 0}, {u, 2}}, v, 1);
    b.op("v-top", {{v, 1}, {u, 3}}, v, 2);
    return b.build();
}

Task unsolvable_task() {
    TaskBuilder b;
    int v = b.fluent("v", {"a", "b", "c"});
    b.goal(v, 2);
    b.op("v-a-b", {{v, 0}}, v, 1);
    b.op("v-b-a", {{v, 1}}, v, 0);
    return b.build();
}

Task nonserializable_task() {
    TaskBuilder b;
    int x = b.fluent("x", {"no", "yes"});
    int y = b.fluent("y", {"no", "yes"});
    int m = b.fluent("m", {"idle", "ready", "armed"});
    b.goal(x, 1);
    b.goal(y, 1);
    b.op("set-x", {{y, 0}}, x, 1);
    b.op("set-y", {{x, 0}}, y, 1);
    b.op("clear-x", {}, x, 0);
    b.op("clear-y", {}, y, 0);
    b.op("m-ready", {{m, 0}}, m, 1);
    b.op("m-arm", {{m, 1}}, m, 2);
    b.op("set-both", {{x, 0}, {y, 0}, {m, 2}}, {{{}, x, 1}, {{}, y, 1}});
    return b.build();
}

Task minimal_task() {
    TaskBuilder b;
    int v = b.fluent("v0", {"off", "on"});
    b.goal(v, 1);
    b.op("flip", {{v, 0}}, v, 1);
    return b.build();
}

Task chain_task(int k) {
    TaskBuilder b;
    std::vector<std::string> values;
    for (int i = 0; i <= k; ++i)
        values.push_back("s" + std::to_string(i));
    int v = b.fluent("v", values);
    b.goal(v, k);
    for (int i = 0; i < k; ++i)
        b.op("step-" + std::to_string(i), {{v, i}}, v, i + 1);
    return b.build();
}

Task layered_chain_task() {
    TaskBuilder b;
    int x = b.fluent("x", {"0", "1"});
    int y = b.fluent("y", {"0", "1", "2"});
    int u = b.derived("u", {"bot", "top"}, 0);
    int v = b.derived("v", {"bot", "top"}, 1);
    int w = b.derived("w", {"bot", "top"}, 2);
    b.axiom({{x, 1}}, u, 1);
    b.axiom({{y, 2}}, u, 1);
    b.axiom({{u, 1}, {y, 0}}, v, 1);
    b.axiom({{u, 0}, {y, 1}}, v, 1);
    b.axiom({{v, 0}}, w, 1);
    // Initially u and v hold, so w is undefined.
    b.init(x, 1);
    b.goal(w, 1);
    b.op("x-on", {{x, 0}}, x, 1);
    b.op("x-off", {{x, 1}}, x, 0);
    b.op("y-next", {{y, 0}}, y, 1);
    b.op("y-last", {{y, 1}}, y, 2);
    b.op("y-reset", {{y, 2}}, y, 0);
    return b.build();
}

Task torus_task() {
    TaskBuilder b;
    int a = b.fluent("a", {"0", "1", "2", "3", "4"});
    int c = b.fluent("c", {"no", "yes"});
    int d = b.fluent("b", {"0", "1", "2", "3", "4", "5", "6", "7", "8", "9"});
    b.init(a, 0);
    b.init(c, 0);
    b.init(d, 0);
    b.goal(c, 1);
    for (int i = 0; i < 5; ++i)
        b.op("a" + std::to_string(i), {{a, i}}, a, (i + 1) % 5);
    for (int i = 0; i < 10; ++i)
        b.op("b" + std::to_string(i), {{d, i}}, d, (i + 1) % 10);
    for (int i = 0; i < 10; ++i)
        b.op("back" + std::to_string(i), {{d, i}, {a, 2}}, d, (i + 9) % 10);
    return b.build();
}

std::vector<NamedTask> benchmark_suite() {
    return {
        {"cg_blind", cg_blind_task()},
        {"chain8", chain_task(8)},
        {"grid", grid_task()},
        {"grid_arm", grid_arm_task()},
        {"grid_freezing", grid_freezing_task()},
        {"layered_chain", layered_chain_task()},
        {"logistics_micro", logistics_micro_task()},
        {"minimal", minimal_task()},
        {"nonserializable", nonserializable_task()},
        {"transport", transport_task()},
        {"unsolvable", unsolvable_task()},
    };
}

}  // namespace mptplan::testing
