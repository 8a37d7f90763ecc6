#include "mptplan/dtg.hpp"

#include "mptplan/causal_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace mptplan {

std::size_t DomainTransitionGraph::num_transitions() const {
    std::size_t n = 0;
    for (const auto &out : transitions)
        n += out.size();
    return n;
}

bool DomainTransitionGraph::is_strongly_connected() const {
    int n = num_values();
    if (n <= 1)
        return true;
    std::vector<std::vector<int>> fwd(n), bwd(n);
    for (const auto &out : transitions)
        for (const Transition &t : out) {
            fwd[t.from].push_back(t.to);
            bwd[t.to].push_back(t.from);
        }
    auto reaches_all = [n](const std::vector<std::vector<int>> &adj) {
        std::vector<bool> seen(n, false);
        std::deque<int> queue{0};
        seen[0] = true;
        int count = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    queue.push_back(w);
                }
        }
        return count == n;
    };
    return reaches_all(fwd) && reaches_all(bwd);
}

namespace {
void add_transitions(DomainTransitionGraph &dtg, const PartialAssignment &label,
                     int new_value, int weight, TransitionOrigin origin, int origin_id,
                     int effect) {
    int var = dtg.var;
    if (auto pinned = label.value_of(var)) {
        if (*pinned == new_value)
            return;
        dtg.transitions[*pinned].push_back(
            {*pinned, new_value, label.without(var), weight, origin, origin_id, effect});
        return;
    }
    for (int d = 0; d < dtg.num_values(); ++d)
        if (d != new_value)
            dtg.transitions[d].push_back(
                {d, new_value, label, weight, origin, origin_id, effect});
}
}  // namespace

DomainTransitionGraph build_dtg(const Task &task, int var) {
    DomainTransitionGraph dtg;
    dtg.var = var;
    dtg.transitions.resize(task.variables[var].domain_size);
    if (task.variables[var].is_derived()) {
        for (std::size_t i = 0; i < task.axioms.size(); ++i) {
            const Axiom &a = task.axioms[i];
            if (a.head_var == var)
                add_transitions(dtg, a.body, a.head_value, 0, TransitionOrigin::Axiom,
                                static_cast<int>(i), -1);
        }
    } else {
        for (std::size_t i = 0; i < task.operators.size(); ++i) {
            const Operator &op = task.operators[i];
            for (std::size_t j = 0; j < op.effects.size(); ++j) {
                const Effect &e = op.effects[j];
                if (e.var != var)
                    continue;
                auto label = merge(op.precondition, e.condition);
                if (!label)
                    continue;
                add_transitions(dtg, *label, e.value, 1, TransitionOrigin::Operator,
                                static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return dtg;
}

std::vector<DomainTransitionGraph> build_dtgs(const Task &task) {
    std::vector<DomainTransitionGraph> dtgs;
    dtgs.reserve(task.variables.size());
    for (int v = 0; v < task.num_variables(); ++v)
        dtgs.push_back(build_dtg(task, v));
    return dtgs;
}

std::vector<UsagePolarity> compute_usage_polarity(const Task &task) {
    std::vector<UsagePolarity> use(task.variables.size());
    auto mark = [&](const Fact &f, bool positive_context) {
        if (!task.variables[f.var].is_derived())
            return false;
        bool positive = (f.value != kUndefinedValue) == positive_context;
        bool &flag = positive ? use[f.var].positive : use[f.var].negative;
        if (flag)
            return false;
        flag = true;
        return true;
    };
    for (const Fact &f : task.goal)
        mark(f, true);
    for (const Operator &op : task.operators) {
        for (const Fact &f : op.precondition)
            mark(f, true);
        for (const Effect &e : op.effects)
            for (const Fact &f : e.condition)
                mark(f, true);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Axiom &a : task.axioms) {
            const UsagePolarity head = use[a.head_var];
            for (const Fact &f : a.body) {
                if (head.positive)
                    changed |= mark(f, true);
                if (head.negative)
                    changed |= mark(f, false);
            }
        }
    }
    return use;
}

namespace {
using Conjunction = std::vector<Fact>;  // sorted by variable, one fact per variable

// Removes duplicates and conjunctions that are supersets of another one.
void simplify(std::vector<Conjunction> &dnf) {
    std::sort(dnf.begin(), dnf.end(), [](const Conjunction &a, const Conjunction &b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    dnf.erase(std::unique(dnf.begin(), dnf.end()), dnf.end());
    std::vector<Conjunction> kept;
    for (Conjunction &c : dnf) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Conjunction &k) {
            return std::includes(c.begin(), c.end(), k.begin(), k.end());
        });
        if (!dominated)
            kept.push_back(std::move(c));
    }
    dnf = std::move(kept);
}

// Extends conj by lit; nullopt if conj assigns lit.var differently.
std::optional<Conjunction> extend(const Conjunction &conj, const Fact &lit) {
    auto it = std::lower_bound(conj.begin(), conj.end(), lit,
                               [](const Fact &a, const Fact &b) { return a.var < b.var; });
    if (it != conj.end() && it->var == lit.var) {
        if (it->value != lit.value)
            return std::nullopt;
        return conj;
    }
    Conjunction out = conj;
    out.insert(out.begin() + (it - conj.begin()), lit);
    return out;
}
}  // namespace

std::vector<PartialAssignment> undefined_value_conditions(const Task &task, int var,
                                                          std::size_t max_disjuncts) {
    // One clause per axiom for var: the disjunction of the negated body facts,
    // with inequalities expanded into equalities over the domain.
    std::vector<std::vector<Fact>> clauses;
    for (const Axiom &a : task.axioms) {
        if (a.head_var != var || a.body.mentions(var))
            continue;
        std::vector<Fact> clause;
        for (const Fact &f : a.body)
            for (int d = 0; d < task.variables[f.var].domain_size; ++d)
                if (d != f.value)
                    clause.push_back({f.var, d});
        clauses.push_back(std::move(clause));
    }

    std::vector<Conjunction> dnf{Conjunction{}};
    for (const auto &clause : clauses) {
        std::vector<Conjunction> next;
        for (const Conjunction &conj : dnf) {
            bool satisfied = std::any_of(clause.begin(), clause.end(), [&](const Fact &lit) {
                return std::binary_search(conj.begin(), conj.end(), lit);
            });
            if (satisfied) {
                next.push_back(conj);
                continue;
            }
            for (const Fact &lit : clause)
                if (auto ext = extend(conj, lit))
                    next.push_back(std::move(*ext));
        }
        simplify(next);
        if (next.size() > max_disjuncts)
            throw DnfBlowup("negated axiom condition for variable " +
                            task.variables[var].name + " exceeds " +
                            std::to_string(max_disjuncts) + " disjuncts");
        dnf = std::move(next);
        if (dnf.empty())
            break;
    }

    std::vector<PartialAssignment> result;
    result.reserve(dnf.size());
    for (Conjunction &c : dnf)
        result.emplace_back(std::move(c));
    std::sort(result.begin(), result.end());
    return result;
}

DomainTransitionGraph build_extended_dtg(const Task &task, int var,
                                         std::size_t max_disjuncts) {
    if (!task.variables[var].is_derived())
        throw std::invalid_argument("extended DTGs exist only for derived variables");
    DomainTransitionGraph dtg = build_dtg(task, var);
    dtg.extended = true;
    auto disjuncts = undefined_value_conditions(task, var, max_disjuncts);
    for (int d = 0; d < dtg.num_values(); ++d) {
        if (d == kUndefinedValue)
            continue;
        for (std::size_t k = 0; k < disjuncts.size(); ++k)
            dtg.transitions[d].push_back({d, kUndefinedValue, disjuncts[k], 0,
                                          TransitionOrigin::Synthetic,
                                          static_cast<int>(k), -1});
    }
    return dtg;
}

DomainTransitionGraph prune_dtg(const DomainTransitionGraph &dtg,
                                const PrunedCausalGraph &pruned_cg) {
    DomainTransitionGraph out;
    out.var = dtg.var;
    out.extended = dtg.extended;
    out.transitions.resize(dtg.transitions.size());
    for (std::size_t d = 0; d < dtg.transitions.size(); ++d) {
        std::vector<Transition> relaxed;
        for (const Transition &t : dtg.transitions[d]) {
            std::vector<Fact> kept;
            for (const Fact &f : t.condition)
                if (pruned_cg.precedes(f.var, dtg.var))
                    kept.push_back(f);
            Transition r = t;
            r.condition = PartialAssignment(std::move(kept));
            relaxed.push_back(std::move(r));
        }
        for (std::size_t i = 0; i < relaxed.size(); ++i) {
            const Transition &t = relaxed[i];
            bool drop = false;
            for (std::size_t j = 0; j < relaxed.size() && !drop; ++j) {
                const Transition &other = relaxed[j];
                if (i == j || other.to != t.to)
                    continue;
                if (other.condition == t.condition)
                    drop = j < i;
                else if (other.condition.is_subset_of(t.condition))
                    drop = true;
            }
            if (!drop)
                out.transitions[d].push_back(t);
        }
    }
    return out;
}

std::vector<DomainTransitionGraph> prune_dtgs(
    const std::vector<DomainTransitionGraph> &dtgs, const PrunedCausalGraph &pruned_cg) {
    std::vector<DomainTransitionGraph> out;
    out.reserve(dtgs.size());
    for (const auto &dtg : dtgs)
        out.push_back(prune_dtg(dtg, pruned_cg));
    return out;
}

}  // namespace mptplan
