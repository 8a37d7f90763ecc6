#pragma once

#include <cstddef>
#include <functional>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mptplan {

// Fixed-width states packed into one pool, deduplicated by a hash set of ids.
class StateRegistry {
public:
    explicit StateRegistry(int width)
        : width_(width), index_(64, Hash{this}, Equal{this}) {}
    StateRegistry(const StateRegistry &) = delete;
    StateRegistry &operator=(const StateRegistry &) = delete;

    // Returns the id of values and whether it was newly added.
    std::pair<int, bool> insert(const std::vector<int> &values) {
        candidate_ = values.data();
        auto it = index_.find(kCandidate);
        if (it != index_.end())
            return {*it, false};
        int id = static_cast<int>(size());
        pool_.insert(pool_.end(), values.begin(), values.end());
        index_.insert(id);
        return {id, true};
    }

    std::vector<int> values(int id) const {
        auto first = pool_.begin() + static_cast<std::ptrdiff_t>(id) * width_;
        return std::vector<int>(first, first + width_);
    }
    std::size_t size() const { return width_ == 0 ? index_.size() : pool_.size() / width_; }
    std::size_t bytes() const { return pool_.size() * sizeof(int) + index_.size() * 32; }

private:
    static constexpr int kCandidate = -1;

    const int *data(int id) const {
        return id == kCandidate ? candidate_ : pool_.data() + static_cast<std::size_t>(id) * width_;
    }

    struct Hash {
        const StateRegistry *registry;
        std::size_t operator()(int id) const {
            const int *v = registry->data(id);
            std::size_t h = 0xcbf29ce484222325ULL;
            for (int i = 0; i < registry->width_; ++i)
                h = (h ^ static_cast<std::size_t>(v[i])) * 0x100000001b3ULL;
            return h;
        }
    };
    struct Equal {
        const StateRegistry *registry;
        bool operator()(int a, int b) const {
            const int *x = registry->data(a);
            const int *y = registry->data(b);
            for (int i = 0; i < registry->width_; ++i)
                if (x[i] != y[i])
                    return false;
            return true;
        }
    };

    int width_;
    std::vector<int> pool_;
    const int *candidate_ = nullptr;
    std::unordered_set<int, Hash, Equal> index_;
};

// Applies op to an extended state (values), recomputing derived variables.
// Returns false if two triggered effects disagree.
struct CompiledTask;
struct Operator;
bool apply_operator(const CompiledTask &task, const std::vector<int> &parent,
                    const Operator &op, std::vector<int> &out);

}  // namespace mptplan
