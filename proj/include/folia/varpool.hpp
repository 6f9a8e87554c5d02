#pragma once

#include <mutex>
#include <string>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace folia {

using VarId = int;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Process-wide append-only variable registry. The coordinate variables
/// x, y, z occupy ids 0..2; every later registration is a parameter.
/// Term orders break ties by id, so registration order fixes the
/// parameter order once and for all.
class VarPool {
public:
    static constexpr VarId X = 0;
    static constexpr VarId Y = 1;
    static constexpr VarId Z = 2;

    static VarPool& instance() {
        static VarPool pool;
        return pool;
    }

    VarId intern(const std::string& name) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        VarId id = (VarId)names_.size();
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }
    VarId lookup(const std::string& name) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ids_.find(name);
        if (it == ids_.end()) return -1;
        return it->second;
    }
    std::string name(VarId id) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (id < 0 || (size_t)id >= names_.size()) throw Error("VarPool: unknown variable id");
        return names_[id];
    }
    static bool is_coordinate(VarId id) { return id >= 0 && id <= 2; }

private:
    VarPool() {
        names_ = {"x", "y", "z"};
        ids_ = {{"x", 0}, {"y", 1}, {"z", 2}};
    }
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VarId> ids_;
};

inline VarId param(const std::string& name) {
    VarId id = VarPool::instance().intern(name);
    if (VarPool::is_coordinate(id)) throw Error("'" + name + "' is a coordinate, not a parameter");
    return id;
}

}  // namespace folia
