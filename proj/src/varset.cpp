#include "mhlab/varset.hpp"

namespace mhlab {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        auto [it, fresh] = index_.emplace(names_[static_cast<size_t>(i)], i);
        if (!fresh) throw StructuralError("duplicate variable name: " + names_[static_cast<size_t>(i)]);
    }
}

VarSetPtr VarSet::make(std::vector<std::string> names) {
    return VarSetPtr(new VarSet(std::move(names)));
}

int VarSet::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

static std::vector<std::string> indexed(const std::string& stem, int m) {
    std::vector<std::string> v;
    v.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

VarSetPtr VarSet::x_only(int m) {
    return make(indexed("x", m));
}

VarSetPtr VarSet::x_params(int m) {
    auto v = indexed("x", m);
    v.emplace_back("a");
    v.emplace_back("c");
    return make(std::move(v));
}

VarSetPtr VarSet::x_xi_params(int m) {
    auto v = indexed("x", m);
    auto xi = indexed("xi", m);
    v.insert(v.end(), xi.begin(), xi.end());
    v.emplace_back("a");
    v.emplace_back("c");
    return make(std::move(v));
}

VarSetPtr VarSet::theta_params(int m) {
    auto v = indexed("theta", m);
    v.emplace_back("a");
    v.emplace_back("c");
    return make(std::move(v));
}

VarSetPtr VarSet::params() {
    return make({"a", "c"});
}

}  // namespace mhlab
