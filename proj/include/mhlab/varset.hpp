#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mhlab/errors.hpp"

namespace mhlab {

class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

// Immutable ordered set of variable names. The position of a name fixes its
// precedence in the global monomial order: earlier names are larger, so
// {x1, x2, xi1, xi2, a, c} realizes x1 > x2 > xi1 > xi2 > a > c.
class VarSet {
public:
    static VarSetPtr make(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a name, or -1 if absent.
    int index_of(const std::string& name) const;

    bool operator==(const VarSet& o) const { return names_ == o.names_; }
    bool operator!=(const VarSet& o) const { return names_ != o.names_; }

    // Convenience builders used across the library.
    static VarSetPtr x_only(int m);                 // x1..xm
    static VarSetPtr x_params(int m);               // x1..xm, a, c
    static VarSetPtr x_xi_params(int m);            // x1..xm, xi1..xim, a, c
    static VarSetPtr theta_params(int m);           // theta1..thetam, a, c
    static VarSetPtr params();                      // a, c

private:
    explicit VarSet(std::vector<std::string> names);
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

inline bool same_vars(const VarSetPtr& u, const VarSetPtr& v) {
    return u == v || (u && v && *u == *v);
}

inline void require_same_vars(const VarSetPtr& u, const VarSetPtr& v, const char* where) {
    if (!same_vars(u, v)) throw StructuralError(std::string(where) + ": variable-set mismatch");
}

}  // namespace mhlab
