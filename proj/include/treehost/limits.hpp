#pragma once

#include <cstdlib>
#include <string>

#include "treehost/errors.hpp"

namespace treehost {

/// Global vertex cap for host constructions, configurable through the
/// TREEHOST_MAX_VERTICES environment variable.
inline long long max_vertices() {
    static long long cap = [] {
        const char* s = std::getenv("TREEHOST_MAX_VERTICES");
        if (!s) return 50'000'000LL;
        try {
            return std::stoll(s);
        } catch (...) {
            return 50'000'000LL;
        }
    }();
    return cap;
}

inline void check_vertex_budget(long long requested, const char* what) {
    if (requested > max_vertices())
        throw ResourceLimit(std::string(what) + " needs " + std::to_string(requested) +
                            " vertices, cap is " + std::to_string(max_vertices()) +
                            " (set TREEHOST_MAX_VERTICES to raise)");
}

}  // namespace treehost
