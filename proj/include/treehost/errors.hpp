#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treehost {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedGraph6 : Error {
    explicit MalformedGraph6(const std::string& msg) : Error("malformed graph6: " + msg) {}
};

struct MalformedPlanarCode : Error {
    std::size_t offset;
    MalformedPlanarCode(const std::string& msg, std::size_t off)
        : Error("malformed planar_code at byte " + std::to_string(off) + ": " + msg), offset(off) {}
};

struct NonSimpleGraph : Error {
    explicit NonSimpleGraph(const std::string& msg) : Error("non-simple graph: " + msg) {}
};

struct InvalidPin : Error {
    explicit InvalidPin(const std::string& msg) : Error("invalid pin: " + msg) {}
};

struct DivisibilityError : Error {
    explicit DivisibilityError(const std::string& msg) : Error("divisibility error: " + msg) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& msg) : Error("size mismatch: " + msg) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& msg) : Error("invalid parameters: " + msg) {}
};

struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& msg) : Error("resource limit exceeded: " + msg) {}
};

struct UnknownAnchor : Error {
    explicit UnknownAnchor(const std::string& msg) : Error("unknown anchor: " + msg) {}
};

struct AllocationInfeasible : Error {
    explicit AllocationInfeasible(const std::string& msg) : Error("allocation infeasible: " + msg) {}
};

struct CapacityExceeded : Error {
    explicit CapacityExceeded(const std::string& msg) : Error("capacity exceeded: " + msg) {}
};

struct NotMaximalOuterplanar : Error {
    explicit NotMaximalOuterplanar(const std::string& msg) : Error("not maximal outerplanar: " + msg) {}
};

struct NotOuterplanar : Error {
    explicit NotOuterplanar(const std::string& msg) : Error("not outerplanar: " + msg) {}
};

struct EmbeddingFailed : Error {
    explicit EmbeddingFailed(const std::string& msg) : Error("embedding failed: " + msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("internal invariant violated: " + msg) {}
};

// Always-on invariant check; never compiled out.
inline void insist(bool cond, const char* what) {
    if (!cond) throw InternalError(what);
}

}  // namespace treehost
