#pragma once

#include <string>
#include <vector>

#include "treehost/graph.hpp"
#include "treehost/trees.hpp"

namespace treehost {

/// Exact rational arithmetic for the lower-bound evaluator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

/// The three label sequences (1-based) over {1..floor(3n/2)}:
///   S1 = (1..n)
///   S2 = (n, n-1, ..., floor(n/2)+1, n+1, ..., floor(3n/2))
///   S3 = (1, ..., ceil(n/2), n+1, ..., floor(3n/2))
struct HostSequences {
    std::vector<int> s1, s2, s3;
};
HostSequences host_sequences(int n);

/// A planar graph on floor(3n/2) vertices containing three given n-vertex
/// trees, with verified per-tree certificates. Vertex i of tree j placed at
/// one-page layout position p receives label S_j[p].
struct TripleHost {
    Graph host;
    std::vector<EmbeddingMap> maps;      // one per tree
    HostSequences sequences;
};
TripleHost build_three_tree_host(const Tree& t1, const Tree& t2, const Tree& t3);

/// True exactly when the caterpillar-impossibility hypotheses hold:
/// k >= 5, k | n, 2 | n, n >= 6k^2. True implies no n-vertex planar graph
/// contains C_{n,1}, C_{n,2} and C_{n,k} simultaneously.
bool thm6_infeasible(long long n, long long k);

struct LowerBoundParams {
    long long n = 0, k = 0, l = 0;  // requires 1 < k < l - 2
};

/// Exact evaluation of (3/2 - 1/k - k/l) n - (k-1)(l-k) - l/2: a lower bound
/// on the vertex count of any planar host for C_{n,1}, C_{n,k}, C_{n,l}.
/// Throws InvalidParams unless 1 < k < l - 2.
Rational thm8_lower_bound(const LowerBoundParams& p);

}  // namespace treehost
