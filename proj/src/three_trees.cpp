#include "treehost/three_trees.hpp"

#include <numeric>

#include "treehost/planarity.hpp"

namespace treehost {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    insist(den != 0, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

HostSequences host_sequences(int n) {
    insist(n >= 1, "n must be positive");
    HostSequences s;
    for (int i = 1; i <= n; ++i) s.s1.push_back(i);
    for (int i = n; i >= n / 2 + 1; --i) s.s2.push_back(i);
    for (int i = n + 1; i <= 3 * n / 2; ++i) s.s2.push_back(i);
    for (int i = 1; i <= (n + 1) / 2; ++i) s.s3.push_back(i);
    for (int i = n + 1; i <= 3 * n / 2; ++i) s.s3.push_back(i);
    insist((int)s.s1.size() == n && (int)s.s2.size() == n && (int)s.s3.size() == n,
           "sequence length mismatch");
    return s;
}

TripleHost build_three_tree_host(const Tree& t1, const Tree& t2, const Tree& t3) {
    const int n = t1.size();
    if (t2.size() != n || t3.size() != n)
        throw SizeMismatch("the three trees must have the same vertex count");

    TripleHost out;
    out.sequences = host_sequences(n);
    const int host_n = std::max(3 * n / 2, 1);
    GraphBuilder b(host_n);

    const Tree* trees[3] = {&t1, &t2, &t3};
    const std::vector<int>* seqs[3] = {&out.sequences.s1, &out.sequences.s2, &out.sequences.s3};
    for (int j = 0; j < 3; ++j) {
        const Tree& t = *trees[j];
        auto order = dfs_preorder(t, 0);
        std::vector<int> pos(n);
        for (int p = 0; p < n; ++p) pos[order[p]] = p;
        EmbeddingMap map{n, std::vector<int>(n)};
        for (int v = 0; v < n; ++v) map.image[v] = (*seqs[j])[pos[v]] - 1;
        for (auto [u, v] : t.graph.edges()) b.add_edge(map.image[u], map.image[v]);
        out.maps.push_back(std::move(map));
    }
    out.host = b.freeze();
    for (int j = 0; j < 3; ++j)
        insist(verify_embedding(trees[j]->graph, out.host, out.maps[j]),
               "three-tree certificate invalid");
    return out;
}

bool thm6_infeasible(long long n, long long k) {
    insist(n >= 1 && k >= 1, "parameters must be positive");
    return k >= 5 && n % k == 0 && n % 2 == 0 && n >= 6 * k * k;
}

Rational thm8_lower_bound(const LowerBoundParams& p) {
    if (!(1 < p.k && p.k < p.l - 2)) throw InvalidParams("need 1 < k < l - 2");
    insist(p.n >= 1, "n must be positive");
    const Rational coeff = Rational(3, 2) - Rational(1, p.k) - Rational(p.k, p.l);
    return coeff * Rational(p.n) - Rational((p.k - 1) * (p.l - p.k)) - Rational(p.l, 2);
}

}  // namespace treehost
