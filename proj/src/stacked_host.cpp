#include "treehost/stacked_host.hpp"

#include <array>

#include "treehost/limits.hpp"

namespace treehost {

std::string to_string(Flavor f) {
    return f == Flavor::triangulated ? "triangulated" : "outerplanar";
}

Flavor flavor_from_string(const std::string& s) {
    if (s == "triangulated") return Flavor::triangulated;
    if (s == "outerplanar") return Flavor::outerplanar;
    throw InvalidParams("flavor must be 'triangulated' or 'outerplanar'");
}

int StackedHost::chain_child(int copy, int variant) const {
    const HostCopy& k = copies[copy];
    for (int ch : children(copy))
        if (copies[ch].o1 == k.o1 && copies[ch].variant == variant) return ch;
    insist(false, "missing o1-chain child");
    return -1;
}

long long size_s(int d, int variant, Flavor flavor) {
    insist(d >= 0 && (variant == 1 || variant == 2), "size_s: bad parameters");
    using Big = __int128;
    std::vector<Big> s1{1}, s2{1}, prefix1{1};  // prefix1[j] = sum of s1[0..j]
    const Big cap = static_cast<Big>(9'000'000'000'000'000'000LL);
    for (int i = 1; i <= d; ++i) {
        Big v1, v2;
        if (flavor == Flavor::triangulated) {
            v1 = 5 * s1[i - 1] + s2[i - 1] + 4;
            v2 = 8 * s1[i - 1] + 3 * s2[i - 1] + 6;
        } else {
            Big tele1 = (i - 2 >= 0) ? prefix1[i - 2] : 0;           // sum_{j<=d-2} b1(j)
            Big tele2 = (i - 3 >= 0) ? prefix1[i - 3] : 0;           // sum_{j<=d-3} b1(j)
            Big b_dm2 = (i - 2 >= 0) ? s1[i - 2] : 0;
            v1 = 4 * s1[i - 1] + s2[i - 1] + 1 + tele1;
            v2 = 6 * s1[i - 1] + 3 * s2[i - 1] + 2 + b_dm2 + 2 * tele2;
        }
        if (v1 > cap || v2 > cap) throw ResourceLimit("size_s value exceeds 64-bit range");
        s1.push_back(v1);
        s2.push_back(v2);
        prefix1.push_back(prefix1.back() + v1);
    }
    return static_cast<long long>(variant == 1 ? s1[d] : s2[d]);
}

// ---------------------------------------------------------------------------
// Uniform stacked triangulation
// ---------------------------------------------------------------------------

namespace {

struct UniformCtx {
    GraphBuilder gb;
    std::vector<UniformCopy> copies;

    int rec(int d, int x1, int x2, int x3) {
        const int id = static_cast<int>(copies.size());
        copies.push_back(UniformCopy{{x1, x2, x3}, -1, {-1, -1, -1}, static_cast<std::int8_t>(d)});
        if (d == 0) return id;
        const int m = gb.add_vertex();
        gb.add_edge(m, x1);
        gb.add_edge(m, x2);
        gb.add_edge(m, x3);
        const int c0 = rec(d - 1, x1, x2, m);
        const int c1 = rec(d - 1, x2, x3, m);
        const int c2 = rec(d - 1, x3, x1, m);
        copies[id].center = m;
        copies[id].child[0] = c0;
        copies[id].child[1] = c1;
        copies[id].child[2] = c2;
        return id;
    }
};

}  // namespace

UniformHost build_uniform(int d) {
    insist(d >= 0, "depth must be nonnegative");
    long long expect = 3;
    for (int i = 0, p = 1; i < d; ++i, p *= 3) expect += p;
    check_vertex_budget(expect, "build_uniform");
    UniformCtx ctx;
    ctx.gb = GraphBuilder(3);
    ctx.gb.add_edge(0, 1);
    ctx.gb.add_edge(1, 2);
    ctx.gb.add_edge(2, 0);
    ctx.rec(d, 0, 1, 2);
    UniformHost host;
    host.graph = ctx.gb.freeze();
    host.copies = std::move(ctx.copies);
    insist(host.graph.vertex_count() == expect, "uniform host size mismatch");
    return host;
}

std::vector<int> uniform_copies_at(const UniformHost& host, int copy, int vertex,
                                   int target_depth) {
    std::vector<int> out;
    const UniformCopy& k = host.copies[copy];
    const bool incident = k.o[0] == vertex || k.o[1] == vertex || k.o[2] == vertex;
    if (k.depth == target_depth) {
        if (incident) out.push_back(copy);
        return out;
    }
    if (k.depth < target_depth || k.center < 0) return out;
    for (int ch : k.child) {
        const UniformCopy& child = host.copies[ch];
        if (child.o[0] == vertex || child.o[1] == vertex || child.o[2] == vertex) {
            auto sub = uniform_copies_at(host, ch, vertex, target_depth);
            out.insert(out.end(), sub.begin(), sub.end());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Recursive hosts S_d^1 / S_d^2 and their outerplanar trims
// ---------------------------------------------------------------------------

namespace {

struct BuildCtx {
    GraphBuilder gb;
    std::vector<HostCopy> copies;
    std::vector<std::int32_t> child_pool;
    Flavor flavor = Flavor::outerplanar;

    int new_node(int d, int variant, int o1, int o2, int o3) {
        const int id = static_cast<int>(copies.size());
        HostCopy k;
        k.depth = static_cast<std::int8_t>(d);
        k.variant = static_cast<std::int8_t>(variant);
        k.o1 = o1;
        k.o2 = o2;
        k.o3 = o3;
        copies.push_back(k);
        return id;
    }

    void attach_children(int id, const std::vector<int>& kids) {
        copies[id].child_off = static_cast<std::int32_t>(child_pool.size());
        copies[id].child_count = static_cast<std::int16_t>(kids.size());
        child_pool.insert(child_pool.end(), kids.begin(), kids.end());
    }

    int rec_tri(int d, int variant, int x1, int x2, int x3) {
        const int id = new_node(d, variant, x1, x2, x3);
        copies[id].int_begin = gb.vertex_count();
        const int c = gb.add_vertex();
        copies[id].c = c;
        gb.add_edge(c, x1);
        gb.add_edge(c, x2);
        gb.add_edge(c, x3);
        std::vector<int> kids;
        if (d >= 1 && variant == 1) {
            // frame: stack f1 into (x3,x1,c), f2 into (x2,x3,c), f3 into (x2,x3,f2)
            const int f1 = gb.add_vertex(), f2 = gb.add_vertex(), f3 = gb.add_vertex();
            gb.add_edge(f1, x3); gb.add_edge(f1, x1); gb.add_edge(f1, c);
            gb.add_edge(f2, x2); gb.add_edge(f2, x3); gb.add_edge(f2, c);
            gb.add_edge(f3, x2); gb.add_edge(f3, x3); gb.add_edge(f3, f2);
            kids.push_back(rec_tri(d - 1, 2, x1, c, x2));   // chain v2, face (x1,x2,c)
            kids.push_back(rec_tri(d - 1, 1, x1, x3, f1));  // chain v1, face (x3,x1,f1)
            kids.push_back(rec_tri(d - 1, 1, c, x1, f1));   // face (x1,c,f1)
            kids.push_back(rec_tri(d - 1, 1, c, x3, f1));   // face (c,x3,f1)
            kids.push_back(rec_tri(d - 1, 1, c, x3, f2));   // face (x3,c,f2)
            kids.push_back(rec_tri(d - 1, 1, c, x2, f2));   // face (c,x2,f2)
        } else if (d >= 1 && variant == 2) {
            const int cr = gb.add_vertex();
            copies[id].cr = cr;
            gb.add_edge(cr, x3); gb.add_edge(cr, x1); gb.add_edge(cr, c);
            const int f1 = gb.add_vertex(), f2 = gb.add_vertex();
            const int f3 = gb.add_vertex(), f4 = gb.add_vertex();
            gb.add_edge(f1, x1); gb.add_edge(f1, c);  gb.add_edge(f1, cr);
            gb.add_edge(f2, c);  gb.add_edge(f2, cr); gb.add_edge(f2, f1);
            gb.add_edge(f3, c);  gb.add_edge(f3, cr); gb.add_edge(f3, f2);
            gb.add_edge(f4, cr); gb.add_edge(f4, x1); gb.add_edge(f4, f1);
            kids.push_back(rec_tri(d - 1, 2, x1, c, x2));    // chain v2, face (x1,x2,c)
            kids.push_back(rec_tri(d - 1, 1, x1, cr, f4));   // chain v1, face (cr,x1,f4)
            kids.push_back(rec_tri(d - 1, 2, c, x2, x3));    // face (x2,x3,c)
            kids.push_back(rec_tri(d - 1, 2, c, cr, x3));    // face (c,x3,cr)
            kids.push_back(rec_tri(d - 1, 1, c, x1, f1));    // face (x1,c,f1)
            kids.push_back(rec_tri(d - 1, 1, c, f1, f2));    // face (f1,c,f2)
            kids.push_back(rec_tri(d - 1, 1, c, f2, f3));    // face (f2,c,f3)
            kids.push_back(rec_tri(d - 1, 1, cr, f1, f2));   // face (cr,f1,f2)
            kids.push_back(rec_tri(d - 1, 1, cr, f2, f3));   // face (cr,f2,f3)
            kids.push_back(rec_tri(d - 1, 1, cr, f1, f4));   // face (f1,cr,f4)
            kids.push_back(rec_tri(d - 1, 1, cr, x3, x1));   // face (x3,x1,cr)
        }
        attach_children(id, kids);
        copies[id].int_end = gb.vertex_count();
        return id;
    }

    int rec_out(int d, int variant, int o1v, int o2v) {
        const int id = new_node(d, variant, o1v, o2v, -1);
        copies[id].int_begin = gb.vertex_count();
        const int c = gb.add_vertex();
        copies[id].c = c;
        gb.add_edge(c, o1v);
        if (o2v >= 0) gb.add_edge(c, o2v);
        std::vector<int> kids;
        if (d >= 1 && variant == 1) {
            kids.push_back(rec_out(d - 1, 2, o1v, c));  // chain v2
            kids.push_back(rec_out(d - 1, 1, o1v, -1)); // chain v1
            for (int i = 0; i < 3; ++i) kids.push_back(rec_out(d - 1, 1, c, -1));
            for (int j = d - 2; j >= 0; --j) kids.push_back(rec_out(j, 1, c, -1));
        } else if (d >= 1 && variant == 2) {
            insist(o2v >= 0, "variant-2 copy needs an o2 anchor");
            const int cr = gb.add_vertex();
            copies[id].cr = cr;
            gb.add_edge(c, cr);
            kids.push_back(rec_out(d - 1, 2, o1v, c));  // chain v2
            kids.push_back(rec_out(d - 1, 1, o1v, -1)); // chain v1
            kids.push_back(rec_out(d - 1, 2, c, o2v));
            kids.push_back(rec_out(d - 1, 2, c, cr));
            for (int i = 0; i < 2; ++i) kids.push_back(rec_out(d - 1, 1, c, -1));
            for (int j = d - 3; j >= 0; --j) kids.push_back(rec_out(j, 1, c, -1));
            for (int i = 0; i < 3; ++i) kids.push_back(rec_out(d - 1, 1, cr, -1));
            for (int j = d - 2; j >= 0; --j) kids.push_back(rec_out(j, 1, cr, -1));
        }
        attach_children(id, kids);
        copies[id].int_end = gb.vertex_count();
        return id;
    }
};

}  // namespace

StackedHost build_host(int d, int variant, Flavor flavor) {
    insist(d >= 0 && (variant == 1 || variant == 2), "build_host: bad parameters");
    const long long boundary = flavor == Flavor::triangulated ? 3 : 2;
    check_vertex_budget(size_s(d, variant, flavor) + boundary, "build_host");

    BuildCtx ctx;
    ctx.flavor = flavor;
    if (flavor == Flavor::triangulated) {
        ctx.gb = GraphBuilder(3);
        ctx.gb.add_edge(0, 1);
        ctx.gb.add_edge(1, 2);
        ctx.gb.add_edge(2, 0);
        ctx.rec_tri(d, variant, 0, 1, 2);
    } else {
        ctx.gb = GraphBuilder(2);
        ctx.rec_out(d, variant, 0, 1);
    }

    StackedHost host;
    host.graph = ctx.gb.freeze();
    host.flavor = flavor;
    host.copies = std::move(ctx.copies);
    host.child_pool = std::move(ctx.child_pool);
    host.anchor_of_vertex.assign(host.graph.vertex_count(), -1);
    for (int i = 0; i < (int)host.copies.size(); ++i) {
        if (host.copies[i].c >= 0) host.anchor_of_vertex[host.copies[i].c] = i;
        if (host.copies[i].cr >= 0) host.anchor_of_vertex[host.copies[i].cr] = i;
    }
    insist(host.interior_count() == size_s(d, variant, flavor),
           "interior count does not match the recurrence");
    return host;
}

namespace {

void avail(const StackedHost& host, int copy, const std::unordered_set<int>& reserved,
           std::vector<int>& out) {
    if (!reserved.count(copy)) {
        out.push_back(copy);
        return;
    }
    // A consumed copy never touches its o1-chain variant-1 child, which stays
    // available at the same anchor.
    if (host.copies[copy].depth >= 1) avail(host, host.chain_child(copy, 1), reserved, out);
}

}  // namespace

std::vector<int> pool_at(const StackedHost& host, int anchor,
                         const std::unordered_set<int>& reserved) {
    if (anchor < 0 || anchor >= host.graph.vertex_count())
        throw UnknownAnchor("vertex id out of range");
    int owner = -1;
    if (host.anchor_of_vertex[anchor] >= 0) {
        owner = host.anchor_of_vertex[anchor];
    } else {
        const HostCopy& r = host.root();
        if (anchor == r.o1 || anchor == r.o2 || anchor == r.o3)
            owner = 0;
        else
            throw UnknownAnchor("vertex is not a role vertex of any copy");
    }
    std::vector<int> out;
    for (int ch : host.children(owner))
        if (host.copies[ch].o1 == anchor) avail(host, ch, reserved, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace treehost
