#include "treehost/tree_embedder.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "treehost/limits.hpp"

namespace treehost {

int ceil_log2(long long n) {
    insist(n >= 1, "ceil_log2 of nonpositive");
    int d = 0;
    while ((1LL << d) < n) ++d;
    return d;
}

// ---------------------------------------------------------------------------
// Lemma-style greedy allocator
// ---------------------------------------------------------------------------

std::vector<int> allocate(const StackedHost& host, std::vector<AllocationRequest> requests,
                          const std::vector<int>& pool) {
    std::stable_sort(requests.begin(), requests.end(),
                     [](const AllocationRequest& a, const AllocationRequest& b) {
                         if (a.depth != b.depth) return a.depth > b.depth;
                         return a.index < b.index;
                     });
    std::set<std::pair<int, int>> slots;  // (depth, copy id)
    for (int id : pool) slots.insert({host.copies[id].depth, id});

    int max_index = -1;
    for (const auto& r : requests) max_index = std::max(max_index, r.index);
    std::vector<int> assignment(max_index + 1, -1);

    for (const auto& r : requests) {
        insist(r.mark_count <= 2, "bad mark count");
        auto it = slots.lower_bound({r.depth, -1});
        while (it != slots.end()) {
            const auto [sd, sid] = *it;
            const bool feasible =
                sd > r.depth || r.mark_count <= 1 || host.copies[sid].variant == 2;
            if (feasible) break;
            ++it;
        }
        if (it == slots.end())
            throw AllocationInfeasible("no slot of depth >= " + std::to_string(r.depth));
        int slot = it->second;
        slots.erase(it);
        while (host.copies[slot].depth > r.depth) {
            const int v1 = host.chain_child(slot, 1);
            const int v2 = host.chain_child(slot, 2);
            if (r.mark_count == 2 && host.copies[slot].depth == r.depth + 1) {
                slots.insert({host.copies[v1].depth, v1});
                slot = v2;
            } else {
                slots.insert({host.copies[v2].depth, v2});
                slot = v1;
            }
        }
        insist(r.mark_count <= 1 || host.copies[slot].variant == 2,
               "two-mark request assigned to a variant-1 copy");
        assignment[r.index] = slot;
    }
    return assignment;
}

// ---------------------------------------------------------------------------
// Recursive marked embedding
// ---------------------------------------------------------------------------

namespace {

struct Mark {
    int vertex;
    bool to_o2;  // obligation target: o2 when true, o1 otherwise
};

struct Task {
    std::vector<int> verts;  // original tree vertex ids
    std::vector<Mark> marks;
    int copy;
};

struct Embedder {
    const Graph& tree;
    const StackedHost& host;
    std::vector<int> image;
    std::unordered_set<int> reserved;
    std::vector<int> local_of;  // scratch: original id -> local index

    explicit Embedder(const Graph& t, const StackedHost& h)
        : tree(t), host(h), image(t.vertex_count(), -1), local_of(t.vertex_count(), -1) {}

    Tree local_tree(const std::vector<int>& verts) {
        for (int i = 0; i < (int)verts.size(); ++i) local_of[verts[i]] = i;
        GraphBuilder b(static_cast<int>(verts.size()));
        for (int i = 0; i < (int)verts.size(); ++i)
            for (int w : tree.neighbors(verts[i]))
                if (local_of[w] > i) b.add_edge(i, local_of[w]);
        Tree t{b.freeze()};
        for (int v : verts) local_of[v] = -1;
        return t;
    }

    int designated_child(int copy, int role_o1, int role_o2) const {
        const HostCopy& k = host.copies[copy];
        for (int ch : host.children(copy)) {
            const HostCopy& c = host.copies[ch];
            if (c.variant == 2 && c.o1 == role_o1 && c.o2 == role_o2) return ch;
        }
        insist(false, "designated variant-2 child not found");
        return -1;
    }

    void check_obligation(int host_vertex, const Mark& m, const HostCopy& k) {
        const int target = m.to_o2 ? k.o2 : k.o1;
        insist(target >= 0, "mark obligation against a missing role vertex");
        insist(host.graph.has_edge(host_vertex, target),
               "separator image not adjacent to its obligation target");
    }

    void run(Task root) {
        std::deque<Task> work;
        work.push_back(std::move(root));
        while (!work.empty()) {
            Task t = std::move(work.front());
            work.pop_front();
            process(std::move(t), work);
        }
    }

    void process(Task task, std::deque<Task>& work) {
        const HostCopy& k = host.copies[task.copy];
        const int d = k.depth;
        const long long size = static_cast<long long>(task.verts.size());
        if (size > (1LL << d))
            throw CapacityExceeded("subtree of size " + std::to_string(size) +
                                   " against depth " + std::to_string(d));
        for (const Mark& m : task.marks)
            insist(!m.to_o2 || k.variant == 2, "o2 obligation on a variant-1 copy");

        if (size == 1) {
            image[task.verts[0]] = k.c;
            for (const Mark& m : task.marks) check_obligation(k.c, m, k);
            return;
        }

        Tree lt = local_tree(task.verts);
        const int jloc = jordan_separator(lt);
        const int J = task.verts[jloc];

        // components of the task tree minus J, with connection vertices
        std::vector<std::vector<int>> comps;   // local ids
        std::vector<int> root_of;              // local id adjacent to J
        {
            std::vector<int> comp_of(lt.size(), -1);
            for (int s = 0; s < lt.size(); ++s) {
                if (s == jloc || comp_of[s] >= 0) continue;
                int id = static_cast<int>(comps.size());
                comps.emplace_back();
                root_of.push_back(-1);
                std::deque<int> q{s};
                comp_of[s] = id;
                while (!q.empty()) {
                    int u = q.front();
                    q.pop_front();
                    comps[id].push_back(u);
                    for (int w : lt.graph.neighbors(u)) {
                        if (w == jloc) root_of[id] = root_of[id] < 0 ? u : root_of[id];
                        if (w != jloc && comp_of[w] < 0) {
                            comp_of[w] = id;
                            q.push_back(w);
                        }
                    }
                }
            }
            // the connection vertex is the unique component vertex adjacent to J
            for (int w : lt.graph.neighbors(jloc)) root_of[comp_of[w]] = w;
        }
        auto to_orig = [&](const std::vector<int>& locals) {
            std::vector<int> out;
            out.reserve(locals.size());
            for (int v : locals) out.push_back(task.verts[v]);
            return out;
        };

        // marks on J are discharged by J's image; others live in components
        std::vector<std::pair<Mark, int>> comp_marks;  // (mark, component id)
        std::vector<Mark> marks_on_J;
        {
            std::vector<int> comp_of(lt.size(), -1);
            for (int id = 0; id < (int)comps.size(); ++id)
                for (int v : comps[id]) comp_of[v] = id;
            for (const Mark& m : task.marks) {
                const int ml = [&] {
                    for (int i = 0; i < (int)task.verts.size(); ++i)
                        if (task.verts[i] == m.vertex) return i;
                    insist(false, "mark outside task tree");
                    return -1;
                }();
                if (ml == jloc)
                    marks_on_J.push_back(m);
                else
                    comp_marks.push_back({m, comp_of[ml]});
            }
        }

        const bool case3 = comp_marks.size() == 2 && comp_marks[0].second == comp_marks[1].second;

        if (!case3) {
            // Cases 1 and 2: J at the center vertex.
            image[J] = k.c;
            for (const Mark& m : marks_on_J) check_obligation(k.c, m, k);

            std::vector<int> designated(comps.size(), -1);
            for (auto& [m, cid] : comp_marks) {
                const int child = m.to_o2 ? designated_child(task.copy, k.c, k.o2)
                                          : host.chain_child(task.copy, 2);
                insist(designated[cid] < 0, "two designated children for one component");
                designated[cid] = child;
                reserved.insert(child);
                Task sub;
                sub.verts = to_orig(comps[cid]);
                const Mark connect{task.verts[root_of[cid]], !m.to_o2};
                sub.marks = m.to_o2 ? std::vector<Mark>{connect, m}
                                    : std::vector<Mark>{m, connect};
                sub.copy = child;
                work.push_back(std::move(sub));
            }

            std::vector<AllocationRequest> requests;
            long long budget = 0;
            for (int cid = 0; cid < (int)comps.size(); ++cid) {
                if (designated[cid] >= 0) continue;
                requests.push_back({cid, ceil_log2((long long)comps[cid].size()), 1});
                budget += 1LL << requests.back().depth;
            }
            insist(budget <= (1LL << (d + 1)), "case 1/2 budget identity violated");
            if (!requests.empty()) {
                auto pool = pool_at(host, k.c, reserved);
                auto assign = allocate(host, requests, pool);
                for (const auto& r : requests) {
                    const int child = assign[r.index];
                    reserved.insert(child);
                    Task sub;
                    sub.verts = to_orig(comps[r.index]);
                    sub.marks = {Mark{task.verts[root_of[r.index]], false}};
                    sub.copy = child;
                    work.push_back(std::move(sub));
                }
            }
            return;
        }

        // Case 3: both marks inside one component T1; split T1 at the median.
        insist(k.variant == 2 && k.cr >= 0, "case 3 requires a variant-2 copy");
        const int c1 = comp_marks[0].second;
        const Mark mk1 = comp_marks[0].first.to_o2 ? comp_marks[1].first : comp_marks[0].first;
        const Mark mk2 = comp_marks[0].first.to_o2 ? comp_marks[0].first : comp_marks[1].first;
        insist(!mk1.to_o2 && mk2.to_o2, "case 3 needs one o1 and one o2 obligation");

        Tree t1 = local_tree(to_orig(comps[c1]));
        auto t1_orig = to_orig(comps[c1]);
        auto t1_local = [&](int orig) {
            for (int i = 0; i < (int)t1_orig.size(); ++i)
                if (t1_orig[i] == orig) return i;
            insist(false, "vertex not in T1");
            return -1;
        };
        const int r1_orig = task.verts[root_of[c1]];
        const int mloc = median_vertex(t1, t1_local(mk1.vertex), t1_local(mk2.vertex),
                                       t1_local(r1_orig));
        const int M = t1_orig[mloc];

        image[M] = k.c;
        image[J] = k.cr;
        if (tree.has_edge(M, J))
            insist(host.graph.has_edge(k.c, k.cr), "separator edge missing in frame");
        if (mk1.vertex == M) check_obligation(k.c, mk1, k);
        if (mk2.vertex == M) check_obligation(k.c, mk2, k);

        // components of T1 - M
        std::vector<std::vector<int>> sub_comps;
        std::vector<int> sub_root;
        {
            std::vector<int> comp_of(t1.size(), -1);
            for (int s = 0; s < t1.size(); ++s) {
                if (s == mloc || comp_of[s] >= 0) continue;
                int id = static_cast<int>(sub_comps.size());
                sub_comps.emplace_back();
                sub_root.push_back(-1);
                std::deque<int> q{s};
                comp_of[s] = id;
                while (!q.empty()) {
                    int u = q.front();
                    q.pop_front();
                    sub_comps[id].push_back(u);
                    for (int w : t1.graph.neighbors(u))
                        if (w != mloc && comp_of[w] < 0) {
                            comp_of[w] = id;
                            q.push_back(w);
                        }
                }
            }
            for (int w : t1.graph.neighbors(mloc)) sub_root[comp_of[w]] = w;

            long long total = 0;
            for (const auto& sc : sub_comps) total += 1LL << ceil_log2((long long)sc.size());
            insist(total <= (1LL << d), "case 3 inner budget identity violated");

            std::vector<int> designated(sub_comps.size(), -1);
            auto spawn = [&](int cid, int child, std::vector<Mark> marks) {
                reserved.insert(child);
                Task sub;
                sub.verts.reserve(sub_comps[cid].size());
                for (int v : sub_comps[cid]) sub.verts.push_back(t1_orig[v]);
                sub.marks = std::move(marks);
                sub.copy = child;
                work.push_back(std::move(sub));
            };
            // T'_1 (holds m1) -> (o1, c) child; T'_2 (m2) -> (c, o2); T'_3 (r1) -> (c, c_r)
            if (mk1.vertex != M) {
                int cid = comp_of[t1_local(mk1.vertex)];
                designated[cid] = host.chain_child(task.copy, 2);
                spawn(cid, designated[cid],
                      {Mark{mk1.vertex, false}, Mark{t1_orig[sub_root[cid]], true}});
            }
            if (mk2.vertex != M) {
                int cid = comp_of[t1_local(mk2.vertex)];
                insist(designated[cid] < 0, "median failed to separate the marks");
                designated[cid] = designated_child(task.copy, k.c, k.o2);
                spawn(cid, designated[cid],
                      {Mark{t1_orig[sub_root[cid]], false}, Mark{mk2.vertex, true}});
            }
            if (r1_orig != M) {
                int cid = comp_of[t1_local(r1_orig)];
                insist(designated[cid] < 0, "median failed to separate r1 from the marks");
                designated[cid] = designated_child(task.copy, k.c, k.cr);
                spawn(cid, designated[cid],
                      {Mark{t1_orig[sub_root[cid]], false}, Mark{r1_orig, true}});
            } else {
                insist(host.graph.has_edge(k.c, k.cr), "separator edge missing in frame");
            }

            std::vector<AllocationRequest> requests;
            for (int cid = 0; cid < (int)sub_comps.size(); ++cid) {
                if (designated[cid] >= 0) continue;
                requests.push_back({cid, ceil_log2((long long)sub_comps[cid].size()), 1});
            }
            if (!requests.empty()) {
                auto pool = pool_at(host, k.c, reserved);
                auto assign = allocate(host, requests, pool);
                for (const auto& r : requests)
                    spawn(r.index, assign[r.index],
                          {Mark{t1_orig[sub_root[r.index]], false}});
            }
        }

        // remaining components T_2.. go next to c_r
        std::vector<AllocationRequest> requests;
        long long budget = 0;
        for (int cid = 0; cid < (int)comps.size(); ++cid) {
            if (cid == c1) continue;
            requests.push_back({cid, ceil_log2((long long)comps[cid].size()), 1});
            budget += 1LL << requests.back().depth;
        }
        insist(budget <= (1LL << (d + 1)), "case 3 outer budget identity violated");
        if (!requests.empty()) {
            auto pool = pool_at(host, k.cr, reserved);
            auto assign = allocate(host, requests, pool);
            for (const auto& r : requests) {
                const int child = assign[r.index];
                reserved.insert(child);
                Task sub;
                sub.verts = to_orig(comps[r.index]);
                sub.marks = {Mark{task.verts[root_of[r.index]], false}};
                sub.copy = child;
                work.push_back(std::move(sub));
            }
        }
    }
};

}  // namespace

EmbedResult embed_marked(const MarkedTree& task, const StackedHost& host, int target_copy) {
    const HostCopy& k = host.copies[target_copy];
    insist(task.m2 < 0 || k.variant == 2, "variant-1 target allows at most one mark");
    const int n = task.tree.size();
    insist(task.m1 < n && task.m2 < n, "mark out of range");
    if ((long long)n > (1LL << k.depth))
        throw CapacityExceeded("tree too large for target depth");

    Embedder e(task.tree.graph, host);
    Task root;
    root.verts.resize(n);
    for (int v = 0; v < n; ++v) root.verts[v] = v;
    if (task.m1 >= 0) root.marks.push_back({task.m1, false});
    if (task.m2 >= 0) root.marks.push_back({task.m2, true});
    root.copy = target_copy;
    e.run(std::move(root));

    EmbedResult out;
    out.map.pattern_size = n;
    out.map.image = std::move(e.image);
    if (task.m1 >= 0) out.obligations.push_back({task.m1, k.o1});
    if (task.m2 >= 0) out.obligations.push_back({task.m2, k.o2});

    // interior-only check plus full certificate verification
    for (int v = 0; v < n; ++v)
        insist(out.map.image[v] >= k.int_begin && out.map.image[v] < k.int_end,
               "tree vertex escaped the target copy interior");
    insist(verify_embedding(task.tree.graph, host.graph, out.map, {}, out.obligations),
           "embed_marked produced an invalid certificate");
    return out;
}

EmbedResult embed_universal_into(const Tree& t, const StackedHost& host) {
    return embed_marked(MarkedTree{t, 0, -1}, host, 0);
}

std::pair<StackedHost, EmbedResult> embed_universal(const Tree& t) {
    const int d = ceil_log2(t.size());
    StackedHost host = build_host(d, 1, Flavor::outerplanar);
    EmbedResult r = embed_universal_into(t, host);
    return {std::move(host), std::move(r)};
}

int kary_host_depth(int k, int h) {
    insist(k >= 2 && h >= 0, "kary embedding needs k >= 2, h >= 0");
    int s = 1;
    while (3LL * (1LL << (s - 1)) < k) ++s;  // s = ceil(log2(k/3)) + 1
    return h * s + 1;
}

std::pair<UniformHost, EmbeddingMap> embed_kary(int k, int h) {
    const int d = kary_host_depth(k, h);
    int s = (h == 0) ? 1 : (d - 1) / h;
    UniformHost host = build_uniform(d);
    Tree t = kary_tree(k, h);
    EmbeddingMap map{t.size(), std::vector<int>(t.size(), -1)};

    // level-order recursion: vertex v of the BFS-ordered tree at copy L
    struct Item {
        int vertex;
        int copy;
    };
    std::deque<Item> work{{0, 0}};
    while (!work.empty()) {
        auto [v, copy] = work.front();
        work.pop_front();
        const UniformCopy& L = host.copies[copy];
        insist(L.center >= 0, "k-ary embedding reached a bare triangle");
        map.image[v] = L.center;
        std::vector<int> kids;
        for (long long w = 1LL * v * k + 1; w <= 1LL * v * k + k && w < t.size(); ++w)
            kids.push_back(static_cast<int>(w));
        if (kids.empty()) continue;
        auto subs = uniform_copies_at(host, copy, L.center, L.depth - s);
        insist((int)subs.size() >= (int)kids.size(), "not enough sub-copies at the center");
        for (int i = 0; i < (int)kids.size(); ++i) work.push_back({kids[i], subs[i]});
    }
    insist(verify_embedding(t.graph, host.graph, map), "k-ary certificate invalid");
    return {std::move(host), std::move(map)};
}

}  // namespace treehost
