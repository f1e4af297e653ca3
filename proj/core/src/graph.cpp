#include "sandtile/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace sandtile {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Graph::Graph(int vertices, std::vector<std::pair<int, int>> e)
    : vertex_count(vertices), edges(std::move(e)) {
    if (vertex_count < 1) throw validation_error("graph needs at least one vertex");
    for (const auto& [t, h] : edges) {
        if (t < 1 || t > vertex_count || h < 1 || h > vertex_count)
            throw validation_error("edge endpoint out of range");
        if (t == h) throw validation_error("self-loops are not supported");
    }
}

bool Graph::connected() const {
    UnionFind uf(vertex_count);
    int parts = vertex_count;
    for (const auto& [t, h] : edges)
        if (uf.unite(t - 1, h - 1)) --parts;
    return parts == 1;
}

TreeData spanning_tree(const Graph& g) {
    if (!g.connected()) throw validation_error("graph is not connected");
    std::vector<bool> visited(g.vertex_count + 1, false);
    std::vector<int> tree;
    std::queue<int> q;
    visited[1] = true;
    q.push(1);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            auto [t, h] = g.edges[i];
            int other = t == v ? h : (h == v ? t : 0);
            if (other == 0 || visited[other]) continue;
            visited[other] = true;
            tree.push_back(static_cast<int>(i + 1));
            q.push(other);
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree_data(g, tree);
}

TreeData tree_data(const Graph& g, const std::vector<int>& tree_edges) {
    const int r = g.vertex_count - 1;
    if (static_cast<int>(tree_edges.size()) != r)
        throw validation_error("spanning tree must have vertex_count - 1 edges");
    UnionFind uf(g.vertex_count);
    for (int e : tree_edges) {
        if (e < 1 || e > static_cast<int>(g.edges.size()))
            throw validation_error("tree edge index out of range");
        auto [t, h] = g.edges[e - 1];
        if (!uf.unite(t - 1, h - 1))
            throw validation_error("tree edges contain a cycle");
    }
    TreeData td;
    td.tree_edges = tree_edges;
    std::sort(td.tree_edges.begin(), td.tree_edges.end());
    std::vector<bool> in_tree(g.edges.size() + 1, false);
    for (int e : td.tree_edges) in_tree[e] = true;
    td.permutation = td.tree_edges;
    for (std::size_t i = 1; i <= g.edges.size(); ++i)
        if (!in_tree[i]) td.permutation.push_back(static_cast<int>(i));
    return td;
}

std::vector<std::pair<int, int>> fundamental_circuit(const Graph& g, const TreeData& t,
                                                     int e) {
    if (std::find(t.tree_edges.begin(), t.tree_edges.end(), e) != t.tree_edges.end())
        throw validation_error("fundamental circuit requires a non-tree edge");
    if (e < 1 || e > static_cast<int>(g.edges.size()))
        throw validation_error("edge index out of range");
    // adjacency restricted to the tree
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count + 1);
    for (int te : t.tree_edges) {
        auto [a, b] = g.edges[te - 1];
        adj[a].push_back({b, te});
        adj[b].push_back({a, te});
    }
    auto [tail, head] = g.edges[e - 1];
    // walk the unique tree path head -> tail
    std::vector<int> prev_vertex(g.vertex_count + 1, 0), prev_edge(g.vertex_count + 1, 0);
    std::queue<int> q;
    prev_vertex[head] = head;
    q.push(head);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == tail) break;
        for (auto [u, te] : adj[v]) {
            if (prev_vertex[u] != 0) continue;
            prev_vertex[u] = v;
            prev_edge[u] = te;
            q.push(u);
        }
    }
    std::vector<std::pair<int, int>> circuit = {{e, 1}};
    int v = tail;
    while (v != head) {
        int from = prev_vertex[v], te = prev_edge[v];
        // the path is traversed from `from` to `v`
        auto [a, b] = g.edges[te - 1];
        circuit.push_back({te, a == from && b == v ? 1 : -1});
        v = from;
    }
    std::sort(circuit.begin(), circuit.end());
    return circuit;
}

std::vector<std::pair<int, int>> fundamental_cocircuit(const Graph& g, const TreeData& t,
                                                       int e) {
    if (std::find(t.tree_edges.begin(), t.tree_edges.end(), e) == t.tree_edges.end())
        throw validation_error("fundamental cocircuit requires a tree edge");
    // component of the tail of e after deleting e from the tree
    UnionFind uf(g.vertex_count);
    for (int te : t.tree_edges) {
        if (te == e) continue;
        auto [a, b] = g.edges[te - 1];
        uf.unite(a - 1, b - 1);
    }
    auto [tail, head] = g.edges[e - 1];
    int side = uf.find(tail - 1);
    std::vector<std::pair<int, int>> cocircuit;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [a, b] = g.edges[i];
        bool a_in = uf.find(a - 1) == side, b_in = uf.find(b - 1) == side;
        if (a_in == b_in) continue;
        cocircuit.push_back({static_cast<int>(i + 1), a_in ? 1 : -1});
    }
    return cocircuit;
}

StandardRepMatrix graph_to_srm(const Graph& g, const TreeData& t) {
    const std::size_t r = g.vertex_count - 1, n = g.edges.size();
    if (r < 1) throw validation_error("graph must have at least two vertices");
    std::vector<int> position(n + 1, -1);  // edge index -> column position
    for (std::size_t j = 0; j < n; ++j) position[t.permutation[j]] = static_cast<int>(j);
    IntMat m(r, n - r);
    for (std::size_t j = r; j < n; ++j) {
        for (auto [te, sign] : fundamental_circuit(g, t, t.permutation[j])) {
            if (te == t.permutation[j]) continue;
            m(position[te], j - r) = sign;
        }
    }
    StandardRepMatrix srm(r, n, m);
    // rebuild the dual from fundamental cocircuits and check orthogonality
    IntMat dhat(n - r, n);
    for (std::size_t i = 0; i < n - r; ++i) dhat(i, r + i) = 1;
    for (std::size_t j = 0; j < r; ++j) {
        for (auto [ce, sign] : fundamental_cocircuit(g, t, t.permutation[j])) {
            int pos = position[ce];
            if (pos >= static_cast<int>(r)) dhat(pos - r, j) = sign;
        }
    }
    IntMat prod = srm.matrix() * dhat.transpose();
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (prod(i, j) != 0)
                throw std::logic_error("circuit and cocircuit matrices are not orthogonal");
    return srm;
}

Int count_spanning_trees(const Graph& g) {
    const std::size_t r = g.vertex_count - 1, n = g.edges.size();
    if (n > 30) throw size_error("graph too large for brute-force tree counting");
    Int count = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
        UnionFind uf(g.vertex_count);
        bool acyclic = true;
        for (std::size_t i = 0; i < n && acyclic; ++i)
            if (mask & (std::size_t(1) << i)) {
                auto [a, b] = g.edges[i];
                acyclic = uf.unite(a - 1, b - 1);
            }
        if (acyclic) ++count;
    }
    return count;
}

}  // namespace sandtile
