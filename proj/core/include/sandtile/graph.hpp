#pragma once

#include "sandtile/srm.hpp"

namespace sandtile {

// A finite connected undirected multigraph. Edge orientation (tail -> head)
// is bookkeeping only. Vertices and edges are 1-based.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // (tail, head)

    Graph(int vertices, std::vector<std::pair<int, int>> e);

    bool connected() const;
};

struct TreeData {
    std::vector<int> tree_edges;   // r = vertex_count - 1 edge indices, spanning
    std::vector<int> permutation;  // edge order with tree edges first
};

// BFS tree from vertex 1, edges considered in input order.
TreeData spanning_tree(const Graph& g);

// Validates an explicit tree choice and records the induced permutation.
TreeData tree_data(const Graph& g, const std::vector<int>& tree_edges);

// Signed fundamental circuit of a non-tree edge: map edge index -> sign,
// with the circuit cyclically oriented along e.
std::vector<std::pair<int, int>> fundamental_circuit(const Graph& g, const TreeData& t,
                                                     int e);

// Signed fundamental cocircuit of a tree edge: signs relative to the
// tail-side / head-side bipartition obtained by deleting e from the tree.
std::vector<std::pair<int, int>> fundamental_cocircuit(const Graph& g, const TreeData& t,
                                                       int e);

// The standard representative matrix in the permuted edge order, with the
// identity block on the tree edges and fundamental-circuit sign columns.
StandardRepMatrix graph_to_srm(const Graph& g, const TreeData& t);

// Brute force over edge subsets of size r.
Int count_spanning_trees(const Graph& g);

}  // namespace sandtile
