#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sgt {

// Edge subsets are bitmasks over edge indices; graphs are capped at 62 edges so
// every subset fits a uint64_t with room to spare.
using EdgeSubset = std::uint64_t;

inline constexpr int kMaxEdges = 62;

inline EdgeSubset edge_bit(int e) { return EdgeSubset{1} << e; }
int popcount(EdgeSubset a);

struct Edge {
  int u = 0;
  int v = 0;
  int sign = +1;  // +1 or -1
};

// A multigraph with +/-1 edge signs.  Loops are stored once with u == v; the
// two half-edges of an edge are addressed as side 0 (at u) and side 1 (at v).
// Edge identity is the index into `edges`; derived graphs renumber densely.
struct SignedGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  EdgeSubset full_edge_set() const {
    return edges.empty() ? 0 : ((EdgeSubset{1} << edges.size()) - 1);
  }
  bool is_loop(int e) const { return edges[e].u == edges[e].v; }
};

// Throws std::invalid_argument on out-of-range endpoints, a bad sign, a
// negative vertex count, or more than kMaxEdges edges.
void validate_graph(const SignedGraph& g);

struct ComponentProfile {
  int total = 0;
  int balanced = 0;
  int unbalanced = 0;
};

// Full component data of the spanning subgraph (V, A): component ids per
// vertex, a balance flag per component, and the +/-1 vertex potentials the
// balance BFS assigned (potentials are meaningful only within balanced
// components but are recorded for all).
struct ComponentMap {
  std::vector<int> component_of;        // size |V|
  std::vector<char> component_balanced; // size #components
  std::vector<std::int8_t> potential;   // size |V|, values +/-1

  int total() const { return static_cast<int>(component_balanced.size()); }
  int balanced_count() const;
  int unbalanced_count() const { return total() - balanced_count(); }
  ComponentProfile profile() const;
};

ComponentMap component_map(const SignedGraph& g, EdgeSubset a);
ComponentProfile component_profile(const SignedGraph& g, EdgeSubset a);

// Rank of the edge subset in the cycle matroid of the underlying graph:
// |V| minus the number of components of (V, A).
int graph_rank(const SignedGraph& g, EdgeSubset a);

// Rank of the edge subset in the frame matroid of the signed graph:
// |V| minus the number of balanced components of (V, A).
int frame_rank(const SignedGraph& g, EdgeSubset a);

// Negates the sign of every non-loop edge incident with v; loops at v keep
// their sign.  An involution that preserves all component profiles.
SignedGraph switch_vertex(const SignedGraph& g, int v);

SignedGraph delete_edge(const SignedGraph& g, int e);

// Contraction is defined for positive edges only (switch an endpoint first to
// make a negative edge positive); contracting a positive loop deletes it.
// The larger endpoint index is merged into the smaller and vertices renumber
// densely.  Edges parallel to the contracted edge become loops and keep their
// signs.
SignedGraph contract_edge(const SignedGraph& g, int e);

SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b);

enum class GraphRole { bridge, loop, ordinary };
enum class FrameRole { coloop, loop, ordinary };

struct EdgeClass {
  GraphRole graph_role = GraphRole::ordinary;
  FrameRole frame_role = FrameRole::ordinary;
  // True iff e is a bridge whose two sides are both unbalanced once e is
  // deleted; equivalently, e is a bridge of the underlying graph that is
  // ordinary in the frame matroid.
  bool circuit_path_edge = false;
};

EdgeClass classify_edge(const SignedGraph& g, int e);

const char* to_string(GraphRole r);
const char* to_string(FrameRole r);

// Extracts the subgraph induced by one component of `cm` (vertices renumbered
// densely in increasing order).  `edge_origin`, if non-null, receives the
// original edge index for each subgraph edge.
SignedGraph component_subgraph(const SignedGraph& g, const ComponentMap& cm, int component_id,
                               std::vector<int>* edge_origin = nullptr);

}  // namespace sgt
