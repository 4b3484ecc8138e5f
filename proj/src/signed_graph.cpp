#include "sgt/signed_graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace sgt {

int popcount(EdgeSubset a) { return std::popcount(a); }

void validate_graph(const SignedGraph& g) {
  if (g.vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (g.edge_count() > kMaxEdges)
    throw std::invalid_argument("graphs are limited to " + std::to_string(kMaxEdges) + " edges");
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges[i];
    if (e.u < 0 || e.u >= g.vertex_count || e.v < 0 || e.v >= g.vertex_count)
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    if (e.sign != +1 && e.sign != -1)
      throw std::invalid_argument("edge " + std::to_string(i) + " has sign outside {+1,-1}");
  }
}

int ComponentMap::balanced_count() const {
  int n = 0;
  for (char b : component_balanced) n += (b != 0);
  return n;
}

ComponentProfile ComponentMap::profile() const {
  ComponentProfile p;
  p.total = total();
  p.balanced = balanced_count();
  p.unbalanced = p.total - p.balanced;
  return p;
}

ComponentMap component_map(const SignedGraph& g, EdgeSubset a) {
  const int n = g.vertex_count;
  ComponentMap cm;
  cm.component_of.assign(n, -1);
  cm.potential.assign(n, 0);

  // Adjacency over the full edge list; membership in `a` is tested per visit.
  struct Arc {
    int to;
    int edge;
  };
  std::vector<std::vector<Arc>> adj(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges[i];
    if (e.u == e.v) {
      adj[e.u].push_back({e.u, i});
    } else {
      adj[e.u].push_back({e.v, i});
      adj[e.v].push_back({e.u, i});
    }
  }

  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (cm.component_of[s] != -1) continue;
    const int id = cm.total();
    bool balanced = true;
    cm.component_of[s] = id;
    cm.potential[s] = 1;
    queue.clear();
    queue.push_back(s);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (const Arc& arc : adj[u]) {
        if (!(a & edge_bit(arc.edge))) continue;
        const int sign = g.edges[arc.edge].sign;
        if (arc.to == u) {
          if (sign < 0) balanced = false;  // a negative loop closes an unbalanced cycle
          continue;
        }
        const std::int8_t want = static_cast<std::int8_t>(sign * cm.potential[u]);
        if (cm.component_of[arc.to] == -1) {
          cm.component_of[arc.to] = id;
          cm.potential[arc.to] = want;
          queue.push_back(arc.to);
        } else if (cm.potential[arc.to] != want) {
          balanced = false;
        }
      }
    }
    cm.component_balanced.push_back(balanced ? 1 : 0);
  }
  return cm;
}

ComponentProfile component_profile(const SignedGraph& g, EdgeSubset a) {
  return component_map(g, a).profile();
}

int graph_rank(const SignedGraph& g, EdgeSubset a) {
  return g.vertex_count - component_profile(g, a).total;
}

int frame_rank(const SignedGraph& g, EdgeSubset a) {
  return g.vertex_count - component_profile(g, a).balanced;
}

SignedGraph switch_vertex(const SignedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count) throw std::out_of_range("switch_vertex: no such vertex");
  SignedGraph out = g;
  for (Edge& e : out.edges) {
    const bool at_u = (e.u == v);
    const bool at_v = (e.v == v);
    if (at_u != at_v) e.sign = -e.sign;  // loops at v keep their sign
  }
  return out;
}

SignedGraph delete_edge(const SignedGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw std::out_of_range("delete_edge: no such edge");
  SignedGraph out;
  out.vertex_count = g.vertex_count;
  out.edges.reserve(g.edges.size() - 1);
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != e) out.edges.push_back(g.edges[i]);
  return out;
}

SignedGraph contract_edge(const SignedGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw std::out_of_range("contract_edge: no such edge");
  const Edge& ce = g.edges[e];
  if (ce.sign != +1)
    throw std::invalid_argument(
        "contract_edge: only positive edges can be contracted; switch an endpoint first");
  if (ce.u == ce.v) return delete_edge(g, e);  // a positive loop contracts by deletion

  const int keep = std::min(ce.u, ce.v);
  const int gone = std::max(ce.u, ce.v);
  auto remap = [&](int w) {
    if (w == gone) return keep;
    return w > gone ? w - 1 : w;
  };

  SignedGraph out;
  out.vertex_count = g.vertex_count - 1;
  out.edges.reserve(g.edges.size() - 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == e) continue;
    Edge ne = g.edges[i];
    ne.u = remap(ne.u);
    ne.v = remap(ne.v);
    out.edges.push_back(ne);
  }
  return out;
}

SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b) {
  SignedGraph out = a;
  out.vertex_count = a.vertex_count + b.vertex_count;
  for (Edge e : b.edges) {
    e.u += a.vertex_count;
    e.v += a.vertex_count;
    out.edges.push_back(e);
  }
  if (out.edge_count() > kMaxEdges)
    throw std::invalid_argument("disjoint_union: edge count would exceed the supported maximum");
  return out;
}

EdgeClass classify_edge(const SignedGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw std::out_of_range("classify_edge: no such edge");
  const EdgeSubset full = g.full_edge_set();
  const EdgeSubset without = full & ~edge_bit(e);

  EdgeClass cls;
  const ComponentProfile pf_full = component_profile(g, full);
  const ComponentMap cm_without = component_map(g, without);

  if (g.is_loop(e)) {
    cls.graph_role = GraphRole::loop;
  } else if (cm_without.total() > pf_full.total) {
    cls.graph_role = GraphRole::bridge;
  } else {
    cls.graph_role = GraphRole::ordinary;
  }

  // Frame role via rank drops: a coloop's removal lowers the frame rank; a
  // frame loop spans no rank on its own (exactly the positive loops).
  const int rf_full = g.vertex_count - pf_full.balanced;
  const int rf_without = g.vertex_count - cm_without.profile().balanced;
  const int rf_single = g.vertex_count - component_profile(g, edge_bit(e)).balanced;
  if (rf_single == 0) {
    cls.frame_role = FrameRole::loop;
  } else if (rf_without == rf_full - 1) {
    cls.frame_role = FrameRole::coloop;
  } else {
    cls.frame_role = FrameRole::ordinary;
  }

  if (cls.graph_role == GraphRole::bridge) {
    const int cu = cm_without.component_of[g.edges[e].u];
    const int cv = cm_without.component_of[g.edges[e].v];
    cls.circuit_path_edge =
        !cm_without.component_balanced[cu] && !cm_without.component_balanced[cv];
  }
  return cls;
}

const char* to_string(GraphRole r) {
  switch (r) {
    case GraphRole::bridge: return "bridge";
    case GraphRole::loop: return "loop";
    case GraphRole::ordinary: return "ordinary";
  }
  return "?";
}

const char* to_string(FrameRole r) {
  switch (r) {
    case FrameRole::coloop: return "coloop";
    case FrameRole::loop: return "loop";
    case FrameRole::ordinary: return "ordinary";
  }
  return "?";
}

SignedGraph component_subgraph(const SignedGraph& g, const ComponentMap& cm, int component_id,
                               std::vector<int>* edge_origin) {
  std::vector<int> new_index(g.vertex_count, -1);
  SignedGraph out;
  for (int v = 0; v < g.vertex_count; ++v)
    if (cm.component_of[v] == component_id) new_index[v] = out.vertex_count++;
  if (edge_origin) edge_origin->clear();
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges[i];
    if (cm.component_of[e.u] != component_id) continue;
    out.edges.push_back({new_index[e.u], new_index[e.v], e.sign});
    if (edge_origin) edge_origin->push_back(i);
  }
  return out;
}

}  // namespace sgt
