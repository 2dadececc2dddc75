#ifndef BNET_GRAPH_HPP
#define BNET_GRAPH_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bnet/error.hpp"

namespace bnet {

using Edge = std::pair<std::string, std::string>;

// Directed acyclic graph over named variables. Acyclicity is a class
// invariant: add_edge rejects any edge that would close a cycle.
class Dag {
 public:
  Dag() = default;

  Dag(const std::vector<std::string>& nodes, const std::vector<Edge>& edges) {
    for (const auto& n : nodes) add_node(n);
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  void add_node(const std::string& name) {
    require(!name.empty(), errc::invalid_argument, "node name must be nonempty");
    nodes_.insert(name);
    parents_.try_emplace(name);
    children_.try_emplace(name);
  }

  void add_edge(const std::string& u, const std::string& v) {
    require(u != v, errc::invalid_argument, "self-loop " + u + " -> " + u);
    check_node(u);
    check_node(v);
    require(!has_edge(u, v), errc::invalid_argument, "duplicate edge " + u + " -> " + v);
    require(!reachable(v, u), errc::cycle_detected, "edge " + u + " -> " + v + " would create a cycle");
    children_[u].insert(v);
    parents_[v].insert(u);
  }

  void remove_edge(const std::string& u, const std::string& v) {
    require(has_edge(u, v), errc::invalid_argument, "no edge " + u + " -> " + v);
    children_[u].erase(v);
    parents_[v].erase(u);
  }

  bool has_node(const std::string& n) const { return nodes_.count(n) > 0; }
  bool has_edge(const std::string& u, const std::string& v) const {
    auto it = children_.find(u);
    return it != children_.end() && it->second.count(v) > 0;
  }
  bool adjacent(const std::string& u, const std::string& v) const {
    return has_edge(u, v) || has_edge(v, u);
  }

  const std::set<std::string>& nodes() const { return nodes_; }
  const std::set<std::string>& parents(const std::string& n) const {
    check_node(n);
    return parents_.at(n);
  }
  const std::set<std::string>& children(const std::string& n) const {
    check_node(n);
    return children_.at(n);
  }

  std::size_t node_count() const { return nodes_.size(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& [u, ch] : children_) {
      for (const auto& v : ch) out.emplace_back(u, v);
    }
    return out;  // sorted: children_ is an ordered map of ordered sets
  }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (const auto& [u, ch] : children_) c += ch.size();
    return c;
  }

  // Nodes reachable from `from` by directed paths (excluding `from` itself
  // unless on a cycle, which cannot happen here).
  std::set<std::string> descendants(const std::string& from) const {
    check_node(from);
    std::set<std::string> seen;
    std::deque<std::string> queue{from};
    while (!queue.empty()) {
      auto n = queue.front();
      queue.pop_front();
      for (const auto& c : children_.at(n)) {
        if (seen.insert(c).second) queue.push_back(c);
      }
    }
    return seen;
  }

  std::set<std::string> ancestors(const std::string& from) const {
    check_node(from);
    std::set<std::string> seen;
    std::deque<std::string> queue{from};
    while (!queue.empty()) {
      auto n = queue.front();
      queue.pop_front();
      for (const auto& p : parents_.at(n)) {
        if (seen.insert(p).second) queue.push_back(p);
      }
    }
    return seen;
  }

  void check_node(const std::string& n) const {
    require(has_node(n), errc::unknown_variable, "unknown variable '" + n + "'");
  }

 private:
  bool reachable(const std::string& from, const std::string& to) const {
    if (from == to) return true;
    std::set<std::string> seen{from};
    std::deque<std::string> queue{from};
    while (!queue.empty()) {
      auto n = queue.front();
      queue.pop_front();
      for (const auto& c : children_.at(n)) {
        if (c == to) return true;
        if (seen.insert(c).second) queue.push_back(c);
      }
    }
    return false;
  }

  std::set<std::string> nodes_;
  std::map<std::string, std::set<std::string>> parents_;
  std::map<std::string, std::set<std::string>> children_;
};

// Undirected adjacency, used for moral graphs and elimination orderings.
class UGraph {
 public:
  void add_node(const std::string& n) { adj_.try_emplace(n); }

  void add_edge(const std::string& u, const std::string& v) {
    if (u == v) return;
    add_node(u);
    add_node(v);
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  void remove_node(const std::string& n) {
    for (const auto& m : adj_[n]) adj_[m].erase(n);
    adj_.erase(n);
  }

  bool has_node(const std::string& n) const { return adj_.count(n) > 0; }
  bool has_edge(const std::string& u, const std::string& v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) > 0;
  }

  const std::set<std::string>& neighbors(const std::string& n) const { return adj_.at(n); }

  std::vector<std::string> nodes() const {
    std::vector<std::string> out;
    for (const auto& [n, _] : adj_) out.push_back(n);
    return out;
  }

 private:
  std::map<std::string, std::set<std::string>> adj_;
};

// Partially directed graph: the CPDAG output of constraint-based learning.
class Pdag {
 public:
  Pdag() = default;

  explicit Pdag(const std::vector<std::string>& nodes) {
    for (const auto& n : nodes) add_node(n);
  }

  void add_node(const std::string& n) {
    require(!n.empty(), errc::invalid_argument, "node name must be nonempty");
    nodes_.insert(n);
    dir_parents_.try_emplace(n);
    dir_children_.try_emplace(n);
    undir_.try_emplace(n);
  }

  void add_directed(const std::string& u, const std::string& v) {
    check_pair(u, v);
    dir_children_[u].insert(v);
    dir_parents_[v].insert(u);
  }

  void add_undirected(const std::string& u, const std::string& v) {
    check_pair(u, v);
    undir_[u].insert(v);
    undir_[v].insert(u);
  }

  // Turns an existing undirected edge into u -> v.
  void orient(const std::string& u, const std::string& v) {
    require(has_undirected(u, v), errc::invalid_argument,
            "no undirected edge " + u + " - " + v + " to orient");
    undir_[u].erase(v);
    undir_[v].erase(u);
    dir_children_[u].insert(v);
    dir_parents_[v].insert(u);
  }

  bool has_node(const std::string& n) const { return nodes_.count(n) > 0; }
  bool has_directed(const std::string& u, const std::string& v) const {
    auto it = dir_children_.find(u);
    return it != dir_children_.end() && it->second.count(v) > 0;
  }
  bool has_undirected(const std::string& u, const std::string& v) const {
    auto it = undir_.find(u);
    return it != undir_.end() && it->second.count(v) > 0;
  }
  bool adjacent(const std::string& u, const std::string& v) const {
    return has_directed(u, v) || has_directed(v, u) || has_undirected(u, v);
  }

  const std::set<std::string>& nodes() const { return nodes_; }
  const std::set<std::string>& directed_parents(const std::string& n) const { return dir_parents_.at(n); }
  const std::set<std::string>& directed_children(const std::string& n) const { return dir_children_.at(n); }
  const std::set<std::string>& undirected_neighbors(const std::string& n) const { return undir_.at(n); }

  std::set<std::string> all_neighbors(const std::string& n) const {
    std::set<std::string> out = undir_.at(n);
    out.insert(dir_parents_.at(n).begin(), dir_parents_.at(n).end());
    out.insert(dir_children_.at(n).begin(), dir_children_.at(n).end());
    return out;
  }

  std::vector<Edge> directed_edges() const {
    std::vector<Edge> out;
    for (const auto& [u, ch] : dir_children_) {
      for (const auto& v : ch) out.emplace_back(u, v);
    }
    return out;
  }

  std::vector<Edge> undirected_edges() const {
    std::vector<Edge> out;
    for (const auto& [u, nb] : undir_) {
      for (const auto& v : nb) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const Pdag& other) const {
    return nodes_ == other.nodes_ && dir_children_ == other.dir_children_ && undir_ == other.undir_;
  }

 private:
  void check_pair(const std::string& u, const std::string& v) {
    require(u != v, errc::invalid_argument, "self-loop at " + u);
    require(nodes_.count(u) && nodes_.count(v), errc::unknown_variable,
            "edge endpoints must be declared nodes");
    require(!adjacent(u, v), errc::invalid_argument, "pair " + u + ", " + v + " already has an edge");
  }

  std::set<std::string> nodes_;
  std::map<std::string, std::set<std::string>> dir_parents_;
  std::map<std::string, std::set<std::string>> dir_children_;
  std::map<std::string, std::set<std::string>> undir_;
};

// Deterministic topological order: Kahn's algorithm, lexicographic tie-break.
inline std::vector<std::string> topological_order(const Dag& dag) {
  std::map<std::string, int> indegree;
  std::set<std::string> ready;
  for (const auto& n : dag.nodes()) {
    indegree[n] = static_cast<int>(dag.parents(n).size());
    if (indegree[n] == 0) ready.insert(n);
  }
  std::vector<std::string> order;
  while (!ready.empty()) {
    std::string n = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(n);
    for (const auto& c : dag.children(n)) {
      if (--indegree[c] == 0) ready.insert(c);
    }
  }
  require(order.size() == dag.node_count(), errc::cycle_detected,
          "graph admits no topological order");
  return order;
}

namespace detail {

inline std::set<std::string> ancestors_including(const Dag& dag, const std::set<std::string>& seed) {
  std::set<std::string> out = seed;
  std::deque<std::string> queue(seed.begin(), seed.end());
  while (!queue.empty()) {
    auto n = queue.front();
    queue.pop_front();
    for (const auto& p : dag.parents(n)) {
      if (out.insert(p).second) queue.push_back(p);
    }
  }
  return out;
}

}  // namespace detail

// Linear-time d-separation by reachability over (node, arrival-direction)
// states. "down" means the trail arrived via an edge from a parent, "up"
// via an edge from a child.
inline bool d_separated(const Dag& dag, const std::set<std::string>& x, const std::set<std::string>& y,
                        const std::set<std::string>& z) {
  for (const auto& s : {x, y, z}) {
    for (const auto& n : s) dag.check_node(n);
  }
  for (const auto& n : x) {
    require(!y.count(n) && !z.count(n), errc::invalid_argument, "x, y, z must be pairwise disjoint");
  }
  for (const auto& n : y) {
    require(!z.count(n), errc::invalid_argument, "x, y, z must be pairwise disjoint");
  }

  const std::set<std::string> anc_z = detail::ancestors_including(dag, z);

  enum Dir { kUp = 0, kDown = 1 };
  std::set<std::pair<std::string, int>> visited;
  std::deque<std::pair<std::string, int>> queue;
  for (const auto& n : x) queue.emplace_back(n, kUp);

  while (!queue.empty()) {
    auto [n, dir] = queue.front();
    queue.pop_front();
    if (!visited.insert({n, dir}).second) continue;
    if (y.count(n)) return false;

    if (dir == kUp) {
      if (!z.count(n)) {
        for (const auto& p : dag.parents(n)) queue.emplace_back(p, kUp);
        for (const auto& c : dag.children(n)) queue.emplace_back(c, kDown);
      }
    } else {
      if (!z.count(n)) {
        for (const auto& c : dag.children(n)) queue.emplace_back(c, kDown);
      }
      if (anc_z.count(n)) {  // collider opens when the node or a descendant is conditioned
        for (const auto& p : dag.parents(n)) queue.emplace_back(p, kUp);
      }
    }
  }
  return true;
}

inline bool d_connected(const Dag& dag, const std::string& x, const std::string& y,
                        const std::set<std::string>& z) {
  return !d_separated(dag, {x}, {y}, z);
}

// Undirect all edges, then marry all co-parents of each node.
inline UGraph moralize(const Dag& dag) {
  UGraph g;
  for (const auto& n : dag.nodes()) g.add_node(n);
  for (const auto& [u, v] : dag.edges()) g.add_edge(u, v);
  for (const auto& n : dag.nodes()) {
    const auto& ps = dag.parents(n);
    for (auto it = ps.begin(); it != ps.end(); ++it) {
      for (auto jt = std::next(it); jt != ps.end(); ++jt) g.add_edge(*it, *jt);
    }
  }
  return g;
}

// Consistent extension of a PDAG to a DAG (Dor & Tarsi). Processes the
// lexicographically largest qualifying sink first so a lone undirected
// A - B comes out as A -> B.
inline Dag pdag_to_dag(const Pdag& p) {
  Dag dag;
  for (const auto& n : p.nodes()) dag.add_node(n);

  Pdag work = p;
  std::set<std::string> remaining = p.nodes();

  while (!remaining.empty()) {
    std::string pick;
    bool found = false;
    for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
      const std::string& x = *it;
      // x must be a directed sink among remaining nodes...
      bool sink = true;
      for (const auto& c : work.directed_children(x)) {
        if (remaining.count(c)) {
          sink = false;
          break;
        }
      }
      if (!sink) continue;
      // ...and each undirected neighbor of x must be adjacent to every
      // other neighbor of x, so orienting into x adds no v-structure.
      std::set<std::string> nbrs;
      for (const auto& m : work.all_neighbors(x)) {
        if (remaining.count(m)) nbrs.insert(m);
      }
      bool ok = true;
      for (const auto& u : work.undirected_neighbors(x)) {
        if (!remaining.count(u)) continue;
        for (const auto& m : nbrs) {
          if (m != u && !work.adjacent(u, m)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) continue;
      pick = x;
      found = true;
      break;
    }
    require(found, errc::not_extendable, "PDAG admits no consistent extension");

    for (const auto& u : work.undirected_neighbors(pick)) {
      if (remaining.count(u)) dag.add_edge(u, pick);
    }
    remaining.erase(pick);
  }

  for (const auto& [u, v] : p.directed_edges()) dag.add_edge(u, v);
  return dag;
}

// Meek orientation rules 1-4, applied to closure. Scans in lexicographic
// order so the result is deterministic.
inline void meek_closure(Pdag& g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& b : g.nodes()) {
      // copy: orient() mutates neighbor sets during iteration
      const std::set<std::string> undirected(g.undirected_neighbors(b));
      for (const auto& c : undirected) {
        if (!g.has_undirected(b, c)) continue;

        // R1: a -> b, b - c, a and c nonadjacent  =>  b -> c
        bool oriented = false;
        for (const auto& a : g.directed_parents(b)) {
          if (a != c && !g.adjacent(a, c)) {
            g.orient(b, c);
            oriented = true;
            break;
          }
        }
        if (oriented) {
          changed = true;
          continue;
        }

        // R2: b -> k -> c with b - c  =>  b -> c
        for (const auto& k : g.directed_children(b)) {
          if (g.has_directed(k, c)) {
            g.orient(b, c);
            oriented = true;
            break;
          }
        }
        if (oriented) {
          changed = true;
          continue;
        }

        // R3: b - p, b - q, p -> c, q -> c, p and q nonadjacent  =>  b -> c
        std::vector<std::string> into_c;
        for (const auto& p : g.directed_parents(c)) {
          if (g.has_undirected(b, p)) into_c.push_back(p);
        }
        for (std::size_t i = 0; i < into_c.size() && !oriented; ++i) {
          for (std::size_t j = i + 1; j < into_c.size(); ++j) {
            if (!g.adjacent(into_c[i], into_c[j])) {
              g.orient(b, c);
              oriented = true;
              break;
            }
          }
        }
        if (oriented) {
          changed = true;
          continue;
        }

        // R4: b - d, d -> k, k -> c, b...c undirected, c and d nonadjacent  =>  b -> c
        for (const auto& d : g.undirected_neighbors(b)) {
          if (d == c || g.adjacent(c, d)) continue;
          for (const auto& k : g.directed_children(d)) {
            if (g.has_directed(k, c)) {
              g.orient(b, c);
              oriented = true;
              break;
            }
          }
          if (oriented) break;
        }
        if (oriented) changed = true;
      }
    }
  }
}

// CPDAG of a DAG: skeleton plus v-structures, completed by the Meek rules.
inline Pdag dag_to_cpdag(const Dag& dag) {
  Pdag p(std::vector<std::string>(dag.nodes().begin(), dag.nodes().end()));

  std::set<std::pair<std::string, std::string>> vstruct_edges;
  for (const auto& c : dag.nodes()) {
    const auto& ps = dag.parents(c);
    for (auto it = ps.begin(); it != ps.end(); ++it) {
      for (auto jt = std::next(it); jt != ps.end(); ++jt) {
        if (!dag.adjacent(*it, *jt)) {
          vstruct_edges.insert({*it, c});
          vstruct_edges.insert({*jt, c});
        }
      }
    }
  }
  for (const auto& [u, v] : dag.edges()) {
    if (vstruct_edges.count({u, v})) {
      p.add_directed(u, v);
    } else {
      p.add_undirected(u, v);
    }
  }
  meek_closure(p);
  return p;
}

}  // namespace bnet

#endif  // BNET_GRAPH_HPP
