// Graph combinatorics: simplicial graphs for graph products, oriented-edge
// multigraphs with involution for graphs of groups, spanning forests and
// fundamental cycles.  Vertices are sorted by name at construction and dart
// pairs by canonical dart name, so every traversal is reproducible.

#ifndef GGP_SGRAPH_HPP
#define GGP_SGRAPH_HPP

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ggp/numeric.hpp"

namespace ggp {

// Undirected graph without loops or repeated edges.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  SimplicialGraph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& vertex_name(int v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  int find_vertex(const std::string& name) const;  // -1 if absent
  int vertex_index(const std::string& name) const;  // throws InputError

  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  std::vector<int> neighbors(int v) const;

  std::vector<std::vector<int>> components() const;
  SimplicialGraph full_subgraph(const std::vector<std::string>& vertices) const;

  bool operator==(const SimplicialGraph& other) const = default;

 private:
  std::vector<std::string> names_;            // sorted
  std::set<std::pair<int, int>> edges_;       // (u, v) with u < v
};

// Oriented multigraph: darts come in involution pairs e, ebar with
// o(ebar) = t(e).  Geometric edge k owns darts 2k and 2k+1; dart 2k carries
// the lexicographically smaller name and is the canonical orientation.
class OrientedMultigraph {
 public:
  class Builder {
   public:
    Builder& vertex(const std::string& name);
    Builder& edge_pair(const std::string& dart, const std::string& partner,
                       const std::string& from, const std::string& to);
    OrientedMultigraph build() const;

   private:
    std::vector<std::string> vertices_;
    // (dart, partner, from, to)
    std::vector<std::array<std::string, 4>> edges_;
    friend class OrientedMultigraph;
  };

  OrientedMultigraph() = default;

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
  int find_vertex(const std::string& name) const;
  int vertex_index(const std::string& name) const;  // throws InputError

  int dart_count() const { return static_cast<int>(dart_names_.size()); }
  const std::string& dart_name(int d) const { return dart_names_.at(d); }
  int find_dart(const std::string& name) const;
  int dart_index(const std::string& name) const;  // throws InputError
  int origin(int d) const { return origin_.at(d); }
  int terminus(int d) const { return terminus_.at(d); }
  int partner(int d) const { return d ^ 1; }

  int edge_count() const { return dart_count() / 2; }
  int edge_of(int d) const { return d / 2; }
  int canonical_dart(int edge) const { return 2 * edge; }

  // Darts leaving v, in dart-index order.
  const std::vector<int>& out_darts(int v) const { return out_.at(v); }

  std::vector<std::vector<int>> components() const;

  bool operator==(const OrientedMultigraph& other) const = default;

 private:
  std::vector<std::string> vertex_names_;  // sorted
  std::vector<std::string> dart_names_;
  std::vector<int> origin_;
  std::vector<int> terminus_;
  std::vector<std::vector<int>> out_;
};

struct SpanningForest {
  std::set<int> forest_edges;        // geometric edge ids
  std::vector<int> non_tree_darts;   // set L: canonical dart per non-tree edge
  std::vector<int> parent_dart;      // per vertex: tree dart arriving from the
                                     // parent (-1 at roots)
  std::vector<int> root;             // per vertex: root of its component
  std::vector<int> depth;
};

// Deterministic lowest-id greedy BFS; one tree per component.
SpanningForest spanning_forest(const OrientedMultigraph& g);

// Unique dart path inside the forest (throws if the vertices are in
// different components).
std::vector<int> tree_path(const OrientedMultigraph& g, const SpanningForest& f,
                           int from, int to);

// One closed loop per non-tree dart e: tree path t(e) -> o(e), then e.
std::vector<std::vector<int>> fundamental_cycles(const OrientedMultigraph& g,
                                                 const SpanningForest& f);

}  // namespace ggp

#endif
