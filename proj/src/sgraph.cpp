#include "ggp/sgraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace ggp {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> names,
                                       const char* what) {
  std::sort(names.begin(), names.end());
  for (size_t i = 0; i + 1 < names.size(); ++i)
    if (names[i] == names[i + 1])
      throw InputError(std::string("duplicate ") + what + " '" + names[i] + "'");
  return names;
}

}  // namespace

SimplicialGraph::SimplicialGraph(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(sorted_unique(std::move(vertices), "vertex")) {
  for (const auto& [a, b] : edges) {
    int u = vertex_index(a);
    int v = vertex_index(b);
    if (u == v) throw InputError("self-loop at '" + a + "' in simplicial graph");
    edges_.insert({std::min(u, v), std::max(u, v)});
  }
}

int SimplicialGraph::find_vertex(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

int SimplicialGraph::vertex_index(const std::string& name) const {
  int v = find_vertex(name);
  if (v < 0) throw InputError("unknown vertex '" + name + "'");
  return v;
}

bool SimplicialGraph::adjacent(int u, int v) const {
  if (u == v) return false;
  return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<int> SimplicialGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> SimplicialGraph::components() const {
  std::vector<int> comp(names_.size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      out[id].push_back(u);
      for (int w : neighbors(u))
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

SimplicialGraph SimplicialGraph::full_subgraph(
    const std::vector<std::string>& vertices) const {
  std::set<int> keep;
  for (const auto& name : vertices) keep.insert(vertex_index(name));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : edges_)
    if (keep.count(a) && keep.count(b)) edges.emplace_back(names_[a], names_[b]);
  std::vector<std::string> names;
  for (int v : keep) names.push_back(names_[v]);
  return SimplicialGraph(names, edges);
}

OrientedMultigraph::Builder& OrientedMultigraph::Builder::vertex(
    const std::string& name) {
  vertices_.push_back(name);
  return *this;
}

OrientedMultigraph::Builder& OrientedMultigraph::Builder::edge_pair(
    const std::string& dart, const std::string& partner, const std::string& from,
    const std::string& to) {
  if (dart == partner)
    throw InputError("dart '" + dart + "' paired with itself");
  edges_.push_back({dart, partner, from, to});
  return *this;
}

OrientedMultigraph OrientedMultigraph::Builder::build() const {
  OrientedMultigraph g;
  g.vertex_names_ = sorted_unique(vertices_, "vertex");

  // Canonical layout: pairs sorted by their smaller dart name, the smaller
  // name first within the pair.
  auto edges = edges_;
  for (auto& e : edges)
    if (e[1] < e[0]) e = {e[1], e[0], e[3], e[2]};
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });

  std::set<std::string> dart_seen;
  for (const auto& e : edges) {
    for (int k : {0, 1})
      if (!dart_seen.insert(e[k]).second)
        throw InputError("duplicate dart name '" + e[k] + "'");
    int from = g.vertex_index(e[2]);
    int to = g.vertex_index(e[3]);
    g.dart_names_.push_back(e[0]);
    g.origin_.push_back(from);
    g.terminus_.push_back(to);
    g.dart_names_.push_back(e[1]);
    g.origin_.push_back(to);
    g.terminus_.push_back(from);
  }
  g.out_.assign(g.vertex_names_.size(), {});
  for (int d = 0; d < g.dart_count(); ++d) g.out_[g.origin_[d]].push_back(d);
  return g;
}

int OrientedMultigraph::find_vertex(const std::string& name) const {
  auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end() || *it != name) return -1;
  return static_cast<int>(it - vertex_names_.begin());
}

int OrientedMultigraph::vertex_index(const std::string& name) const {
  int v = find_vertex(name);
  if (v < 0) throw InputError("unknown vertex '" + name + "'");
  return v;
}

int OrientedMultigraph::find_dart(const std::string& name) const {
  for (int d = 0; d < dart_count(); ++d)
    if (dart_names_[d] == name) return d;
  return -1;
}

int OrientedMultigraph::dart_index(const std::string& name) const {
  int d = find_dart(name);
  if (d < 0) throw InputError("unknown dart '" + name + "'");
  return d;
}

std::vector<std::vector<int>> OrientedMultigraph::components() const {
  std::vector<int> comp(vertex_names_.size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      out[id].push_back(u);
      for (int d : out_[u]) {
        int w = terminus_[d];
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

SpanningForest spanning_forest(const OrientedMultigraph& g) {
  SpanningForest f;
  f.parent_dart.assign(g.vertex_count(), -1);
  f.root.assign(g.vertex_count(), -1);
  f.depth.assign(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (f.root[s] >= 0) continue;
    f.root[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int d : g.out_darts(u)) {
        int w = g.terminus(d);
        if (f.root[w] >= 0) continue;
        f.root[w] = s;
        f.parent_dart[w] = d;
        f.depth[w] = f.depth[u] + 1;
        f.forest_edges.insert(g.edge_of(d));
        q.push(w);
      }
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!f.forest_edges.count(e)) f.non_tree_darts.push_back(g.canonical_dart(e));
  return f;
}

std::vector<int> tree_path(const OrientedMultigraph& g, const SpanningForest& f,
                           int from, int to) {
  if (f.root.at(from) != f.root.at(to))
    throw InputError("tree path between different components");
  std::vector<int> up;    // darts from 'from' toward the meeting point
  std::vector<int> down;  // darts into 'to', collected bottom-up
  int a = from, b = to;
  while (a != b) {
    if (f.depth[a] >= f.depth[b]) {
      up.push_back(g.partner(f.parent_dart[a]));
      a = g.origin(f.parent_dart[a]);
    } else {
      down.push_back(f.parent_dart[b]);
      b = g.origin(f.parent_dart[b]);
    }
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<std::vector<int>> fundamental_cycles(const OrientedMultigraph& g,
                                                 const SpanningForest& f) {
  std::vector<std::vector<int>> cycles;
  for (int e : f.non_tree_darts) {
    std::vector<int> cycle = tree_path(g, f, g.terminus(e), g.origin(e));
    cycle.push_back(e);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace ggp
