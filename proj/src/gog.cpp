#include "ggp/gog.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ggp {

std::string group_kind_str(GroupKind k) {
  return k == GroupKind::Trivial ? "trivial" : "Z";
}

GraphOfGroups::Builder& GraphOfGroups::Builder::vertex(const std::string& name,
                                                       GroupKind kind) {
  graph_.vertex(name);
  vertex_kind_[name] = kind;
  return *this;
}

GraphOfGroups::Builder& GraphOfGroups::Builder::cyclic_edge(
    const std::string& dart, const std::string& partner, const std::string& from,
    const std::string& to, const Int& n_dart, const Int& n_partner) {
  graph_.edge_pair(dart, partner, from, to);
  edge_kind_by_dart_[dart] = GroupKind::InfiniteCyclic;
  edge_kind_by_dart_[partner] = GroupKind::InfiniteCyclic;
  index_by_dart_[dart] = n_dart;
  index_by_dart_[partner] = n_partner;
  return *this;
}

GraphOfGroups::Builder& GraphOfGroups::Builder::trivial_edge(
    const std::string& dart, const std::string& partner, const std::string& from,
    const std::string& to) {
  graph_.edge_pair(dart, partner, from, to);
  edge_kind_by_dart_[dart] = GroupKind::Trivial;
  edge_kind_by_dart_[partner] = GroupKind::Trivial;
  return *this;
}

GraphOfGroups GraphOfGroups::Builder::build() const {
  GraphOfGroups g;
  g.graph_ = graph_.build();
  g.vertex_kind_.resize(g.graph_.vertex_count());
  for (int v = 0; v < g.graph_.vertex_count(); ++v)
    g.vertex_kind_[v] = vertex_kind_.at(g.graph_.vertex_name(v));
  g.edge_kind_.resize(g.graph_.edge_count());
  g.dart_index_.resize(g.graph_.dart_count());
  for (int e = 0; e < g.graph_.edge_count(); ++e) {
    int d = g.graph_.canonical_dart(e);
    g.edge_kind_[e] = edge_kind_by_dart_.at(g.graph_.dart_name(d));
    if (g.edge_kind_[e] == GroupKind::InfiniteCyclic) {
      g.dart_index_[d] = index_by_dart_.at(g.graph_.dart_name(d));
      g.dart_index_[d + 1] = index_by_dart_.at(g.graph_.dart_name(d + 1));
    }
  }
  return g;
}

const Int& GraphOfGroups::index(int dart) const {
  if (edge_kind_.at(graph_.edge_of(dart)) != GroupKind::InfiniteCyclic)
    throw InputError("dart '" + graph_.dart_name(dart) + "' has a trivial edge group");
  return dart_index_.at(dart);
}

std::vector<std::string> GraphOfGroups::validate() const {
  std::vector<std::string> out;
  for (int e = 0; e < graph_.edge_count(); ++e) {
    if (edge_kind_[e] != GroupKind::InfiniteCyclic) continue;
    int d = graph_.canonical_dart(e);
    for (int k : {d, d + 1}) {
      if (vertex_kind_[graph_.terminus(k)] != GroupKind::InfiniteCyclic)
        out.push_back("cyclic edge dart '" + graph_.dart_name(k) +
                      "' ends at trivial vertex '" +
                      graph_.vertex_name(graph_.terminus(k)) + "'");
      if (dart_index_[k] == 0)
        out.push_back("dart '" + graph_.dart_name(k) + "' has index 0");
    }
  }
  return out;
}

void require_valid(const GraphOfGroups& g) {
  auto violations = g.validate();
  if (violations.empty()) return;
  std::string msg = "invalid graph of groups:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw PreconditionError(msg);
}

BalanceCertificate is_balanced(const GraphOfGroups& g) {
  require_valid(g);
  const OrientedMultigraph& gr = g.graph();

  // Spanning forest of the cyclic-edge subgraph, tracked by hand so the
  // witness cycle can be read off the parent darts.
  int nv = gr.vertex_count();
  std::vector<int> parent_dart(nv, -1), root(nv, -1), depth(nv, 0);
  std::vector<int> order;
  for (int s = 0; s < nv; ++s) {
    if (root[s] >= 0) continue;
    root[s] = s;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      order.push_back(u);
      for (int d : gr.out_darts(u)) {
        if (!g.cyclic_edge(gr.edge_of(d))) continue;
        int w = gr.terminus(d);
        if (root[w] >= 0) continue;
        root[w] = s;
        parent_dart[w] = d;
        depth[w] = depth[u] + 1;
        queue.push_back(w);
      }
    }
  }

  BalanceCertificate cert;
  std::map<int, Rat> potential;
  for (int v : order) {
    if (parent_dart[v] < 0) {
      potential[v] = 1;
    } else {
      int d = parent_dart[v];
      // transport: potential(t(d)) = potential(o(d)) * n_d / n_dbar
      potential[v] = potential[gr.origin(d)] * Rat(g.index(d)) /
                     Rat(g.index(gr.partner(d)));
    }
  }

  auto cycle_of = [&](int e) {
    // tree path t(e) -> o(e) inside the cyclic-edge forest, then e
    std::vector<int> up, down;
    int a = gr.terminus(e), b = gr.origin(e);
    while (a != b) {
      if (depth[a] >= depth[b]) {
        up.push_back(gr.partner(parent_dart[a]));
        a = gr.origin(parent_dart[a]);
      } else {
        down.push_back(parent_dart[b]);
        b = gr.origin(parent_dart[b]);
      }
    }
    up.insert(up.end(), down.rbegin(), down.rend());
    up.push_back(e);
    return up;
  };

  for (int e = 0; e < gr.edge_count(); ++e) {
    if (!g.cyclic_edge(e)) continue;
    int d = gr.canonical_dart(e);
    if (parent_dart[gr.terminus(d)] == d || parent_dart[gr.terminus(d + 1)] == d + 1)
      continue;  // tree edge
    if (potential[gr.origin(d)] * Rat(g.index(d)) ==
        potential[gr.terminus(d)] * Rat(g.index(gr.partner(d))))
      continue;
    cert.balanced = false;
    cert.cycle = cycle_of(d);
    cert.forward_product = 1;
    cert.backward_product = 1;
    for (int c : cert.cycle) {
      cert.forward_product *= g.index(c);
      cert.backward_product *= g.index(gr.partner(c));
    }
    return cert;
  }
  cert.balanced = true;
  cert.potential = std::move(potential);
  return cert;
}

std::string pi1_vertex_generator(const GraphOfGroups& g, int vertex) {
  return "z_" + g.graph().vertex_name(vertex);
}

std::string pi1_stable_letter(const GraphOfGroups& g, int dart) {
  return "t_" + g.graph().dart_name(dart);
}

namespace {

// Shared by the per-component and union presentation builders.
struct Pi1Parts {
  std::vector<int> vertices;
  std::vector<std::string> generators;
  std::vector<std::vector<std::pair<std::string, Int>>> relators;
};

std::vector<Pi1Parts> pi1_parts(const GraphOfGroups& g) {
  const OrientedMultigraph& gr = g.graph();
  SpanningForest forest = spanning_forest(gr);
  auto comps = gr.components();
  std::vector<int> comp_of(gr.vertex_count());
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);

  std::vector<Pi1Parts> parts(comps.size());
  for (size_t c = 0; c < comps.size(); ++c) {
    parts[c].vertices = comps[c];
    for (int v : comps[c])
      if (g.vertex_kind(v) == GroupKind::InfiniteCyclic)
        parts[c].generators.push_back(pi1_vertex_generator(g, v));
  }
  for (int d : forest.non_tree_darts)
    parts[comp_of[gr.origin(d)]].generators.push_back(pi1_stable_letter(g, d));

  for (int e = 0; e < gr.edge_count(); ++e) {
    if (!g.cyclic_edge(e)) continue;
    int d = gr.canonical_dart(e);
    auto& part = parts[comp_of[gr.origin(d)]];
    std::string zt = pi1_vertex_generator(g, gr.terminus(d));
    std::string zo = pi1_vertex_generator(g, gr.terminus(gr.partner(d)));
    if (forest.forest_edges.count(e)) {
      part.relators.push_back({{zt, g.index(d)}, {zo, -g.index(gr.partner(d))}});
    } else {
      std::string t = pi1_stable_letter(g, d);
      part.relators.push_back(
          {{t, 1}, {zt, g.index(d)}, {t, -1}, {zo, -g.index(gr.partner(d))}});
    }
  }
  return parts;
}

FpPresentation parts_to_presentation(const std::vector<Pi1Parts>& parts) {
  std::vector<std::string> gens;
  for (const auto& p : parts)
    gens.insert(gens.end(), p.generators.begin(), p.generators.end());
  AlphabetRef alphabet = make_alphabet(gens);
  std::vector<FreeWord> relators;
  for (const auto& p : parts)
    for (const auto& r : p.relators)
      relators.push_back(FreeWord::reduce(alphabet, r));
  return make_presentation(alphabet, std::move(relators));
}

}  // namespace

std::vector<ComponentPresentation> pi1_presentation(const GraphOfGroups& g) {
  require_valid(g);
  std::vector<ComponentPresentation> out;
  for (auto& part : pi1_parts(g)) {
    ComponentPresentation cp;
    cp.vertices = part.vertices;
    cp.presentation = parts_to_presentation({part});
    out.push_back(std::move(cp));
  }
  return out;
}

FpPresentation pi1_presentation_union(const GraphOfGroups& g) {
  require_valid(g);
  return parts_to_presentation(pi1_parts(g));
}

ZHomCriterion z_homomorphism_criterion(const GraphOfGroups& g) {
  FpPresentation p = pi1_presentation_union(g);
  auto kernel = integer_kernel_basis(abelianized_relation_matrix(p));

  ZHomCriterion out;
  out.generators = p.alphabet;
  const OrientedMultigraph& gr = g.graph();
  for (int e = 0; e < gr.edge_count(); ++e) {
    if (!g.cyclic_edge(e)) continue;
    // f_e(z_e) = n_e * f_e(z_{t(e)}), so nontriviality on the edge group is a
    // nonzero image of the terminal vertex generator.
    int col = p.alphabet->index(
        pi1_vertex_generator(g, gr.terminus(gr.canonical_dart(e))));
    bool found = false;
    for (const auto& vec : kernel) {
      if (vec[col] == 0) continue;
      out.witness[e] = vec;
      found = true;
      break;
    }
    if (!found) out.failed_edges.push_back(e);
  }
  out.pass = out.failed_edges.empty();
  return out;
}

CentralQuotientReport central_quotient(const GraphOfGroups& g,
                                       const std::optional<std::string>& base) {
  require_valid(g);
  const OrientedMultigraph& gr = g.graph();
  if (gr.vertex_count() == 0)
    throw PreconditionError("central quotient of an empty graph");
  if (gr.components().size() != 1)
    throw PreconditionError("central quotient requires a connected graph");
  for (int v = 0; v < gr.vertex_count(); ++v)
    if (g.vertex_kind(v) != GroupKind::InfiniteCyclic)
      throw PreconditionError("central quotient requires all vertex groups infinite cyclic");
  for (int e = 0; e < gr.edge_count(); ++e)
    if (!g.cyclic_edge(e))
      throw PreconditionError("central quotient requires all edge groups infinite cyclic");
  if (!is_balanced(g).balanced)
    throw PreconditionError("central quotient requires a balanced graph of groups");

  CentralQuotientReport rep;
  rep.base_vertex = base ? gr.vertex_index(*base) : 0;

  rep.n = 1;
  for (int d = 0; d < gr.dart_count(); ++d) rep.n *= g.index(d);
  rep.n = int_abs(rep.n);

  // nbar along tree paths from the base: z_u^nbar passes through the edge
  // group of d, so n_dbar must divide nbar exactly at every step.
  SpanningForest forest = spanning_forest(gr);
  rep.vertex_exponent[rep.base_vertex] = rep.n;
  std::vector<int> queue{rep.base_vertex};
  std::vector<bool> seen(gr.vertex_count(), false);
  seen[rep.base_vertex] = true;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int d : gr.out_darts(u)) {
      if (!forest.forest_edges.count(gr.edge_of(d))) continue;
      int w = gr.terminus(d);
      if (seen[w]) continue;
      const Int& nbar_u = rep.vertex_exponent.at(u);
      const Int& down = g.index(gr.partner(d));
      if (nbar_u % down != 0)
        throw std::logic_error("central quotient: intermediate ratio not integral");
      rep.vertex_exponent[w] = (nbar_u / down) * g.index(d);
      seen[w] = true;
      queue.push_back(w);
    }
  }

  // Every dart must satisfy n_e * nbar_{t(ebar)} = n_ebar * nbar_{t(e)}; for
  // non-tree darts this is the balancedness identity of the closed path
  // through the base.
  for (int d = 0; d < gr.dart_count(); ++d) {
    if (g.index(d) * rep.vertex_exponent.at(gr.terminus(gr.partner(d))) !=
        g.index(gr.partner(d)) * rep.vertex_exponent.at(gr.terminus(d)))
      throw std::logic_error("central quotient: path identity violated");
  }

  for (int e = 0; e < gr.edge_count(); ++e) {
    int d = gr.canonical_dart(e);
    Int nbar_t = int_abs(rep.vertex_exponent.at(gr.terminus(d)));
    Int ne = int_abs(g.index(d));
    if (nbar_t % ne != 0)
      throw std::logic_error("central quotient: edge order not integral");
    rep.edge_order[e] = nbar_t / ne;
  }
  for (int d = 0; d < gr.dart_count(); ++d)
    rep.dart_multiplier[d] =
        mod_floor(g.index(d), int_abs(rep.vertex_exponent.at(gr.terminus(d))));

  // Quotient presentation: vertex power relators, then the pi1 relators.
  FpPresentation pi1 = pi1_presentation_union(g);
  std::vector<FreeWord> relators;
  for (int v = 0; v < gr.vertex_count(); ++v) {
    std::vector<std::pair<std::string, Int>> letters{
        {pi1_vertex_generator(g, v), int_abs(rep.vertex_exponent.at(v))}};
    relators.push_back(FreeWord::reduce(pi1.alphabet, letters));
  }
  relators.insert(relators.end(), pi1.relators.begin(), pi1.relators.end());
  rep.quotient_presentation = make_presentation(pi1.alphabet, std::move(relators));
  return rep;
}

FreeProductDecomposition free_product_decomposition(const GraphOfGroups& g) {
  require_valid(g);
  const OrientedMultigraph& gr = g.graph();

  // Components of the subgraph of cyclic edges (all vertices kept).
  std::vector<int> comp(gr.vertex_count());
  for (int v = 0; v < gr.vertex_count(); ++v) comp[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  int trivial_edges = 0;
  for (int e = 0; e < gr.edge_count(); ++e) {
    int d = gr.canonical_dart(e);
    if (g.cyclic_edge(e))
      comp[find(gr.origin(d))] = find(gr.terminus(d));
    else
      ++trivial_edges;
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < gr.vertex_count(); ++v) groups[find(v)].push_back(v);

  FreeProductDecomposition out;
  int subgraph_components = static_cast<int>(groups.size());
  // groups iterate by union-find root; re-key by lowest member vertex so the
  // factor order is independent of the union history.
  std::map<int, std::vector<int>> by_lowest;
  for (auto& [root, verts] : groups) by_lowest[verts.front()] = verts;
  for (auto& [lowest, verts] : by_lowest) {
    int root = find(lowest);
    bool has_cyclic_vertex = false;
    int internal_edges = 0;
    for (int v : verts)
      if (g.vertex_kind(v) == GroupKind::InfiniteCyclic) has_cyclic_vertex = true;
    for (int e = 0; e < gr.edge_count(); ++e)
      if (g.cyclic_edge(e) && find(gr.origin(gr.canonical_dart(e))) == root)
        ++internal_edges;
    bool has_cycle = internal_edges >= static_cast<int>(verts.size());
    if (!has_cyclic_vertex && !has_cycle) continue;  // lone trivial vertex

    GraphOfGroups::Builder b;
    for (int v : verts) b.vertex(gr.vertex_name(v), g.vertex_kind(v));
    for (int e = 0; e < gr.edge_count(); ++e) {
      if (!g.cyclic_edge(e)) continue;
      int d = gr.canonical_dart(e);
      if (find(gr.origin(d)) != root) continue;
      b.cyclic_edge(gr.dart_name(d), gr.dart_name(d + 1),
                    gr.vertex_name(gr.origin(d)), gr.vertex_name(gr.terminus(d)),
                    g.index(d), g.index(d + 1));
    }
    out.factors.push_back(b.build());
  }

  // Euler count of the contracted graph: trivial edges become its edges,
  // cyclic-edge components its vertices.
  int full_components = static_cast<int>(gr.components().size());
  out.free_rank = trivial_edges - subgraph_components + full_components;
  return out;
}

}  // namespace ggp
