// Graphs of groups with trivial or infinite cyclic vertex groups: fundamental
// group presentations, balancedness with certificates, the homomorphism-to-Z
// criterion, central quotients, and free product decomposition.

#ifndef GGP_GOG_HPP
#define GGP_GOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ggp/sgraph.hpp"
#include "ggp/words.hpp"

namespace ggp {

enum class GroupKind { Trivial, InfiniteCyclic };

std::string group_kind_str(GroupKind k);

// Oriented multigraph with a group tag per vertex and per geometric edge and
// an inclusion index n_e per dart of every infinite cyclic edge.
class GraphOfGroups {
 public:
  class Builder {
   public:
    Builder& vertex(const std::string& name, GroupKind kind);
    Builder& cyclic_edge(const std::string& dart, const std::string& partner,
                         const std::string& from, const std::string& to,
                         const Int& n_dart, const Int& n_partner);
    Builder& trivial_edge(const std::string& dart, const std::string& partner,
                          const std::string& from, const std::string& to);
    GraphOfGroups build() const;

   private:
    OrientedMultigraph::Builder graph_;
    std::map<std::string, GroupKind> vertex_kind_;
    std::map<std::string, GroupKind> edge_kind_by_dart_;
    std::map<std::string, Int> index_by_dart_;
  };

  GraphOfGroups() = default;

  const OrientedMultigraph& graph() const { return graph_; }
  GroupKind vertex_kind(int v) const { return vertex_kind_.at(v); }
  GroupKind edge_kind(int edge) const { return edge_kind_.at(edge); }
  bool cyclic_edge(int edge) const {
    return edge_kind_.at(edge) == GroupKind::InfiniteCyclic;
  }
  const Int& index(int dart) const;  // n_e; throws on trivial edges

  // Reports every invariant violation; empty means well-formed.
  std::vector<std::string> validate() const;

 private:
  OrientedMultigraph graph_;
  std::vector<GroupKind> vertex_kind_;
  std::vector<GroupKind> edge_kind_;   // per geometric edge
  std::vector<Int> dart_index_;        // n per dart; unused for trivial edges
  friend class Builder;
};

// Balanced: nonzero rational potential per vertex with
// potential(t(e)) * n_ebar = potential(o(e)) * n_e on every cyclic dart.
// Unbalanced: a witness cycle with its two unequal index products.
struct BalanceCertificate {
  bool balanced = false;
  std::map<int, Rat> potential;  // vertex -> potential
  std::vector<int> cycle;        // darts of the violating fundamental cycle
  Int forward_product;           // prod n_{e_i}
  Int backward_product;          // prod n_{ebar_i}
};

BalanceCertificate is_balanced(const GraphOfGroups& g);

struct ComponentPresentation {
  std::vector<int> vertices;
  FpPresentation presentation;
};

// Generators z_<vertex> for cyclic vertices and t_<dart> for non-tree darts;
// relators z_{t(e)}^{n_e} z_{t(ebar)}^{-n_ebar} for tree edges and
// t_e z_{t(e)}^{n_e} t_e^-1 z_{t(ebar)}^{-n_ebar} for non-tree darts.
std::vector<ComponentPresentation> pi1_presentation(const GraphOfGroups& g);

// All components' generators and relators in one presentation (the
// abelianized relation matrix is block diagonal over components).
FpPresentation pi1_presentation_union(const GraphOfGroups& g);

std::string pi1_vertex_generator(const GraphOfGroups& g, int vertex);
std::string pi1_stable_letter(const GraphOfGroups& g, int dart);

// Witness per cyclic edge: images of the pi1 generators under some
// homomorphism to Z that is nontrivial on the edge group.
struct ZHomCriterion {
  bool pass = false;
  AlphabetRef generators;                    // column order of the witnesses
  std::map<int, std::vector<Int>> witness;   // edge -> generator images
  std::vector<int> failed_edges;
};

ZHomCriterion z_homomorphism_criterion(const GraphOfGroups& g);

// Data of Lemma-3 style central quotient: z_base^n generates a central
// subgroup N; the quotient is a graph of finite cyclic groups.
struct CentralQuotientReport {
  int base_vertex = 0;
  Int n;                              // positive
  std::map<int, Int> vertex_exponent;  // v -> nbar_v (signed, nonzero)
  std::map<int, Int> edge_order;       // geometric edge -> k_e (positive)
  std::map<int, Int> dart_multiplier;  // dart -> n_e mod |nbar_{t(e)}|
  FpPresentation quotient_presentation;
};

// Requires: valid, finite, connected, every group infinite cyclic, balanced.
CentralQuotientReport central_quotient(const GraphOfGroups& g,
                                       const std::optional<std::string>& base = {});

struct FreeProductDecomposition {
  std::vector<GraphOfGroups> factors;
  int free_rank = 0;
};

// Components of the cyclic-edge subgraph (those with a cyclic vertex) as
// factors; trivial-edge Euler count of the contracted graph as free rank.
FreeProductDecomposition free_product_decomposition(const GraphOfGroups& g);

void require_valid(const GraphOfGroups& g);  // throws PreconditionError

}  // namespace ggp

#endif
