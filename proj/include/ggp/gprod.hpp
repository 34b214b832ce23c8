// Graph products of cyclic groups: presentations, canonical normal forms,
// the kill-vertex surjection with canonical coset representatives and kernel
// factorization, and the permutation-semidirect groups G_S.

#ifndef GGP_GPROD_HPP
#define GGP_GPROD_HPP

#include <map>
#include <string>
#include <vector>

#include "ggp/sgraph.hpp"
#include "ggp/words.hpp"

namespace ggp {

// order == 0 means infinite cyclic; otherwise a finite cyclic group of that
// order (>= 2).
struct VertexGroupSpec {
  Int order;
  bool finite() const { return order != 0; }
};

struct Syllable {
  int vertex = 0;
  Int value;
  bool operator==(const Syllable& other) const = default;
  auto operator<=>(const Syllable& other) const = default;
};

// Canonical normal form of a graph-product element: reduced syllable sequence,
// lexicographically least by vertex id among its shuffle class.
struct GPWord {
  std::vector<Syllable> syllables;
  bool empty() const { return syllables.empty(); }
  bool operator==(const GPWord& other) const = default;
  auto operator<=>(const GPWord& other) const = default;
};

class GraphProduct {
 public:
  GraphProduct() = default;
  GraphProduct(SimplicialGraph graph, const std::map<std::string, VertexGroupSpec>& specs);

  const SimplicialGraph& graph() const { return graph_; }
  const VertexGroupSpec& spec(int v) const { return specs_.at(v); }

  FpPresentation presentation() const;

  GPWord normal_form(const std::vector<Syllable>& raw) const;
  GPWord multiply(const GPWord& a, const GPWord& b) const;
  GPWord inverse(const GPWord& w) const;
  GPWord power(const GPWord& w, const Int& k) const;

  GPWord parse_word(const std::string& text) const;  // "u^3 v^-1 w"
  std::string word_str(const GPWord& w) const;       // identity prints as "1"

  // Reduces a value in the vertex group: mod order for finite vertices.
  Int reduce_value(int vertex, const Int& value) const;

  bool operator==(const GraphProduct& other) const = default;

 private:
  void push_syllable(std::vector<Syllable>& word, Syllable s) const;
  std::vector<Syllable> canonical_order(std::vector<Syllable> word) const;

  SimplicialGraph graph_;
  std::vector<VertexGroupSpec> specs_;
};

// Rewrites a word of `from` as a word of `to` by vertex name; throws
// InputError if a vertex is missing in `to`.
GPWord map_word(const GraphProduct& from, const GraphProduct& to, const GPWord& w);

struct KernelEntry {
  GPWord rep;  // canonical coset representative, a word of Gamma'
  Int value;   // nonzero element of the killed vertex group
  bool operator==(const KernelEntry& other) const = default;
};

struct CosetActionTable {
  std::vector<GPWord> reps;          // discovery order; reps[0] = identity
  std::vector<int> image;            // rep index of c * rep, -1 if outside
  std::vector<GPWord> frontier;      // image words for the -1 entries
  bool complete = false;             // false when the bound cut off discovery
};

// The canonical surjection killing one vertex generator, with the retraction
// onto the full neighbor subgraph Gamma''.
class KillVertexContext {
 public:
  KillVertexContext(const GraphProduct& gp, const std::string& vertex);

  const GraphProduct& original() const { return original_; }
  const GraphProduct& reduced() const { return reduced_; }   // Gamma'
  const GraphProduct& neighbors() const { return neighbors_; }  // Gamma''
  const std::string& vertex() const { return vertex_name_; }
  int vertex_id() const { return vertex_; }

  GPWord project(const GPWord& w) const;     // pi: kill v, renormalize in Gamma'
  GPWord retract(const GPWord& h) const;     // rho: kill everything outside Gamma''
  GPWord coset_rep(const GPWord& h) const;   // h * rho(h)^-1

  // Requires pi(w) = identity; the returned sequence is the free product
  // normal form of w over the coset-indexed copies of G_v.
  std::vector<KernelEntry> kernel_factorization(const GPWord& w) const;

  GPWord reassemble(const std::vector<KernelEntry>& entries) const;

  CosetActionTable coset_action(const GPWord& c, int bound) const;

 private:
  GraphProduct original_;
  GraphProduct reduced_;
  GraphProduct neighbors_;
  std::string vertex_name_;
  int vertex_ = -1;
  std::vector<bool> in_neighbors_;  // per reduced() vertex id
};

// ---- G_S = (free product of copies of G over a Z-set S) x| Z ----

struct GSOrbit {
  Int size;  // 0 = infinite orbit Z, m >= 1 = finite orbit Z/m
  bool finite() const { return size != 0; }
};

struct GSSyllable {
  int orbit = 0;
  Int position;
  Int value;
  bool operator==(const GSSyllable& other) const = default;
};

struct GSElement {
  std::vector<GSSyllable> word;  // alternating distinct (orbit, position)
  Int shift;
  bool operator==(const GSElement& other) const = default;
};

class GSGroup {
 public:
  GSGroup(Int generator_order, std::vector<GSOrbit> orbits);

  const Int& generator_order() const { return generator_order_; }
  int orbit_count() const { return static_cast<int>(orbits_.size()); }
  const GSOrbit& orbit(int i) const;

  GSElement identity() const { return GSElement{}; }
  GSElement shift(const Int& k) const;  // t^k
  GSElement generator(int orbit, const Int& position, const Int& value = 1) const;
  GSElement make(std::vector<GSSyllable> word, const Int& shift) const;

  GSElement multiply(const GSElement& a, const GSElement& b) const;
  GSElement inverse(const GSElement& a) const;

 private:
  Int reduce_position(int orbit, const Int& position) const;
  Int reduce_value(const Int& value) const;
  std::vector<GSSyllable> reduce_word(std::vector<GSSyllable> word) const;

  Int generator_order_;  // 0 = Z
  std::vector<GSOrbit> orbits_;
};

}  // namespace ggp

#endif
