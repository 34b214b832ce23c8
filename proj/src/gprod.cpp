#include "ggp/gprod.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ggp {

GraphProduct::GraphProduct(SimplicialGraph graph,
                           const std::map<std::string, VertexGroupSpec>& specs)
    : graph_(std::move(graph)) {
  specs_.resize(graph_.vertex_count());
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    auto it = specs.find(graph_.vertex_name(v));
    if (it == specs.end())
      throw InputError("missing group spec for vertex '" + graph_.vertex_name(v) + "'");
    if (it->second.order != 0 && it->second.order < 2)
      throw InputError("finite cyclic order must be >= 2 at vertex '" +
                       graph_.vertex_name(v) + "'");
    specs_[v] = it->second;
  }
  for (const auto& [name, spec] : specs)
    if (graph_.find_vertex(name) < 0)
      throw InputError("group spec for unknown vertex '" + name + "'");
}

Int GraphProduct::reduce_value(int vertex, const Int& value) const {
  const VertexGroupSpec& s = specs_.at(vertex);
  return s.finite() ? mod_floor(value, s.order) : value;
}

FpPresentation GraphProduct::presentation() const {
  std::vector<std::string> gens = graph_.vertex_names();
  AlphabetRef alphabet = make_alphabet(gens);
  std::vector<FreeWord> relators;
  for (int v = 0; v < graph_.vertex_count(); ++v)
    if (specs_[v].finite())
      relators.push_back(FreeWord::reduce(alphabet, std::vector<Letter>{{v, specs_[v].order}}));
  for (const auto& [u, v] : graph_.edges())
    relators.push_back(FreeWord::reduce(
        alphabet, std::vector<Letter>{{u, 1}, {v, 1}, {u, -1}, {v, -1}}));
  return make_presentation(alphabet, std::move(relators));
}

// Append one syllable to a reduced word: merge with the nearest same-vertex
// syllable visible through commuting ones, otherwise place it at the end.
void GraphProduct::push_syllable(std::vector<Syllable>& word, Syllable s) const {
  s.value = reduce_value(s.vertex, s.value);
  if (s.value == 0) return;
  for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i) {
    if (word[i].vertex == s.vertex) {
      Int merged = reduce_value(s.vertex, word[i].value + s.value);
      if (merged == 0)
        word.erase(word.begin() + i);
      else
        word[i].value = merged;
      return;
    }
    if (!graph_.adjacent(word[i].vertex, s.vertex)) break;
  }
  word.push_back(s);
}

// Greedy lexicographically-least linearization of the dependence order:
// repeatedly take the least-vertex syllable among those whose earlier
// neighbors all commute with it.
std::vector<Syllable> GraphProduct::canonical_order(std::vector<Syllable> word) const {
  std::vector<Syllable> out;
  out.reserve(word.size());
  std::vector<bool> used(word.size(), false);
  for (size_t step = 0; step < word.size(); ++step) {
    int best = -1;
    for (size_t i = 0; i < word.size(); ++i) {
      if (used[i]) continue;
      bool movable = true;
      for (size_t j = 0; j < i && movable; ++j)
        if (!used[j] && !graph_.adjacent(word[j].vertex, word[i].vertex))
          movable = false;
      if (movable && (best < 0 || word[i].vertex < word[best].vertex))
        best = static_cast<int>(i);
    }
    out.push_back(word[best]);
    used[best] = true;
  }
  return out;
}

GPWord GraphProduct::normal_form(const std::vector<Syllable>& raw) const {
  std::vector<Syllable> word;
  for (const Syllable& s : raw) {
    if (s.vertex < 0 || s.vertex >= graph_.vertex_count())
      throw InputError("syllable vertex out of range");
    push_syllable(word, s);
  }
  return GPWord{canonical_order(std::move(word))};
}

GPWord GraphProduct::multiply(const GPWord& a, const GPWord& b) const {
  std::vector<Syllable> raw = a.syllables;
  raw.insert(raw.end(), b.syllables.begin(), b.syllables.end());
  return normal_form(raw);
}

GPWord GraphProduct::inverse(const GPWord& w) const {
  std::vector<Syllable> raw;
  raw.reserve(w.syllables.size());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    raw.push_back({it->vertex, -it->value});
  return normal_form(raw);
}

GPWord GraphProduct::power(const GPWord& w, const Int& k) const {
  GPWord base = k >= 0 ? w : inverse(w);
  GPWord acc;
  for (Int i = 0; i < int_abs(k); ++i) acc = multiply(acc, base);
  return acc;
}

GPWord GraphProduct::parse_word(const std::string& text) const {
  std::vector<Syllable> raw;
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    std::string name = token;
    Int exp = 1;
    auto caret = token.find('^');
    if (caret != std::string::npos) {
      name = token.substr(0, caret);
      exp = parse_int(token.substr(caret + 1));
    }
    if (name == "1" && graph_.find_vertex("1") < 0) {
      if (caret != std::string::npos) throw InputError("cannot raise identity '1'");
      continue;
    }
    raw.push_back({graph_.vertex_index(name), exp});
  }
  return normal_form(raw);
}

std::string GraphProduct::word_str(const GPWord& w) const {
  if (w.syllables.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : w.syllables) {
    if (!first) os << ' ';
    first = false;
    os << graph_.vertex_name(s.vertex);
    if (s.value != 1) os << '^' << s.value;
  }
  return os.str();
}

GPWord map_word(const GraphProduct& from, const GraphProduct& to, const GPWord& w) {
  std::vector<Syllable> raw;
  raw.reserve(w.syllables.size());
  for (const Syllable& s : w.syllables)
    raw.push_back({to.graph().vertex_index(from.graph().vertex_name(s.vertex)),
                   s.value});
  return to.normal_form(raw);
}

namespace {

std::map<std::string, VertexGroupSpec> specs_of(const GraphProduct& gp,
                                                const SimplicialGraph& sub) {
  std::map<std::string, VertexGroupSpec> out;
  for (int v = 0; v < sub.vertex_count(); ++v)
    out[sub.vertex_name(v)] = gp.spec(gp.graph().vertex_index(sub.vertex_name(v)));
  return out;
}

}  // namespace

KillVertexContext::KillVertexContext(const GraphProduct& gp, const std::string& vertex)
    : original_(gp), vertex_name_(vertex) {
  vertex_ = gp.graph().vertex_index(vertex);

  std::vector<std::string> rest;
  for (int v = 0; v < gp.graph().vertex_count(); ++v)
    if (v != vertex_) rest.push_back(gp.graph().vertex_name(v));
  SimplicialGraph gamma1 = gp.graph().full_subgraph(rest);
  reduced_ = GraphProduct(gamma1, specs_of(gp, gamma1));

  std::vector<std::string> nbr_names;
  for (int v : gp.graph().neighbors(vertex_))
    nbr_names.push_back(gp.graph().vertex_name(v));
  SimplicialGraph gamma2 = gamma1.full_subgraph(nbr_names);
  neighbors_ = GraphProduct(gamma2, specs_of(gp, gamma2));

  in_neighbors_.assign(reduced_.graph().vertex_count(), false);
  for (const auto& name : nbr_names)
    in_neighbors_[reduced_.graph().vertex_index(name)] = true;
}

GPWord KillVertexContext::project(const GPWord& w) const {
  std::vector<Syllable> raw;
  for (const Syllable& s : w.syllables) {
    if (s.vertex == vertex_) continue;
    raw.push_back({reduced_.graph().vertex_index(original_.graph().vertex_name(s.vertex)),
                   s.value});
  }
  return reduced_.normal_form(raw);
}

GPWord KillVertexContext::retract(const GPWord& h) const {
  std::vector<Syllable> raw;
  for (const Syllable& s : h.syllables)
    if (in_neighbors_.at(s.vertex)) raw.push_back(s);
  return reduced_.normal_form(raw);
}

GPWord KillVertexContext::coset_rep(const GPWord& h) const {
  return reduced_.multiply(h, reduced_.inverse(retract(h)));
}

std::vector<KernelEntry> KillVertexContext::kernel_factorization(const GPWord& w) const {
  GPWord image = project(w);
  if (!image.empty())
    throw PreconditionError("word is not in the kernel: pi(w) = " +
                            reduced_.word_str(image));

  std::vector<KernelEntry> entries;
  GPWord prefix;  // product of the non-v syllables seen so far, in Gamma'
  for (const Syllable& s : w.syllables) {
    if (s.vertex != vertex_) {
      Syllable mapped{
          reduced_.graph().vertex_index(original_.graph().vertex_name(s.vertex)),
          s.value};
      prefix = reduced_.multiply(prefix, GPWord{{mapped}});
      continue;
    }
    // Free-product reduction over the coset-indexed copies of G_v.
    GPWord rep = coset_rep(prefix);
    Int value = s.value;
    if (!entries.empty() && entries.back().rep == rep) {
      Int merged = original_.reduce_value(vertex_, entries.back().value + value);
      if (merged == 0)
        entries.pop_back();
      else
        entries.back().value = merged;
    } else {
      entries.push_back({std::move(rep), value});
    }
  }
  return entries;
}

GPWord KillVertexContext::reassemble(const std::vector<KernelEntry>& entries) const {
  GPWord acc;
  for (const KernelEntry& e : entries) {
    GPWord rep = map_word(reduced_, original_, e.rep);
    GPWord conj = original_.multiply(
        original_.multiply(rep, GPWord{{Syllable{vertex_, e.value}}}),
        original_.inverse(rep));
    acc = original_.multiply(acc, conj);
  }
  return acc;
}

CosetActionTable KillVertexContext::coset_action(const GPWord& c, int bound) const {
  CosetActionTable table;
  std::map<GPWord, int> index;
  auto discover = [&](const GPWord& rep) {
    auto it = index.find(rep);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(table.reps.size());
    table.reps.push_back(rep);
    index.emplace(rep, id);
    return id;
  };

  discover(coset_rep(GPWord{}));
  table.complete = true;
  // Breadth-first by discovery order; generators by vertex id, then inverse.
  for (size_t qi = 0; qi < table.reps.size(); ++qi) {
    for (int v = 0; v < reduced_.graph().vertex_count() && table.complete; ++v) {
      for (int sgn : {1, -1}) {
        GPWord moved = reduced_.multiply(GPWord{{Syllable{v, sgn}}}, table.reps[qi]);
        GPWord rep = coset_rep(moved);
        if (index.count(rep)) continue;
        if (static_cast<int>(table.reps.size()) >= bound) {
          table.complete = false;
          break;
        }
        discover(rep);
      }
    }
    if (!table.complete) break;
  }

  for (const GPWord& rep : table.reps) {
    GPWord image = coset_rep(reduced_.multiply(c, rep));
    auto it = index.find(image);
    if (it != index.end()) {
      table.image.push_back(it->second);
    } else {
      table.image.push_back(-1);
      table.frontier.push_back(image);
    }
  }
  return table;
}

GSGroup::GSGroup(Int generator_order, std::vector<GSOrbit> orbits)
    : generator_order_(std::move(generator_order)), orbits_(std::move(orbits)) {
  if (generator_order_ != 0 && generator_order_ < 2)
    throw InputError("GS generator order must be 0 (infinite) or >= 2");
  for (const auto& o : orbits_)
    if (o.size < 0) throw InputError("negative orbit size");
}

const GSOrbit& GSGroup::orbit(int i) const {
  if (i < 0 || i >= orbit_count()) throw InputError("invalid orbit index");
  return orbits_[i];
}

Int GSGroup::reduce_position(int orbit_id, const Int& position) const {
  const GSOrbit& o = orbit(orbit_id);
  return o.finite() ? mod_floor(position, o.size) : position;
}

Int GSGroup::reduce_value(const Int& value) const {
  return generator_order_ == 0 ? value : mod_floor(value, generator_order_);
}

std::vector<GSSyllable> GSGroup::reduce_word(std::vector<GSSyllable> word) const {
  std::vector<GSSyllable> out;
  for (GSSyllable s : word) {
    s.position = reduce_position(s.orbit, s.position);
    s.value = reduce_value(s.value);
    if (s.value == 0) continue;
    if (!out.empty() && out.back().orbit == s.orbit &&
        out.back().position == s.position) {
      Int merged = reduce_value(out.back().value + s.value);
      if (merged == 0)
        out.pop_back();
      else
        out.back().value = merged;
    } else {
      out.push_back(s);
    }
  }
  return out;
}

GSElement GSGroup::shift(const Int& k) const { return GSElement{{}, k}; }

GSElement GSGroup::generator(int orbit_id, const Int& position, const Int& value) const {
  return make({GSSyllable{orbit_id, position, value}}, 0);
}

GSElement GSGroup::make(std::vector<GSSyllable> word, const Int& shift) const {
  for (const auto& s : word) orbit(s.orbit);  // validates orbit ids
  return GSElement{reduce_word(std::move(word)), shift};
}

GSElement GSGroup::multiply(const GSElement& a, const GSElement& b) const {
  std::vector<GSSyllable> word = a.word;
  for (GSSyllable s : b.word) {
    s.position = reduce_position(s.orbit, s.position + a.shift);
    word.push_back(s);
  }
  return GSElement{reduce_word(std::move(word)), a.shift + b.shift};
}

GSElement GSGroup::inverse(const GSElement& a) const {
  std::vector<GSSyllable> word;
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it)
    word.push_back({it->orbit, reduce_position(it->orbit, it->position - a.shift),
                    -it->value});
  return GSElement{reduce_word(std::move(word)), -a.shift};
}

}  // namespace ggp
