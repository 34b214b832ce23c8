#include "ggp/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ggp {

namespace {

std::string normalize_spaces(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

bool valid_section_type(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::islower(static_cast<unsigned char>(c)) &&
        !std::isdigit(static_cast<unsigned char>(c)) && c != '-')
      return false;
  return true;
}

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' &&
        c != '-')
      return false;
  return true;
}

[[noreturn]] void fail(const RawLine& l, const std::string& msg) {
  throw SyntaxError(l.line, 1, msg + " in '" + l.text + "'");
}

// "key=value" attribute within a token list, e.g. group=Z n=3.
std::optional<std::string> attr(const std::vector<std::string>& ts,
                                const std::string& key) {
  for (const auto& t : ts) {
    if (t.rfind(key + "=", 0) == 0) return t.substr(key.size() + 1);
  }
  return std::nullopt;
}

}  // namespace

const Section* Document::find(const std::string& type, const std::string& id) const {
  for (const auto& s : sections) {
    if (s.type != type) continue;
    if (id.empty() || s.id == id) return &s;
  }
  return nullptr;
}

const Section& Document::require(const std::string& type, const std::string& id) const {
  const Section* s = find(type, id);
  if (!s)
    throw InputError("missing [" + type + (id.empty() ? "" : " " + id) + "] section");
  return *s;
}

std::vector<const Section*> Document::all(const std::string& type) const {
  std::vector<const Section*> out;
  for (const auto& s : sections)
    if (s.type == type) out.push_back(&s);
  return out;
}

Document parse_document(const std::string& text) {
  Document doc;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  std::set<std::pair<std::string, std::string>> ids;
  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = normalize_spaces(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw SyntaxError(lineno, static_cast<int>(line.size()),
                          "unterminated section header");
      auto ts = tokens(line.substr(1, line.size() - 2));
      if (ts.empty() || ts.size() > 2)
        throw SyntaxError(lineno, 1, "section header needs a type and optional id");
      if (!valid_section_type(ts[0]))
        throw SyntaxError(lineno, 2, "bad section type '" + ts[0] + "'");
      Section s;
      s.type = ts[0];
      s.line = lineno;
      if (ts.size() == 2) {
        if (!valid_id(ts[1]))
          throw SyntaxError(lineno, 2, "bad section id '" + ts[1] + "'");
        s.id = ts[1];
        if (!ids.insert({s.type, s.id}).second)
          throw SyntaxError(lineno, 1,
                            "duplicate section [" + s.type + " " + s.id + "]");
      }
      doc.sections.push_back(std::move(s));
      continue;
    }
    if (doc.sections.empty())
      throw SyntaxError(lineno, 1, "content before any section header");
    doc.sections.back().lines.push_back({lineno, line});
  }
  return doc;
}

std::string emit_document(const Document& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : doc.sections) {
    if (!first) os << '\n';
    first = false;
    os << '[' << s.type;
    if (!s.id.empty()) os << ' ' << s.id;
    os << "]\n";
    for (const auto& l : s.lines) os << l.text << '\n';
  }
  return os.str();
}

GraphOfGroups read_graph_of_groups(const Section& s) {
  struct DartInfo {
    std::string from, to;
    GroupKind kind;
    std::optional<Int> n;
    int line;
    bool paired = false;
  };
  GraphOfGroups::Builder builder;
  std::map<std::string, DartInfo> darts;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<RawLine> pair_lines;

  for (const auto& l : s.lines) {
    auto ts = tokens(l.text);
    if (ts[0] == "vertex") {
      if (ts.size() != 3) fail(l, "expected 'vertex NAME group=...'");
      auto g = attr(ts, "group");
      if (!g || (*g != "Z" && *g != "trivial")) fail(l, "vertex group must be Z or trivial");
      builder.vertex(ts[1], *g == "Z" ? GroupKind::InfiniteCyclic : GroupKind::Trivial);
    } else if (ts[0] == "dart") {
      if (ts.size() < 7 || ts[2] != ":" || ts[4] != "->")
        fail(l, "expected 'dart NAME : V1 -> V2 group=... [n=...]'");
      DartInfo info;
      info.from = ts[3];
      info.to = ts[5];
      info.line = l.line;
      auto g = attr(ts, "group");
      if (!g || (*g != "Z" && *g != "trivial")) fail(l, "edge group must be Z or trivial");
      info.kind = *g == "Z" ? GroupKind::InfiniteCyclic : GroupKind::Trivial;
      auto n = attr(ts, "n");
      if (info.kind == GroupKind::InfiniteCyclic) {
        if (!n) fail(l, "cyclic edge dart needs n=");
        info.n = parse_int(*n);
      } else if (n) {
        fail(l, "trivial edge dart cannot carry n=");
      }
      if (!darts.emplace(ts[1], info).second) fail(l, "duplicate dart '" + ts[1] + "'");
    } else if (ts[0] == "pair") {
      if (ts.size() != 3) fail(l, "expected 'pair D1 D2'");
      pairs.emplace_back(ts[1], ts[2]);
      pair_lines.push_back(l);
    } else {
      fail(l, "unknown graph-of-groups line");
    }
  }

  for (size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    const RawLine& l = pair_lines[i];
    auto ita = darts.find(a), itb = darts.find(b);
    if (ita == darts.end() || itb == darts.end()) fail(l, "pair of undeclared dart");
    DartInfo& da = ita->second;
    DartInfo& db = itb->second;
    if (da.paired || db.paired) fail(l, "dart paired twice");
    if (a == b) fail(l, "dart paired with itself");
    if (da.from != db.to || da.to != db.from)
      fail(l, "paired darts must reverse each other");
    if (da.kind != db.kind) fail(l, "paired darts with different edge groups");
    da.paired = db.paired = true;
    if (da.kind == GroupKind::InfiniteCyclic)
      builder.cyclic_edge(a, b, da.from, da.to, *da.n, *db.n);
    else
      builder.trivial_edge(a, b, da.from, da.to);
  }
  for (const auto& [name, info] : darts)
    if (!info.paired)
      throw SyntaxError(info.line, 1, "dart '" + name + "' is missing its pair line");
  return builder.build();
}

GraphProduct read_graph_product(const Section& s) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, VertexGroupSpec> specs;
  for (const auto& l : s.lines) {
    auto ts = tokens(l.text);
    if (ts[0] == "vertex") {
      if (ts.size() != 3) fail(l, "expected 'vertex NAME group=...'");
      auto g = attr(ts, "group");
      if (!g) fail(l, "vertex needs group=");
      VertexGroupSpec spec;
      if (*g == "Z") {
        spec.order = 0;
      } else if (g->rfind("Z/", 0) == 0) {
        spec.order = parse_int(g->substr(2));
        if (spec.order < 2) fail(l, "finite cyclic order must be >= 2");
      } else {
        fail(l, "vertex group must be Z or Z/k");
      }
      vertices.push_back(ts[1]);
      specs[ts[1]] = spec;
    } else if (ts[0] == "edge") {
      if (ts.size() != 3) fail(l, "expected 'edge V1 V2'");
      edges.emplace_back(ts[1], ts[2]);
    } else {
      fail(l, "unknown graph-product line");
    }
  }
  return GraphProduct(SimplicialGraph(vertices, edges), specs);
}

FpPresentation read_presentation(const Section& s) {
  std::vector<std::string> lines;
  for (const auto& l : s.lines) {
    auto ts = tokens(l.text);
    if (!ts.empty() && ts[0] == "of") continue;  // reference line in results
    lines.push_back(l.text);
  }
  return parse_presentation_lines(lines);
}

std::vector<FreeWord> read_subgroup(const Section& s, const AlphabetRef& alphabet) {
  std::vector<FreeWord> out;
  for (const auto& l : s.lines) {
    if (l.text.rfind("of", 0) == 0) continue;
    if (l.text.rfind("gen:", 0) != 0) fail(l, "expected 'gen: WORD'");
    out.push_back(parse_free_word(alphabet, l.text.substr(4)));
  }
  return out;
}

WordSection read_word_section(const Section& s) {
  WordSection out;
  out.id = s.id;
  bool have_word = false;
  for (const auto& l : s.lines) {
    auto ts = tokens(l.text);
    if (ts.size() >= 2 && ts[0] == "over" && ts[1] == "=") {
      if (ts.size() != 3) fail(l, "expected 'over = SECTION-ID'");
      out.over = ts[2];
    } else if (ts.size() >= 2 && ts[0] == "w" && ts[1] == "=") {
      std::string text;
      for (size_t i = 2; i < ts.size(); ++i) text += (i > 2 ? " " : "") + ts[i];
      out.text = text;
      have_word = true;
    } else {
      fail(l, "unknown word line");
    }
  }
  if (!have_word)
    throw SyntaxError(s.line, 1, "word section without a 'w =' line");
  return out;
}

GSSection read_gs_section(const Section& s) {
  GSSection out;
  out.generator_order = -1;
  std::vector<std::pair<std::string, std::string>> elem_lines;
  for (const auto& l : s.lines) {
    auto ts = tokens(l.text);
    if (ts.size() >= 3 && ts[0] == "group" && ts[1] == "=") {
      if (ts[2] == "Z")
        out.generator_order = 0;
      else if (ts[2].rfind("Z/", 0) == 0)
        out.generator_order = parse_int(ts[2].substr(2));
      else
        fail(l, "group must be Z or Z/k");
    } else if (ts.size() == 4 && ts[0] == "orbit" && ts[2] == "=") {
      GSOrbit orbit;
      if (ts[3] == "Z")
        orbit.size = 0;
      else
        orbit.size = parse_int(ts[3]);
      if (orbit.size < 0) fail(l, "orbit size must be nonnegative");
      out.orbit_names.push_back(ts[1]);
      out.orbits.push_back(orbit);
    } else if (ts.size() >= 3 && ts[0] == "elem" && ts[2] == "=") {
      std::string text;
      for (size_t i = 3; i < ts.size(); ++i) text += (i > 3 ? " " : "") + ts[i];
      elem_lines.emplace_back(ts[1], text);
    } else {
      fail(l, "unknown gs line");
    }
  }
  if (out.generator_order < 0)
    throw SyntaxError(s.line, 1, "gs section without a 'group =' line");
  GSGroup group(out.generator_order, out.orbits);
  for (const auto& [name, text] : elem_lines)
    out.elements.emplace_back(name, parse_gs_element(group, out.orbit_names, text, s.line));
  return out;
}

OptionsSection read_options(const Document& doc) {
  OptionsSection out;
  const Section* s = doc.find("options");
  if (!s) return out;
  for (const auto& l : s->lines) {
    auto ts = tokens(l.text);
    if (ts.size() == 3 && ts[0] == "bound" && ts[1] == "=") {
      Int b = parse_int(ts[2]);
      if (b < 1 || b > 1000000000) fail(l, "bound out of range");
      out.bound = static_cast<int>(b);
    } else if (ts.size() == 3 && ts[0] == "base" && ts[1] == "=") {
      out.base = ts[2];
    } else {
      fail(l, "unknown options line");
    }
  }
  return out;
}

Section write_graph_of_groups(const GraphOfGroups& g, const std::string& id) {
  Section s;
  s.type = "graph-of-groups";
  s.id = id;
  const OrientedMultigraph& gr = g.graph();
  for (int v = 0; v < gr.vertex_count(); ++v)
    s.lines.push_back({0, "vertex " + gr.vertex_name(v) + " group=" +
                              group_kind_str(g.vertex_kind(v))});
  for (int e = 0; e < gr.edge_count(); ++e) {
    int d = gr.canonical_dart(e);
    for (int k : {d, d + 1}) {
      std::string line = "dart " + gr.dart_name(k) + " : " +
                         gr.vertex_name(gr.origin(k)) + " -> " +
                         gr.vertex_name(gr.terminus(k)) +
                         " group=" + group_kind_str(g.edge_kind(e));
      if (g.cyclic_edge(e)) line += " n=" + g.index(k).str();
      s.lines.push_back({0, line});
    }
    s.lines.push_back({0, "pair " + gr.dart_name(d) + " " + gr.dart_name(d + 1)});
  }
  return s;
}

Section write_graph_product(const GraphProduct& gp, const std::string& id) {
  Section s;
  s.type = "graph-product";
  s.id = id;
  const SimplicialGraph& gr = gp.graph();
  for (int v = 0; v < gr.vertex_count(); ++v) {
    const VertexGroupSpec& spec = gp.spec(v);
    s.lines.push_back({0, "vertex " + gr.vertex_name(v) + " group=" +
                              (spec.finite() ? "Z/" + spec.order.str() : "Z")});
  }
  for (const auto& [u, v] : gr.edges())
    s.lines.push_back({0, "edge " + gr.vertex_name(u) + " " + gr.vertex_name(v)});
  return s;
}

Section write_presentation(const FpPresentation& p, const std::string& type,
                           const std::string& id) {
  Section s;
  s.type = type;
  s.id = id;
  for (const auto& line : presentation_lines(p)) s.lines.push_back({0, line});
  return s;
}

std::string gs_element_str(const GSSection& gs, const GSElement& e) {
  if (e.word.empty() && e.shift == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : e.word) {
    if (!first) os << ' ';
    first = false;
    os << gs.orbit_names.at(s.orbit) << '.' << s.position;
    if (s.value != 1) os << '^' << s.value;
  }
  if (e.shift != 0) {
    if (!first) os << ' ';
    os << 't';
    if (e.shift != 1) os << '^' << e.shift;
  }
  return os.str();
}

GSElement parse_gs_element(const GSGroup& group,
                           const std::vector<std::string>& orbit_names,
                           const std::string& text, int line) {
  GSElement acc = group.identity();
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    std::string body = token;
    Int exp = 1;
    auto caret = token.find('^');
    if (caret != std::string::npos) {
      body = token.substr(0, caret);
      exp = parse_int(token.substr(caret + 1));
    }
    GSElement factor;
    if (body == "1") {
      if (caret != std::string::npos)
        throw SyntaxError(line, 1, "cannot raise identity '1'");
      continue;
    } else if (body == "t") {
      factor = group.shift(exp);
    } else {
      auto dot = body.find('.');
      if (dot == std::string::npos)
        throw SyntaxError(line, 1, "bad gs token '" + token + "'");
      auto it = std::find(orbit_names.begin(), orbit_names.end(), body.substr(0, dot));
      if (it == orbit_names.end())
        throw SyntaxError(line, 1, "unknown orbit '" + body.substr(0, dot) + "'");
      int orbit = static_cast<int>(it - orbit_names.begin());
      factor = group.generator(orbit, parse_int(body.substr(dot + 1)), exp);
    }
    acc = group.multiply(acc, factor);
  }
  return acc;
}

}  // namespace ggp
