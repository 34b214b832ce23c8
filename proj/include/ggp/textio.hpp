// The document text format: bracketed typed sections of key/value-style
// lines.  parse/emit round-trip exactly; typed readers build the domain
// objects and typed writers emit canonical sections.

#ifndef GGP_TEXTIO_HPP
#define GGP_TEXTIO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ggp/coxeter.hpp"
#include "ggp/gog.hpp"
#include "ggp/gprod.hpp"

namespace ggp {

struct SyntaxError : InputError {
  SyntaxError(int line, int col, const std::string& msg)
      : InputError("line " + std::to_string(line) + ", col " + std::to_string(col) +
                   ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct RawLine {
  int line = 0;       // 1-based source line
  std::string text;   // whitespace-normalized
};

struct Section {
  std::string type;
  std::string id;     // optional
  int line = 0;
  std::vector<RawLine> lines;

  bool operator==(const Section& other) const {
    if (type != other.type || id != other.id || lines.size() != other.lines.size())
      return false;
    for (size_t i = 0; i < lines.size(); ++i)
      if (lines[i].text != other.lines[i].text) return false;
    return true;
  }
};

struct Document {
  std::vector<Section> sections;

  const Section* find(const std::string& type, const std::string& id = "") const;
  const Section& require(const std::string& type, const std::string& id = "") const;
  std::vector<const Section*> all(const std::string& type) const;

  bool operator==(const Document& other) const {
    return sections == other.sections;
  }
};

// '#' starts a comment; blank lines are ignored; content must live inside a
// section.  Section ids must be unique per type.
Document parse_document(const std::string& text);
std::string emit_document(const Document& doc);

// ---- typed readers (throw SyntaxError / InputError) ----

GraphOfGroups read_graph_of_groups(const Section& s);
GraphProduct read_graph_product(const Section& s);
FpPresentation read_presentation(const Section& s);
std::vector<FreeWord> read_subgroup(const Section& s, const AlphabetRef& alphabet);

struct WordSection {
  std::string id;
  std::string over;  // referenced graph-product section id, may be empty
  std::string text;  // raw word text, parsed against its graph product
};
WordSection read_word_section(const Section& s);

struct GSSection {
  Int generator_order;                       // 0 = Z
  std::vector<GSOrbit> orbits;
  std::vector<std::string> orbit_names;
  std::vector<std::pair<std::string, GSElement>> elements;
};
GSSection read_gs_section(const Section& s);

struct OptionsSection {
  std::optional<int> bound;
  std::optional<std::string> base;
};
OptionsSection read_options(const Document& doc);

// ---- typed writers (canonical emission) ----

Section write_graph_of_groups(const GraphOfGroups& g, const std::string& id);
Section write_graph_product(const GraphProduct& gp, const std::string& id);
Section write_presentation(const FpPresentation& p, const std::string& type,
                           const std::string& id);

// GS element text: shift tokens t^k and syllable tokens ORBIT.POS^VAL.
std::string gs_element_str(const GSSection& gs, const GSElement& e);
GSElement parse_gs_element(const GSGroup& group,
                           const std::vector<std::string>& orbit_names,
                           const std::string& text, int line);

}  // namespace ggp

#endif
