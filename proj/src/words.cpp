#include "ggp/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ggp/zmat.hpp"

namespace ggp {

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Int parse_int(const std::string& text) {
  if (text.empty()) throw InputError("empty integer");
  size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw InputError("bad integer '" + text + "'");
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InputError("bad integer '" + text + "'");
  return Int(text);
}

bool Alphabet::valid_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw InputError("bad generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw InputError("duplicate generator name '" + n + "'");
  }
}

int Alphabet::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

int Alphabet::index(const std::string& name) const {
  int i = find(name);
  if (i < 0) throw InputError("unknown generator '" + name + "'");
  return i;
}

AlphabetRef make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

namespace {

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace

FreeWord FreeWord::reduce(AlphabetRef alphabet, const std::vector<Letter>& raw) {
  FreeWord w(std::move(alphabet));
  for (const Letter& l : raw) {
    if (l.symbol < 0 || (w.alphabet_ && l.symbol >= w.alphabet_->size()))
      throw InputError("letter symbol out of range");
    if (l.exponent == 0) continue;
    if (!w.letters_.empty() && w.letters_.back().symbol == l.symbol) {
      w.letters_.back().exponent += l.exponent;
      if (w.letters_.back().exponent == 0) w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

FreeWord FreeWord::reduce(AlphabetRef alphabet,
                          const std::vector<std::pair<std::string, Int>>& raw) {
  if (!alphabet) throw InputError("named letters need an alphabet");
  std::vector<Letter> letters;
  letters.reserve(raw.size());
  for (const auto& [name, exp] : raw)
    letters.push_back({alphabet->index(name), exp});
  return reduce(std::move(alphabet), letters);
}

Int FreeWord::length() const {
  Int n = 0;
  for (const Letter& l : letters_) n += int_abs(l.exponent);
  return n;
}

FreeWord FreeWord::operator*(const FreeWord& other) const {
  if (is_identity() && !alphabet_) return other;
  if (other.is_identity() && !other.alphabet_) return *this;
  if (!same_alphabet(alphabet_, other.alphabet_))
    throw InputError("alphabet mismatch in word multiplication");
  std::vector<Letter> raw = letters_;
  raw.insert(raw.end(), other.letters_.begin(), other.letters_.end());
  return reduce(alphabet_ ? alphabet_ : other.alphabet_, raw);
}

FreeWord FreeWord::inverse() const {
  FreeWord w(alphabet_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->symbol, -it->exponent});
  return w;
}

FreeWord FreeWord::pow(const Int& k) const {
  if (k == 0) return FreeWord(alphabet_);
  // Single letters exponentiate in place; general words by repeated squaring
  // would be overkill at the sizes in scope.
  if (letters_.size() == 1) {
    FreeWord w(alphabet_);
    w.letters_.push_back({letters_[0].symbol, letters_[0].exponent * k});
    return w;
  }
  FreeWord base = k > 0 ? *this : inverse();
  FreeWord acc(alphabet_);
  for (Int i = 0; i < int_abs(k); ++i) acc = acc * base;
  return acc;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << (alphabet_ ? alphabet_->name(l.symbol) : "g" + std::to_string(l.symbol));
    if (l.exponent != 1) os << '^' << l.exponent;
  }
  return os.str();
}

FreeWord parse_free_word(const AlphabetRef& alphabet, const std::string& text) {
  std::vector<std::pair<std::string, Int>> raw;
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
    if (name == "1" && alphabet->find("1") < 0) {
      if (caret != std::string::npos) throw InputError("cannot raise identity '1'");
      continue;
    }
    raw.emplace_back(name, exp);
  }
  return FreeWord::reduce(alphabet, raw);
}

bool FpPresentation::operator==(const FpPresentation& other) const {
  if (!same_alphabet(alphabet, other.alphabet)) return false;
  return relators == other.relators;
}

FpPresentation make_presentation(AlphabetRef alphabet, std::vector<FreeWord> relators) {
  FpPresentation p;
  p.alphabet = std::move(alphabet);
  for (auto& r : relators) {
    if (!same_alphabet(r.alphabet(), p.alphabet))
      throw InputError("relator over a different alphabet");
    if (!r.is_identity()) p.relators.push_back(std::move(r));
  }
  return p;
}

FpPresentation parse_presentation_lines(const std::vector<std::string>& lines) {
  AlphabetRef alphabet;
  std::vector<FreeWord> relators;
  for (const auto& line : lines) {
    if (line.rfind("gens:", 0) == 0) {
      if (alphabet) throw InputError("duplicate gens: line");
      std::vector<std::string> names;
      std::string rest = line.substr(5);
      std::replace(rest.begin(), rest.end(), ',', ' ');
      std::istringstream is(rest);
      std::string name;
      while (is >> name) names.push_back(name);
      alphabet = make_alphabet(std::move(names));
    } else if (line.rfind("rel:", 0) == 0) {
      if (!alphabet) throw InputError("rel: before gens:");
      relators.push_back(parse_free_word(alphabet, line.substr(4)));
    } else {
      throw InputError("unexpected presentation line '" + line + "'");
    }
  }
  if (!alphabet) throw InputError("presentation without gens: line");
  return make_presentation(alphabet, std::move(relators));
}

std::vector<std::string> presentation_lines(const FpPresentation& p) {
  std::vector<std::string> lines;
  std::string gens = "gens:";
  for (int i = 0; i < p.alphabet->size(); ++i)
    gens += (i ? ", " : " ") + p.alphabet->name(i);
  lines.push_back(gens);
  for (const auto& r : p.relators) lines.push_back("rel: " + r.str());
  return lines;
}

IntMatrix abelianized_relation_matrix(const FpPresentation& p) {
  IntMatrix m(static_cast<int>(p.relators.size()), p.alphabet->size());
  for (size_t i = 0; i < p.relators.size(); ++i)
    for (const Letter& l : p.relators[i].letters())
      m.at(static_cast<int>(i), l.symbol) += l.exponent;
  return m;
}

}  // namespace ggp
