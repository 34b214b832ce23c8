// Free words over named generator alphabets, free reduction, and finite
// presentations.  Words are stored run-length as (symbol, exponent) pairs with
// arbitrary-precision exponents, so z^n with huge n stays O(1).

#ifndef GGP_WORDS_HPP
#define GGP_WORDS_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ggp/numeric.hpp"

namespace ggp {

class IntMatrix;

// Ordered list of unique generator names over [A-Za-z0-9_].
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int find(const std::string& name) const;  // -1 if absent
  int index(const std::string& name) const;  // throws InputError if absent

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

  static bool valid_name(const std::string& name);

 private:
  std::vector<std::string> names_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

AlphabetRef make_alphabet(std::vector<std::string> names);

struct Letter {
  int symbol = 0;
  Int exponent;
  bool operator==(const Letter& other) const = default;
};

// Reduced word in the free group on an alphabet.  Invariants: adjacent letters
// have distinct symbols, no exponent is zero, the empty list is the identity.
class FreeWord {
 public:
  FreeWord() = default;  // identity with no alphabet attached
  explicit FreeWord(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

  static FreeWord reduce(AlphabetRef alphabet, const std::vector<Letter>& raw);
  static FreeWord reduce(AlphabetRef alphabet,
                         const std::vector<std::pair<std::string, Int>>& raw);

  const std::vector<Letter>& letters() const { return letters_; }
  const AlphabetRef& alphabet() const { return alphabet_; }
  bool is_identity() const { return letters_.empty(); }
  Int length() const;  // sum of |exponent|

  FreeWord operator*(const FreeWord& other) const;
  FreeWord inverse() const;
  FreeWord pow(const Int& k) const;

  bool operator==(const FreeWord& other) const { return letters_ == other.letters_; }

  std::string str() const;  // "a^2 b^-1"; identity prints as "1"

 private:
  AlphabetRef alphabet_;
  std::vector<Letter> letters_;
};

// Word text syntax: whitespace-separated NAME or NAME^INT tokens; "1" alone
// (when no generator is named "1") denotes the identity.
FreeWord parse_free_word(const AlphabetRef& alphabet, const std::string& text);

// Generators plus reduced nonempty relators over them.
struct FpPresentation {
  AlphabetRef alphabet;
  std::vector<FreeWord> relators;

  bool operator==(const FpPresentation& other) const;
};

FpPresentation make_presentation(AlphabetRef alphabet, std::vector<FreeWord> relators);

// Presentation text syntax: one "gens: a, b" line then "rel: a^2 b^-3" lines.
FpPresentation parse_presentation_lines(const std::vector<std::string>& lines);
std::vector<std::string> presentation_lines(const FpPresentation& p);

// One row per relator, one column per generator; entry = exponent sum.
IntMatrix abelianized_relation_matrix(const FpPresentation& p);

}  // namespace ggp

#endif
