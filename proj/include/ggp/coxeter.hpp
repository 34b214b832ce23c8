// Bounded Todd-Coxeter coset enumeration (HLT strategy with immediate
// coincidence handling).  Used as the independent finite-index oracle for
// presentations, graph product orders, and coset actions.

#ifndef GGP_COXETER_HPP
#define GGP_COXETER_HPP

#include <string>
#include <vector>

#include "ggp/words.hpp"

namespace ggp {

// Complete table of the action on cosets of a subgroup.  Cosets are 0-based
// internally; coset 0 is the subgroup.  Column 2g is generator g, column
// 2g + 1 its inverse.
struct CosetTable {
  FpPresentation presentation;
  std::vector<FreeWord> subgroup_generators;
  int coset_count = 0;
  std::vector<std::vector<int>> action;  // [coset][column]

  int apply(int coset, int column) const { return action[coset][column]; }
};

struct EnumerationResult {
  bool completed = false;
  CosetTable table;    // valid when completed
  int live_cosets = 0; // live count at the bound when not completed
};

// Throws InputError if subgroup words use foreign generators; never throws on
// exceeding the bound (that is the Exceeded outcome).
EnumerationResult enumerate_cosets(const FpPresentation& p,
                                   const std::vector<FreeWord>& subgroup,
                                   int bound);

// Post-hoc soundness: permutation columns, every relator closes at every
// coset, every subgroup generator fixes coset 0.  Empty result = sound.
std::vector<std::string> verify_coset_table(const CosetTable& t);

// Stable dump, one line per coset.
std::vector<std::string> coset_table_lines(const CosetTable& t);

}  // namespace ggp

#endif
