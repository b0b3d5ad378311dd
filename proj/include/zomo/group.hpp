#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zomo/field.hpp"

namespace zomo {

// A word as a sequence of (generator index, nonzero exponent) syllables, freely reduced.
struct Word {
  std::vector<std::pair<int, int>> syllables;

  static Word generator(int g, int e = 1);
  Word inverse() const;
  Word operator*(const Word& o) const;
  Word pow(int e) const;
  bool empty() const { return syllables.empty(); }
  bool operator==(const Word& o) const { return syllables == o.syllables; }
  // Letters as (gen, +1/-1) expanded; used by coset enumeration.
  std::vector<int> letters() const;
  std::string str(const std::vector<std::string>& names) const;
  void reduce();
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int generator_index(const std::string& name) const;
};

// DSL: "<g1,g2 | rel1, rel2, ...>". Relators may use '*', '^k', '^name' (conjugation u^v = v^-1 u v),
// '[u,v]' (u^-1 v^-1 u v), parentheses, '1' for the identity, and chains "u = v = w".
// '#' starts a comment running to the end of the line.
Presentation parse_presentation(const std::string& text);
// Parse a single word over the given generator names (same grammar as a relator side).
Word parse_word(const std::string& text, const std::vector<std::string>& names);

struct PermutationAction {
  u32 degree = 0;
  std::vector<std::vector<u32>> generators;
};

class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 8192;

  FiniteGroup() = default;
  // Build from a full multiplication table (row-major, a*b at a*n+b) with element 0 the identity.
  FiniteGroup(int order, std::vector<std::uint16_t> table, std::vector<int> generator_elements,
              std::vector<std::string> generator_names);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long long e) const;
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  int conjugate(int a, int b) const { return mul(mul(inv(b), a), b); }  // a^b

  const std::vector<int>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  int generator(const std::string& name) const;

  // Evaluate a word in the generators (indices into generators()).
  int eval(const Word& w) const;
  // Evaluate a word whose generator indices refer to an external symbol assignment.
  int eval(const Word& w, const std::vector<int>& assignment) const;

  // Shortest word (breadth-first over generators and inverses) reaching the element.
  Word word(int e) const;
  std::string label(int e) const { return word(e).str(names_); }

  bool is_abelian() const;

  // Faithful permutation representation, if the group was built from one.
  const PermutationAction& action() const { return action_; }
  void set_action(PermutationAction a) { action_ = std::move(a); }
  // Image of a domain point under an element of the attached action.
  u32 act(int e, u32 point) const;

 private:
  void finish();

  int n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<std::string> names_;
  std::vector<int> parent_;
  std::vector<int> letter_;  // 2*g for generator g, 2*g+1 for its inverse
  PermutationAction action_;
};

// Budget used when the caller does not pass one: ZOMO_BUDGET if set, else 100000.
long long default_coset_budget();

FiniteGroup coset_enumerate(const Presentation& p, long long max_cosets = default_coset_budget());

FiniteGroup group_from_permutations(const std::vector<std::vector<u32>>& gens,
                                    std::vector<std::string> names = {});

int element_order(const FiniteGroup& G, int g);

}  // namespace zomo
