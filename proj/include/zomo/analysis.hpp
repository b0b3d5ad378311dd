#pragma once

#include <map>
#include <string>
#include <vector>

#include "zomo/group.hpp"

namespace zomo {

// A subgroup as a sorted member list plus a membership mask over the parent's elements.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(int parent_order, std::vector<int> members);

  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const { return g >= 0 && g < static_cast<int>(mask_.size()) && mask_[g]; }
  const std::vector<int>& members() const { return members_; }
  bool operator==(const Subgroup& o) const { return members_ == o.members_; }
  bool operator<(const Subgroup& o) const { return members_ < o.members_; }
  bool subset_of(const Subgroup& o) const;

 private:
  std::vector<int> members_;
  std::vector<char> mask_;
};

struct Quotient {
  FiniteGroup group;
  std::vector<int> image;  // element of G -> coset index
};

struct Embedded {
  FiniteGroup group;
  std::vector<int> to_parent;  // element of the subgroup -> element of G
};

struct Fingerprint {
  int order = 0;
  int center_order = 0;
  int nilpotency_class = 0;
  std::vector<int> abelian_invariants;
  std::map<int, int> order_census;
  int maximal_subgroups = 0;
  int minimal_nonabelian = 0;
  int derived_length = 0;

  bool operator==(const Fingerprint& o) const = default;
  std::string str() const;
};

// p if n = p^k with k >= 1, 1 if n = 1, 0 otherwise.
int prime_of_order(int n);

Subgroup whole_group(const FiniteGroup& G);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens);
Subgroup normal_closure(const FiniteGroup& G, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& G, const Subgroup& H);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
bool is_abelian(const FiniteGroup& G, const Subgroup& H);
// A generating set of H chosen greedily in element order (not necessarily minimum).
std::vector<int> subgroup_generators(const FiniteGroup& G, const Subgroup& H);
Embedded as_group(const FiniteGroup& G, const Subgroup& H);

Subgroup center(const FiniteGroup& G);
Subgroup centralizer(const FiniteGroup& G, const Subgroup& H);
Subgroup derived_subgroup(const FiniteGroup& G);
// Intersection of all maximal subgroups.
Subgroup frattini(const FiniteGroup& G);
// <G', g^p> for a p-group; equals frattini() by the Burnside basis theorem.
Subgroup frattini_by_powers(const FiniteGroup& G);
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& G);

struct CentralSeries {
  std::vector<Subgroup> terms;  // upper: Z_0 = 1 < Z_1 < ... < Z_n = G
  int nilpotency_class = 0;
  bool maximal_class = false;
};
CentralSeries central_series(const FiniteGroup& G);
// K_1 = G, K_{i+1} = [K_i, G], down to the trivial group.
std::vector<Subgroup> lower_central_series(const FiniteGroup& G);
int nilpotency_class(const FiniteGroup& G);
bool is_maximal_class(const FiniteGroup& G);
int derived_length(const FiniteGroup& G);

Quotient quotient(const FiniteGroup& G, const Subgroup& N);

int exponent(const FiniteGroup& G);
bool is_cyclic(const FiniteGroup& G);
bool is_elementary_abelian(const FiniteGroup& G, const Subgroup& H);
// Elementary divisors (prime powers, ascending) of an abelian group.
std::vector<int> abelian_type(const FiniteGroup& A);
std::vector<int> abelianization_invariants(const FiniteGroup& G);
// log_p [G : Phi(G)] for a p-group.
int frattini_rank(const FiniteGroup& G);
// Smallest k such that some k elements generate G, by exhaustive search.
int min_generators_exhaustive(const FiniteGroup& G);

std::map<int, int> order_census(const FiniteGroup& G);
// Census restricted to G \ H.
std::map<int, int> order_census(const FiniteGroup& G, const Subgroup& excluded);

// Pairs (a,b) with H = <a,b> non-abelian and |H'| = p; each hit is confirmed by checking that all
// maximal subgroups of H are abelian.
std::vector<Subgroup> minimal_nonabelian_subgroups(const FiniteGroup& G);
bool is_minimal_nonabelian(const FiniteGroup& G, const Subgroup& H);
// The unique maximal subgroup that is abelian or minimal non-abelian; throws if not unique.
Subgroup unique_special_maximal(const FiniteGroup& G);
// Sorted (descending) list of |Z(G/U)| over the order-p subgroups U of Z(G).
std::vector<int> central_quotient_center_pattern(const FiniteGroup& G);

// C_G(K_2/K_4) for a group of maximal class.
Subgroup fundamental_subgroup(const FiniteGroup& G);
bool is_metacyclic(const FiniteGroup& G);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G);
// Cyclic subgroups of the given order contained in `within`.
std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& G, const Subgroup& within, int order);

bool verify_word_identity(const FiniteGroup& G, const Word& lhs, const Word& rhs, const std::vector<int>& assignment);

Fingerprint fingerprint(const FiniteGroup& G);

}  // namespace zomo
