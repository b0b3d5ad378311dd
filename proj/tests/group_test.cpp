#include <doctest.h>

#include <set>

#include "zomo/analysis.hpp"
#include "zomo/group.hpp"

using namespace zomo;

namespace {

FiniteGroup from_text(const std::string& text) { return coset_enumerate(parse_presentation(text)); }

// Minimal non-abelian subgroups by brute force over all pairs: H = <a,b> non-abelian whose maximal
// subgroups (index p) are all abelian. Proper subgroups of a p-group lie in maximal ones.
std::set<Subgroup> brute_mna(const FiniteGroup& G) {
  std::set<Subgroup> seen, out;
  for (int a = 1; a < G.order(); ++a) {
    for (int b = a + 1; b < G.order(); ++b) {
      Subgroup H = generated_subgroup(G, {a, b});
      if (!seen.insert(H).second) continue;
      if (is_abelian(G, H)) continue;
      Embedded E = as_group(G, H);
      bool all_abelian = true;
      for (const auto& M : maximal_subgroups(E.group)) all_abelian = all_abelian && is_abelian(E.group, M);
      if (all_abelian) out.insert(H);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("presentation parsing") {
  Presentation p = parse_presentation("<a | a^3>");
  CHECK(p.generators.size() == 1);
  CHECK(p.relators.size() == 1);
  Presentation q = parse_presentation("<a,b | a^9 = b^3 = 1, a^b = a^4>  # comment");
  CHECK(q.generators == std::vector<std::string>{"a", "b"});
  CHECK(q.relators.size() == 3);
  CHECK_THROWS_AS(parse_presentation("<a | a^3"), Error);
  CHECK_THROWS_AS(parse_presentation("<a | c^3>"), Error);
  Word w = parse_word("[a,b]^2", {"a", "b"});
  CHECK(w.str({"a", "b"}) == "a^-1*b^-1*a*b*a^-1*b^-1*a*b");
}

TEST_CASE("words reduce freely") {
  Word a = Word::generator(0), b = Word::generator(1);
  CHECK((a * a.inverse()).empty());
  CHECK((a * b * b.inverse() * a).syllables == std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(a.pow(-3).inverse() == a.pow(3));
}

TEST_CASE("coset enumeration orders") {
  CHECK(from_text("<a | a^3>").order() == 3);
  CHECK(from_text("<a,b | a^9, b^3, b^-1 a b = a^4>").order() == 27);
  CHECK(from_text("<a,b | a^3, b^3, [a,b]>").order() == 9);
  CHECK(from_text("<a,b | a^2, b^3, (a b)^5>").order() == 60);
  CHECK_THROWS_AS(coset_enumerate(parse_presentation("<a,b | a^3>"), 2000), Error);
}

TEST_CASE("multiplication table is a group and the regular action is faithful") {
  FiniteGroup G = from_text("<a,b | a^9, b^3, b^-1 a b = a^4>");
  int n = G.order();
  for (int x = 0; x < n; ++x) {
    CHECK(G.mul(x, 0) == x);
    CHECK(G.mul(x, G.inv(x)) == 0);
    std::set<int> row;
    for (int y = 0; y < n; ++y) {
      row.insert(G.mul(x, y));
      for (int z = 0; z < n; z += 5) REQUIRE(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
    }
    CHECK(row.size() == static_cast<size_t>(n));
    CHECK(G.eval(G.word(x)) == x);
  }
}

TEST_CASE("permutation groups compose left to right") {
  // (0 1 2) and (0 1): S_3
  FiniteGroup G = group_from_permutations({{1, 2, 0}, {1, 0, 2}}, {"r", "s"});
  CHECK(G.order() == 6);
  int r = G.generator("r"), s = G.generator("s");
  int rs = G.mul(r, s);
  for (u32 x = 0; x < 3; ++x) CHECK(G.act(rs, x) == G.act(s, G.act(r, x)));
  CHECK_FALSE(G.is_abelian());
}

TEST_CASE("analysis on the two non-abelian groups of order 27") {
  FiniteGroup M = from_text("<a,b | a^9, b^3, b^-1 a b = a^4>");
  FiniteGroup U = from_text("<a,b | a^3, b^3, [a,b]^3, [a,[a,b]], [b,[a,b]]>");
  for (const FiniteGroup* G : {&M, &U}) {
    CHECK(G->order() == 27);
    CHECK(center(*G).order() == 3);
    CHECK(derived_subgroup(*G) == center(*G));
    CHECK(nilpotency_class(*G) == 2);
    CHECK(is_maximal_class(*G));
    CHECK(maximal_subgroups(*G).size() == 4);
    CHECK(frattini_rank(*G) == 2);
  }
  CHECK(exponent(M) == 9);
  CHECK(exponent(U) == 3);
  CHECK(is_metacyclic(M));
  CHECK_FALSE(is_metacyclic(U));
  CHECK_FALSE(fingerprint(M) == fingerprint(U));
}

TEST_CASE("minimal non-abelian subgroups agree with brute force") {
  for (const char* text : {"<a,b | a^9, b^3, b^-1 a b = a^4>", "<a,b | a^3, b^3, [a,b]^3, [a,[a,b]], [b,[a,b]]>",
                           "<a,b | a^9, b^9, a^b = a^4>", "<a,b,c | a^3, b^3, c^3, [a,b]^3, [a,[a,b]], [b,[a,b]], [a,c], [b,c]>"}) {
    FiniteGroup G = from_text(text);
    auto fast = minimal_nonabelian_subgroups(G);
    std::set<Subgroup> fs(fast.begin(), fast.end());
    CHECK(fs == brute_mna(G));
    for (const auto& H : fast) CHECK(is_minimal_nonabelian(G, H));
  }
}

TEST_CASE("Frattini subgroup two ways and the Burnside basis property") {
  for (const char* text : {"<a,b | a^9, b^3, b^-1 a b = a^4>", "<a,b | a^9, b^9, a^b = a^4>",
                           "<a,b,c | a^3, b^3, c^3, [a,b]^3, [a,[a,b]], [b,[a,b]], [a,c], [b,c]>", "<a | a^27>"}) {
    FiniteGroup G = from_text(text);
    Subgroup P = frattini(G);
    CHECK(P == frattini_by_powers(G));
    Quotient Q = quotient(G, P);
    CHECK(is_elementary_abelian(Q.group, whole_group(Q.group)));
    CHECK(frattini_rank(G) == min_generators_exhaustive(G));
  }
}

TEST_CASE("quotients are abelian exactly over the derived subgroup") {
  FiniteGroup G = from_text("<a,b | a^9, b^9, a^b = a^4>");
  Subgroup D = derived_subgroup(G);
  auto normals = normal_subgroups(G);
  CHECK(normals.size() > 4);
  for (const auto& N : normals) {
    CHECK(is_normal(G, N));
    CHECK(quotient(G, N).group.is_abelian() == D.subset_of(N));
  }
}

TEST_CASE("central series and census") {
  FiniteGroup E = from_text("<a,b,c | a^3, b^3, c^3, [a,b], [a,c], [b,c]>");
  CHECK(E.is_abelian());
  CHECK(abelian_type(E) == std::vector<int>{3, 3, 3});
  CHECK(order_census(E) == std::map<int, int>{{1, 1}, {3, 26}});
  FiniteGroup C = from_text("<a | a^27>");
  CHECK(is_cyclic(C));
  CHECK(central_series(C).nilpotency_class == 1);
  CHECK(prime_of_order(243) == 3);
  CHECK(prime_of_order(12) == 0);
  CHECK(prime_of_order(1) == 1);
}
