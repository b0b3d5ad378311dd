#include "zomo/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <unordered_map>

namespace zomo {

// ---------------------------------------------------------------- words

Word Word::generator(int g, int e) {
  Word w;
  if (e != 0) w.syllables.push_back({g, e});
  return w;
}

void Word::reduce() {
  std::vector<std::pair<int, int>> out;
  for (auto [g, e] : syllables) {
    if (e == 0) continue;
    if (!out.empty() && out.back().first == g) {
      out.back().second += e;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.push_back({g, e});
    }
  }
  syllables = std::move(out);
}

Word Word::inverse() const {
  Word w;
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) w.syllables.push_back({it->first, -it->second});
  return w;
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  w.syllables.insert(w.syllables.end(), o.syllables.begin(), o.syllables.end());
  w.reduce();
  return w;
}

Word Word::pow(int e) const {
  Word base = e < 0 ? inverse() : *this;
  Word w;
  for (int i = 0; i < std::abs(e); ++i) w = w * base;
  return w;
}

std::vector<int> Word::letters() const {
  std::vector<int> out;
  for (auto [g, e] : syllables) {
    int l = e > 0 ? 2 * g : 2 * g + 1;
    for (int i = 0; i < std::abs(e); ++i) out.push_back(l);
  }
  return out;
}

std::string Word::str(const std::vector<std::string>& names) const {
  if (syllables.empty()) return "1";
  std::string s;
  for (auto [g, e] : syllables) {
    if (!s.empty()) s += "*";
    s += g < static_cast<int>(names.size()) ? names[g] : "g" + std::to_string(g);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

int Presentation::generator_index(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------- parser

namespace {

class WordParser {
 public:
  WordParser(const std::string& text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  size_t pos() const { return i_; }
  void set_pos(size_t i) { i_ = i; }

  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }
  bool at_end() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(msg + " at offset " + std::to_string(i_) + " in \"" + s_ + "\"");
  }

  std::string ident() {
    skip();
    size_t st = i_;
    if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    }
    if (st == i_) fail("expected a generator name");
    return s_.substr(st, i_ - st);
  }

  // expr := term (('*')? term)*
  Word expr() {
    Word w = term();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i_;
        w = w * term();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == '[' || c == '1') {
        w = w * term();
      } else {
        break;
      }
    }
    return w;
  }

  Word term() {
    Word w = factor();
    while (peek() == '^') {
      ++i_;
      char c = peek();
      bool brace = false;
      if (c == '{') {
        ++i_;
        brace = true;
        c = peek();
      }
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        int sign = 1;
        if (c == '-') {
          sign = -1;
          ++i_;
          skip();
        }
        size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (st == i_) fail("malformed exponent");
        long long e = std::stoll(s_.substr(st, i_ - st));
        if (e > 1000000) fail("exponent too large");
        w = w.pow(static_cast<int>(sign * e));
      } else {
        Word v = factor();
        w = v.inverse() * w * v;
      }
      if (brace) expect('}');
    }
    return w;
  }

  Word factor() {
    char c = peek();
    if (c == '(') {
      ++i_;
      Word w = expr();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++i_;
      Word u = expr();
      expect(',');
      Word v = expr();
      expect(']');
      return u.inverse() * v.inverse() * u * v;
    }
    if (c == '1') {
      ++i_;
      if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("unexpected number");
      return Word{};
    }
    std::string name = ident();
    for (size_t g = 0; g < names_.size(); ++g)
      if (names_[g] == name) return Word::generator(static_cast<int>(g));
    fail("unknown generator " + name);
  }

 private:
  const std::string& s_;
  const std::vector<std::string>& names_;
  size_t i_ = 0;
};

}  // namespace

Presentation parse_presentation(const std::string& source) {
  Presentation P;
  std::string text;
  for (size_t i = 0; i < source.size(); ++i) {
    if (source[i] == '#') {
      while (i < source.size() && source[i] != '\n') ++i;
      if (i == source.size()) break;
    }
    text += source[i];
  }
  size_t lt = text.find('<');
  size_t bar = text.find('|', lt == std::string::npos ? 0 : lt);
  size_t gt = text.rfind('>');
  if (lt == std::string::npos || gt == std::string::npos || gt < lt)
    throw Error("presentation must have the form <generators | relators>");
  std::string gens = text.substr(lt + 1, (bar == std::string::npos || bar > gt ? gt : bar) - lt - 1);
  std::string rels = bar == std::string::npos || bar > gt ? "" : text.substr(bar + 1, gt - bar - 1);
  {
    std::vector<std::string> none;
    WordParser wp(gens, none);
    while (!wp.at_end()) {
      std::string name = wp.ident();
      if (P.generator_index(name) >= 0) throw Error("duplicate generator " + name);
      P.generators.push_back(name);
      if (wp.at_end()) break;
      wp.expect(',');
    }
  }
  if (P.generators.empty()) throw Error("presentation has no generators");
  WordParser wp(rels, P.generators);
  while (!wp.at_end()) {
    Word lhs = wp.expr();
    bool eq = false;
    while (wp.peek() == '=') {
      eq = true;
      wp.expect('=');
      Word rhs = wp.expr();
      Word r = lhs * rhs.inverse();
      if (!r.empty()) P.relators.push_back(r);
      lhs = rhs;
    }
    if (!eq && !lhs.empty()) P.relators.push_back(lhs);
    if (wp.at_end()) break;
    wp.expect(',');
  }
  return P;
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  WordParser wp(text, names);
  if (wp.at_end()) return Word{};
  Word w = wp.expr();
  if (!wp.at_end()) wp.fail("trailing input");
  return w;
}

// ---------------------------------------------------------------- finite groups

FiniteGroup::FiniteGroup(int order, std::vector<std::uint16_t> table, std::vector<int> generator_elements,
                         std::vector<std::string> generator_names)
    : n_(order), table_(std::move(table)), gens_(std::move(generator_elements)), names_(std::move(generator_names)) {
  if (n_ < 1 || n_ > kMaxOrder) throw Error("group order out of range: " + std::to_string(n_));
  if (table_.size() != static_cast<size_t>(n_) * n_) throw Error("multiplication table has wrong size");
  while (names_.size() < gens_.size()) names_.push_back("g" + std::to_string(names_.size()));
  finish();
}

void FiniteGroup::finish() {
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw Error("element 0 is not the identity");
  }
  for (int a = 0; a < n_; ++a) {
    if (inv_[a] >= 0) continue;
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inv_[a] = b;
        inv_[b] = a;
        break;
      }
    }
    if (inv_[a] < 0) throw Error("element without inverse");
  }
  parent_.assign(n_, -1);
  letter_.assign(n_, -1);
  std::vector<char> seen(n_, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int e = queue[qi];
    for (size_t g = 0; g < gens_.size(); ++g) {
      for (int s = 0; s < 2; ++s) {
        int x = s == 0 ? gens_[g] : inv_[gens_[g]];
        int f = mul(e, x);
        if (!seen[f]) {
          seen[f] = 1;
          parent_[f] = e;
          letter_[f] = static_cast<int>(2 * g + s);
          queue.push_back(f);
        }
      }
    }
  }
  if (static_cast<int>(queue.size()) != n_) throw Error("generators do not generate the group");
}

int FiniteGroup::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 0, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int FiniteGroup::generator(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return gens_[i];
  throw Error("no generator named " + name);
}

int FiniteGroup::eval(const Word& w) const { return eval(w, gens_); }

int FiniteGroup::eval(const Word& w, const std::vector<int>& assignment) const {
  int r = 0;
  for (auto [g, e] : w.syllables) {
    if (g < 0 || g >= static_cast<int>(assignment.size()) || assignment[g] < 0)
      throw Error("unassigned symbol in word");
    r = mul(r, pow(assignment[g], e));
  }
  return r;
}

Word FiniteGroup::word(int e) const {
  std::vector<int> ls;
  while (e != 0) {
    ls.push_back(letter_[e]);
    e = parent_[e];
  }
  Word w;
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) w.syllables.push_back({*it / 2, (*it % 2) ? -1 : 1});
  w.reduce();
  return w;
}

bool FiniteGroup::is_abelian() const {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (mul(gens_[i], gens_[j]) != mul(gens_[j], gens_[i])) return false;
  return true;
}

u32 FiniteGroup::act(int e, u32 point) const {
  if (action_.generators.size() != gens_.size()) throw Error("group has no attached permutation action");
  std::vector<int> ls;
  while (e != 0) {
    ls.push_back(letter_[e]);
    e = parent_[e];
  }
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const auto& perm = action_.generators[*it / 2];
    if (*it % 2 == 0) {
      point = perm[point];
    } else {
      // inverse image: walk the cycle
      u32 x = point;
      while (perm[x] != point) x = perm[x];
      point = x;
    }
  }
  return point;
}

int element_order(const FiniteGroup& G, int g) {
  if (g < 0 || g >= G.order()) throw Error("element index out of range");
  int k = 1, x = g;
  while (x != 0) {
    x = G.mul(x, g);
    ++k;
  }
  return k;
}

long long default_coset_budget() {
  if (const char* s = std::getenv("ZOMO_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && v > 0) return v;
  }
  return 100000;
}

// ---------------------------------------------------------------- coset enumeration

namespace {

class CosetTable {
 public:
  CosetTable(int ngens, long long capacity) : cols_(2 * ngens), cap_(capacity) {
    table_.assign(static_cast<size_t>(cols_), -1);
    fwd_.push_back(0);
  }

  static int inv_col(int c) { return c ^ 1; }

  int size() const { return static_cast<int>(fwd_.size()); }
  int live_count() const { return live_; }
  bool alive(int c) const { return fwd_[c] == c; }
  int& at(int c, int col) { return table_[static_cast<size_t>(c) * cols_ + col]; }

  // Returns -1 when the budget is exhausted.
  int define(int c, int col) {
    if (live_ >= cap_) return -1;
    int n = size();
    fwd_.push_back(n);
    table_.resize(table_.size() + cols_, -1);
    ++live_;
    at(c, col) = n;
    at(n, inv_col(col)) = c;
    return n;
  }

  int rep(int k) {
    int r = k;
    while (fwd_[r] != r) r = fwd_[r];
    while (fwd_[k] != r) {
      int nx = fwd_[k];
      fwd_[k] = r;
      k = nx;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    int lo = std::min(k, l), hi = std::max(k, l);
    fwd_[hi] = lo;
    --live_;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int e = queue[qi];
      for (int x = 0; x < cols_; ++x) {
        int f = at(e, x);
        if (f < 0) continue;
        int xi = inv_col(x);
        if (at(f, xi) == e) at(f, xi) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, xi) >= 0) {
          merge(e1, at(f1, xi), queue);
        } else {
          at(e1, x) = f1;
          at(f1, xi) = e1;
        }
      }
    }
  }

  // HLT scan of relator word from coset c, defining cosets as needed. Returns false on budget exhaustion.
  bool scan_and_fill(int c, const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    if (n == 0) return true;
    int f = c, b = c, i = 0, j = n - 1;
    while (true) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, inv_col(w[j])) >= 0) b = at(b, inv_col(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inv_col(w[i])) = f;
        return true;
      }
      if (define(f, w[i]) < 0) return false;
    }
  }

  // Scan without defining; records deductions and coincidences only.
  void scan(int c, const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    if (n == 0) return;
    int f = c, b = c, i = 0, j = n - 1;
    while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && at(b, inv_col(w[j])) >= 0) b = at(b, inv_col(w[j--]));
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      at(f, w[i]) = b;
      at(b, inv_col(w[i])) = f;
    }
  }

  // Renumber live cosets in breadth-first order from coset 0 (standard form).
  std::vector<int> standardize() {
    std::vector<int> num(size(), -1), order{0};
    num[0] = 0;
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int c = order[qi];
      for (int x = 0; x < cols_; ++x) {
        int d = at(c, x);
        if (d < 0) continue;
        d = rep(d);
        if (num[d] < 0) {
          num[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<int> out(order.size() * cols_, -1);
    for (size_t k = 0; k < order.size(); ++k)
      for (int x = 0; x < cols_; ++x) {
        int d = at(order[k], x);
        out[k * cols_ + x] = d < 0 ? -1 : num[rep(d)];
      }
    return out;
  }

  // Drop dead cosets, keeping numbering order.
  void compact() {
    std::vector<int> num(size(), -1);
    int k = 0;
    for (int c = 0; c < size(); ++c)
      if (alive(c)) num[c] = k++;
    std::vector<int> t(static_cast<size_t>(k) * cols_, -1);
    for (int c = 0; c < size(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        int d = at(c, x);
        t[static_cast<size_t>(num[c]) * cols_ + x] = d < 0 ? -1 : num[rep(d)];
      }
    }
    table_ = std::move(t);
    fwd_.resize(k);
    for (int c = 0; c < k; ++c) fwd_[c] = c;
    live_ = k;
  }

  int cols() const { return cols_; }

 private:
  int cols_;
  long long cap_;
  int live_ = 1;
  std::vector<int> table_;
  std::vector<int> fwd_;
};

}  // namespace

FiniteGroup coset_enumerate(const Presentation& p, long long max_cosets) {
  if (p.generators.empty()) throw Error("empty presentation");
  if (max_cosets < 1) throw Error("coset budget must be positive");
  int ng = static_cast<int>(p.generators.size());
  std::vector<std::vector<int>> rels;
  for (const auto& r : p.relators) {
    auto ls = r.letters();
    if (!ls.empty()) rels.push_back(ls);
  }
  CosetTable T(ng, max_cosets);
  bool lookahead_done = false;
  for (int c = 0; c < T.size(); ++c) {
    if (!T.alive(c)) continue;
    bool ok = true;
    for (const auto& r : rels) {
      if (!T.scan_and_fill(c, r)) {
        ok = false;
        break;
      }
      if (!T.alive(c)) break;
    }
    if (ok && T.alive(c)) {
      for (int x = 0; x < T.cols() && T.alive(c); ++x) {
        if (T.at(c, x) < 0 && T.define(c, x) < 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      lookahead_done = false;
      continue;
    }
    // Budget hit: look ahead by scanning every live coset without defining, then compact and retry.
    if (lookahead_done) throw Error("coset enumeration exceeded budget of " + std::to_string(max_cosets) + " cosets");
    for (int d = 0; d < T.size(); ++d) {
      for (const auto& r : rels) {
        if (!T.alive(d)) break;
        T.scan(d, r);
      }
    }
    int live_before_c = 0;
    for (int d = 0; d < c; ++d) live_before_c += T.alive(d);
    T.compact();
    lookahead_done = true;
    c = live_before_c - 1;
  }
  std::vector<int> tab = T.standardize();
  int n = static_cast<int>(tab.size() / T.cols());
  if (n > FiniteGroup::kMaxOrder) throw Error("group order " + std::to_string(n) + " exceeds table limit");
  for (int v : tab)
    if (v < 0) throw Error("coset table incomplete");
  // Spanning tree in standard order gives each coset a defining letter from a smaller coset.
  std::vector<int> parent(n, -1), letter(n, -1);
  {
    std::vector<char> seen(n, 0);
    std::vector<int> order{0};
    seen[0] = 1;
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int c = order[qi];
      for (int x = 0; x < T.cols(); ++x) {
        int d = tab[static_cast<size_t>(c) * T.cols() + x];
        if (!seen[d]) {
          seen[d] = 1;
          parent[d] = c;
          letter[d] = x;
          order.push_back(d);
        }
      }
    }
    std::vector<std::uint16_t> table(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) table[static_cast<size_t>(i) * n] = static_cast<std::uint16_t>(i);
    for (size_t k = 1; k < order.size(); ++k) {
      int j = order[k];
      for (int i = 0; i < n; ++i) {
        int left = table[static_cast<size_t>(i) * n + parent[j]];
        table[static_cast<size_t>(i) * n + j] = static_cast<std::uint16_t>(tab[static_cast<size_t>(left) * T.cols() + letter[j]]);
      }
    }
    std::vector<int> gens(ng);
    for (int g = 0; g < ng; ++g) gens[g] = tab[static_cast<size_t>(2 * g)];
    FiniteGroup G(n, std::move(table), gens, p.generators);
    PermutationAction act;
    act.degree = static_cast<u32>(n);
    for (int g = 0; g < ng; ++g) {
      std::vector<u32> perm(n);
      for (int c = 0; c < n; ++c) perm[c] = static_cast<u32>(tab[static_cast<size_t>(c) * T.cols() + 2 * g]);
      act.generators.push_back(std::move(perm));
    }
    G.set_action(std::move(act));
    return G;
  }
}

// ---------------------------------------------------------------- permutation groups

namespace {

struct PermHash {
  size_t operator()(const std::vector<u32>& v) const {
    u64 h = 1469598103934665603ull;
    for (u32 x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

FiniteGroup group_from_permutations(const std::vector<std::vector<u32>>& gens, std::vector<std::string> names) {
  if (gens.empty()) {
    FiniteGroup G(1, {0}, {}, {});
    return G;
  }
  size_t n = gens[0].size();
  for (const auto& g : gens) {
    if (g.size() != n) throw Error("generator permutations have different degrees");
    std::vector<char> hit(n, 0);
    for (u32 x : g) {
      if (x >= n || hit[x]) throw Error("generator is not a bijection");
      hit[x] = 1;
    }
  }
  std::vector<std::vector<u32>> elems;
  std::unordered_map<std::vector<u32>, int, PermHash> index;
  std::vector<u32> id(n);
  for (size_t i = 0; i < n; ++i) id[i] = static_cast<u32>(i);
  elems.push_back(id);
  index.emplace(id, 0);
  size_t ng = gens.size();
  std::vector<std::vector<int>> right;  // right[e][g] = e*g
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    std::vector<int> row(ng);
    for (size_t g = 0; g < ng; ++g) {
      std::vector<u32> c(n);
      const auto& e = elems[qi];
      for (size_t x = 0; x < n; ++x) c[x] = gens[g][e[x]];
      auto it = index.find(c);
      if (it == index.end()) {
        if (elems.size() >= static_cast<size_t>(FiniteGroup::kMaxOrder))
          throw Error("permutation group exceeds order limit " + std::to_string(FiniteGroup::kMaxOrder));
        int id2 = static_cast<int>(elems.size());
        index.emplace(c, id2);
        elems.push_back(std::move(c));
        row[g] = id2;
      } else {
        row[g] = it->second;
      }
    }
    right.push_back(std::move(row));
  }
  int N = static_cast<int>(elems.size());
  // Breadth-first tree over forward generators gives each element a word.
  std::vector<int> parent(N, -1), letter(N, -1), order{0};
  std::vector<char> seen(N, 0);
  seen[0] = 1;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int e = order[qi];
    for (size_t g = 0; g < ng; ++g) {
      int f = right[e][g];
      if (!seen[f]) {
        seen[f] = 1;
        parent[f] = e;
        letter[f] = static_cast<int>(g);
        order.push_back(f);
      }
    }
  }
  std::vector<std::uint16_t> table(static_cast<size_t>(N) * N);
  for (int i = 0; i < N; ++i) table[static_cast<size_t>(i) * N] = static_cast<std::uint16_t>(i);
  for (size_t k = 1; k < order.size(); ++k) {
    int j = order[k];
    for (int i = 0; i < N; ++i)
      table[static_cast<size_t>(i) * N + j] = static_cast<std::uint16_t>(right[table[static_cast<size_t>(i) * N + parent[j]]][letter[j]]);
  }
  std::vector<int> gen_elems(ng);
  for (size_t g = 0; g < ng; ++g) gen_elems[g] = right[0][g];
  FiniteGroup G(N, std::move(table), gen_elems, std::move(names));
  PermutationAction act;
  act.degree = static_cast<u32>(n);
  act.generators = gens;
  G.set_action(std::move(act));
  return G;
}

}  // namespace zomo
