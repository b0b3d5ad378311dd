#include "zomo/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace zomo {

MPoly MPoly::constant(u32 p, int nvars, u32 c) {
  MPoly r(p, nvars);
  r.add_term(Exponents(nvars, 0), c % p);
  return r;
}

MPoly MPoly::variable(u32 p, int nvars, int i) {
  MPoly r(p, nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  r.add_term(e, 1);
  return r;
}

MPoly MPoly::from_poly(const Poly& f, int nvars, int i) {
  MPoly r(f.prime(), nvars);
  for (int d = 0; d <= f.degree(); ++d) {
    if (f[d] == 0) continue;
    Exponents e(nvars, 0);
    e[i] = d;
    r.add_term(e, f[d]);
  }
  return r;
}

void MPoly::add_term(const Exponents& e, u32 c) {
  if (static_cast<int>(e.size()) != n_) throw Error("monomial arity mismatch");
  c %= p_;
  if (c == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second = add_mod(it->second, c, p_);
  if (it->second == 0) t_.erase(it);
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int MPoly::degree_in(int i) const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e[i]);
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : t_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  if (r.p_ == 0) r = MPoly(o.p_, o.n_);
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(p_, n_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, neg_mod(c, p_));
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(p_ ? p_ : o.p_, n_ ? n_ : o.n_);
  for (const auto& [e1, c1] : t_) {
    for (const auto& [e2, c2] : o.t_) {
      Exponents e(n_);
      for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, mul_mod(c1, c2, p_));
    }
  }
  return r;
}

MPoly MPoly::scaled(u32 c) const {
  MPoly r(p_, n_);
  for (const auto& [e, a] : t_) r.add_term(e, mul_mod(a, c % p_, p_));
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(p_, n_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

MPoly MPoly::derivative(int i) const {
  MPoly r(p_, n_);
  for (const auto& [e, c] : t_) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    r.add_term(f, mul_mod(c, static_cast<u32>(e[i] % p_), p_));
  }
  return r;
}

u32 MPoly::eval(const GF& F, const std::vector<u32>& pt) const {
  if (static_cast<int>(pt.size()) != n_) throw Error("evaluation point arity mismatch");
  // Powers cached per variable up to the needed degree.
  std::vector<std::vector<u32>> pw(n_);
  for (int i = 0; i < n_; ++i) {
    int d = std::max(0, degree_in(i));
    pw[i].resize(d + 1);
    pw[i][0] = 1;
    for (int k = 1; k <= d; ++k) pw[i][k] = F.mul(pw[i][k - 1], pt[i]);
  }
  u32 s = 0;
  for (const auto& [e, c] : t_) {
    u32 m = c;
    for (int i = 0; i < n_ && m; ++i)
      if (e[i]) m = F.mul(m, pw[i][e[i]]);
    s = F.add(s, m);
  }
  return s;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != n_) throw Error("composition arity mismatch");
  int m = images.empty() ? 0 : images[0].nvars();
  MPoly r(p_, m);
  std::vector<std::map<int, MPoly>> cache(n_);
  auto power = [&](int i, int k) -> const MPoly& {
    auto it = cache[i].find(k);
    if (it != cache[i].end()) return it->second;
    return cache[i].emplace(k, images[i].pow(k)).first->second;
  };
  for (const auto& [e, c] : t_) {
    MPoly term = constant(p_, m, c);
    for (int i = 0; i < n_; ++i)
      if (e[i]) term = term * power(i, e[i]);
    r = r + term;
  }
  return r;
}

std::vector<MPoly> MPoly::coefficients_in(int i) const {
  std::vector<MPoly> out(std::max(0, degree_in(i)) + 1, MPoly(p_, n_));
  for (const auto& [e, c] : t_) {
    Exponents f = e;
    f[i] = 0;
    out[e[i]].add_term(f, c);
  }
  return out;
}

MPoly MPoly::homogenize() const {
  int d = total_degree();
  MPoly r(p_, n_ + 1);
  for (const auto& [e, c] : t_) {
    Exponents f = e;
    f.push_back(d - std::accumulate(e.begin(), e.end(), 0));
    r.add_term(f, c);
  }
  return r;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Exponents, u32>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string s;
  for (const auto& [e, c] : v) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += std::to_string(c);
    else if (c == 1)
      s += mono;
    else
      s += std::to_string(c) + mono;
  }
  return s;
}

MPoly parse_mpoly(const std::string& text, const std::vector<std::string>& names, u32 p) {
  int n = static_cast<int>(names.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return names[a].size() > names[b].size(); });
  MPoly out(p, n);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() {
    u64 v = 0;
    std::size_t st = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = (v * 10 + static_cast<u64>(text[i] - '0')) % p;
      ++i;
    }
    if (st == i) throw Error("expected a number in polynomial: " + text);
    return v;
  };
  auto integer = [&]() {
    std::size_t st = i;
    if (i < text.size() && text[i] == '{') ++i;
    std::size_t a = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (a == i) throw Error("malformed exponent in polynomial: " + text.substr(st));
    int v = std::stoi(text.substr(a, i - a));
    if (i < text.size() && text[i] == '}') ++i;
    return v;
  };
  skip();
  if (i >= text.size()) throw Error("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
      neg = text[i] == '-';
      ++i;
    } else if (!first) {
      throw Error("expected '+' or '-' in polynomial at: " + text.substr(i));
    }
    first = false;
    u64 coeff = 1;
    Exponents e(n, 0);
    bool any = false;
    while (true) {
      skip();
      if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
      if (text[i] == '*') {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        coeff = coeff * number() % p;
        any = true;
        continue;
      }
      int hit = -1;
      for (int k : order)
        if (text.compare(i, names[k].size(), names[k]) == 0) {
          hit = k;
          break;
        }
      if (hit < 0) throw Error("unexpected token in polynomial at: " + text.substr(i));
      i += names[hit].size();
      skip();
      int d = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        d = integer();
      }
      e[hit] += d;
      any = true;
    }
    if (!any) throw Error("empty term in polynomial: " + text);
    u32 c = static_cast<u32>(coeff % p);
    out.add_term(e, neg ? neg_mod(c, p) : c);
  }
  return out;
}

}  // namespace zomo
