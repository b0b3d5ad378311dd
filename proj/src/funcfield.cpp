#include "zomo/funcfield.hpp"

#include <algorithm>

#include "zomo/mpoly.hpp"

namespace zomo {

namespace {

Poly lcm(const Poly& a, const Poly& b) { return (a * b) / gcd(a, b); }

RatFunc rzero(u32 p) { return RatFunc(p); }
RatFunc rone(u32 p) { return RatFunc(Poly::constant(p, 1)); }

// Univariate polynomials over F_p(u), used for inversion modulo m.
using RPoly = std::vector<RatFunc>;

void rtrim(RPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

RPoly rsub(const RPoly& a, const RPoly& b, u32 p) {
  RPoly r(std::max(a.size(), b.size()), rzero(p));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  rtrim(r);
  return r;
}

RPoly rmul(const RPoly& a, const RPoly& b, u32 p) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, rzero(p));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  rtrim(r);
  return r;
}

void rdivmod(RPoly a, const RPoly& b, RPoly& q, RPoly& r, u32 p) {
  rtrim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, rzero(p));
  RatFunc li = b.back().inv();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t d = a.size() - b.size();
    RatFunc c = a.back() * li;
    q[d] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + d] = a[i + d] - c * b[i];
    a.pop_back();
    rtrim(a);
  }
  rtrim(q);
  r = a;
}

// Truncated power series over a finite field.
struct Series {
  const GF* F;
  int n;

  using V = std::vector<u32>;
  V zero() const { return V(n, 0); }
  V constant(u32 c) const {
    V r(n, 0);
    r[0] = c;
    return r;
  }
  V add(const V& a, const V& b) const {
    V r(n);
    for (int i = 0; i < n; ++i) r[i] = F->add(a[i], b[i]);
    return r;
  }
  V sub(const V& a, const V& b) const {
    V r(n);
    for (int i = 0; i < n; ++i) r[i] = F->sub(a[i], b[i]);
    return r;
  }
  V mul(const V& a, const V& b) const {
    V r(n, 0);
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j < n; ++j)
        if (b[j]) r[i + j] = F->add(r[i + j], F->mul(a[i], b[j]));
    }
    return r;
  }
  V inv(const V& a) const {
    if (a[0] == 0) throw Error("series inverse of a non-unit");
    V b(n, 0);
    u32 i0 = F->inv(a[0]);
    b[0] = i0;
    for (int k = 1; k < n; ++k) {
      u32 s = 0;
      for (int i = 1; i <= k; ++i)
        if (a[i] && b[k - i]) s = F->add(s, F->mul(a[i], b[k - i]));
      b[k] = F->neg(F->mul(s, i0));
    }
    return b;
  }
  // Poly over F_p evaluated at a series.
  V eval(const Poly& f, const V& s) const {
    V r = zero();
    for (int d = f.degree(); d >= 0; --d) {
      r = mul(r, s);
      r[0] = F->add(r[0], f[d]);
    }
    return r;
  }
  // Polynomial with series coefficients evaluated at a series.
  V eval(const std::vector<V>& g, const V& s) const {
    V r = zero();
    for (int d = static_cast<int>(g.size()) - 1; d >= 0; --d) r = add(mul(r, s), g[d]);
    return r;
  }
  static int order(const V& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i]) return static_cast<int>(i);
    return -1;
  }
};

u32 eval_poly(const GF& F, const Poly& f, u32 x) { return f.eval(F, x); }

}  // namespace

// ---- FunctionField ----

std::shared_ptr<const FunctionField> FunctionField::make(u32 p, std::vector<RatFunc> lower, std::string base,
                                                         std::string gen) {
  if (lower.empty()) throw Error("function field modulus must have positive degree");
  auto f = std::shared_ptr<FunctionField>(new FunctionField());
  f->p_ = p;
  f->lower_ = std::move(lower);
  f->base_ = std::move(base);
  f->gen_ = std::move(gen);
  Poly L = Poly::constant(p, 1);
  for (const auto& c : f->lower_) {
    if (c.prime() != p) throw Error("modulus coefficient over the wrong prime");
    L = lcm(L, c.den());
  }
  for (const auto& c : f->lower_) f->cleared_.push_back(c.num() * (L / c.den()));
  f->cleared_.push_back(L);
  return f;
}

std::shared_ptr<const FunctionField> FunctionField::parse(u32 p, const std::string& modulus, std::string base,
                                                          std::string gen) {
  MPoly m = parse_mpoly(modulus, {base, gen}, p);
  auto rows = m.coefficients_in(1);
  if (rows.size() < 2) throw Error("modulus has no positive power of " + gen + ": " + modulus);
  auto to_poly = [&](const MPoly& r) {
    std::vector<u32> c(std::max(0, r.degree_in(0)) + 1, 0);
    for (const auto& [e, a] : r.terms()) c[e[0]] = a;
    return Poly(p, c);
  };
  Poly lead = to_poly(rows.back());
  std::vector<RatFunc> lower;
  for (std::size_t j = 0; j + 1 < rows.size(); ++j) lower.emplace_back(to_poly(rows[j]), lead);
  return make(p, std::move(lower), std::move(base), std::move(gen));
}

std::string FunctionField::modulus_str() const {
  MPoly m(p_, 2);
  for (std::size_t j = 0; j < cleared_.size(); ++j)
    for (int d = 0; d <= cleared_[j].degree(); ++d)
      if (cleared_[j][d]) m.add_term({d, static_cast<int>(j)}, cleared_[j][d]);
  return m.str({base_, gen_});
}

FFElem FunctionField::zero() const { return FFElem(shared_from_this(), {}); }
FFElem FunctionField::one() const { return constant(1); }
FFElem FunctionField::constant(long long c) const {
  return FFElem(shared_from_this(), {RatFunc(Poly::constant(p_, reduce_signed(c, p_)))});
}
FFElem FunctionField::base() const { return FFElem(shared_from_this(), {RatFunc(Poly::variable(p_))}); }
FFElem FunctionField::gen() const { return FFElem(shared_from_this(), {rzero(p_), rone(p_)}); }
FFElem FunctionField::from(const RatFunc& r) const { return FFElem(shared_from_this(), {r}); }
FFElem FunctionField::from_coeffs(std::vector<RatFunc> c) const { return FFElem(shared_from_this(), std::move(c)); }

// ---- FFElem ----

FFElem::FFElem(FieldPtr f, std::vector<RatFunc> c) : f_(std::move(f)), c_(std::move(c)) {
  u32 p = f_->prime();
  int n = f_->degree();
  for (auto& r : c_)
    if (r.prime() == 0) r = rzero(p);
  // Reduce v^k for k >= n using v^n = -sum c_j v^j.
  for (int k = static_cast<int>(c_.size()) - 1; k >= n; --k) {
    if (c_[k].is_zero()) continue;
    RatFunc top = c_[k];
    for (int j = 0; j < n; ++j) c_[k - n + j] = c_[k - n + j] - top * f_->lower()[j];
  }
  c_.resize(n, rzero(p));
  for (auto& r : c_)
    if (r.prime() == 0) r = rzero(p);
}

void FFElem::check(const FFElem& o) const {
  if (!f_ || !o.f_) throw Error("uninitialized function field element");
  if (f_ != o.f_ && !(f_->prime() == o.f_->prime() && f_->lower() == o.f_->lower()))
    throw Error("function field mismatch");
}

bool FFElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const RatFunc& r) { return r.is_zero(); });
}

bool FFElem::is_one() const {
  if (c_.empty() || !(c_[0].num().is_one() && c_[0].den().is_one())) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const RatFunc& r) { return r.is_zero(); });
}

FFElem FFElem::operator+(const FFElem& o) const {
  check(o);
  std::vector<RatFunc> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return FFElem(f_, std::move(r));
}

FFElem FFElem::operator-() const {
  std::vector<RatFunc> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return FFElem(f_, std::move(r));
}

FFElem FFElem::operator-(const FFElem& o) const { return *this + (-o); }

FFElem FFElem::operator*(const FFElem& o) const {
  check(o);
  u32 p = f_->prime();
  std::size_t n = c_.size();
  std::vector<RatFunc> r(2 * n - 1, rzero(p));
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!o.c_[j].is_zero()) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return FFElem(f_, std::move(r));
}

FFElem FFElem::scaled(u32 c) const {
  RatFunc k(Poly::constant(f_->prime(), c));
  std::vector<RatFunc> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
  return FFElem(f_, std::move(r));
}

FFElem FFElem::inv() const {
  if (is_zero()) throw Error("inverse of the zero function");
  u32 p = f_->prime();
  RPoly m(f_->lower().begin(), f_->lower().end());
  m.push_back(rone(p));
  RPoly a = c_;
  rtrim(a);
  // Extended Euclid: track s with s*a = r (mod m).
  RPoly r0 = m, r1 = a, s0 = {}, s1 = {rone(p)};
  while (!r1.empty()) {
    RPoly q, r;
    rdivmod(r0, r1, q, r, p);
    RPoly s2 = rsub(s0, rmul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw Error("element shares a factor with the modulus; the modulus is reducible over F_p(u)");
  RatFunc g = r0[0].inv();
  for (auto& c : s0) c = c * g;
  return FFElem(f_, s0);
}

FFElem FFElem::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  FFElem r = f_->one(), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool FFElem::operator==(const FFElem& o) const {
  check(o);
  return c_ == o.c_;
}

std::string FFElem::str() const {
  if (is_zero()) return "0";
  std::string out;
  const std::string& v = f_->gen_name();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const RatFunc& c = c_[i];
    if (c.is_zero()) continue;
    std::string s = c.str(f_->base_name());
    std::string term;
    if (i == 0) {
      term = s;
    } else {
      std::string mono = i == 1 ? v : v + "^" + std::to_string(i);
      if (c.num().is_one() && c.den().is_one())
        term = mono;
      else if (c.den().is_one())
        term = (s.find(" + ") != std::string::npos ? "(" + s + ")" : s) + mono;
      else if (s.front() == '(' && s.back() == ')')
        term = s + mono;
      else
        term = "(" + s + ")" + mono;
    }
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

FFElem ff_add(const FFElem& a, const FFElem& b) { return a + b; }
FFElem ff_mul(const FFElem& a, const FFElem& b) { return a * b; }
FFElem ff_inv(const FFElem& a) { return a.inv(); }

u32 evaluate(const FFElem& a, const GF& F, u32 u, u32 v) {
  u32 s = 0, vp = 1;
  for (const RatFunc& c : a.coeffs()) {
    if (!c.is_zero()) {
      u32 d = eval_poly(F, c.den(), u);
      if (d == 0) throw Error("denominator vanishes at the evaluation point");
      s = F.add(s, F.mul(F.div(eval_poly(F, c.num(), u), d), vp));
    }
    vp = F.mul(vp, v);
  }
  return s;
}

// ---- endomorphisms ----

FFElem substitute(const RatFunc& r, const FFElem& at) {
  auto horner = [&](const Poly& f) {
    FFElem acc = at.field()->zero();
    for (int d = f.degree(); d >= 0; --d) acc = acc * at + at.field()->constant(f[d]);
    return acc;
  };
  if (r.den().is_one()) return horner(r.num());
  return horner(r.num()) / horner(r.den());
}

Endo::Endo(FFElem base_img, FFElem gen_img) : bu_(std::move(base_img)), gv_(std::move(gen_img)) {
  const FieldPtr& f = bu_.field();
  FFElem m = gv_.pow(f->degree());
  for (int j = 0; j < f->degree(); ++j) m = m + substitute(f->lower()[j], bu_) * gv_.pow(j);
  if (!m.is_zero()) throw Error("endomorphism images do not satisfy the defining equation");
}

Endo Endo::identity(const FieldPtr& f) { return Endo(f->base(), f->gen()); }

Endo Endo::then(const Endo& o) const { return Endo(apply_endo(o, bu_), apply_endo(o, gv_)); }

FFElem apply_endo(const Endo& e, const FFElem& f) {
  FFElem acc = f.field()->zero();
  FFElem vp = f.field()->one();
  for (int i = 0; i < f.field()->degree(); ++i) {
    if (!f.coeff(i).is_zero()) acc = acc + substitute(f.coeff(i), e.base_img()) * vp;
    if (i + 1 < f.field()->degree()) vp = vp * e.gen_img();
  }
  return acc;
}

// ---- valuations ----

bool on_curve(const FieldPtr& f, const GF& F, u32 u, u32 v) {
  u32 s = 0, vp = 1;
  for (const Poly& row : f->cleared()) {
    s = F.add(s, F.mul(eval_poly(F, row, u), vp));
    vp = F.mul(vp, v);
  }
  return s == 0;
}

namespace {

void partials(const FieldPtr& f, const GF& F, u32 u, u32 v, u32& mu, u32& mv) {
  mu = mv = 0;
  const auto& rows = f->cleared();
  u32 vp = 1;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    mu = F.add(mu, F.mul(eval_poly(F, rows[j].derivative(), u), vp));
    if (j + 1 < rows.size()) {
      u32 jj = F.from_int(static_cast<long long>(j + 1));
      mv = F.add(mv, F.mul(F.mul(jj, eval_poly(F, rows[j + 1], u)), vp));
    }
    vp = F.mul(vp, v);
  }
}

}  // namespace

bool is_nonsingular(const FieldPtr& f, const GF& F, u32 u, u32 v) {
  if (!on_curve(f, F, u, v)) return false;
  u32 mu, mv;
  partials(f, F, u, v, mu, mv);
  return mu != 0 || mv != 0;
}

int valuation_at(const FFElem& f, const GF& F, u32 u, u32 v, int prec) {
  const FieldPtr& K = f.field();
  if (F.p() != K->prime()) throw Error("valuation: field characteristic mismatch");
  if (f.is_zero()) throw Error("valuation of the zero function");
  if (!on_curve(K, F, u, v)) throw Error("valuation: point is not on the curve");
  u32 mu, mv;
  partials(K, F, u, v, mu, mv);
  if (mu == 0 && mv == 0) throw Error("valuation: singular point");

  // N/D with N = sum (num_i * D/den_i) v^i.
  u32 p = K->prime();
  Poly D = Poly::constant(p, 1);
  for (const RatFunc& c : f.coeffs())
    if (!c.is_zero()) D = lcm(D, c.den());
  std::vector<Poly> N;
  for (const RatFunc& c : f.coeffs()) N.push_back(c.is_zero() ? Poly(p) : c.num() * (D / c.den()));

  for (int n = std::max(prec, 8); n <= 512; n *= 2) {
    Series S{&F, n};
    Series::V us, vs;
    const auto& rows = K->cleared();
    if (mv != 0) {
      // t = u - u0; solve for v(t).
      us = S.zero();
      us[0] = u;
      if (n > 1) us[1] = 1;
      std::vector<Series::V> g;
      for (const Poly& row : rows) g.push_back(S.eval(row, us));
      std::vector<Series::V> dg;
      for (std::size_t j = 1; j < g.size(); ++j) {
        Series::V c = g[j];
        u32 jj = F.from_int(static_cast<long long>(j));
        for (auto& x : c) x = F.mul(x, jj);
        dg.push_back(c);
      }
      vs = S.constant(v);
      for (int k = 1; k < 2 * n; k *= 2) vs = S.sub(vs, S.mul(S.eval(g, vs), S.inv(S.eval(dg, vs))));
    } else {
      // t = v - v0; solve for u(t) from sum_j rows[j](u) (v0+t)^j = 0.
      vs = S.zero();
      vs[0] = v;
      if (n > 1) vs[1] = 1;
      int du = 0;
      for (const Poly& row : rows) du = std::max(du, row.degree());
      std::vector<Series::V> g(du + 1, S.zero());
      Series::V vp = S.constant(1);
      for (const Poly& row : rows) {
        for (int i = 0; i <= row.degree(); ++i) {
          if (row[i] == 0) continue;
          Series::V term = vp;
          for (auto& x : term) x = F.mul(x, row[i]);
          g[i] = S.add(g[i], term);
        }
        vp = S.mul(vp, vs);
      }
      std::vector<Series::V> dg;
      for (std::size_t i = 1; i < g.size(); ++i) {
        Series::V c = g[i];
        u32 ii = F.from_int(static_cast<long long>(i));
        for (auto& x : c) x = F.mul(x, ii);
        dg.push_back(c);
      }
      us = S.constant(u);
      for (int k = 1; k < 2 * n; k *= 2) us = S.sub(us, S.mul(S.eval(g, us), S.inv(S.eval(dg, us))));
    }
    Series::V num = S.zero(), vp = S.constant(1);
    for (const Poly& c : N) {
      if (!c.is_zero()) num = S.add(num, S.mul(S.eval(c, us), vp));
      vp = S.mul(vp, vs);
    }
    Series::V den = S.eval(D, us);
    int on = Series::order(num), od = Series::order(den);
    if (on >= 0 && od >= 0) return on - od;
  }
  throw Error("valuation: precision exhausted");
}

// ---- bivariate identity ----

BiPoly BiPoly::from(u32 p, std::vector<std::vector<long long>> c) {
  BiPoly r{p, {}};
  for (auto& row : c) {
    std::vector<u32> out;
    for (long long x : row) out.push_back(reduce_signed(x, p));
    r.c.push_back(out);
  }
  return r;
}

namespace {
BiPoly normalized(BiPoly a) {
  std::size_t w = 0;
  for (auto& row : a.c) {
    while (!row.empty() && row.back() == 0) row.pop_back();
    w = std::max(w, row.size());
  }
  for (auto& row : a.c) row.resize(w, 0);
  while (!a.c.empty() && std::all_of(a.c.back().begin(), a.c.back().end(), [](u32 x) { return x == 0; }))
    a.c.pop_back();
  return a;
}
}  // namespace

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r{p, std::vector<std::vector<u32>>(std::max(c.size(), o.c.size()))};
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    std::size_t w = std::max(i < c.size() ? c[i].size() : 0, i < o.c.size() ? o.c[i].size() : 0);
    r.c[i].assign(w, 0);
    for (std::size_t j = 0; j < w; ++j) {
      u32 a = i < c.size() && j < c[i].size() ? c[i][j] : 0;
      u32 b = i < o.c.size() && j < o.c[i].size() ? o.c[i][j] : 0;
      r.c[i][j] = add_mod(a, b, p);
    }
  }
  return normalized(r);
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly n = o;
  for (auto& row : n.c)
    for (auto& x : row) x = neg_mod(x, p);
  return *this + n;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r{p, {}};
  if (c.empty() || o.c.empty()) return r;
  std::size_t w1 = 0, w2 = 0;
  for (auto& row : c) w1 = std::max(w1, row.size());
  for (auto& row : o.c) w2 = std::max(w2, row.size());
  r.c.assign(c.size() + o.c.size() - 1, std::vector<u32>(w1 + w2, 0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j) {
      if (!c[i][j]) continue;
      for (std::size_t k = 0; k < o.c.size(); ++k)
        for (std::size_t l = 0; l < o.c[k].size(); ++l)
          r.c[i + k][j + l] = add_mod(r.c[i + k][j + l], mul_mod(c[i][j], o.c[k][l], p), p);
    }
  return normalized(r);
}

bool BiPoly::operator==(const BiPoly& o) const { return p == o.p && normalized(*this).c == normalized(o).c; }

bool BiPoly::is_zero() const { return normalized(*this).c.empty(); }

IdentityCheck cubic_factorization_identity(u32 p) {
  // a^i as rows, b^j as columns.
  auto A = [&](std::vector<long long> cs) {
    std::vector<std::vector<long long>> c;
    for (long long x : cs) c.push_back({x});
    return BiPoly::from(p, c);
  };
  auto B = [&](std::vector<long long> cs) { return BiPoly::from(p, {cs}); };
  BiPoly lhs = A({-1, -3, 0, 1}) * B({0, 1, 1}) - A({0, 1, 1}) * B({-1, -3, 0, 1});
  BiPoly a_minus_b = BiPoly::from(p, {{0, -1}, {1}});
  BiPoly ab_b_1 = BiPoly::from(p, {{1, 1}, {0, 1}});
  BiPoly ab_a_1 = BiPoly::from(p, {{1}, {1, 1}});
  BiPoly rhs = a_minus_b * ab_b_1 * ab_a_1;
  return {lhs, rhs, lhs == rhs};
}

}  // namespace zomo
