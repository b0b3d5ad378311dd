#include "zomo/poly.hpp"

#include <cctype>

namespace zomo {

Poly::Poly(u32 p, std::vector<u32> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

Poly Poly::constant(u32 p, u32 c) { return Poly(p, {c % p}); }

Poly Poly::monomial(u32 p, u32 c, int deg) {
  std::vector<u32> v(deg + 1, 0);
  v[deg] = c % p;
  return Poly(p, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  const Poly& a = c_.size() >= o.c_.size() ? *this : o;
  const Poly& b = c_.size() >= o.c_.size() ? o : *this;
  Poly r = a;
  r.p_ = p_ ? p_ : o.p_;
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = add_mod(r.c_[i], b.c_[i], r.p_);
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = neg_mod(c, p_);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  u32 p = p_ ? p_ : o.p_;
  if (c_.empty() || o.c_.empty()) return Poly(p);
  std::vector<u64> acc(c_.size() + o.c_.size() - 1, 0);
  // Accumulate in 64 bits and reduce lazily; p < 2^31 so each product < 2^62.
  const u64 limit = ~0ull - static_cast<u64>(p - 1) * (p - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    u64 a = c_[i];
    if (a == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      u64& t = acc[i + j];
      t += a * o.c_[j];
      if (t >= limit) t %= p;
    }
  }
  std::vector<u32> out(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<u32>(acc[i] % p);
  return Poly(p, std::move(out));
}

Poly Poly::scaled(u32 c) const {
  Poly r = *this;
  for (auto& x : r.c_) x = mul_mod(x, c, p_);
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(inv_mod(lead(), p_));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(p_);
  std::vector<u32> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = mul_mod(c_[i], static_cast<u32>(i % p_), p_);
  return Poly(p_, std::move(d));
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(p_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::rescale_var(u32 c) const {
  Poly r = *this;
  u32 f = 1;
  for (auto& x : r.c_) {
    x = mul_mod(x, f, p_);
    f = mul_mod(f, c, p_);
  }
  r.trim();
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  u32 p = b.p_;
  std::vector<u32> rem = a.c_;
  std::vector<u32> quo(rem.size() >= b.c_.size() ? rem.size() - b.c_.size() + 1 : 0, 0);
  u32 li = inv_mod(b.lead(), p);
  size_t db = b.c_.size();
  while (rem.size() >= db) {
    u32 c = mul_mod(rem.back(), li, p);
    size_t sh = rem.size() - db;
    quo[sh] = c;
    if (c)
      for (size_t i = 0; i < db; ++i) rem[i + sh] = sub_mod(rem[i + sh], mul_mod(c, b.c_[i], p), p);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.size() < db) break;
  }
  q = Poly(p, std::move(quo));
  r = Poly(p, std::move(rem));
}

Poly Poly::operator/(const Poly& b) const {
  Poly q, r;
  divmod(*this, b, q, r);
  return q;
}

Poly Poly::operator%(const Poly& b) const {
  Poly q, r;
  divmod(*this, b, q, r);
  return r;
}

u32 Poly::eval(u32 x) const {
  u64 v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = (v * x + c_[i]) % p_;
  return static_cast<u32>(v);
}

u32 Poly::eval(const GF& F, u32 x) const {
  u32 v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = F.add(F.mul(v, x), c_[i]);
  return v;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    u32 c = c_[i];
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (c != 1 || i == 0) s += std::to_string(c);
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  u32 p = a.prime() ? a.prime() : b.prime();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(p, 1), s1(p), t0(p), t1 = Poly::constant(p, 1);
  while (!r1.is_zero()) {
    Poly q, r;
    Poly::divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  u32 li = inv_mod(r0.lead(), p);
  s = s0.scaled(li);
  t = t0.scaled(li);
  return r0.scaled(li);
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.prime(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  u32 p = den_.prime();
  if (num_.is_zero()) {
    num_ = Poly(p);
    den_ = Poly::constant(p, 1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  u32 lc = den_.lead();
  if (lc != 1) {
    u32 li = inv_mod(lc, p);
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inv() const {
  if (num_.is_zero()) throw Error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

namespace {
bool multi_term(const Poly& f) {
  int n = 0;
  for (u32 c : f.coeffs()) n += c != 0;
  return n > 1;
}
}  // namespace

std::string RatFunc::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  std::string n = num_.str(var), d = den_.str(var);
  if (multi_term(num_)) n = "(" + n + ")";
  if (multi_term(den_) || den_.lead() != 1) d = "(" + d + ")";
  return n + "/" + d;
}

Poly parse_poly(const std::string& text, const std::string& var, u32 p) {
  Poly out(p);
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
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
      skip();
    } else if (!first) {
      throw Error("expected '+' or '-' in polynomial: " + text);
    }
    first = false;
    u64 coeff = 1;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coeff = (coeff * 10 + static_cast<u64>(text[i] - '0')) % p;
        ++i;
      }
      have_coeff = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    int deg = 0;
    if (text.compare(i, var.size(), var) == 0) {
      i += var.size();
      deg = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        if (i < text.size() && text[i] == '{') ++i;
        size_t st = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (st == i) throw Error("malformed exponent in polynomial: " + text);
        deg = std::stoi(text.substr(st, i - st));
        if (i < text.size() && text[i] == '}') ++i;
      }
    } else if (!have_coeff) {
      throw Error("unexpected token in polynomial: " + text.substr(i));
    }
    u32 c = static_cast<u32>(coeff % p);
    if (neg) c = neg_mod(c, p);
    out = out + Poly::monomial(p, c, deg);
  }
  return out;
}

}  // namespace zomo
