#include "zomo/field.hpp"

#include <algorithm>

namespace zomo {

u32 pow_mod(u32 a, u64 e, u32 p) {
  u64 r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 inv_mod(u32 a, u32 p) {
  long long t = 0, nt = 1, r = p, nr = a % p;
  if (nr == 0) throw Error("inverse of zero mod " + std::to_string(p));
  while (nr) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw Error("not invertible mod " + std::to_string(p));
  return static_cast<u32>(t < 0 ? t + p : t);
}

u32 reduce_signed(long long v, u32 p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<u32>(r < 0 ? r + p : r);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Vec = std::vector<u32>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic-or-not b over F_p.
Vec prime_rem(Vec a, const Vec& b, u32 p) {
  trim(a);
  u32 li = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    u32 c = mul_mod(a.back(), li, p);
    size_t sh = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + sh] = sub_mod(a[i + sh], mul_mod(c, b[i], p), p);
    trim(a);
  }
  return a;
}

bool prime_irreducible(const Vec& f, u32 p) {
  int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    u64 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
      Vec g(d + 1, 0);
      u64 v = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<u32>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (prime_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<u32> least_irreducible(u32 p, int k) {
  if (k < 1) throw Error("extension degree must be positive");
  if (k == 1) return {0, 1};
  u64 count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (u64 idx = 0; idx < count; ++idx) {
    // idx enumerates (c_{k-1}, ..., c_0) lexicographically, most significant first.
    Vec f(k + 1, 0);
    u64 v = idx;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<u32>(v % p);
      v /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;
    if (prime_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");
}

GF::GF(u32 p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw Error("field characteristic must be prime: " + std::to_string(p));
  if (k < 1) throw Error("extension degree must be positive");
  u64 q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > (1u << 24)) throw Error("field too large for table arithmetic");
  q_ = static_cast<u32>(q);
  modulus_ = least_irreducible(p, k);
  exp_.assign(q_ - 1 == 0 ? 1 : q_ - 1, 0);
  log_.assign(q_, 0);
  auto factors = prime_factors(q_ - 1);
  for (u32 g = 1; g < q_; ++g) {
    bool primitive = true;
    for (u64 f : factors) {
      u64 e = (q_ - 1) / f;
      u32 r = 1, b = g;
      while (e) {
        if (e & 1) r = slow_mul(r, b);
        b = slow_mul(b, b);
        e >>= 1;
      }
      if (r == 1) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    u32 x = 1;
    for (u32 i = 0; i + 1 < q_; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = slow_mul(x, g);
    }
    return;
  }
  if (q_ == 2) {
    exp_[0] = 1;
    return;
  }
  throw Error("no primitive element found");
}

u32 GF::slow_mul(u32 a, u32 b) const {
  if (k_ == 1) return mul_mod(a, b, p_);
  Vec x(k_), y(k_);
  for (int i = 0; i < k_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  Vec r(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) r[i + j] = add_mod(r[i + j], mul_mod(x[i], y[j], p_), p_);
  r = prime_rem(r, modulus_, p_);
  u32 out = 0;
  for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) out = out * p_ + r[i];
  return out;
}

u32 GF::add(u32 a, u32 b) const {
  if (k_ == 1) return add_mod(a, b, p_);
  u32 out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += add_mod(a % p_, b % p_, p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

u32 GF::neg(u32 a) const {
  if (k_ == 1) return neg_mod(a, p_);
  u32 out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += neg_mod(a % p_, p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

u32 GF::sub(u32 a, u32 b) const { return add(a, neg(b)); }

u32 GF::mul(u32 a, u32 b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return mul_mod(a, b, p_);
  u64 e = static_cast<u64>(log_[a]) + log_[b];
  if (e >= q_ - 1) e -= q_ - 1;
  return exp_[e];
}

u32 GF::inv(u32 a) const {
  if (a == 0) throw Error("inverse of zero in GF(" + std::to_string(q_) + ")");
  if (k_ == 1) return inv_mod(a, p_);
  u32 l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

u32 GF::pow(u32 a, u64 e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<u64>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

u32 GF::primitive_cube_root() const {
  if ((q_ - 1) % 3 != 0) throw Error("field has no primitive cube root of unity");
  u32 best = q_;
  for (u32 t = 1; t <= 2; ++t) best = std::min(best, exp_[t * (q_ - 1) / 3]);
  return best;
}

bool GF::is_cube(u32 a) const {
  if (a == 0) return true;
  if ((q_ - 1) % 3 != 0) return true;
  return log_[a] % 3 == 0;
}

std::vector<u32> GF::cube_roots(u32 a) const {
  if (a == 0) return {0};
  std::vector<u32> out;
  u32 n = q_ - 1;
  u32 l = log_[a];
  if (n % 3 != 0) {
    // cubing is a bijection; the root is a^{(2n+1)/3} style via inverse exponent
    u32 r = 0;
    while ((3ull * r) % n != l) ++r;
    out.push_back(exp_[r]);
    return out;
  }
  if (l % 3 != 0) return out;
  for (u32 t = 0; t < 3; ++t) out.push_back(exp_[(l / 3 + t * (n / 3)) % n]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string GF::format(u32 a) const {
  if (k_ == 1) return std::to_string(a);
  std::vector<u32> d(k_);
  for (int i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  std::string s;
  for (int i = k_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || d[i] != 1) s += std::to_string(d[i]);
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

namespace {

struct PolyOps {
  const GF& F;

  void trim(Vec& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  Vec rem(Vec a, const Vec& b) const {
    trim(a);
    u32 li = F.inv(b.back());
    while (a.size() >= b.size()) {
      u32 c = F.mul(a.back(), li);
      size_t sh = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[i + sh] = F.sub(a[i + sh], F.mul(c, b[i]));
      trim(a);
    }
    return a;
  }
  Vec quo(Vec a, const Vec& b) const {
    trim(a);
    if (a.size() < b.size()) return {};
    Vec q(a.size() - b.size() + 1, 0);
    u32 li = F.inv(b.back());
    while (a.size() >= b.size()) {
      u32 c = F.mul(a.back(), li);
      size_t sh = a.size() - b.size();
      q[sh] = c;
      for (size_t i = 0; i < b.size(); ++i) a[i + sh] = F.sub(a[i + sh], F.mul(c, b[i]));
      trim(a);
    }
    return q;
  }
  Vec mulmod(const Vec& a, const Vec& b, const Vec& m) const {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return rem(r, m);
  }
  Vec powmod(Vec base, u64 e, const Vec& m) const {
    Vec r = rem(Vec{1}, m);
    base = rem(base, m);
    while (e) {
      if (e & 1) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  }
  Vec monic(Vec a) const {
    trim(a);
    if (a.empty()) return a;
    u32 li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
    return a;
  }
  Vec gcd(Vec a, Vec b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Vec r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  Vec sub(Vec a, const Vec& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    trim(a);
    return a;
  }

  void split(const Vec& g, std::vector<u32>& out) const {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
      out.push_back(F.neg(F.div(g[0], g[1])));
      return;
    }
    u32 q = F.size();
    if (F.p() == 2) {
      for (u32 x = 0; x < q; ++x) {
        u32 v = 0;
        for (size_t i = g.size(); i-- > 0;) v = F.add(F.mul(v, x), g[i]);
        if (v == 0) out.push_back(x);
      }
      return;
    }
    for (u32 a = 0; a < q; ++a) {
      Vec h = powmod(Vec{a, 1}, (q - 1) / 2, g);
      h = sub(h, Vec{1});
      Vec d = gcd(g, h);
      if (d.size() > 1 && d.size() < g.size()) {
        split(d, out);
        split(quo(g, d), out);
        return;
      }
    }
    throw Error("root splitting failed");
  }
};

}  // namespace

std::vector<u32> GF::roots(std::vector<u32> f) const {
  PolyOps ops{*this};
  ops.trim(f);
  if (f.empty()) throw Error("roots of the zero polynomial");
  f = ops.monic(f);
  if (f.size() == 1) return {};
  Vec xq = ops.powmod(Vec{0, 1}, q_, f);
  Vec g = ops.gcd(f, ops.sub(xq, Vec{0, 1}));
  std::vector<u32> out;
  ops.split(g, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zomo
