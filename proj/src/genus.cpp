#include "zomo/genus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "zomo/field.hpp"

namespace zomo {

std::string RamificationProfile::str() const {
  std::ostringstream os;
  os << "|G|=" << order << " g'=" << quotient_genus << " orbits=(";
  for (std::size_t i = 0; i < orbits.size(); ++i) os << (i ? "," : "") << orbits[i];
  os << ")";
  return os.str();
}

void validate(RamificationProfile& r) {
  if (r.order <= 0) throw Error("profile: group order must be positive");
  if (r.quotient_genus < 0) throw Error("profile: quotient genus must be nonnegative");
  for (const BigInt& l : r.orbits) {
    if (l <= 0 || l >= r.order || r.order % l != 0)
      throw Error("profile: orbit size " + l.str() + " is not a proper divisor of " + r.order.str());
  }
  std::sort(r.orbits.begin(), r.orbits.end());
}

BigRational rh_genus_exact(RamificationProfile r) {
  validate(r);
  BigInt twice = r.order * (2 * r.quotient_genus - 2);
  for (const BigInt& l : r.orbits) twice += r.order - l;
  return BigRational(twice + 2, 2);
}

BigInt rh_genus(RamificationProfile r) {
  BigRational g = rh_genus_exact(r);
  if (denominator(g) != 1) throw Error("inconsistent profile: genus " + g.str() + " is not an integer");
  if (g < 0) throw Error("inconsistent profile: negative genus " + g.str());
  return numerator(g);
}

std::optional<int> log_exact(const BigInt& n, unsigned d) {
  if (n < 1 || d < 2) return std::nullopt;
  BigInt m = n;
  int k = 0;
  while (m % d == 0) {
    m /= d;
    ++k;
  }
  if (m != 1) return std::nullopt;
  return k;
}

BoundResult zomorrodian_bound(const BoundQuery& q) {
  if (q.d < 3 || !is_prime(q.d)) throw Error("bound: d must be an odd prime");
  if (q.p != 0 && (!is_prime(q.p) || q.p == q.d)) throw Error("bound: characteristic must be 0 or a prime other than d");
  if (q.g < 2) throw Error("bound: genus must be at least 2");
  BigInt d = q.d;
  BigInt gm = q.g - 1;
  BoundResult r;
  if (q.elliptic_quotient)
    r.bound = 2 * d * gm / (d - 1);
  else if (q.d == 3)
    r.bound = 9 * gm;
  else
    r.bound = 2 * d * gm / (d - 3);
  r.largest_power = 1;
  while (r.largest_power * d <= r.bound) r.largest_power *= d;
  r.attainable = r.largest_power == r.bound && !(q.d == 3 && q.g == 2 && !q.elliptic_quotient);
  return r;
}

std::vector<RamificationProfile> enumerate_profiles(unsigned d, const BigInt& order, const BigInt& g) {
  if (!log_exact(order, d)) throw Error("profiles: order must be a power of d");
  std::vector<RamificationProfile> out;
  if (order == 1) return out;
  // Proper divisors of order that are powers of d, largest first so contributions ascend.
  std::vector<BigInt> sizes;
  for (BigInt l = order / d; l >= 1; l /= d) {
    sizes.push_back(l);
    if (l == 1) break;
  }
  const BigInt min_term = order - order / d;
  const BigInt top = 2 * g - 2 + 2 * order;
  const BigInt max_orbits = top / min_term;
  const BigInt max_qg = top / (2 * order) + 1;

  for (BigInt qg = 0; qg <= max_qg; ++qg) {
    BigInt need = 2 * g - 2 - order * (2 * qg - 2);
    if (need < 0) continue;
    std::vector<BigInt> chosen;
    // Choose orbit sizes in non-increasing order (non-decreasing contribution order - l).
    std::function<void(std::size_t, BigInt)> rec = [&](std::size_t from, BigInt rest) {
      if (rest == 0) {
        RamificationProfile r{order, qg, chosen};
        std::sort(r.orbits.begin(), r.orbits.end());
        out.push_back(std::move(r));
        return;
      }
      if (BigInt(chosen.size()) >= max_orbits) return;
      for (std::size_t i = from; i < sizes.size(); ++i) {
        BigInt term = order - sizes[i];
        if (term > rest) break;
        chosen.push_back(sizes[i]);
        rec(i, rest - term);
        chosen.pop_back();
      }
    };
    rec(0, need);
  }
  std::sort(out.begin(), out.end(), [](const RamificationProfile& a, const RamificationProfile& b) {
    if (a.quotient_genus != b.quotient_genus) return a.quotient_genus < b.quotient_genus;
    return a.orbits < b.orbits;
  });
  return out;
}

std::optional<int> is_extremal(const BigInt& g, const BigInt& order) {
  auto h = log_exact(g - 1, 3);
  if (!h || *h < 1) return std::nullopt;
  auto k = log_exact(order, 3);
  if (!k || *k != *h + 2) return std::nullopt;
  return h;
}

bool abelian_bound_check(const BigInt& g, const BigInt& order) {
  if (g < 2) throw Error("abelian bound: genus must be at least 2");
  return order <= 4 * g + 4;
}

}  // namespace zomo
