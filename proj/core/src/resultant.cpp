#include "parabolica/resultant.hpp"

#include <algorithm>

#include "parabolica/errors.hpp"

namespace parabolica {

namespace {

// Dense polynomial in x with integer coefficients, low to high, trimmed.
using ZX = std::vector<Integer>;
// Polynomial in y with coefficients in Z[x], low to high, trimmed.
using ZXY = std::vector<ZX>;

void trim(ZX& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
void trim(ZXY& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

int deg(const ZXY& a) { return static_cast<int>(a.size()) - 1; }

ZX mul(const ZX& a, const ZX& b) {
  if (a.empty() || b.empty()) return {};
  ZX c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

ZX sub(const ZX& a, const ZX& b) {
  ZX c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

// a / b where the division is known to be exact in Z[x].
ZX divexact(ZX a, const ZX& b) {
  if (b.empty()) throw Error(ErrorCode::kInternal, "subresultant division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error(ErrorCode::kInternal, "inexact subresultant division");
  ZX q(a.size() - b.size() + 1);
  const Integer& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = a[k + b.size() - 1];
    if (top == 0) continue;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  trim(q);
  return q;
}

ZX zpow(const ZX& a, int e) {
  ZX r{Integer(1)};
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

ZXY scale(const ZXY& a, const ZX& c) {
  ZXY r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c);
  trim(r);
  return r;
}

ZXY pseudo_remainder(ZXY r, const ZXY& b) {
  const int db = deg(b);
  int e = deg(r) - db + 1;
  const ZX& lb = b.back();
  while (!r.empty() && deg(r) >= db) {
    const ZX lr = r.back();
    const int shift = deg(r) - db;
    r = scale(r, lb);
    for (int j = 0; j <= db; ++j) r[j + shift] = sub(r[j + shift], mul(lr, b[j]));
    trim(r);
    --e;
  }
  if (e > 0) r = scale(r, zpow(lb, e));
  return r;
}

ZXY to_zxy(const BivariatePoly& p) {
  Integer l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZXY out(static_cast<std::size_t>(std::max(p.degree_in_y(), 0) + 1),
          ZX(static_cast<std::size_t>(std::max(p.degree_in_x(), 0) + 1)));
  for (const auto& [e, c] : p.terms()) out[e.second][e.first] = c.get_num() * (l / c.get_den());
  for (auto& z : out) trim(z);
  trim(out);
  return out;
}

ZX subresultant(ZXY a, ZXY b) {
  if (a.empty() || b.empty()) return {};
  int s = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
  }
  ZX g{Integer(1)}, h{Integer(1)};
  while (deg(b) > 0) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
    ZXY r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return {};
    const ZX div = mul(g, zpow(h, delta));
    b.resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) b[i] = divexact(r[i], div);
    trim(b);
    g = a.back();
    if (delta == 0) continue;
    h = divexact(zpow(g, delta), zpow(h, delta - 1));
  }
  if (b.empty()) return {};
  const int da = deg(a);
  ZX res = da == 0 ? ZX{Integer(1)} : divexact(zpow(b.back(), da), zpow(h, da - 1));
  if (s < 0) {
    for (auto& c : res) c = -c;
  }
  return res;
}

UnivariatePoly to_univariate(const ZX& z) {
  std::vector<Rational> c;
  c.reserve(z.size());
  Integer g = 0;
  for (const auto& v : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (const auto& v : z) c.emplace_back(g > 1 ? Integer(v / g) : v);
  return UnivariatePoly(std::move(c));
}

}  // namespace

UnivariatePoly resultant_y(const BivariatePoly& p, const BivariatePoly& q) {
  return to_univariate(subresultant(to_zxy(p), to_zxy(q)));
}

UnivariatePoly resultant_x(const BivariatePoly& p, const BivariatePoly& q) {
  return resultant_y(p.swapped(), q.swapped());
}

Rational resultant(const UnivariatePoly& p, const UnivariatePoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  const int a = p.degree(), b = q.degree();
  if (b == 0) return pow(q.leading(), static_cast<unsigned>(a));
  if (a < b) {
    const Rational r = resultant(q, p);
    return (a % 2 == 1 && b % 2 == 1) ? Rational(-r) : r;
  }
  const UnivariatePoly r = divmod(p, q).second;
  if (r.is_zero()) return 0;
  Rational res = pow(q.leading(), static_cast<unsigned>(a - r.degree())) * resultant(q, r);
  if (a % 2 == 1 && b % 2 == 1) res = -res;
  return res;
}

}  // namespace parabolica
