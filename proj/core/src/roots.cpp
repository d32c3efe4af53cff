#include "parabolica/roots.hpp"

#include <algorithm>
#include <cmath>

#include "parabolica/errors.hpp"

namespace parabolica {

namespace {

using IntPoly = std::vector<Integer>;  // low to high

int variations(const IntPoly& p) {
  int v = 0, last = 0;
  for (const auto& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

void taylor_shift_one(IntPoly& c) {
  const int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) c[j] += c[j + 1];
  }
}

// Number of sign variations bounding the roots of q in (0, 1).
int descartes_01(const IntPoly& q) {
  IntPoly r(q.rbegin(), q.rend());
  taylor_shift_one(r);
  return variations(r);
}

// q(t/2) * 2^d
IntPoly halve(const IntPoly& q) {
  const std::size_t d = q.size() - 1;
  IntPoly r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    mpz_mul_2exp(r[i].get_mpz_t(), q[i].get_mpz_t(), static_cast<mp_bitcnt_t>(d - i));
  }
  return r;
}

struct Isolated {
  Rational lo, hi;
  bool exact;
};

// Roots of q in the open interval (a, b), where x = a + (b - a) t.
void isolate(IntPoly q, const Rational& a, const Rational& b, std::vector<Isolated>& out, int depth) {
  while (q.size() > 1 && q.front() == 0) q.erase(q.begin());  // root at t = 0 is the endpoint
  if (q.size() <= 1) return;
  const int v = descartes_01(q);
  if (v == 0) return;
  if (v == 1) {
    out.push_back({a, b, false});
    return;
  }
  if (depth > 4000) throw Error(ErrorCode::kInternal, "root isolation failed to separate roots");
  const Rational m = (a + b) / 2;
  IntPoly left = halve(q);
  IntPoly right = left;
  taylor_shift_one(right);
  isolate(left, a, m, out, depth + 1);
  if (right.front() == 0) out.push_back({m, m, true});
  isolate(right, m, b, out, depth + 1);
}

IntPoly to_int_poly(const UnivariatePoly& p) { return primitive_integer_coefficients(p); }

// p(a + (b - a) t) in integer form.
IntPoly rescale(const UnivariatePoly& p, const Rational& a, const Rational& b) {
  return to_int_poly(p.scaled(b - a).taylor_shift(a / (b - a)));
}

// Whether g, which has at most one root in (a, b), has one there. Descartes'
// count has the parity of the root count, which is all we need.
bool odd_roots_open(const UnivariatePoly& g, const Rational& a, const Rational& b) {
  IntPoly q = rescale(g, a, b);
  while (q.size() > 1 && q.front() == 0) q.erase(q.begin());
  IntPoly r(q.rbegin(), q.rend());
  taylor_shift_one(r);
  while (r.size() > 1 && r.front() == 0) r.erase(r.begin());
  return variations(r) % 2 == 1;
}

}  // namespace

std::vector<double> RootList::values() const {
  std::vector<double> v;
  v.reserve(roots.size());
  for (const auto& r : roots) v.push_back(r.value);
  return v;
}

RootList real_roots(const UnivariatePoly& p, const std::optional<RationalInterval>& interval,
                    const Rational& precision) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroInput, "zero input: real_roots of the zero polynomial");
  RootList result;
  if (p.degree() < 1) return result;

  const UnivariatePoly sqf = squarefree_part(p);
  Rational lo, hi;
  if (interval) {
    lo = interval->lo;
    hi = interval->hi;
    if (lo > hi) std::swap(lo, hi);
  } else {
    const Rational bound = cauchy_bound(sqf);
    // Widen to a power of two so bisection midpoints stay dyadic.
    Rational b = 1;
    while (b <= bound) b *= 2;
    lo = -b;
    hi = b;
  }

  std::vector<Isolated> iso;
  if (interval && sqf.sign_at(lo) == 0) iso.push_back({lo, lo, true});
  if (lo < hi) {
    // sqf(x) with x = lo + (hi - lo) t; the taylor shift works in t-space.
    isolate(rescale(sqf, lo, hi), lo, hi, iso, 0);
    if (interval && sqf.sign_at(hi) == 0) iso.push_back({hi, hi, true});
  }

  const auto factors = squarefree_decomposition(p);
  for (auto& it : iso) {
    RootEntry e;
    if (it.exact) {
      e.exact = it.lo;
    } else {
      Rational a = it.lo, b = it.hi;
      // An endpoint may itself be a neighbouring root; the sign just inside
      // is then the sign of the derivative.
      int sa = sqf.sign_at(a);
      if (sa == 0) sa = sqf.derivative().sign_at(a);
      while (b - a >= precision) {
        Rational m = (a + b) / 2;
        const int sm = sqf.sign_at(m);
        if (sm == 0) {
          e.exact = m;
          break;
        }
        if (sm == sa) {
          a = m;
        } else {
          b = m;
        }
      }
      if (!e.exact) {
        // Small-denominator rational roots are common in constructed inputs.
        const Rational guess = best_rational((a + b) / 2, Integer(100000));
        if (guess >= a && guess <= b && sqf.sign_at(guess) == 0) e.exact = guess;
      }
      e.lo = a;
      e.hi = b;
    }
    if (e.exact) {
      e.lo = e.hi = *e.exact;
      e.value = to_double(*e.exact);
    } else {
      e.value = to_double((e.lo + e.hi) / 2);
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& g = factors[i];
      if (g.degree() < 1) continue;
      const bool hit = e.exact ? g.sign_at(*e.exact) == 0 : odd_roots_open(g, e.lo, e.hi);
      if (hit) {
        e.multiplicity = static_cast<int>(i) + 1;
        break;
      }
    }
    result.roots.push_back(std::move(e));
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const RootEntry& x, const RootEntry& y) { return x.lo < y.lo; });
  return result;
}

std::vector<ProjectiveZero> projective_zeros(const BivariatePoly& h, const Rational& precision) {
  if (h.is_zero()) throw Error(ErrorCode::kZeroInput, "zero input: projective zeros of the zero polynomial");
  if (!h.is_homogeneous()) throw Error(ErrorCode::kNotHomogeneous, "not homogeneous");
  std::vector<ProjectiveZero> out;
  const UnivariatePoly r = h.dehomogenize_x();
  if (r.degree() >= 1) {
    for (const auto& root : real_roots(r, std::nullopt, precision).roots) {
      ProjectiveZero z;
      const double t = root.value;
      const double len = std::hypot(1.0, t);
      z.u = 1.0 / len;
      z.v = t / len;
      if (z.v < 0) {
        z.u = -z.u;
        z.v = -z.v;
      }
      z.multiplicity = root.multiplicity;
      if (root.exact) {
        z.exact_slope = root.exact;
      }
      out.push_back(z);
    }
  }
  const int drop = h.degree() - std::max(r.degree(), 0);
  if (drop > 0) {
    ProjectiveZero z;
    z.u = 0.0;
    z.v = 1.0;
    z.multiplicity = drop;
    z.vertical = true;
    out.push_back(z);
  }
  std::sort(out.begin(), out.end(), [](const ProjectiveZero& a, const ProjectiveZero& b) {
    return std::atan2(a.v, a.u) < std::atan2(b.v, b.u);
  });
  return out;
}

LinearFactorCount distinct_real_linear_factors(const BivariatePoly& h) {
  if (h.is_zero()) throw Error(ErrorCode::kZeroInput, "zero input: linear factors of the zero polynomial");
  if (!h.is_homogeneous()) throw Error(ErrorCode::kNotHomogeneous, "not homogeneous");
  LinearFactorCount c;
  for (const auto& z : projective_zeros(h)) {
    ++c.k;
    if (z.multiplicity != 1) c.simple = false;
  }
  return c;
}

}  // namespace parabolica
