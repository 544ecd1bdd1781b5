#include "storic/numtheory.hpp"

namespace storic {

ExtGcd ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0)
    throw std::domain_error("ext_gcd: both inputs are zero");
  Int old_r = abs(a), r = abs(b);
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (a < 0) old_x = -old_x;
  if (b < 0) old_y = -old_y;
  return {old_r, old_x, old_y};
}

Int mod_inverse(const Int& a, const Int& m) {
  Int ar = a % m;
  if (ar < 0) ar += m;
  ExtGcd e = ext_gcd(ar, m);
  if (e.g != 1) throw std::domain_error("mod_inverse: inputs not coprime");
  Int r = e.x % m;
  if (r < 0) r += m;
  return r;
}

Int pow_int(const Int& base, unsigned exp) {
  Int r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

unsigned p_adic_val(const Int& x, const Int& p) {
  if (x < 1) throw std::domain_error("p_adic_val: x must be positive");
  Int v = x;
  unsigned e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

GHCert solve_gh(const Int& p, unsigned l, const Int& a, const Int& d) {
  const Int P = pow_int(p, l);
  Int g;
  if (d == 1) {
    g = 1;
  } else {
    // a*g == P (mod d); least positive representative.
    g = (P % d) * mod_inverse(a, d) % d;
    if (g == 0) g = d;
  }
  if (a * g + d > P)
    throw ConditionIIIFailure("no positive (g, h) with a*g + d*h = p^l");
  return {g, (P - a * g) / d};
}

GijCert solve_gij(const Int& c_i, const Int& c_j, const Int& p, unsigned l) {
  if (c_i % p == 0 || c_j % p == 0)
    throw std::domain_error("solve_gij: p must not divide c_i or c_j");
  for (unsigned m = l; m <= l + 64; ++m) {
    const Int P = pow_int(p, m);
    const Int cj_inv = mod_inverse(c_j, P);
    for (Int g_ij = 1; g_ij <= P; ++g_ij) {
      if (g_ij % p == 0) continue;
      Int g_ji = (P - c_i * g_ij % P) * cj_inv % P;
      if (g_ji == 0 || g_ji % p == 0) continue;
      return {g_ij, g_ji, (c_i * g_ij + c_j * g_ji) / P, Int(m)};
    }
  }
  throw std::logic_error("solve_gij: search bound exceeded");
}

namespace {

// Minimal-t nonnegative solution of a*s + d*t = k; false if none.
bool coin_split(const Int& a, const Int& d, const Int& k, Int& s, Int& t) {
  if (a == 1) {
    t = 0;
    s = k;
    return true;
  }
  t = k % a * mod_inverse(d, a) % a;
  if (d * t > k) return false;
  s = (k - d * t) / a;
  return true;
}

}  // namespace

HiCert solve_hk(const Int& c_i, const Int& a, const Int& d, const Int& p,
                unsigned l) {
  if (c_i % p == 0)
    throw std::domain_error("solve_hk: p must not divide c_i");
  for (unsigned m = l; m <= l + 16; ++m) {
    const Int P = pow_int(p, m);
    for (Int h = 1; h <= P; ++h) {
      if (h % p == 0) continue;
      Int k0 = (P - c_i * h % P) % P;
      if (k0 == 0 || k0 % p == 0) continue;
      // k = k0 + j*P is representable as a*s + d*t once k is large enough
      // (Frobenius bound (a-1)(d-1)).
      Int bound = (a - 1) * (d - 1) + P;
      for (Int k = k0; k <= bound; k += P) {
        Int s, t;
        if (!coin_split(a, d, k, s, t))
          continue;
        return {h, k, (c_i * h + k) / P, Int(m), s, t};
      }
    }
  }
  throw std::logic_error("solve_hk: search bound m <= l + 16 exceeded");
}

DijCert solve_dij(const Int& c_i, const Int& c_j) {
  if (c_i < 1 || c_j < 1)
    throw std::domain_error("solve_dij: c_i, c_j must be positive");
  ExtGcd e = ext_gcd(c_i, c_j);
  return {e.x, -e.y};
}

}  // namespace storic
