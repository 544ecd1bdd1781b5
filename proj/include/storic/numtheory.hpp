#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace storic {

using Int = boost::multiprecision::cpp_int;

struct ConditionIIIFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// p^l = a*g + d*h with g, h >= 1.
struct GHCert {
  Int g, h;
};

/// c_i*g_ij + c_j*g_ji = r * p^m with p coprime to both multipliers, m >= l.
struct GijCert {
  Int g_ij, g_ji, r, m;
};

/// c_i*h + k = r * p^m and a*s + d*t = k, with p coprime to h and k,
/// m >= l, s and t nonnegative.
struct HiCert {
  Int h, k, r, m, s, t;
};

/// c_i*d_ij - c_j*d_ji = gcd(c_i, c_j).
struct DijCert {
  Int d_ij, d_ji;
};

struct ExtGcd {
  Int g, x, y;  // a*x + b*y = g, g >= 1
};

ExtGcd ext_gcd(const Int& a, const Int& b);

// Inverse of a modulo m (gcd(a, m) must be 1), result in [0, m).
Int mod_inverse(const Int& a, const Int& m);

Int pow_int(const Int& base, unsigned exp);

bool is_prime(const Int& p);

unsigned p_adic_val(const Int& x, const Int& p);

// Lexicographically smallest positive (g, h) with a*g + d*h = p^l.
// Throws ConditionIIIFailure if none exists.
GHCert solve_gh(const Int& p, unsigned l, const Int& a, const Int& d);

// Smallest m >= l, then smallest g_ij, then the least positive g_ji in its
// residue class. Requires p coprime to c_i and c_j.
GijCert solve_gij(const Int& c_i, const Int& c_j, const Int& p, unsigned l);

// Smallest m >= l, then smallest h, then smallest admissible k; (s, t) is the
// minimal-t nonnegative solution of a*s + d*t = k.
HiCert solve_hk(const Int& c_i, const Int& a, const Int& d, const Int& p,
                unsigned l);

DijCert solve_dij(const Int& c_i, const Int& c_j);

}  // namespace storic
