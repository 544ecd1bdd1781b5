#pragma once

#include "storic/numtheory.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace storic {

struct ConditionIFailure : std::runtime_error {
  int index;  // 1-based index of the offending c_i
  explicit ConditionIFailure(int i)
      : std::runtime_error("condition (I) fails: p divides c_" +
                           std::to_string(i)),
        index(i) {}
};

struct ConditionIIFailure : std::runtime_error {
  ConditionIIFailure() : std::runtime_error("condition (II) fails: gcd(a, d) != 1") {}
};

/// One member of the family: the variety in K^{2n} parametrized by
///   x_i = u_i (i <= n-2),  x_{n-1} = u_{n-1}^{p^l},  x_n = u_n^a,
///   y_i = u_i^{b_i} u_{n-1}^{c_i},  y_{n-1} = u_n^d,  y_n = u_{n-1} u_n.
struct FamilyParams {
  int n = 3;
  Int p = 2;
  unsigned l = 1;
  Int a = 1;
  Int d = 1;
  std::vector<Int> b;  // n - 2 nonnegative entries
  std::vector<Int> c;  // n - 2 positive entries

  Int p_pow_l() const { return pow_int(p, l); }

  // Shape checks only (sizes, signs, primality); the arithmetic conditions
  // (I)-(III) are checked by family::validate.
  void check_shape() const;
};

}  // namespace storic
