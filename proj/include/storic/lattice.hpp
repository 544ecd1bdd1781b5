#pragma once

#include "storic/params.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/traits/is_byte_container.hpp>
#include <Eigen/Dense>

#include <type_traits>
#include <vector>

// Overload resolution on mixed scalar/matrix products probes whether an Eigen
// matrix converts to cpp_int via its byte-container constructor; the probe
// hard-errors because 2-D dense matrices expose a void const_iterator. Opt
// matrix types out of that constructor.
namespace boost::multiprecision::detail {
template <typename S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>>
    : std::false_type {};
}  // namespace boost::multiprecision::detail

namespace storic {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// Difference of two monomials over x_1..x_n, y_1..y_n, stored reduced:
/// plus and minus have disjoint supports and plus != minus.
/// Variable order: columns 0..n-1 are x_1..x_n, columns n..2n-1 are y_1..y_n.
struct Binomial {
  IntVector plus, minus;

  static Binomial from_vector(const IntVector& v);
  IntVector vector() const { return plus - minus; }
  int vars() const { return static_cast<int>(plus.size()); }
};

/// The n x 2n exponent matrix of the parametrization: column j holds the
/// u-exponent vector of the j-th coordinate monomial.
struct ExponentMatrix {
  int n = 0;
  IntMatrix A;  // n rows, 2n columns

  int x_col(int i) const { return i - 1; }      // i in 1..n
  int y_col(int i) const { return n + i - 1; }  // i in 1..n
};

ExponentMatrix build_matrix(const FamilyParams& params);

// Rank over the rationals (= rank of the kernel's complement).
int rational_rank(const IntMatrix& A);

IntVector vec_of_binomial(const Binomial& b);
Binomial binomial_of_vec(const IntVector& v);

// Lattice criterion: the reduced binomial lies in I(V) iff A * vec = 0.
bool in_ideal(const Binomial& b, const ExponentMatrix& A);

// Basis of the full integer kernel lattice {v : A v = 0}, as matrix columns.
// Computed by unimodular column reduction, so the basis is saturated.
IntMatrix kernel_basis(const IntMatrix& A);

// All kernel vectors whose positive part is exactly t * e_{y_i} for some
// 1 <= t <= D, with i in 1..n-1. Exhaustive per t.
std::vector<IntVector> monic_kernel_search(const ExponentMatrix& A, int i,
                                           const Int& D);

}  // namespace storic
