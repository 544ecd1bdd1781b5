#include "storic/lattice.hpp"

namespace storic {

void FamilyParams::check_shape() const {
  if (n < 3) throw std::domain_error("params: n must be >= 3");
  if (!is_prime(p)) throw std::domain_error("params: p must be prime");
  if (l < 1) throw std::domain_error("params: l must be >= 1");
  if (a < 1 || d < 1) throw std::domain_error("params: a, d must be positive");
  if (static_cast<int>(b.size()) != n - 2 ||
      static_cast<int>(c.size()) != n - 2)
    throw std::domain_error("params: b and c must have n - 2 entries");
  for (const Int& bi : b)
    if (bi < 0) throw std::domain_error("params: b_i must be nonnegative");
  for (const Int& ci : c)
    if (ci < 1) throw std::domain_error("params: c_i must be positive");
}

Binomial Binomial::from_vector(const IntVector& v) {
  if (v.isZero()) throw std::domain_error("Binomial: zero difference");
  Binomial b;
  b.plus = IntVector::Zero(v.size());
  b.minus = IntVector::Zero(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (v[j] > 0)
      b.plus[j] = v[j];
    else if (v[j] < 0)
      b.minus[j] = -v[j];
  }
  return b;
}

ExponentMatrix build_matrix(const FamilyParams& params) {
  params.check_shape();
  const int n = params.n;
  ExponentMatrix E;
  E.n = n;
  E.A = IntMatrix::Zero(n, 2 * n);
  for (int i = 1; i <= n - 2; ++i) E.A(i - 1, E.x_col(i)) = 1;
  E.A(n - 2, E.x_col(n - 1)) = params.p_pow_l();
  E.A(n - 1, E.x_col(n)) = params.a;
  for (int i = 1; i <= n - 2; ++i) {
    E.A(i - 1, E.y_col(i)) = params.b[i - 1];
    E.A(n - 2, E.y_col(i)) = params.c[i - 1];
  }
  E.A(n - 1, E.y_col(n - 1)) = params.d;
  E.A(n - 2, E.y_col(n)) = 1;
  E.A(n - 1, E.y_col(n)) = 1;
  return E;
}

IntVector vec_of_binomial(const Binomial& b) { return b.vector(); }

Binomial binomial_of_vec(const IntVector& v) { return Binomial::from_vector(v); }

bool in_ideal(const Binomial& b, const ExponentMatrix& E) {
  IntVector v = b.vector();
  return (E.A * v).isZero();
}

namespace {

struct Reduction {
  IntMatrix U;  // 2n x 2n unimodular with A*U = column echelon
  int rank = 0;
};

Reduction column_reduce(const IntMatrix& A) {
  const Eigen::Index rows = A.rows(), cols = A.cols();
  IntMatrix B = A;
  Reduction red;
  red.U = IntMatrix::Identity(cols, cols);
  Eigen::Index r = 0;
  for (Eigen::Index row = 0; row < rows && r < cols; ++row) {
    Eigen::Index piv = -1;
    for (Eigen::Index c = r; c < cols; ++c)
      if (B(row, c) != 0 &&
          (piv < 0 || abs(B(row, c)) < abs(B(row, piv))))
        piv = c;
    if (piv < 0) continue;
    B.col(piv).swap(B.col(r));
    red.U.col(piv).swap(red.U.col(r));
    for (Eigen::Index c = r + 1; c < cols; ++c) {
      if (B(row, c) == 0) continue;
      ExtGcd e = ext_gcd(B(row, r), B(row, c));
      Int ar = B(row, r) / e.g, ac = B(row, c) / e.g;
      // [col_r col_c] *= [[x, -ac], [y, ar]], determinant +1.
      for (Eigen::Index k = 0; k < rows; ++k) {
        Int nr = e.x * B(k, r) + e.y * B(k, c);
        Int nc = ar * B(k, c) - ac * B(k, r);
        B(k, r) = std::move(nr);
        B(k, c) = std::move(nc);
      }
      for (Eigen::Index k = 0; k < cols; ++k) {
        Int nr = e.x * red.U(k, r) + e.y * red.U(k, c);
        Int nc = ar * red.U(k, c) - ac * red.U(k, r);
        red.U(k, r) = std::move(nr);
        red.U(k, c) = std::move(nc);
      }
    }
    if (B(row, r) < 0) {
      B.col(r) = -B.col(r);
      red.U.col(r) = -red.U.col(r);
    }
    ++r;
  }
  red.rank = static_cast<int>(r);
  return red;
}

}  // namespace

int rational_rank(const IntMatrix& A) { return column_reduce(A).rank; }

IntMatrix kernel_basis(const IntMatrix& A) {
  Reduction red = column_reduce(A);
  return red.U.rightCols(A.cols() - red.rank);
}

namespace {

// DFS over the remaining columns: all nonnegative integer combinations of
// A's columns (skipping `skip`) summing to `target`.
void monomial_solutions(const IntMatrix& A, Eigen::Index skip,
                        Eigen::Index col, IntVector& target, IntVector& w,
                        std::vector<IntVector>& out) {
  const Eigen::Index cols = A.cols(), rows = A.rows();
  if (col == cols) {
    if (target.isZero()) out.push_back(w);
    return;
  }
  if (col == skip) {
    monomial_solutions(A, skip, col + 1, target, w, out);
    return;
  }
  Int ub = -1;
  for (Eigen::Index k = 0; k < rows; ++k) {
    if (A(k, col) > 0) {
      Int cap = target[k] / A(k, col);
      if (ub < 0 || cap < ub) ub = cap;
    }
  }
  if (ub < 0) ub = 0;  // zero column cannot occur for this family
  for (Int t = 0; t <= ub; ++t) {
    if (t > 0)
      for (Eigen::Index k = 0; k < rows; ++k) target[k] -= A(k, col);
    bool feasible = true;
    for (Eigen::Index k = 0; k < rows; ++k)
      if (target[k] < 0) {
        feasible = false;
        break;
      }
    if (feasible) {
      w[col] = t;
      monomial_solutions(A, skip, col + 1, target, w, out);
    }
  }
  for (Eigen::Index k = 0; k < rows; ++k) target[k] += ub * A(k, col);
  w[col] = 0;
}

}  // namespace

std::vector<IntVector> monic_kernel_search(const ExponentMatrix& E, int i,
                                           const Int& D) {
  if (i < 1 || i > E.n - 1)
    throw std::domain_error("monic_kernel_search: i must be in 1..n-1");
  if (D < 1) throw std::domain_error("monic_kernel_search: D must be >= 1");
  const Eigen::Index col = E.y_col(i);
  std::vector<IntVector> found;
  for (Int t = 1; t <= D; ++t) {
    IntVector target = t * E.A.col(col);
    IntVector w = IntVector::Zero(E.A.cols());
    std::vector<IntVector> ws;
    monomial_solutions(E.A, col, 0, target, w, ws);
    for (const IntVector& sol : ws) {
      IntVector v = -sol;
      v[col] = t;
      found.push_back(std::move(v));
    }
  }
  return found;
}

}  // namespace storic
