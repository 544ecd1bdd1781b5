#pragma once

#include "storic/field.hpp"
#include "storic/lattice.hpp"
#include "storic/params.hpp"

#include <optional>
#include <vector>

namespace storic {

/// Every auxiliary integer identity solved for one parameter set.
struct CertificateSet {
  GHCert gh;
  struct IndexedGij {
    int i, j;  // 1 <= i < j <= n-2
    GijCert cert;
  };
  struct IndexedHi {
    int i;
    HiCert cert;
  };
  struct IndexedDij {
    int i, j;
    DijCert cert;
  };
  std::vector<IndexedGij> gij;
  std::vector<IndexedHi> hi;
  std::vector<IndexedDij> dij;
};

// Checks conditions (I)-(III) and solves all certificates. Throws
// ConditionIFailure / ConditionIIFailure / ConditionIIIFailure.
CertificateSet validate(const FamilyParams& params);

// F_i = y_i^{p^l} - x_i^{p^l b_i} x_{n-1}^{c_i}   (i = 1..n-2)
// F_{n-1} = y_{n-1}^a - x_n^d
// F_n = y_n^{p^l} - x_{n-1} x_n^g y_{n-1}^h
std::vector<Binomial> build_F(const FamilyParams& params, const GHCert& gh);

// G_ij = y_i^{g_ij} y_j^{g_ji}
//        - x_i^{b_i g_ij} x_j^{b_j g_ji} x_{n-1}^{r_ij p^{m_ij - l}}
std::vector<Binomial> build_G(const FamilyParams& params,
                              const CertificateSet& certs);

// H_i = y_i^{h_i} y_n^{k_i}
//       - x_i^{b_i h_i} x_{n-1}^{r_i p^{m_i - l}} x_n^{s_i} y_{n-1}^{t_i}
std::vector<Binomial> build_H(const FamilyParams& params,
                              const CertificateSet& certs);

struct EquationSystem {
  FamilyParams params;
  CertificateSet certs;
  std::vector<Binomial> F, G, H;

  // The defining system for char != p: F u G u H (G empty when n = 3).
  std::vector<Binomial> full() const;
};

EquationSystem build_system(const FamilyParams& params);

/// Reported binomial/arithmetical rank values and bounds.
struct RankReport {
  int n;
  Int bar_char_p;          // = n
  Int bar_char_other;      // 4 if n = 3, else 2n-2 + C(n-2, 2)
  Int ara_char_p;          // = n
  Int ara_other_low;       // 2n - 2
  Int ara_other_high;      // 2n
  std::optional<Int> ara_other_exact;  // 4 when n = 3, open otherwise
};

RankReport rank_report(const FamilyParams& params);

// The parametrization map at a point u in field^n; returns 2n codes in the
// x_1..x_n, y_1..y_n column order.
std::vector<std::uint32_t> phi(const FamilyParams& params, const FieldCtx& f,
                               const std::vector<std::uint32_t>& u);
std::vector<FieldElement> phi(const FamilyParams& params,
                              const std::vector<FieldElement>& u);

}  // namespace storic
