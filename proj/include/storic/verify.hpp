#pragma once

#include "storic/family.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace storic {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumOptions {
  Int budget = 100000000;  // max evaluated points
  int jobs = 1;
};

/// A set of points of field^{2n}, each encoded as a radix-q integer with the
/// first coordinate most significant; the index vector is kept sorted.
struct PointSet {
  FieldPtr field;
  int coords = 0;  // 2n for zero sets, also used for n-tuples internally
  std::vector<std::uint64_t> points;

  std::vector<std::uint32_t> decode(std::uint64_t idx) const;
  std::uint64_t encode(const std::vector<std::uint32_t>& pt) const;
  bool contains(std::uint64_t idx) const;
};

// Exact zero set of the binomial system on field^{2n}.
PointSet zero_set(const std::vector<Binomial>& system, FieldPtr field, int n,
                  const EnumOptions& opts = {});

// { phi(u) : u in field^n }, deduplicated.
PointSet image_set(const FamilyParams& params, FieldPtr field,
                   const EnumOptions& opts = {});

struct MembershipVerdict {
  bool in_v = false;
  // For InV: parameters reproducing the point, in `field`.
  std::vector<std::uint32_t> witness_params;
  FieldPtr field;               // field the witness lives in
  unsigned extension_degree = 1;  // [field : base]
  unsigned witness_degree = 1;    // least k with all witness coords in GF(q^k)
  struct Candidate {
    std::uint32_t u_pen, u_last;  // tried values of u_{n-1}, u_n
    int failed_coordinate;        // -1 when the candidate matched
  };
  std::vector<Candidate> trace;  // recorded only when requested
};

/// Decides closure membership by the finite root search the parametrization
/// forces: u_i = x_i for i <= n-2, u_{n-1} over the p^l-th roots of x_{n-1},
/// u_n over the a-th roots of x_n. Roots are searched in the base field and,
/// when the closure holds more roots than the base field, in GF(q^M) for the
/// smallest M making every needed root order divide q^M - 1.
class MembershipOracle {
 public:
  MembershipOracle(FamilyParams params, FieldPtr base, bool record_trace = false);

  MembershipVerdict query(const std::vector<std::uint32_t>& point) const;

  unsigned extension_degree() const;  // M (lazily computed, capped at 64)

 private:
  FamilyParams params_;
  FieldPtr base_;
  bool record_trace_;
  Int pl_coprime_, a_coprime_;  // char-q0-free parts of p^l and a
  mutable FieldPtr ext_;
  mutable std::unique_ptr<Embedding> embed_;

  void ensure_extension() const;
  MembershipVerdict search(const FieldCtx& f,
                           const std::vector<std::uint32_t>& pt,
                           const std::vector<std::uint32_t>& r_pen,
                           const std::vector<std::uint32_t>& r_last) const;
};

struct Prop1Report {
  struct PerField {
    unsigned k = 1;
    bool skipped = false;
    std::string skip_reason;
    std::uint64_t zero_size = 0, image_size = 0;
    bool equal = false;
    double millis = 0;
  };
  std::vector<PerField> fields;
  bool pass = false;
};

// char K = p: zero_set(F) == image over GF(p^k) for each requested k.
Prop1Report check_prop1(const EquationSystem& sys,
                        const std::vector<unsigned>& ks,
                        const EnumOptions& opts = {});

struct Prop2Report {
  std::uint64_t q = 0;
  std::uint64_t zero_size = 0, image_size = 0;
  std::uint64_t in_v = 0;
  std::vector<std::vector<std::uint32_t>> counterexamples;  // NotInV points
  std::map<unsigned, std::uint64_t> witness_degree_counts;
  bool image_subset = false;
  bool pass = false;
  double millis = 0;
};

// char K != p: every zero-set point of F u G u H over GF(q) is on V over the
// closure.
Prop2Report check_prop2(const EquationSystem& sys, std::uint64_t q,
                        const EnumOptions& opts = {});

struct WitnessCertificate {
  std::vector<std::uint32_t> point;
  FieldPtr field;
  std::vector<std::string> vanishing;     // names of binomials evaluating to 0
  std::string nonvanishing;               // a generated binomial with value != 0
  std::uint32_t nonvanishing_value = 0;
  MembershipVerdict membership;           // must be NotInV
  // Prop-4 proof diagnostics: per binomial, whether some monomial satisfies
  // condition (a) / (b) at this witness index.
  std::map<std::string, std::pair<bool, bool>> monomial_conditions;
  bool pass = false;
};

// Witness for the insufficiency of the F-system: the point with y_i = eta
// (eta a primitive p^l-th root of unity in GF(q)) vanishing on F_i and F_n
// but off V.
WitnessCertificate witness_F(const EquationSystem& sys, int i, std::uint64_t q);

// Pairwise witness (n >= 4) built from the d_ij certificate.
WitnessCertificate witness_pair(const EquationSystem& sys, int i, int j,
                                std::uint64_t q);

struct LemmaReport {
  std::string name;
  std::uint64_t checked = 0;
  bool pass = false;
  std::string detail;  // counterexample description when failing
};

// Sign-pattern laws of kernel vectors (machine form of Lemma 1) on random
// small combinations of the kernel basis.
LemmaReport check_lemma1(const FamilyParams& params, std::uint64_t samples,
                         std::uint64_t seed = 1);

// Every kernel vector monic in y_i up to degree D is a multiple of vec(F_i)
// (machine form of Lemma 2).
LemmaReport check_lemma2(const FamilyParams& params, const Int& D);

}  // namespace storic
