#pragma once

#include "storic/numtheory.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace storic {

struct NoSuchRootOfUnity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// GF(q0^deg) with a deterministic modulus and generator. Elements are codes
/// in [0, q): the base-q0 digit expansion of the coefficient vector of the
/// representative polynomial (constant term least significant).
///
/// Immutable after construction; contexts are canonicalized by make_field so
/// pointer equality identifies the field.
class FieldCtx {
 public:
  std::uint64_t q0;                   // characteristic
  unsigned deg;                       // extension degree over GF(q0)
  std::uint64_t q;                    // q0^deg
  std::vector<std::uint64_t> modulus; // monic irreducible, size deg + 1
  std::uint32_t gen;                  // least multiplicative generator

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = log_tab_[a] + log_tab_[b];
    if (s >= q - 1) s -= q - 1;
    return exp_tab_[s];
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("field inverse of zero");
    return exp_tab_[(q - 1 - log_tab_[a]) % (q - 1)];
  }
  // x^e with e >= 0; 0^0 = 1 by convention.
  std::uint32_t pow(std::uint32_t x, const Int& e) const;

  std::uint64_t log(std::uint32_t a) const { return log_tab_[a]; }
  std::uint32_t exp(std::uint64_t i) const { return exp_tab_[i % (q - 1)]; }

  // Multiplicative order of a nonzero element.
  std::uint64_t order(std::uint32_t a) const;

  const std::vector<std::uint32_t>& exp_table() const { return exp_tab_; }
  const std::vector<std::uint32_t>& log_table() const { return log_tab_; }

 private:
  friend std::shared_ptr<const FieldCtx> make_field(std::uint64_t, unsigned);
  FieldCtx() = default;

  std::vector<std::uint32_t> exp_tab_;  // size q - 1
  std::vector<std::uint32_t> log_tab_;  // size q; log_tab_[0] unused
  std::vector<std::uint64_t> q0_pow_;   // size deg + 1
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

// Cached: repeated calls return the same context object.
FieldPtr make_field(std::uint64_t q0, unsigned deg);

/// An element together with its field; thin value wrapper over a code.
struct FieldElement {
  FieldPtr ctx;
  std::uint32_t v = 0;

  FieldElement() = default;
  FieldElement(FieldPtr c, std::uint32_t code) : ctx(std::move(c)), v(code) {}

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.ctx, a.ctx->add(a.v, b.v)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.ctx, a.ctx->sub(a.v, b.v)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.ctx, a.ctx->mul(a.v, b.v)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx == b.ctx && a.v == b.v;
  }

  FieldElement inverse() const { return {ctx, ctx->inv(v)}; }
  FieldElement pow(const Int& e) const { return {ctx, ctx->pow(v, e)}; }

  static void require_same(const FieldElement& a, const FieldElement& b) {
    if (a.ctx != b.ctx)
      throw std::domain_error("field context mismatch");
  }
};

// All y in the same field with y^n = x, sorted by code. May be empty.
std::vector<std::uint32_t> nth_roots(const FieldCtx& f, std::uint32_t x,
                                     const Int& n);
std::vector<FieldElement> nth_roots(const FieldElement& x, const Int& n);

// gen^((q-1)/order); throws NoSuchRootOfUnity unless order | q - 1.
std::uint32_t primitive_root_of_unity(const FieldCtx& f, const Int& order);

/// Deterministic field embedding GF(q0^m) -> GF(q0^M) for m | M: the source
/// generator's minimal polynomial root of least code in the target.
class Embedding {
 public:
  Embedding(FieldPtr src, FieldPtr dst);

  std::uint32_t apply(std::uint32_t x) const;
  FieldElement apply(const FieldElement& x) const;

  const FieldPtr& src() const { return src_; }
  const FieldPtr& dst() const { return dst_; }

 private:
  FieldPtr src_, dst_;
  std::uint32_t root_;  // image of the residue class of x in the source
};

}  // namespace storic
