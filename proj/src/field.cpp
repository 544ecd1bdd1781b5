#include "storic/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace storic {
namespace {

constexpr std::uint64_t kMaxFieldOrder = 1ull << 24;

using Poly = std::vector<std::uint64_t>;  // coeffs mod q0, ascending degree

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t q0) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % q0;
  trim(r);
  return r;
}

Poly poly_mod(Poly f, const Poly& m, std::uint64_t q0) {
  const std::size_t d = m.size() - 1;
  const std::uint64_t lead_inv =
      mod_inverse(Int(m.back()), Int(q0)).convert_to<std::uint64_t>();
  while (f.size() > d) {
    std::uint64_t c = f.back() * lead_inv % q0;
    std::size_t shift = f.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint64_t sub = c * m[i] % q0;
      f[shift + i] = (f[shift + i] + q0 - sub) % q0;
    }
    trim(f);
    if (f.empty()) break;
  }
  return f;
}

Poly poly_powmod(Poly base, Int e, const Poly& m, std::uint64_t q0) {
  Poly r = {1};
  base = poly_mod(std::move(base), m, q0);
  while (e > 0) {
    if ((e & 1) != 0) r = poly_mod(poly_mul(r, base, q0), m, q0);
    base = poly_mod(poly_mul(base, base, q0), m, q0);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t q0) {
  while (!b.empty()) {
    Poly r = poly_mod(a, b, q0);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f (monic, degree d >= 1) is irreducible over GF(q0) iff
// x^(q0^d) == x (mod f) and gcd(x^(q0^(d/r)) - x, f) = 1 for primes r | d.
std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n);

bool poly_irreducible(const Poly& f, std::uint64_t q0) {
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  const Poly x = {0, 1};
  Poly xq = poly_powmod(x, pow_int(Int(q0), static_cast<unsigned>(d)), f, q0);
  if (xq != poly_mod(x, f, q0)) return false;
  for (std::uint64_t r : prime_factors_u64(d)) {
    Poly t = poly_powmod(x, pow_int(Int(q0), static_cast<unsigned>(d / r)), f, q0);
    Poly diff = t;  // t - x
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + q0 - 1) % q0;
    trim(diff);
    if (poly_gcd(f, diff, q0).size() != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
  if (deg == 1) {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= q0 ? std::uint32_t(s - q0) : std::uint32_t(s);
  }
  std::uint32_t r = 0;
  std::uint64_t ua = a, ub = b;
  for (unsigned i = 0; i < deg; ++i) {
    std::uint64_t da = ua % q0, db = ub % q0;
    ua /= q0;
    ub /= q0;
    std::uint64_t s = da + db;
    if (s >= q0) s -= q0;
    r += std::uint32_t(s * q0_pow_[i]);
  }
  return r;
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
  if (deg == 1) return a == 0 ? 0 : std::uint32_t(q0 - a);
  std::uint32_t r = 0;
  std::uint64_t ua = a;
  for (unsigned i = 0; i < deg; ++i) {
    std::uint64_t da = ua % q0;
    ua /= q0;
    if (da != 0) r += std::uint32_t((q0 - da) * q0_pow_[i]);
  }
  return r;
}

std::uint32_t FieldCtx::pow(std::uint32_t x, const Int& e) const {
  if (e < 0) throw std::domain_error("FieldCtx::pow: negative exponent");
  if (x == 0) return e == 0 ? 1 : 0;
  std::uint64_t r = (e % (q - 1)).convert_to<std::uint64_t>();
  return exp_tab_[log_tab_[x] * r % (q - 1)];
}

std::uint64_t FieldCtx::order(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("order of zero");
  std::uint64_t e = log_tab_[a];
  return (q - 1) / std::gcd(q - 1, e);
}

FieldPtr make_field(std::uint64_t q0, unsigned deg) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({q0, deg});
    if (it != cache.end()) return it->second;
  }

  if (!is_prime(Int(q0))) throw std::domain_error("make_field: q0 not prime");
  if (deg < 1) throw std::domain_error("make_field: degree must be >= 1");
  Int qi = pow_int(Int(q0), deg);
  if (qi > kMaxFieldOrder)
    throw std::domain_error("make_field: field order exceeds table limit");

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->q0 = q0;
  ctx->deg = deg;
  ctx->q = qi.convert_to<std::uint64_t>();
  ctx->q0_pow_.resize(deg + 1);
  ctx->q0_pow_[0] = 1;
  for (unsigned i = 1; i <= deg; ++i) ctx->q0_pow_[i] = ctx->q0_pow_[i - 1] * q0;

  // Least monic irreducible modulus, ordered by the code of the non-leading
  // coefficient vector.
  Poly mod;
  if (deg == 1) {
    mod = {0, 1};  // x
  } else {
    for (std::uint64_t e = 0;; ++e) {
      Poly f(deg + 1, 0);
      std::uint64_t t = e;
      for (unsigned i = 0; i < deg; ++i) {
        f[i] = t % q0;
        t /= q0;
      }
      f[deg] = 1;
      if (poly_irreducible(f, q0)) {
        mod = f;
        break;
      }
    }
  }
  ctx->modulus = mod;

  auto decode = [&](std::uint32_t c) {
    Poly f;
    std::uint64_t t = c;
    for (unsigned i = 0; i < deg; ++i) {
      f.push_back(t % q0);
      t /= q0;
    }
    trim(f);
    return f;
  };
  auto encode = [&](const Poly& f) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < f.size(); ++i) c += f[i] * ctx->q0_pow_[i];
    return std::uint32_t(c);
  };
  auto raw_mul = [&](std::uint32_t a, std::uint32_t b) {
    return encode(poly_mod(poly_mul(decode(a), decode(b), q0), mod, q0));
  };
  auto raw_pow = [&](std::uint32_t b, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, b);
      b = raw_mul(b, b);
      e >>= 1;
    }
    return r;
  };

  const std::uint64_t q = ctx->q;
  auto pf = prime_factors_u64(q - 1);
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 1; cand < q; ++cand) {
    bool ok = true;
    for (std::uint64_t f : pf)
      if (raw_pow(cand, (q - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = cand;
      break;
    }
  }
  ctx->gen = gen;

  ctx->exp_tab_.resize(q - 1);
  ctx->log_tab_.assign(q, 0);
  std::uint32_t cur = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    ctx->exp_tab_[i] = cur;
    ctx->log_tab_[cur] = std::uint32_t(i);
    cur = raw_mul(cur, gen);
  }
  if (cur != 1) throw std::logic_error("make_field: generator order mismatch");

  std::lock_guard<std::mutex> lk(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(q0, deg), ctx);
  return it->second;
}

std::vector<std::uint32_t> nth_roots(const FieldCtx& f, std::uint32_t x,
                                     const Int& n) {
  if (n < 1) throw std::domain_error("nth_roots: n must be positive");
  if (x == 0) return {0};
  const std::uint64_t Q1 = f.q - 1;
  const std::uint64_t nr = (n % Q1).convert_to<std::uint64_t>();
  const std::uint64_t g = std::gcd(nr == 0 ? Q1 : nr, Q1);
  const std::uint64_t e = f.log(x);
  if (e % g != 0) return {};
  // Solve nr * t == e (mod Q1): g solutions spaced Q1/g apart.
  const std::uint64_t step = Q1 / g;
  std::uint64_t t0;
  if (nr == 0) {
    if (e != 0) return {};
    t0 = 0;
  } else {
    t0 = ((e / g) %
          (Q1 / g) *
          mod_inverse(Int(nr / g), Int(Q1 / g)).convert_to<std::uint64_t>()) %
         (Q1 / g);
  }
  std::vector<std::uint32_t> roots;
  roots.reserve(g);
  for (std::uint64_t k = 0; k < g; ++k)
    roots.push_back(f.exp(t0 + k * step));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<FieldElement> nth_roots(const FieldElement& x, const Int& n) {
  std::vector<FieldElement> out;
  for (std::uint32_t c : nth_roots(*x.ctx, x.v, n)) out.emplace_back(x.ctx, c);
  return out;
}

std::uint32_t primitive_root_of_unity(const FieldCtx& f, const Int& order) {
  if (order < 1) throw std::domain_error("root of unity: order must be >= 1");
  if (Int(f.q - 1) % order != 0)
    throw NoSuchRootOfUnity("order does not divide q - 1");
  std::uint64_t o = order.convert_to<std::uint64_t>();
  return f.exp((f.q - 1) / o);
}

Embedding::Embedding(FieldPtr src, FieldPtr dst)
    : src_(std::move(src)), dst_(std::move(dst)) {
  if (src_->q0 != dst_->q0 || dst_->deg % src_->deg != 0)
    throw std::domain_error("Embedding: incompatible fields");
  if (src_->deg == 1) {
    root_ = 0;  // unused: prime-field codes are shared
    return;
  }
  // Least root of the source modulus in the target field.
  for (std::uint64_t z = 0; z < dst_->q; ++z) {
    std::uint32_t acc = 0;
    for (std::size_t i = src_->modulus.size(); i-- > 0;)
      acc = dst_->add(dst_->mul(acc, std::uint32_t(z)),
                      std::uint32_t(src_->modulus[i]));
    if (acc == 0) {
      root_ = std::uint32_t(z);
      return;
    }
  }
  throw std::logic_error("Embedding: modulus has no root in target");
}

std::uint32_t Embedding::apply(std::uint32_t x) const {
  if (src_->deg == 1) return x;
  std::uint32_t acc = 0;
  std::uint64_t t = x;
  std::vector<std::uint32_t> digits(src_->deg);
  for (unsigned i = 0; i < src_->deg; ++i) {
    digits[i] = std::uint32_t(t % src_->q0);
    t /= src_->q0;
  }
  for (unsigned i = src_->deg; i-- > 0;)
    acc = dst_->add(dst_->mul(acc, root_), digits[i]);
  return acc;
}

FieldElement Embedding::apply(const FieldElement& x) const {
  if (x.ctx != src_) throw std::domain_error("Embedding: wrong source field");
  return {dst_, apply(x.v)};
}

}  // namespace storic
