#include "storic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

namespace storic {
namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

Int coprime_part(Int n, const Int& p) {
  while (n % p == 0) n /= p;
  return n;
}

/// A binomial lowered to log-table arithmetic over one field: monomials as
/// (variable, exponent mod q-1) terms plus the zero-annihilation flags.
struct CompiledMonomial {
  struct Term {
    int var;
    std::uint64_t exp_mod;
  };
  std::vector<Term> terms;

  std::uint32_t eval(const FieldCtx& f,
                     const std::uint32_t* pt) const {
    std::uint64_t s = 0;
    for (const Term& t : terms) {
      std::uint32_t c = pt[t.var];
      if (c == 0) return 0;
      s += t.exp_mod * f.log(c);
    }
    return f.exp(s);
  }
};

struct CompiledBinomial {
  CompiledMonomial plus, minus;

  bool vanishes(const FieldCtx& f, const std::uint32_t* pt) const {
    return plus.eval(f, pt) == minus.eval(f, pt);
  }
};

CompiledMonomial compile_monomial(const IntVector& m, const FieldCtx& f) {
  CompiledMonomial cm;
  for (Eigen::Index j = 0; j < m.size(); ++j)
    if (m[j] > 0)
      cm.terms.push_back(
          {static_cast<int>(j),
           (m[j] % (f.q - 1)).convert_to<std::uint64_t>()});
  return cm;
}

std::vector<CompiledBinomial> compile_system(const std::vector<Binomial>& sys,
                                             const FieldCtx& f) {
  std::vector<CompiledBinomial> out;
  out.reserve(sys.size());
  for (const Binomial& b : sys)
    out.push_back({compile_monomial(b.plus, f), compile_monomial(b.minus, f)});
  return out;
}

std::uint32_t eval_binomial(const Binomial& b, const FieldCtx& f,
                            const std::vector<std::uint32_t>& pt) {
  CompiledBinomial cb{compile_monomial(b.plus, f), compile_monomial(b.minus, f)};
  return f.sub(cb.plus.eval(f, pt.data()), cb.minus.eval(f, pt.data()));
}

}  // namespace

std::vector<std::uint32_t> PointSet::decode(std::uint64_t idx) const {
  std::vector<std::uint32_t> pt(coords);
  for (int k = coords; k-- > 0;) {
    pt[k] = std::uint32_t(idx % field->q);
    idx /= field->q;
  }
  return pt;
}

std::uint64_t PointSet::encode(const std::vector<std::uint32_t>& pt) const {
  std::uint64_t idx = 0;
  for (std::uint32_t c : pt) idx = idx * field->q + c;
  return idx;
}

bool PointSet::contains(std::uint64_t idx) const {
  return std::binary_search(points.begin(), points.end(), idx);
}

PointSet zero_set(const std::vector<Binomial>& system, FieldPtr field, int n,
                  const EnumOptions& opts) {
  const FieldCtx& f = *field;
  const int coords = 2 * n;
  Int total_i = pow_int(Int(f.q), coords);
  if (total_i > opts.budget)
    throw BudgetError("zero_set: |field|^(2n) exceeds the enumeration budget");
  const std::uint64_t total = total_i.convert_to<std::uint64_t>();

  auto compiled = compile_system(system, f);

  // Disjoint chunks over the two leading coordinates; chunk-major order keeps
  // the merged result sorted without a final sort.
  const std::uint64_t chunk_len =
      coords >= 2 ? total / (f.q * f.q) : total;
  const std::uint64_t chunks = total / chunk_len;

  std::vector<std::vector<std::uint64_t>> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    std::vector<std::uint32_t> pt(coords);
    for (;;) {
      std::uint64_t ch = next.fetch_add(1);
      if (ch >= chunks) return;
      std::vector<std::uint64_t>& out = results[ch];
      const std::uint64_t base = ch * chunk_len;
      // decode the prefix once, run an odometer over the suffix
      std::uint64_t idx = base;
      for (int k = coords; k-- > 0;) {
        pt[k] = std::uint32_t(idx % f.q);
        idx /= f.q;
      }
      for (std::uint64_t off = 0;; ++off) {
        bool all = true;
        for (const CompiledBinomial& cb : compiled)
          if (!cb.vanishes(f, pt.data())) {
            all = false;
            break;
          }
        if (all) out.push_back(base + off);
        if (off + 1 == chunk_len) break;
        for (int k = coords; k-- > 0;) {
          if (++pt[k] < f.q) break;
          pt[k] = 0;
        }
      }
    }
  };
  const int jobs = std::max(1, opts.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  PointSet ps;
  ps.field = field;
  ps.coords = coords;
  for (auto& r : results)
    ps.points.insert(ps.points.end(), r.begin(), r.end());
  return ps;
}

PointSet image_set(const FamilyParams& params, FieldPtr field,
                   const EnumOptions& opts) {
  const FieldCtx& f = *field;
  const int n = params.n;
  Int total_i = pow_int(Int(f.q), n);
  if (total_i > opts.budget)
    throw BudgetError("image_set: |field|^n exceeds the enumeration budget");
  const std::uint64_t total = total_i.convert_to<std::uint64_t>();

  PointSet ps;
  ps.field = field;
  ps.coords = 2 * n;
  std::vector<std::uint32_t> u(n, 0);
  for (std::uint64_t i = 0;; ++i) {
    ps.points.push_back(ps.encode(phi(params, f, u)));
    if (i + 1 == total) break;
    for (int k = n; k-- > 0;) {
      if (++u[k] < f.q) break;
      u[k] = 0;
    }
  }
  std::sort(ps.points.begin(), ps.points.end());
  ps.points.erase(std::unique(ps.points.begin(), ps.points.end()),
                  ps.points.end());
  return ps;
}

MembershipOracle::MembershipOracle(FamilyParams params, FieldPtr base,
                                   bool record_trace)
    : params_(std::move(params)),
      base_(std::move(base)),
      record_trace_(record_trace) {
  pl_coprime_ = coprime_part(params_.p_pow_l(), Int(base_->q0));
  a_coprime_ = coprime_part(params_.a, Int(base_->q0));
}

unsigned MembershipOracle::extension_degree() const {
  // Smallest M with lcm(pl', a') * (q - 1) | q^M - 1: then every root (of any
  // order forced by the parametrization) of a base-field element lies in
  // GF(q^M).
  Int l = pl_coprime_ * a_coprime_ / ext_gcd(pl_coprime_, a_coprime_).g;
  Int N = l * (base_->q - 1);
  if (N == 1) return 1;
  Int qm = 1;
  for (unsigned M = 1; M <= 64; ++M) {
    qm = qm * base_->q % N;
    if (qm == 1) return M;
  }
  throw std::logic_error("membership oracle: extension degree cap exceeded");
}

void MembershipOracle::ensure_extension() const {
  if (ext_) return;
  unsigned M = extension_degree();
  ext_ = make_field(base_->q0, base_->deg * M);
  embed_ = std::make_unique<Embedding>(base_, ext_);
}

MembershipVerdict MembershipOracle::search(
    const FieldCtx& f, const std::vector<std::uint32_t>& pt,
    const std::vector<std::uint32_t>& r_pen,
    const std::vector<std::uint32_t>& r_last) const {
  const int n = params_.n;
  MembershipVerdict v;
  std::vector<std::uint32_t> u(n);
  for (int i = 0; i < n - 2; ++i) u[i] = pt[i];
  for (std::uint32_t up : r_pen) {
    for (std::uint32_t ul : r_last) {
      u[n - 2] = up;
      u[n - 1] = ul;
      std::vector<std::uint32_t> img = phi(params_, f, u);
      int bad = -1;
      for (int k = 0; k < 2 * n; ++k)
        if (img[k] != pt[k]) {
          bad = k;
          break;
        }
      if (record_trace_) v.trace.push_back({up, ul, bad});
      if (bad < 0) {
        v.in_v = true;
        v.witness_params = u;
        return v;
      }
    }
  }
  return v;
}

MembershipVerdict MembershipOracle::query(
    const std::vector<std::uint32_t>& point) const {
  const int n = params_.n;
  if (static_cast<int>(point.size()) != 2 * n)
    throw std::domain_error("membership oracle: expected 2n coordinates");
  const std::uint32_t x_pen = point[n - 2], x_last = point[n - 1];

  // Number of candidate roots over the closure: the char-free part of the
  // root order (char-power roots are unique by Frobenius).
  const std::uint64_t want_pen =
      x_pen == 0 ? 1 : pl_coprime_.convert_to<std::uint64_t>();
  const std::uint64_t want_last =
      x_last == 0 ? 1 : a_coprime_.convert_to<std::uint64_t>();

  auto r_pen = nth_roots(*base_, x_pen, params_.p_pow_l());
  auto r_last = nth_roots(*base_, x_last, params_.a);

  if (r_pen.size() == want_pen && r_last.size() == want_last) {
    MembershipVerdict v = search(*base_, point, r_pen, r_last);
    v.field = base_;
    v.extension_degree = 1;
    v.witness_degree = 1;
    return v;
  }

  ensure_extension();
  std::vector<std::uint32_t> ept(point.size());
  for (std::size_t k = 0; k < point.size(); ++k)
    ept[k] = embed_->apply(point[k]);
  auto er_pen = nth_roots(*ext_, ept[n - 2], params_.p_pow_l());
  auto er_last = nth_roots(*ext_, ept[n - 1], params_.a);
  MembershipVerdict v = search(*ext_, ept, er_pen, er_last);
  v.field = ext_;
  v.extension_degree = ext_->deg / base_->deg;
  if (v.in_v) {
    // Least subfield GF(q^k) containing the recovered parameters.
    for (unsigned k = 1; k <= v.extension_degree; ++k) {
      if (v.extension_degree % k != 0) continue;
      Int fix = pow_int(Int(base_->q), k);
      bool all = true;
      for (std::uint32_t c : v.witness_params)
        if (ext_->pow(c, fix) != c) {
          all = false;
          break;
        }
      if (all) {
        v.witness_degree = k;
        break;
      }
    }
  }
  return v;
}

Prop1Report check_prop1(const EquationSystem& sys,
                        const std::vector<unsigned>& ks,
                        const EnumOptions& opts) {
  const FamilyParams& params = sys.params;
  Prop1Report rep;
  rep.pass = true;
  for (unsigned k : ks) {
    Prop1Report::PerField pf;
    pf.k = k;
    auto t0 = std::chrono::steady_clock::now();
    Int qk1 = pow_int(params.p, k) - 1;
    Int ap = coprime_part(params.a, params.p);
    if (ext_gcd(ap, qk1).g != 1) {
      pf.skipped = true;
      pf.skip_reason = "a-th power map not surjective on GF(p^" +
                       std::to_string(k) + ")";
      rep.fields.push_back(pf);
      continue;
    }
    FieldPtr f = make_field(params.p.convert_to<std::uint64_t>(), k);
    PointSet zs = zero_set(sys.F, f, params.n, opts);
    PointSet img = image_set(params, f, opts);
    pf.zero_size = zs.points.size();
    pf.image_size = img.points.size();
    pf.equal = zs.points == img.points;
    pf.millis = elapsed_ms(t0);
    rep.pass = rep.pass && pf.equal;
    rep.fields.push_back(pf);
  }
  return rep;
}

Prop2Report check_prop2(const EquationSystem& sys, std::uint64_t q,
                        const EnumOptions& opts) {
  const FamilyParams& params = sys.params;
  if (Int(q) == params.p)
    throw std::domain_error("check_prop2: q must differ from p");
  auto t0 = std::chrono::steady_clock::now();
  FieldPtr f = make_field(q, 1);
  Prop2Report rep;
  rep.q = q;
  PointSet zs = zero_set(sys.full(), f, params.n, opts);
  PointSet img = image_set(params, f, opts);
  rep.zero_size = zs.points.size();
  rep.image_size = img.points.size();
  rep.image_subset = std::includes(zs.points.begin(), zs.points.end(),
                                   img.points.begin(), img.points.end());
  MembershipOracle oracle(params, f);
  for (std::uint64_t idx : zs.points) {
    std::vector<std::uint32_t> pt = zs.decode(idx);
    MembershipVerdict v = oracle.query(pt);
    if (v.in_v) {
      ++rep.in_v;
      ++rep.witness_degree_counts[v.witness_degree];
    } else {
      rep.counterexamples.push_back(pt);
    }
  }
  rep.pass = rep.image_subset && rep.counterexamples.empty();
  rep.millis = elapsed_ms(t0);
  return rep;
}

namespace {

std::string binomial_name(const EquationSystem& sys, std::size_t idx) {
  const std::size_t nf = sys.F.size(), ng = sys.G.size();
  if (idx < nf) return "F" + std::to_string(idx + 1);
  if (idx < nf + ng) {
    const auto& g = sys.certs.gij[idx - nf];
    return "G" + std::to_string(g.i) + std::to_string(g.j);
  }
  return "H" + std::to_string(sys.certs.hi[idx - nf - ng].i);
}

// Prop-4 proof conditions on a monomial's support, relative to index i.
bool cond_a(const IntVector& m, const ExponentMatrix& E) {
  for (Eigen::Index j = 0; j < m.size(); ++j)
    if (m[j] > 0 && j != E.x_col(E.n - 1) && j != E.x_col(E.n) &&
        j != E.y_col(E.n - 1) && j != E.y_col(E.n))
      return false;
  return true;
}

bool cond_b(const IntVector& m, const ExponentMatrix& E, int i) {
  for (Eigen::Index j = 0; j < m.size(); ++j)
    if (m[j] > 0 && j != E.x_col(i) && j != E.x_col(E.n - 1) &&
        j != E.x_col(E.n) && j != E.y_col(i) && j != E.y_col(E.n - 1) &&
        j != E.y_col(E.n))
      return true;
  return false;
}

WitnessCertificate finish_witness(const EquationSystem& sys, FieldPtr f,
                                  std::vector<std::uint32_t> point, int i,
                                  bool require_H, int j = -1) {
  const FamilyParams& params = sys.params;
  ExponentMatrix E;
  E.n = params.n;
  WitnessCertificate w;
  w.point = point;
  w.field = f;

  std::vector<Binomial> all = sys.full();
  for (std::size_t k = 0; k < all.size(); ++k) {
    std::string name = binomial_name(sys, k);
    std::uint32_t val = eval_binomial(all[k], *f, point);
    if (val == 0)
      w.vanishing.push_back(name);
    else if (w.nonvanishing.empty() &&
             ((require_H && name[0] == 'H') || (!require_H && name[0] == 'G'))) {
      w.nonvanishing = name;
      w.nonvanishing_value = val;
    }
    w.monomial_conditions[name] = {
        cond_a(all[k].plus, E) || cond_a(all[k].minus, E),
        cond_b(all[k].plus, E, i) || cond_b(all[k].minus, E, i)};
  }

  MembershipOracle oracle(params, f, /*record_trace=*/true);
  w.membership = oracle.query(point);

  auto vanished = [&](const std::string& name) {
    return std::find(w.vanishing.begin(), w.vanishing.end(), name) !=
           w.vanishing.end();
  };
  bool f_ok = j < 0 ? vanished("F" + std::to_string(i)) &&
                          vanished("F" + std::to_string(params.n))
                    : vanished("F" + std::to_string(i)) &&
                          vanished("F" + std::to_string(j));
  w.pass = f_ok && !w.nonvanishing.empty() && !w.membership.in_v;
  return w;
}

}  // namespace

WitnessCertificate witness_F(const EquationSystem& sys, int i, std::uint64_t q) {
  const FamilyParams& params = sys.params;
  if (i < 1 || i > params.n - 2)
    throw std::domain_error("witness_F: i must be in 1..n-2");
  if (Int(q) == params.p)
    throw std::domain_error("witness_F: q must differ from p");
  FieldPtr f = make_field(q, 1);
  std::uint32_t eta = primitive_root_of_unity(*f, params.p_pow_l());

  ExponentMatrix E;
  E.n = params.n;
  std::vector<std::uint32_t> pt(2 * params.n, 0);
  pt[E.x_col(i)] = 1;
  pt[E.x_col(params.n - 1)] = 1;
  pt[E.x_col(params.n)] = 1;
  pt[E.y_col(i)] = eta;
  pt[E.y_col(params.n - 1)] = 1;
  pt[E.y_col(params.n)] = 1;
  return finish_witness(sys, f, pt, i, /*require_H=*/true);
}

WitnessCertificate witness_pair(const EquationSystem& sys, int i, int j,
                                std::uint64_t q) {
  const FamilyParams& params = sys.params;
  if (params.n < 4) throw std::domain_error("witness_pair: requires n >= 4");
  if (!(1 <= i && i < j && j <= params.n - 2))
    throw std::domain_error("witness_pair: need 1 <= i < j <= n-2");
  FieldPtr f = make_field(q, 1);
  std::uint32_t eta = primitive_root_of_unity(*f, params.p_pow_l());

  const DijCert* dc = nullptr;
  for (const auto& e : sys.certs.dij)
    if (e.i == i && e.j == j) dc = &e.cert;
  if (!dc) throw std::logic_error("witness_pair: missing d_ij certificate");

  const Int P = params.p_pow_l();
  auto eta_pow = [&](const Int& e) {
    Int r = e % P;
    if (r < 0) r += P;
    return f->pow(eta, r);
  };

  ExponentMatrix E;
  E.n = params.n;
  std::vector<std::uint32_t> pt(2 * params.n, 0);
  pt[E.x_col(i)] = 1;
  pt[E.x_col(j)] = 1;
  pt[E.x_col(params.n - 1)] = 1;
  pt[E.y_col(i)] = eta_pow(dc->d_ij);
  pt[E.y_col(j)] = eta_pow(dc->d_ji);
  return finish_witness(sys, f, pt, i, /*require_H=*/false, j);
}

LemmaReport check_lemma1(const FamilyParams& params, std::uint64_t samples,
                         std::uint64_t seed) {
  ExponentMatrix E = build_matrix(params);
  IntMatrix K = kernel_basis(E.A);
  const int n = params.n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);

  LemmaReport rep;
  rep.name = "lemma1";
  rep.pass = true;
  auto describe = [&](const IntVector& v, const char* law) {
    std::string s = std::string("law ") + law + " fails at v = (";
    for (Eigen::Index k = 0; k < v.size(); ++k)
      s += v[k].str() + (k + 1 < v.size() ? "," : ")");
    return s;
  };

  while (rep.checked < samples) {
    IntVector z(K.cols());
    for (Eigen::Index k = 0; k < K.cols(); ++k) z[k] = coeff(rng);
    IntVector v = K * z;
    if (v.isZero()) continue;
    ++rep.checked;

    // (i): a nonzero x_i coordinate forces the opposite sign on y_i.
    for (int i = 1; i <= n - 2; ++i) {
      const Int& xi = v[E.x_col(i)];
      const Int& yi = v[E.y_col(i)];
      if ((xi > 0 && yi >= 0) || (xi < 0 && yi <= 0)) {
        rep.pass = false;
        rep.detail = describe(v, "(i)");
        return rep;
      }
    }
    // (ii): among {x_n, y_{n-1}, y_n} a sign is balanced by an opposite one.
    const int tri[3] = {E.x_col(n), E.y_col(n - 1), E.y_col(n)};
    for (int s : {1, -1}) {
      bool has = false, opp = false;
      for (int t : tri) {
        if (s * v[t] > 0) has = true;
        if (s * v[t] < 0) opp = true;
      }
      if (has && !opp) {
        rep.pass = false;
        rep.detail = describe(v, "(ii)");
        return rep;
      }
    }
    // (iii): a sign on x_{n-1} forces the opposite sign somewhere among
    // {y_1..y_{n-2}, y_n}.
    for (int s : {1, -1}) {
      if (s * v[E.x_col(n - 1)] <= 0) continue;
      bool opp = false;
      for (int i = 1; i <= n - 2; ++i)
        if (s * v[E.y_col(i)] < 0) opp = true;
      if (s * v[E.y_col(n)] < 0) opp = true;
      if (!opp) {
        rep.pass = false;
        rep.detail = describe(v, "(iii)");
        return rep;
      }
    }
  }
  return rep;
}

LemmaReport check_lemma2(const FamilyParams& params, const Int& D) {
  EquationSystem sys = build_system(params);
  ExponentMatrix E = build_matrix(params);
  LemmaReport rep;
  rep.name = "lemma2";
  rep.pass = true;
  for (int i = 1; i <= params.n - 1; ++i) {
    IntVector base = sys.F[i - 1].vector();
    const Int& lead = base[E.y_col(i)];  // p^l for i <= n-2, a for i = n-1
    for (const IntVector& v : monic_kernel_search(E, i, D)) {
      ++rep.checked;
      Int t = v[E.y_col(i)];
      if (t % lead != 0 || !IntVector(v - (t / lead) * base).isZero()) {
        rep.pass = false;
        rep.detail = "non-multiple monic vector in y_" + std::to_string(i);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace storic
