#include "storic/family.hpp"

namespace storic {

CertificateSet validate(const FamilyParams& params) {
  params.check_shape();
  for (int i = 1; i <= params.n - 2; ++i)
    if (params.c[i - 1] % params.p == 0) throw ConditionIFailure(i);
  if (ext_gcd(params.a, params.d).g != 1) throw ConditionIIFailure();

  CertificateSet cs;
  cs.gh = solve_gh(params.p, params.l, params.a, params.d);
  for (int i = 1; i <= params.n - 2; ++i) {
    for (int j = i + 1; j <= params.n - 2; ++j) {
      cs.gij.push_back({i, j,
                        solve_gij(params.c[i - 1], params.c[j - 1], params.p,
                                  params.l)});
      cs.dij.push_back({i, j, solve_dij(params.c[i - 1], params.c[j - 1])});
    }
    cs.hi.push_back(
        {i, solve_hk(params.c[i - 1], params.a, params.d, params.p, params.l)});
  }
  return cs;
}

namespace {

Binomial make_binomial(int n, const std::vector<std::pair<int, Int>>& plus,
                       const std::vector<std::pair<int, Int>>& minus) {
  IntVector v = IntVector::Zero(2 * n);
  for (const auto& [col, e] : plus) v[col] += e;
  for (const auto& [col, e] : minus) v[col] -= e;
  return Binomial::from_vector(v);
}

}  // namespace

std::vector<Binomial> build_F(const FamilyParams& params, const GHCert& gh) {
  const int n = params.n;
  const Int P = params.p_pow_l();
  ExponentMatrix E;  // only for column indexing
  E.n = n;
  std::vector<Binomial> F;
  for (int i = 1; i <= n - 2; ++i) {
    F.push_back(make_binomial(
        n, {{E.y_col(i), P}},
        {{E.x_col(i), P * params.b[i - 1]}, {E.x_col(n - 1), params.c[i - 1]}}));
  }
  F.push_back(make_binomial(n, {{E.y_col(n - 1), params.a}},
                            {{E.x_col(n), params.d}}));
  F.push_back(make_binomial(n, {{E.y_col(n), P}},
                            {{E.x_col(n - 1), 1},
                             {E.x_col(n), gh.g},
                             {E.y_col(n - 1), gh.h}}));
  return F;
}

std::vector<Binomial> build_G(const FamilyParams& params,
                              const CertificateSet& certs) {
  const int n = params.n;
  ExponentMatrix E;
  E.n = n;
  std::vector<Binomial> G;
  for (const auto& [i, j, c] : certs.gij) {
    Int x_exp = c.r * pow_int(params.p,
                              (c.m - params.l).convert_to<unsigned>());
    G.push_back(make_binomial(
        n, {{E.y_col(i), c.g_ij}, {E.y_col(j), c.g_ji}},
        {{E.x_col(i), params.b[i - 1] * c.g_ij},
         {E.x_col(j), params.b[j - 1] * c.g_ji},
         {E.x_col(n - 1), x_exp}}));
  }
  return G;
}

std::vector<Binomial> build_H(const FamilyParams& params,
                              const CertificateSet& certs) {
  const int n = params.n;
  ExponentMatrix E;
  E.n = n;
  std::vector<Binomial> H;
  for (const auto& [i, c] : certs.hi) {
    Int x_exp = c.r * pow_int(params.p,
                              (c.m - params.l).convert_to<unsigned>());
    H.push_back(make_binomial(
        n, {{E.y_col(i), c.h}, {E.y_col(n), c.k}},
        {{E.x_col(i), params.b[i - 1] * c.h},
         {E.x_col(n - 1), x_exp},
         {E.x_col(n), c.s},
         {E.y_col(n - 1), c.t}}));
  }
  return H;
}

std::vector<Binomial> EquationSystem::full() const {
  std::vector<Binomial> all = F;
  all.insert(all.end(), G.begin(), G.end());
  all.insert(all.end(), H.begin(), H.end());
  return all;
}

EquationSystem build_system(const FamilyParams& params) {
  EquationSystem sys;
  sys.params = params;
  sys.certs = validate(params);
  sys.F = build_F(params, sys.certs.gh);
  sys.G = build_G(params, sys.certs);
  sys.H = build_H(params, sys.certs);
  return sys;
}

RankReport rank_report(const FamilyParams& params) {
  params.check_shape();
  const int n = params.n;
  RankReport r;
  r.n = n;
  r.bar_char_p = n;
  r.bar_char_other = Int(2 * n - 2) + Int((n - 2) * (n - 3) / 2);
  r.ara_char_p = n;
  r.ara_other_low = 2 * n - 2;
  r.ara_other_high = 2 * n;
  if (n == 3) r.ara_other_exact = 4;
  return r;
}

std::vector<std::uint32_t> phi(const FamilyParams& params, const FieldCtx& f,
                               const std::vector<std::uint32_t>& u) {
  const int n = params.n;
  if (static_cast<int>(u.size()) != n)
    throw std::domain_error("phi: expected n parameters");
  std::vector<std::uint32_t> pt(2 * n);
  for (int i = 0; i < n - 2; ++i) pt[i] = u[i];
  pt[n - 2] = f.pow(u[n - 2], params.p_pow_l());
  pt[n - 1] = f.pow(u[n - 1], params.a);
  for (int i = 0; i < n - 2; ++i)
    pt[n + i] = f.mul(f.pow(u[i], params.b[i]), f.pow(u[n - 2], params.c[i]));
  pt[2 * n - 2] = f.pow(u[n - 1], params.d);
  pt[2 * n - 1] = f.mul(u[n - 2], u[n - 1]);
  return pt;
}

std::vector<FieldElement> phi(const FamilyParams& params,
                              const std::vector<FieldElement>& u) {
  if (u.empty()) throw std::domain_error("phi: empty parameter vector");
  const FieldPtr& ctx = u.front().ctx;
  std::vector<std::uint32_t> codes;
  for (const FieldElement& e : u) {
    FieldElement::require_same(e, u.front());
    codes.push_back(e.v);
  }
  std::vector<FieldElement> out;
  for (std::uint32_t c : phi(params, *ctx, codes)) out.emplace_back(ctx, c);
  return out;
}

}  // namespace storic
