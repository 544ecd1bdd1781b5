#include "storic/json_io.hpp"

namespace storic {
namespace {

std::string var_name(int col, int n) {
  return col < n ? "x" + std::to_string(col + 1)
                 : "y" + std::to_string(col - n + 1);
}

int var_col(const std::string& name, int n) {
  int idx = std::stoi(name.substr(1)) - 1;
  if (idx < 0 || idx >= n) throw std::domain_error("bad variable name: " + name);
  if (name[0] == 'x') return idx;
  if (name[0] == 'y') return n + idx;
  throw std::domain_error("bad variable name: " + name);
}

json exponent_map(const IntVector& m, int n) {
  json out = json::object();
  for (Eigen::Index j = 0; j < m.size(); ++j)
    if (m[j] > 0) out[var_name(static_cast<int>(j), n)] = int_to_json(m[j]);
  return out;
}

}  // namespace

json int_to_json(const Int& v) { return v.str(); }

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  return Int(j.get<std::string>());
}

json to_json(const FamilyParams& p) {
  json b = json::array(), c = json::array();
  for (const Int& v : p.b) b.push_back(int_to_json(v));
  for (const Int& v : p.c) c.push_back(int_to_json(v));
  return {{"n", p.n},     {"p", int_to_json(p.p)}, {"l", p.l},
          {"a", int_to_json(p.a)}, {"d", int_to_json(p.d)}, {"b", b},
          {"c", c}};
}

FamilyParams params_from_json(const json& j) {
  FamilyParams p;
  p.n = j.at("n").get<int>();
  p.p = int_from_json(j.at("p"));
  p.l = j.at("l").get<unsigned>();
  p.a = int_from_json(j.at("a"));
  p.d = int_from_json(j.at("d"));
  for (const json& v : j.at("b")) p.b.push_back(int_from_json(v));
  for (const json& v : j.at("c")) p.c.push_back(int_from_json(v));
  return p;
}

json to_json(const Binomial& b, int n) {
  return {{"plus", exponent_map(b.plus, n)}, {"minus", exponent_map(b.minus, n)}};
}

Binomial binomial_from_json(const json& j, int n) {
  IntVector v = IntVector::Zero(2 * n);
  for (const auto& [name, e] : j.at("plus").items())
    v[var_col(name, n)] += int_from_json(e);
  for (const auto& [name, e] : j.at("minus").items())
    v[var_col(name, n)] -= int_from_json(e);
  return Binomial::from_vector(v);
}

json to_json(const CertificateSet& c) {
  json gij = json::array(), hi = json::array(), dij = json::array();
  for (const auto& e : c.gij)
    gij.push_back({{"i", e.i},
                   {"j", e.j},
                   {"g_ij", int_to_json(e.cert.g_ij)},
                   {"g_ji", int_to_json(e.cert.g_ji)},
                   {"r", int_to_json(e.cert.r)},
                   {"m", int_to_json(e.cert.m)}});
  for (const auto& e : c.hi)
    hi.push_back({{"i", e.i},
                  {"h", int_to_json(e.cert.h)},
                  {"k", int_to_json(e.cert.k)},
                  {"r", int_to_json(e.cert.r)},
                  {"m", int_to_json(e.cert.m)},
                  {"s", int_to_json(e.cert.s)},
                  {"t", int_to_json(e.cert.t)}});
  for (const auto& e : c.dij)
    dij.push_back({{"i", e.i},
                   {"j", e.j},
                   {"d_ij", int_to_json(e.cert.d_ij)},
                   {"d_ji", int_to_json(e.cert.d_ji)}});
  return {{"gh", {{"g", int_to_json(c.gh.g)}, {"h", int_to_json(c.gh.h)}}},
          {"gij", gij},
          {"hi", hi},
          {"dij", dij}};
}

json to_json(const EquationSystem& s) {
  json F = json::array(), G = json::array(), H = json::array();
  for (const Binomial& b : s.F) F.push_back(to_json(b, s.params.n));
  for (const Binomial& b : s.G) G.push_back(to_json(b, s.params.n));
  for (const Binomial& b : s.H) H.push_back(to_json(b, s.params.n));
  return {{"params", to_json(s.params)},
          {"certificates", to_json(s.certs)},
          {"F", F},
          {"G", G},
          {"H", H}};
}

EquationSystem system_from_json(const json& j) {
  EquationSystem s;
  s.params = params_from_json(j.at("params"));
  s.certs = validate(s.params);
  for (const json& b : j.at("F"))
    s.F.push_back(binomial_from_json(b, s.params.n));
  for (const json& b : j.at("G"))
    s.G.push_back(binomial_from_json(b, s.params.n));
  for (const json& b : j.at("H"))
    s.H.push_back(binomial_from_json(b, s.params.n));
  return s;
}

json to_json(const RankReport& r) {
  json out = {{"n", r.n},
              {"bar_char_p", int_to_json(r.bar_char_p)},
              {"bar_char_other", int_to_json(r.bar_char_other)},
              {"ara_char_p", int_to_json(r.ara_char_p)},
              {"ara_other_low", int_to_json(r.ara_other_low)},
              {"ara_other_high", int_to_json(r.ara_other_high)}};
  if (r.ara_other_exact) out["ara_other_exact"] = int_to_json(*r.ara_other_exact);
  return out;
}

json to_json(const Prop1Report& r) {
  json fields = json::array();
  for (const auto& pf : r.fields) {
    json e = {{"k", pf.k}, {"skipped", pf.skipped}};
    if (pf.skipped)
      e["reason"] = pf.skip_reason;
    else {
      e["zero_set_size"] = pf.zero_size;
      e["image_size"] = pf.image_size;
      e["equal"] = pf.equal;
      e["millis"] = pf.millis;
    }
    fields.push_back(e);
  }
  return {{"check", "char_p_complete_intersection"},
          {"fields", fields},
          {"pass", r.pass}};
}

json to_json(const Prop2Report& r) {
  json cex = json::array();
  for (const auto& pt : r.counterexamples) cex.push_back(pt);
  json deg = json::object();
  for (const auto& [k, v] : r.witness_degree_counts)
    deg[std::to_string(k)] = v;
  return {{"check", "char_other_defining_system"},
          {"q", r.q},
          {"zero_set_size", r.zero_size},
          {"image_size", r.image_size},
          {"image_subset_of_zero_set", r.image_subset},
          {"points_on_variety", r.in_v},
          {"witness_degree_counts", deg},
          {"counterexamples", cex},
          {"pass", r.pass},
          {"millis", r.millis}};
}

json to_json(const MembershipVerdict& v) {
  json out = {{"status", v.in_v ? "InV" : "NotInV"},
              {"extension_degree", v.extension_degree}};
  if (v.in_v) {
    out["witness_params"] = v.witness_params;
    out["witness_degree"] = v.witness_degree;
  }
  if (!v.trace.empty()) {
    json tr = json::array();
    for (const auto& c : v.trace)
      tr.push_back({{"u_penultimate", c.u_pen},
                    {"u_last", c.u_last},
                    {"failed_coordinate", c.failed_coordinate}});
    out["trace"] = tr;
  }
  return out;
}

json to_json(const WitnessCertificate& w) {
  json conds = json::object();
  for (const auto& [name, ab] : w.monomial_conditions)
    conds[name] = {{"a", ab.first}, {"b", ab.second}};
  return {{"point", w.point},
          {"field", {{"q0", w.field->q0}, {"deg", w.field->deg}}},
          {"vanishing", w.vanishing},
          {"nonvanishing", w.nonvanishing},
          {"nonvanishing_value", w.nonvanishing_value},
          {"membership", to_json(w.membership)},
          {"monomial_conditions", conds},
          {"pass", w.pass}};
}

json to_json(const LemmaReport& r) {
  json out = {{"check", r.name}, {"checked", r.checked}, {"pass", r.pass}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

std::string format_binomial(const Binomial& b, int n) {
  auto side = [&](const IntVector& m) {
    std::string s;
    for (Eigen::Index j = 0; j < m.size(); ++j) {
      if (m[j] <= 0) continue;
      if (!s.empty()) s += "*";
      s += var_name(static_cast<int>(j), n);
      if (m[j] != 1) s += "^" + m[j].str();
    }
    return s.empty() ? std::string("1") : s;
  };
  return side(b.plus) + " - " + side(b.minus);
}

}  // namespace storic
