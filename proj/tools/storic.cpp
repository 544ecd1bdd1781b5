#include "storic/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace storic;

struct ParamFlags {
  int n = 3;
  long long p = 2;
  unsigned l = 1;
  long long a = 1;
  long long d = 1;
  std::vector<long long> b, c;

  FamilyParams to_params() const {
    FamilyParams fp;
    fp.n = n;
    fp.p = p;
    fp.l = l;
    fp.a = a;
    fp.d = d;
    for (long long v : b) fp.b.emplace_back(v);
    for (long long v : c) fp.c.emplace_back(v);
    return fp;
  }
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
  cmd->add_option("--n", pf.n, "dimension parameter n >= 3")->required();
  cmd->add_option("--p", pf.p, "prime p")->required();
  cmd->add_option("--l", pf.l, "exponent l >= 1")->required();
  cmd->add_option("--a", pf.a, "parameter a")->required();
  cmd->add_option("--d", pf.d, "parameter d")->required();
  cmd->add_option("--b", pf.b, "b_1,...,b_{n-2} (comma separated)")
      ->delimiter(',')
      ->required();
  cmd->add_option("--c", pf.c, "c_1,...,c_{n-2} (comma separated)")
      ->delimiter(',')
      ->required();
}

Int default_budget() {
  if (const char* env = std::getenv("STORIC_BUDGET")) return Int(env);
  return Int(100000000);
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    os << j.dump(2) << "\n";
  }
}

json manifest(const std::string& command, const FamilyParams& params,
              const json& fields, std::uint64_t seed, const Int& budget,
              int jobs, const std::string& out_path) {
  return {{"command", command},
          {"params", to_json(params)},
          {"fields", fields},
          {"seed", seed},
          {"budget", int_to_json(budget)},
          {"jobs", jobs},
          {"outputs", out_path.empty() ? json::array()
                                       : json::array({out_path})}};
}

int run(int argc, char** argv) {
  CLI::App app{"Simplicial toric varieties: binomial defining systems and "
               "finite-field verification"};
  app.require_subcommand(1);

  ParamFlags pf;
  std::string out_path, format = "json", mode;
  std::vector<unsigned> ks;
  std::vector<std::uint64_t> qs;
  int jobs = 1;
  std::uint64_t seed = 1, samples = 1000;
  long long degree_bound = 0;
  Int budget = default_budget();
  std::string budget_str;

  auto* construct = app.add_subcommand(
      "construct", "validate parameters and emit the F/G/H system");
  add_param_flags(construct, pf);
  construct->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  construct->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_param_flags(verify, pf);
  verify->add_option("--mode", mode, "char-p | char-other | witnesses | lemmas")
      ->required()
      ->check(CLI::IsMember({"char-p", "char-other", "witnesses", "lemmas"}));
  verify->add_option("--k", ks, "extension degrees for char-p (comma separated)")
      ->delimiter(',');
  verify->add_option("--q", qs, "field sizes (primes != p, comma separated)")
      ->delimiter(',');
  verify->add_option("--jobs", jobs, "enumeration worker threads");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--samples", samples, "samples for lemma 1");
  verify->add_option("--degree-bound", degree_bound,
                     "degree bound for lemma 2 (default 3*max(p^l, a))");
  verify->add_option("--budget", budget_str,
                     "max enumerated points (default $STORIC_BUDGET or 1e8)");
  verify->add_option("--out", out_path, "report file (default stdout)");

  auto* report = app.add_subcommand("report", "rank/bounds table");
  add_param_flags(report, pf);
  report->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (!budget_str.empty()) budget = Int(budget_str);

  std::string cmdline;
  for (int i = 0; i < argc; ++i)
    cmdline += std::string(i ? " " : "") + argv[i];

  try {
    FamilyParams params = pf.to_params();

    if (construct->parsed()) {
      EquationSystem sys = build_system(params);
      if (format == "text") {
        std::ostringstream os;
        for (std::size_t i = 0; i < sys.F.size(); ++i)
          os << "F" << i + 1 << " = " << format_binomial(sys.F[i], params.n)
             << "\n";
        for (std::size_t i = 0; i < sys.G.size(); ++i)
          os << "G" << sys.certs.gij[i].i << sys.certs.gij[i].j << " = "
             << format_binomial(sys.G[i], params.n) << "\n";
        for (std::size_t i = 0; i < sys.H.size(); ++i)
          os << "H" << sys.certs.hi[i].i << " = "
             << format_binomial(sys.H[i], params.n) << "\n";
        if (out_path.empty())
          std::cout << os.str();
        else
          std::ofstream(out_path) << os.str();
      } else {
        emit(to_json(sys), out_path);
      }
      return 0;
    }

    if (report->parsed()) {
      validate(params);
      emit(to_json(rank_report(params)), out_path);
      return 0;
    }

    // verify
    EnumOptions opts;
    opts.budget = budget;
    opts.jobs = jobs;
    EquationSystem sys = build_system(params);
    json fields = json::array();
    json body;
    bool pass = false;

    if (mode == "char-p") {
      if (ks.empty()) throw CLI::ValidationError("--k is required for char-p");
      for (unsigned k : ks) fields.push_back({{"q0", pf.p}, {"deg", k}});
      Prop1Report r = check_prop1(sys, ks, opts);
      body = to_json(r);
      pass = r.pass;
    } else if (mode == "char-other") {
      if (qs.empty())
        throw CLI::ValidationError("--q is required for char-other");
      json runs = json::array();
      pass = true;
      for (std::uint64_t q : qs) {
        fields.push_back({{"q0", q}, {"deg", 1}});
        Prop2Report r = check_prop2(sys, q, opts);
        runs.push_back(to_json(r));
        pass = pass && r.pass;
      }
      body = {{"check", "char_other_defining_system"}, {"runs", runs},
              {"pass", pass}};
    } else if (mode == "witnesses") {
      if (qs.empty())
        throw CLI::ValidationError("--q is required for witnesses");
      json certs = json::array();
      pass = true;
      for (std::uint64_t q : qs) {
        fields.push_back({{"q0", q}, {"deg", 1}});
        for (int i = 1; i <= params.n - 2; ++i) {
          WitnessCertificate w = witness_F(sys, i, q);
          json e = to_json(w);
          e["kind"] = "F";
          e["i"] = i;
          certs.push_back(e);
          pass = pass && w.pass;
        }
        for (int i = 1; i <= params.n - 2; ++i)
          for (int j = i + 1; j <= params.n - 2; ++j) {
            WitnessCertificate w = witness_pair(sys, i, j, q);
            json e = to_json(w);
            e["kind"] = "pair";
            e["i"] = i;
            e["j"] = j;
            certs.push_back(e);
            pass = pass && w.pass;
          }
      }
      body = {{"check", "witnesses"}, {"certificates", certs}, {"pass", pass}};
    } else {  // lemmas
      LemmaReport l1 = check_lemma1(params, samples, seed);
      Int D = degree_bound > 0
                  ? Int(degree_bound)
                  : 3 * std::max(params.p_pow_l(), params.a);
      LemmaReport l2 = check_lemma2(params, D);
      pass = l1.pass && l2.pass;
      body = {{"check", "lemmas"},
              {"lemma1", to_json(l1)},
              {"lemma2", to_json(l2)},
              {"degree_bound", int_to_json(D)},
              {"pass", pass}};
    }

    json out = {{"manifest",
                 manifest(cmdline, params, fields, seed, budget, jobs,
                          out_path)},
                {"report", body}};
    emit(out, out_path);
    return pass ? 0 : 1;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what()
              << " (raise with --budget or STORIC_BUDGET)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
