// jacklr: Jack polynomials, LR and Stanley coefficients, verification suites.
#include "jacklr/suites.hpp"
#include "jacklr/symfunc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

using namespace jacklr;
using json = nlohmann::ordered_json;

namespace {

std::string default_cache_dir() {
  const char* env = std::getenv("JACKLR_CACHE_DIR");
  return env ? env : "";
}

// "c*m[3,2,1] + ..." largest partition first; the empty partition prints its coefficient
std::string symfunc_text(const SymFunc& f) {
  if (f.coeffs.empty()) return "0";
  std::string out;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string c = it->second.to_string();
    if (it->first.length() == 0) {
      out += c;
      continue;
    }
    out += (c == "1" ? "" : "(" + c + ")*") + "m[" + it->first.to_string() + "]";
  }
  return out;
}

void print_warnings(const JackTable& t) {
  for (const auto& w : t.warnings()) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack Littlewood-Richardson coefficients and their hook-space structure"};
  app.require_subcommand(1);

  std::string mu, nu, lam, cache_dir = default_cache_dir();
  int degree_cap = 12;
  bool as_json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "print JSON");
    sub->add_option("--degree-cap", degree_cap, "largest Jack degree computed")->check(CLI::Range(0, 40));
    sub->add_option("--cache-dir", cache_dir, "Jack table cache directory");
  };

  auto* jack_cmd = app.add_subcommand("jack", "monomial expansion of J_lambda");
  jack_cmd->add_option("--lam", lam, "partition, e.g. 3,2,1")->required();
  add_common(jack_cmd);

  auto* lr_cmd = app.add_subcommand("lr", "Jack LR coefficient g_{mu,nu}^lambda");
  auto* st_cmd = app.add_subcommand("stanley", "Stanley coefficient <J_mu J_nu, J_lambda>");
  for (auto* sub : {lr_cmd, st_cmd}) {
    sub->add_option("--mu", mu)->required();
    sub->add_option("--nu", nu)->required();
    sub->add_option("--lam", lam)->required();
    add_common(sub);
  }

  suites::Options opt;
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string suite, out_path;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"pivots", "stanley", "hookspace", "symmetry", "graphs", "fixtures", "all"}));
  verify_cmd->add_option("--degree-cap", opt.degree_cap, "largest Jack degree computed")->check(CLI::Range(0, 40));
  verify_cmd->add_option("--max-weight", opt.max_weight, "corpus bound |mu|+|nu|")->check(CLI::Range(2, 12));
  verify_cmd->add_option("--samples", opt.samples, "random samples per sampled check")->check(CLI::Range(1, 100000));
  verify_cmd->add_option("--seed", opt.seed, "seed of the 64-bit LCG");
  verify_cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1, 256));
  verify_cmd->add_option("--out", out_path, "write the JSON report here");
  verify_cmd->add_option("--cache-dir", cache_dir, "Jack table cache directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) {
      JackTable table(opt.degree_cap, cache_dir);
      Report r = suites::run_suite(suite, opt, table);
      print_warnings(table);
      for (const auto& c : r.checks) {
        std::cout << status_name(c.status) << "  " << c.name << "  " << c.details << "\n";
        for (const auto& w : c.witnesses) std::cout << "      " << w << "\n";
      }
      std::cout << r.checks.size() << " checks, " << r.failures() << " failures\n";
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << r.to_json();
        if (!f) throw std::runtime_error("cannot write " + out_path);
      }
      return r.ok() ? 0 : 1;
    }

    JackTable table(degree_cap, cache_dir);
    json j;
    std::string text;
    if (*jack_cmd) {
      Partition l = Partition::parse(lam);
      const SymFunc& f = table.jack(l);
      text = symfunc_text(f);
      j = {{"command", "jack"}, {"lam", l.to_string()}, {"result", text}};
      json terms = json::object();
      for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        terms[it->first.to_string()] = it->second.to_string();
      j["monomial"] = terms;
    } else {
      Partition m = Partition::parse(mu), n = Partition::parse(nu), l = Partition::parse(lam);
      if (*lr_cmd) {
        RatFunc g = lr_coefficient(m, n, l, table);
        text = g.to_string();
        j = {{"command", "lr"}, {"mu", m.to_string()}, {"nu", n.to_string()}, {"lam", l.to_string()},
             {"result", text}, {"numerator", g.numer().to_string()}, {"denominator", g.denom().to_string()}};
      } else {
        text = stanley_coefficient(m, n, l, table).to_string();
        j = {{"command", "stanley"}, {"mu", m.to_string()}, {"nu", n.to_string()}, {"lam", l.to_string()},
             {"result", text}};
      }
    }
    print_warnings(table);
    std::cout << (as_json ? j.dump(2) : text) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
