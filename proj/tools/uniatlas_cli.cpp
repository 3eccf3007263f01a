// Command line surface over the uniatlas core: class tables, spin twist
// analysis, symbol blocks, Gauss sums, the zeta oracle and the verification
// suites. Data goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <memory>
#include <iostream>
#include <json.hpp>
#include <string>

#include "uniatlas/class_data.hpp"
#include "uniatlas/group_table.hpp"
#include "uniatlas/gauss_sums.hpp"
#include "uniatlas/lemma_suite.hpp"
#include "uniatlas/quartic_ring.hpp"
#include "uniatlas/spin_group.hpp"
#include "uniatlas/springer_symbols.hpp"
#include "uniatlas/zeta_engine.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace uniatlas;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitUsage);
}

void check_format(const std::string& format) {
  if (format != "json" && format != "tsv") usage_error("--format must be json or tsv");
}

int run_classes(const std::string& family_name, int n, const std::string& format) {
  const auto family = classdata::parse_family(family_name);
  if (!family) usage_error("unknown family '" + family_name + "'");
  if (n < 1 || n > 12) usage_error("--n out of range (1..12)");
  check_format(format);
  const auto records = classdata::enumerate_classes(*family, n);
  if (format == "tsv") {
    std::cout << "partition\t|A|\tdim_orbit\tfiber\tcuspidal\n";
    for (const auto& rec : records)
      std::cout << rec.partition.str() << '\t' << rec.a_order << '\t' << rec.dim_orbit << '\t'
                << rec.dim_springer_fiber << '\t' << (rec.cuspidal ? 1 : 0) << '\n';
  } else {
    for (const auto& rec : records) {
      json row;
      row["family"] = classdata::family_name(rec.family);
      row["partition"] = rec.partition.str();
      row["a_order"] = rec.a_order;
      row["dim_orbit"] = rec.dim_orbit;
      row["fiber"] = rec.dim_springer_fiber;
      row["cuspidal"] = rec.cuspidal;
      std::cout << row.dump() << '\n';
    }
  }
  return kExitOk;
}

int run_spin(const std::string& parts_csv, const std::string& flips, std::string family_name,
             bool half_spin, bool emit_group) {
  std::vector<int> parts;
  {
    std::string token;
    for (char c : parts_csv + ",") {
      if (c == ',') {
        if (token.empty()) continue;
        try {
          parts.push_back(std::stoi(token));
        } catch (const std::exception&) {
          usage_error("bad part '" + token + "'");
        }
        token.clear();
      } else {
        token += c;
      }
    }
  }
  std::unique_ptr<spin::OddPartSet> odd;
  try {
    odd = std::make_unique<spin::OddPartSet>(parts);
  } catch (const std::exception& e) {
    usage_error(e.what());
  }
  const int k = odd->k();
  if (static_cast<int>(flips.size()) != k - 1)
    usage_error("--flips must have exactly k-1 bits");
  spin::TwistPattern pattern;
  for (char c : flips) {
    if (c != '0' && c != '1') usage_error("--flips must be a 0/1 string");
    pattern.flips.push_back(c == '1');
  }
  if (family_name.empty()) family_name = k % 2 == 0 ? "d" : "b";
  spin::SpinFamily family;
  if (family_name == "b" || family_name == "B")
    family = spin::SpinFamily::B;
  else if (family_name == "d" || family_name == "D")
    family = spin::SpinFamily::D;
  else
    usage_error("--family must be b or d");

  try {
    const auto group = spin::SpinGroup::build(*odd);
    const auto result = spin::twist_analysis(group, pattern, family, half_spin);
    json out;
    out["case"] = result.twist_case == spin::TwistCase::A ? "a" : "b";
    out["inner"] = result.is_inner;
    out["AF"] = result.fixed_order;
    out["ZF"] = result.z_fixed_order;
    out["Atilde"] = result.a_tilde_order;
    out["well_chosen"] = result.well_chosen;
    std::cout << out.dump() << '\n';
    if (emit_group) std::cout << groups::to_json(group.table_a()) << '\n';
  } catch (const std::exception& e) {
    usage_error(e.what());
  }
  return kExitOk;
}

int run_symbols(int k, const std::string& format) {
  if (k < 1 || k > 12) usage_error("--k out of range (1..12)");
  check_format(format);
  const auto block = symbols::enumerate_block(k);
  const auto [even_count, odd_count] = symbols::parity_counts(k);
  auto set_to_json = [](const std::vector<int>& v) { return json(v); };
  if (format == "tsv") {
    std::cout << "A\tB\tdefect\tk_inv\tm\n";
    for (const auto& rec : block) {
      auto join = [](const std::vector<int>& v) {
        std::string s;
        for (int x : v) {
          if (!s.empty()) s += ',';
          s += std::to_string(x);
        }
        return s.empty() ? "-" : s;
      };
      std::cout << join(rec.symbol.a_set) << '\t' << join(rec.symbol.b_set) << '\t' << rec.defect
                << '\t' << rec.k_inv << '\t' << rec.m << '\n';
    }
    std::cout << "# parity counts\t" << even_count << '\t' << odd_count << '\n';
  } else {
    for (const auto& rec : block) {
      json row;
      row["A"] = set_to_json(rec.symbol.a_set);
      row["B"] = set_to_json(rec.symbol.b_set);
      row["defect"] = rec.defect;
      row["k_inv"] = rec.k_inv;
      row["m"] = rec.m;
      row["cuspidal"] = rec.cuspidal;
      std::cout << row.dump() << '\n';
    }
    json footer;
    footer["even_count"] = even_count;
    footer["odd_count"] = odd_count;
    std::cout << footer.dump() << '\n';
  }
  return kExitOk;
}

int run_zeta(const std::string& family_name, int n, long long p, int a, bool oracle) {
  const auto family = zeta::parse_series_family(family_name);
  if (!family) usage_error("--family must be sp or so");
  zeta::ZetaQuery query;
  try {
    query = zeta::make_query(*family, n, p, a);
  } catch (const std::exception& e) {
    usage_error(e.what());
  }
  json out;
  out["zeta_prime"] = zeta::zeta_prime(query).str();
  if (!oracle) {
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  const auto report = zeta::divisibility_report(query);
  json survivors = json::array();
  for (const auto& s : report.survivors) survivors.push_back(s.str());
  out["survivors"] = survivors;
  json terms = json::array();
  for (const auto& row : report.rows) {
    json term;
    term["A"] = row.a_set;
    term["B"] = row.b_set;
    term["defect"] = row.defect;
    term["m"] = row.m;
    term["zeta"] = row.zeta.str();
    term["b_twice"] = row.b.twice;
    terms.push_back(term);
  }
  out["terms"] = terms;
  out["pass"] = report.pass;
  std::cout << out.dump() << '\n';
  return report.pass ? kExitOk : kExitVerificationFailure;
}

int run_gauss(long long p, int s) {
  if (!gauss::is_prime(p) || p == 2) usage_error("--p must be an odd prime");
  if (s < 1) usage_error("--s must be positive");
  gauss::GaussSumResult result;
  try {
    result = gauss::quadratic_gauss_sum(p, s);
  } catch (const std::exception& e) {
    usage_error(e.what());
  }
  json out;
  out["p"] = p;
  out["s"] = s;
  out["sum_re"] = result.value.real();
  out["sum_im"] = result.value.imag();
  out["modulus_error"] = result.modulus_error;
  switch (result.verdict) {
    case gauss::GaussVerdict::RealPositive: out["verdict"] = "real-positive"; break;
    case gauss::GaussVerdict::ImagPositive: out["verdict"] = "imaginary-positive"; break;
    case gauss::GaussVerdict::Other: out["verdict"] = "other"; break;
  }
  if (s == 1) {
    const auto convention = gauss::sqrt_p_convention(p);
    out["epsilon"] = convention.epsilon;
    out["sqrt_p"] = convention.uses_j_inverse ? "j^-1 * G_1" : "G_1";
    out["convention_verified"] = convention.verified;
  }
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int run_verify(const std::string& suite) {
  const auto names = lemmas::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    usage_error("unknown suite '" + suite + "'");
  const auto reports = lemmas::run_suite(suite);
  bool all_pass = true;
  for (const auto& report : reports) {
    json out;
    out["lemma"] = report.id;
    out["universe"] = report.universe;
    out["pass"] = report.pass;
    out["counterexamples"] = report.counterexamples;
    if (!report.notes.empty()) out["notes"] = report.notes;
    std::cout << out.dump() << '\n';
    all_pass = all_pass && report.pass;
  }
  return all_pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of unipotent classes in classical groups"};
  app.require_subcommand(1);

  std::string family;
  int n = 1;
  std::string format = "json";
  auto* classes = app.add_subcommand("classes", "unipotent class table");
  classes->add_option("--family", family, "sp, so or spin")->required();
  classes->add_option("--n", n, "rank for sp, partitioned total for so/spin")->required();
  classes->add_option("--format", format, "json or tsv");

  std::string parts, flips, spin_family;
  bool half_spin = false;
  bool emit_group = false;
  auto* spin_cmd = app.add_subcommand("spin", "twist analysis of a presented component group");
  spin_cmd->add_option("--parts", parts, "comma separated odd parts, increasing")->required();
  spin_cmd->add_option("--flips", flips, "k-1 bits, one per generator y_i");
  spin_cmd->add_option("--family", spin_family, "b or d (derived from parity when absent)");
  spin_cmd->add_flag("--half-spin", half_spin, "forbid case (b) patterns");
  spin_cmd->add_flag("--emit-group", emit_group, "also print the component group table as JSON");

  int k = 1;
  std::string sym_format = "json";
  auto* symbols_cmd = app.add_subcommand("symbols", "symbol block of the cuspidal pair");
  symbols_cmd->add_option("--k", k, "block parameter, 1..12")->required();
  symbols_cmd->add_option("--format", sym_format, "json or tsv");

  std::string zeta_family;
  int zn = 1, za = 1;
  long long zp = 3;
  bool oracle = false;
  auto* zeta_cmd = app.add_subcommand("zeta", "fourth root of unity of the cuspidal pair");
  zeta_cmd->add_option("--family", zeta_family, "sp or so")->required();
  zeta_cmd->add_option("--n", zn, "rank")->required();
  zeta_cmd->add_option("--p", zp, "odd prime")->required();
  zeta_cmd->add_option("--a", za, "exponent, q = p^a")->required();
  zeta_cmd->add_flag("--oracle", oracle, "run the elimination oracle");

  long long gp = 3;
  int gs = 1;
  auto* gauss_cmd = app.add_subcommand("gauss", "quadratic Gauss sum");
  gauss_cmd->add_option("--p", gp, "odd prime")->required();
  gauss_cmd->add_option("--s", gs, "field degree, p^s <= 100000");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "all, groups, exceptional, spin, symbols or zeta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (classes->parsed()) return run_classes(family, n, format);
    if (spin_cmd->parsed()) return run_spin(parts, flips, spin_family, half_spin, emit_group);
    if (symbols_cmd->parsed()) return run_symbols(k, sym_format);
    if (zeta_cmd->parsed()) return run_zeta(zeta_family, zn, zp, za, oracle);
    if (gauss_cmd->parsed()) return run_gauss(gp, gs);
    if (verify_cmd->parsed()) return run_verify(suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
