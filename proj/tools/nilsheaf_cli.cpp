// Command-line front end for the nilsheaf library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilsheaf/centraliser.hpp"
#include "nilsheaf/ks.hpp"
#include "nilsheaf/partition.hpp"
#include "nilsheaf/tables.hpp"
#include "nilsheaf/verify.hpp"

namespace {

using nlohmann::json;
using namespace nilsheaf;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// Thrown for input problems that are not library errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormOptions {
  std::string family;
  std::string epsilon;
};

void add_form_options(CLI::App* cmd, FormOptions& fo) {
  auto* fam = cmd->add_option("--family", fo.family, "so (epsilon=+1) or sp (epsilon=-1)")
                  ->check(CLI::IsMember({"so", "sp"}));
  auto* eps = cmd->add_option("--epsilon", fo.epsilon, "+1 or -1")->check(CLI::IsMember({"+1", "1", "-1"}));
  fam->excludes(eps);
  eps->excludes(fam);
}

FormType resolve_form(const FormOptions& fo) {
  if (!fo.family.empty()) return fo.family == "so" ? FormType::orthogonal() : FormType::symplectic();
  if (!fo.epsilon.empty()) return fo.epsilon == "-1" ? FormType::symplectic() : FormType::orthogonal();
  throw UsageError("exactly one of --family or --epsilon is required");
}

std::string algebra_name(FormType f, int N) {
  return std::string(f.is_orthogonal() ? "so_" : "sp_") + std::to_string(N);
}

std::string type_name(FormType f, int N) { return std::string(1, type_letter(f, N)) + std::to_string(N / 2); }

// Accepts comma- and/or whitespace-separated positive integers.
std::vector<int> parse_parts(const std::string& text, bool strict) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<int> parts;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v <= 0 || v > 100000)
      throw UsageError("partition entries must be positive integers, got '" + tok + "'");
    parts.push_back(static_cast<int>(v));
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend())) {
    if (strict) throw Error(ErrorCode::NotSorted, 0, "parts of " + to_string(parts) + " are not non-increasing");
    std::sort(parts.rbegin(), parts.rend());
    std::cerr << "warning: parts sorted to " << to_string(parts) << "\n";
  }
  return parts;
}

json flags_json(const Flags& f) {
  return {{"rigid", f.rigid},
          {"almost_rigid", f.almost_rigid},
          {"exceptional", f.exceptional},
          {"non_singular", f.non_singular},
          {"very_even", f.very_even}};
}

std::string blocks_str(const std::vector<int>& b) {
  std::string out = "{";
  for (std::size_t k = 0; k < b.size(); ++k) out += (k ? "," : "") + std::to_string(b[k]);
  return out + "}";
}

std::string flag_list(const Flags& f) {
  std::vector<std::string> v;
  if (f.rigid) v.push_back("rigid");
  if (f.almost_rigid) v.push_back("almost-rigid");
  if (f.exceptional) v.push_back("exceptional");
  v.push_back(f.non_singular ? "non-singular" : "singular");
  if (f.very_even) v.push_back("very-even");
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + x;
  return out;
}

// ---- analyze ------------------------------------------------------------

struct AnalyzeOptions {
  FormOptions form;
  std::string partition;
  bool oracle = false;
  bool json = false;
  bool strict = false;
};

int cmd_analyze(const AnalyzeOptions& o) {
  FormType f = resolve_form(o.form);
  PairedPartition p = validate(parse_parts(o.partition, o.strict), f);
  const int N = p.N();

  auto steps = two_steps(p);
  auto clusters = two_clusters(p);
  auto sheets = sheet_classes(p);
  Flags fl = classify(p);
  int s = s_invariant(p);
  int delta = static_cast<int>(steps.size());
  int bad = static_cast<int>(bad_two_steps(p).size());
  int sigma = static_cast<int>(good_clusters(p).size());
  int z = z_invariant(p);
  int c = c_invariant(p);
  int cg = c_gamma_invariant(p);
  int r = 0;
  for (const auto& sc : sheets) r = std::max(r, sc.rank);
  CentraliserCount cc = centraliser_dimension(p);

  std::optional<OracleReport> oracle;
  if (o.oracle) oracle = run_oracle(p);

  if (o.json) {
    json j;
    j["input"] = {{"parts", p.parts()},
                  {"epsilon", p.epsilon()},
                  {"N", N},
                  {"algebra", algebra_name(f, N)},
                  {"type", type_name(f, N)},
                  {"involution", p.involution()}};
    json js = json::array();
    for (const auto& t : steps) js.push_back({{"index", t.index}, {"quality", to_string(t.quality)}});
    json jc = json::array();
    for (const auto& cl : clusters) jc.push_back({{"indices", cl.indices}, {"quality", to_string(cl.quality)}});
    j["invariants"] = {{"s", s},         {"delta", delta},      {"bad", bad},           {"sigma", sigma},
                       {"z", z},         {"c", c},              {"c_gamma", cg},        {"r", r},
                       {"dim_g", dim_g(N, f)}, {"centraliser_dim", cc.total}, {"two_steps", js}, {"clusters", jc}};
    j["flags"] = flags_json(fl);
    json jsh = json::array();
    for (const auto& sc : sheets)
      jsh.push_back({{"blocks", sc.gl_blocks},
                     {"residual", sc.residual.parts()},
                     {"rank", sc.rank},
                     {"dimension", sheet_dimension(sc, p)}});
    j["sheets"] = jsh;
    if (oracle)
      j["oracle"] = {{"centraliser_dim", oracle->centraliser_dim},
                     {"derived_dim", oracle->derived_dim},
                     {"abelianisation_dim", oracle->abelianisation_dim},
                     {"gamma_fixed_dim", oracle->gamma_fixed_dim},
                     {"decomposition_ok", oracle->decomposition_ok},
                     {"zeta_basis_ok", oracle->zeta_basis_ok}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }

  std::cout << "partition   " << p.str() << " in " << algebra_name(f, N) << " (type " << type_name(f, N)
            << ", epsilon " << (p.epsilon() > 0 ? "+1" : "-1") << ")\n";
  std::cout << "involution  ";
  for (int i = 1; i <= p.n(); ++i) std::cout << (i > 1 ? " " : "") << i << "->" << p.prime(i);
  std::cout << "\n2-steps     ";
  if (steps.empty()) std::cout << "none";
  for (std::size_t k = 0; k < steps.size(); ++k)
    std::cout << (k ? " " : "") << "(" << steps[k].index << "," << steps[k].index + 1 << ")" << to_string(steps[k].quality);
  std::cout << "\nclusters    ";
  if (clusters.empty()) std::cout << "none";
  for (std::size_t k = 0; k < clusters.size(); ++k)
    std::cout << (k ? " " : "") << blocks_str(clusters[k].indices) << to_string(clusters[k].quality);
  std::cout << "\ninvariants  s=" << s << " |delta|=" << delta << " |bad|=" << bad << " |sigma|=" << sigma << " z=" << z
            << " c=" << c << " c_gamma=" << cg << " r=" << r << "\n";
  std::cout << "dimensions  g=" << dim_g(N, f) << " centraliser=" << cc.total << "\n";
  std::cout << "flags       " << flag_list(fl) << "\n";
  std::cout << "sheets      " << sheets.size() << "\n";
  for (const auto& sc : sheets)
    std::cout << "  blocks " << std::left << std::setw(12) << blocks_str(sc.gl_blocks) << " residual " << std::setw(16)
              << sc.residual.str() << " rank " << sc.rank << "  dimension " << sheet_dimension(sc, p) << "\n";
  if (oracle) {
    std::cout << "oracle      dim k_e=" << oracle->centraliser_dim << " derived=" << oracle->derived_dim
              << " abelianisation=" << oracle->abelianisation_dim << " gamma_fixed=" << oracle->gamma_fixed_dim
              << " decomposition=" << (oracle->decomposition_ok ? "ok" : "FAILED") << "\n";
  }
  return kOk;
}

// ---- enumerate ----------------------------------------------------------

struct EnumerateOptions {
  FormOptions form;
  int n = 0;
  std::string filter;
  bool json = false;
};

bool keep(const Flags& f, const std::string& filter) {
  if (filter.empty()) return true;
  if (filter == "rigid") return f.rigid;
  if (filter == "non-singular") return f.non_singular;
  if (filter == "singular") return !f.non_singular;
  if (filter == "almost-rigid") return f.almost_rigid;
  if (filter == "exceptional") return f.exceptional;
  if (filter == "very-even") return f.very_even;
  return false;
}

int cmd_enumerate(const EnumerateOptions& o) {
  FormType f = resolve_form(o.form);
  json rows = json::array();
  std::vector<std::vector<std::string>> table;
  for (const auto& p : enumerate(o.n, f)) {
    Flags fl = classify(p);
    if (!keep(fl, o.filter)) continue;
    int s = s_invariant(p);
    int delta = static_cast<int>(two_steps(p).size());
    int z = z_invariant(p);
    int c = c_invariant(p);
    int cg = c_gamma_invariant(p);
    int sheets = static_cast<int>(sheet_classes(p).size());
    if (o.json) {
      rows.push_back({{"parts", p.parts()},
                      {"invariants", {{"s", s}, {"delta", delta}, {"z", z}, {"c", c}, {"c_gamma", cg}, {"sheets", sheets}}},
                      {"flags", flags_json(fl)}});
    } else {
      table.push_back({p.str(), std::to_string(s), std::to_string(delta), std::to_string(z), std::to_string(c),
                       std::to_string(cg), std::to_string(sheets), flag_list(fl)});
    }
  }
  if (o.json) {
    json j = {{"algebra", algebra_name(f, o.n)}, {"epsilon", f.epsilon}, {"N", o.n}, {"rows", rows}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::vector<std::string> header{"partition", "s", "|delta|", "z", "c", "c_gamma", "sheets", "flags"};
  std::vector<std::size_t> width(header.size());
  for (std::size_t k = 0; k < header.size(); ++k) width[k] = header[k].size();
  for (const auto& row : table)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  auto print_row = [&](const std::vector<std::string>& row) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k + 1 == row.size()) std::cout << row[k];
      else std::cout << std::left << std::setw(static_cast<int>(width[k] + 2)) << row[k];
    }
    std::cout << "\n";
  };
  print_row(header);
  for (const auto& row : table) print_row(row);
  return kOk;
}

// ---- verify -------------------------------------------------------------

struct VerifyCliOptions {
  std::vector<std::string> suites;
  int max_n = 10;
  unsigned threads = 0;
  bool inject_s_fault = false;
  bool json = false;
};

int cmd_verify(const VerifyCliOptions& o) {
  VerifyOptions opt;
  opt.max_n = o.max_n;
  opt.threads = o.threads;
  opt.inject_s_fault = o.inject_s_fault;
  auto results = run_suites(o.suites, opt);
  bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.ok(); });
  if (o.json) {
    json j = json::array();
    for (const auto& r : results) {
      json fails = json::array();
      for (const auto& f : r.failures)
        fails.push_back({{"epsilon", f.epsilon}, {"partition", f.partition}, {"expected", f.expected}, {"actual", f.actual}});
      j.push_back({{"suite", r.suite}, {"passed", r.passed}, {"failed", r.failed}, {"failures", fails}});
    }
    std::cout << json{{"max_n", o.max_n}, {"ok", ok}, {"suites", j}}.dump(2) << "\n";
    return ok ? kOk : kVerifyFailed;
  }
  for (const auto& r : results)
    std::cout << std::left << std::setw(10) << r.suite << " passed " << std::setw(8) << r.passed << " failed " << r.failed
              << "  " << (r.ok() ? "PASS" : "FAIL") << "\n";
  if (!ok) {
    std::cout << "suite\tepsilon\tpartition\texpected\tactual\n";
    for (const auto& r : results)
      for (const auto& f : r.failures)
        std::cout << f.suite << "\t" << (f.epsilon > 0 ? "+1" : "-1") << "\t" << f.partition << "\t" << f.expected << "\t"
                  << f.actual << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

// ---- tables -------------------------------------------------------------

struct TablesOptions {
  std::string group;
  std::string label;
  bool json = false;
  bool unresolved = false;
};

json record_json(const OrbitRecord& r) {
  return {{"group", r.group},           {"label", r.label}, {"gamma", r.gamma_type},
          {"sheets", r.sheet_count},    {"even", r.even},   {"ranks", r.ranks},
          {"c", r.c},                   {"c_gamma", r.c_gamma}, {"c_gamma_starred", r.c_gamma_starred}};
}

int cmd_tables(const TablesOptions& o) {
  std::vector<OrbitRecord> out;
  if (o.unresolved) {
    for (const auto& [g, l] : unresolved()) {
      if (!o.group.empty() && g != o.group) continue;
      out.push_back(lookup(g, l));
    }
  } else if (!o.label.empty()) {
    if (o.group.empty()) throw UsageError("--label requires --group");
    out.push_back(lookup(o.group, o.label));
  } else if (!o.group.empty()) {
    if (!is_known_group(o.group)) throw Error(ErrorCode::UnknownOrbit, 0, "unknown group " + o.group);
    out = records(o.group);
  } else {
    out = orbit_dataset();
  }
  if (o.json) {
    json j = json::array();
    for (const auto& r : out) j.push_back(record_json(r));
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "group\tlabel\tgamma\tsheets\teven\tranks\tc\tc_gamma\tstarred\n" << serialize(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, sheets and centraliser abelianisations of nilpotent orbits in so_N and sp_N"};
  app.require_subcommand(1);

  AnalyzeOptions ao;
  auto* analyze = app.add_subcommand("analyze", "Analyze one partition");
  add_form_options(analyze, ao.form);
  analyze->add_option("--partition", ao.partition, "parts, comma or space separated (empty for the zero partition)")
      ->required();
  analyze->add_flag("--oracle", ao.oracle, "also run the exact matrix oracle");
  analyze->add_flag("--json", ao.json, "machine-readable output");
  analyze->add_flag("--strict", ao.strict, "reject unsorted input instead of sorting it");

  EnumerateOptions eo;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every partition of N in the chosen family");
  add_form_options(enumerate_cmd, eo.form);
  enumerate_cmd->add_option("--n", eo.n, "total size N")->required()->check(CLI::Range(0, 60));
  enumerate_cmd->add_option("--filter", eo.filter, "rigid, non-singular, singular, almost-rigid, exceptional, very-even")
      ->check(CLI::IsMember({"rigid", "non-singular", "singular", "almost-rigid", "exceptional", "very-even"}));
  enumerate_cmd->add_flag("--json", eo.json, "machine-readable output");

  VerifyCliOptions vo;
  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  verify->add_option("--suite", vo.suites, "suite name (repeatable)")->required()->check(CLI::IsMember(allowed));
  verify->add_option("--max-n", vo.max_n, "largest N in the sweep")->check(CLI::Range(0, 40));
  verify->add_option("--threads", vo.threads, "worker threads (0: all cores)");
  verify->add_flag("--json", vo.json, "machine-readable output");
  verify->add_flag("--inject-s-fault", vo.inject_s_fault, "corrupt s by one to exercise failure reporting")->group("");

  TablesOptions to;
  auto* tables = app.add_subcommand("tables", "Query the exceptional-type orbit tables");
  tables->add_option("--group", to.group, "G2, F4, E6, E7 or E8");
  tables->add_option("--label", to.label, "orbit label, e.g. E8(a7)");
  tables->add_flag("--unresolved", to.unresolved, "orbits whose sheet data is left open");
  tables->add_flag("--json", to.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(ao);
    if (*enumerate_cmd) return cmd_enumerate(eo);
    if (*verify) return cmd_verify(vo);
    if (*tables) return cmd_tables(to);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
