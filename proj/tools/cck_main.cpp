#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cck/catalog.hpp"
#include "cck/cover.hpp"
#include "cck/series.hpp"
#include "cck/star.hpp"
#include "cck/verify.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Bad invocation or unreadable input; maps to exit 2.
struct UsageError : cck::Error {
  using cck::Error::Error;
};

struct Env {
  std::size_t order_cap = cck::kDefaultOrderCap;
  int threads = 0;
  std::uint64_t cover_budget = cck::kDefaultCoverBudget;
};

std::uint64_t env_number(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  std::size_t used = 0;
  unsigned long long n = 0;
  try {
    n = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string_view(v).size() || n == 0)
    throw UsageError(std::string(name) + " must be a positive integer, got '" + v + "'");
  return n;
}

Env read_env() {
  Env e;
  e.order_cap = env_number("CCK_ORDER_CAP", cck::kDefaultOrderCap);
  e.threads = static_cast<int>(env_number("CCK_THREADS", 0));
  e.cover_budget = env_number("CCK_COVER_BUDGET", cck::kDefaultCoverBudget);
  return e;
}

std::vector<cck::GroupSpec> load_source(const std::string& src) {
  if (src.rfind("builtin:", 0) == 0) {
    try {
      return {cck::builtin(src.substr(8))};
    } catch (const cck::Error& e) {
      throw UsageError(e.what());
    }
  }
  std::ifstream in(src, std::ios::binary);
  if (!in) throw UsageError("cannot read " + src);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return cck::parse_group_file(buf.str());
  } catch (const cck::ParseError& e) {
    throw UsageError(src + ": " + e.what());
  }
}

std::vector<cck::GroupSpec> load_sources(const std::vector<std::string>& srcs) {
  std::vector<cck::GroupSpec> out;
  for (const auto& s : srcs)
    for (auto& spec : load_source(s)) out.push_back(std::move(spec));
  return out;
}

std::size_t parse_catalog_arg(const std::string& arg) {
  const std::string prefix = "max-order=";
  if (arg.rfind(prefix, 0) != 0) throw UsageError("--catalog expects max-order=N");
  try {
    std::size_t used = 0;
    const auto n = std::stoul(arg.substr(prefix.size()), &used);
    if (used == arg.size() - prefix.size()) return n;
  } catch (const std::exception&) {
  }
  throw UsageError("--catalog expects max-order=N");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_info(const cck::GroupTable& g) {
  std::cout << "group: " << g.name() << "\n";
  std::cout << "degree: " << g.degree() << "\n";
  std::cout << "order: " << g.order() << "\n";
  const auto nil = cck::is_nilpotent(g);
  std::cout << "nilpotent: " << yes_no(nil.nilpotent);
  if (nil.nilpotent) std::cout << " (class " << nil.nilpotency_class << ")";
  std::cout << "\n";
  const bool sol = cck::is_soluble(g);
  std::cout << "soluble: " << yes_no(sol) << "\n";
  if (sol) std::cout << "fitting height: " << cck::fitting_height(g) << "\n";
  std::cout << "center order: " << cck::center(g, cck::whole_group(g)).order << "\n";
  std::cout << "fitting subgroup order: " << cck::fitting_subgroup(g).order << "\n";
  std::cout << "gamma_inf order: " << cck::gamma_infinity(g).order << "\n";
  std::cout << "conjugacy classes: " << cck::conjugacy_classes(g).size() << "\n";
  const auto lattice = cck::normal_subgroups(g);
  std::cout << "normal subgroups: " << lattice.subgroups.size() << (lattice.exhaustive ? "" : " (capped)") << "\n";
  cck::StarCommutators star(g);
  std::cout << "delta* orders:";
  for (std::size_t j = 0; j <= 3; ++j) std::cout << " " << star.delta(j).subgroup.order;
  std::cout << "\n";
}

void print_elements(const cck::GroupTable& g, const cck::ElementSet& s) {
  s.for_each([&](cck::ElementId x) { std::cout << "  " << g.element(x).to_cycles() << "\n"; });
}

int run_info(const std::vector<std::string>& srcs, const Env& env) {
  for (const auto& spec : load_sources(srcs)) print_info(cck::build_group(spec, env.order_cap));
  return 0;
}

int run_star(const std::string& kind_text, std::size_t j, const std::string& src, bool list, const Env& env) {
  const auto kind = cck::parse_star_kind(kind_text);
  if (kind == cck::StarKind::gamma && j < 1) throw UsageError("gamma levels start at j = 1");
  for (const auto& spec : load_source(src)) {
    const auto g = cck::build_group(spec, env.order_cap);
    cck::StarCommutators star(g);
    const auto& lvl = star.level(kind, j);
    std::cout << "group: " << g.name() << "\n";
    std::cout << cck::to_string(kind) << "*_" << j << " commutators: " << lvl.commutators.count() << "\n";
    std::cout << cck::to_string(kind) << "*_" << j << " subgroup order: " << lvl.subgroup.order << "\n";
    if (list) print_elements(g, lvl.commutators);
  }
  return 0;
}

int run_cover(const std::string& kind_text, std::size_t j, const std::string& src, bool greedy, const Env& env) {
  const auto kind = cck::parse_star_kind(kind_text);
  if (kind == cck::StarKind::gamma && j < 1) throw UsageError("gamma levels start at j = 1");
  cck::CoverBudget budget{env.cover_budget, greedy};
  for (const auto& spec : load_source(src)) {
    const auto g = cck::build_group(spec, env.order_cap);
    const auto sol = cck::star_cover_number(g, kind, j, budget);
    std::cout << "group: " << g.name() << "\n";
    std::cout << "m=" << sol.m << " " << (sol.exact ? "exact" : "not exact") << " lower_bound=" << sol.lower_bound
              << " nodes=" << sol.nodes << "\n";
    for (const auto& c : sol.chosen)
      std::cout << "  <" << g.element(c.generator_ids.empty() ? 0 : c.generator_ids.front()).to_cycles()
                << "> order " << c.order << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coprime commutators in finite permutation groups"};
  app.require_subcommand(1);

  std::vector<std::string> info_srcs;
  auto* info = app.add_subcommand("info", "Structural summary of a group");
  info->add_option("src", info_srcs, "builtin:<family(params)> or group file")->required();

  std::string kind = "gamma";
  std::size_t j = 2;
  std::string src;
  bool list = false;
  auto* star = app.add_subcommand("star", "Coprime commutator set and subgroup at one level");
  star->add_option("--kind", kind, "gamma or delta")->check(CLI::IsMember({"gamma", "delta"}));
  star->add_option("--j", j, "level")->required();
  star->add_flag("--list", list, "print every commutator");
  star->add_option("src", src, "builtin:<family(params)> or group file")->required();

  bool greedy = false;
  auto* cover = app.add_subcommand("cover", "Least number of cyclic subgroups covering a commutator set");
  cover->add_option("--kind", kind, "gamma or delta")->check(CLI::IsMember({"gamma", "delta"}));
  cover->add_option("--j", j, "level")->required();
  cover->add_flag("--greedy", greedy, "greedy cover only, no exact search");
  cover->add_option("src", src, "builtin:<family(params)> or group file")->required();

  std::string suite = "all";
  std::optional<std::size_t> vj;
  std::size_t jmax = 3;
  std::string catalog_arg;
  std::vector<std::string> verify_srcs;
  std::string out_dir;
  auto* verify = app.add_subcommand("verify", "Run verification suites and write reports");
  verify->add_option("--suite", suite, "identities|theorem1|theorem2|lemmas|all")
      ->check(CLI::IsMember({"identities", "theorem1", "theorem2", "lemmas", "all"}));
  auto* j_opt = verify->add_option("--j", vj, "level for theorem1/theorem2");
  auto* jmax_opt = verify->add_option("--jmax", jmax, "highest level for identities (>= 2)");
  j_opt->excludes(jmax_opt);
  auto* cat_opt = verify->add_option("--catalog", catalog_arg, "max-order=N");
  auto* src_opt = verify->add_option("src", verify_srcs, "builtin:<family(params)> or group files");
  cat_opt->excludes(src_opt);
  verify->add_option("--out", out_dir, "directory for report.json, theorem1.csv, theorem2.csv");

  std::size_t list_max = 200;
  auto* catalog = app.add_subcommand("catalog", "Default catalog");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "Names and orders");
  cat_list->add_option("--max-order", list_max, "largest order listed");
  auto* cat_print = catalog->add_subcommand("print", "Catalog in group-file format");
  cat_print->add_option("--max-order", list_max, "largest order printed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return e.get_exit_code() == 0 ? rc : kExitUsage;
  }

  try {
    const Env env = read_env();
    if (*info) return run_info(info_srcs, env);
    if (*star) return run_star(kind, j, src, list, env);
    if (*cover) return run_cover(kind, j, src, greedy, env);
    if (*catalog) {
      const auto specs = cck::default_catalog(list_max);
      if (*cat_print) {
        std::cout << cck::print_group_file(specs);
      } else {
        for (const auto& s : specs) std::cout << s.name << " " << s.hints.at("order") << "\n";
      }
      return 0;
    }
    if (*verify) {
      cck::VerifyOptions opts;
      opts.suites = cck::parse_suites(suite);
      opts.jmax = jmax;
      if (jmax < 2) throw UsageError("--jmax must be at least 2");
      opts.j = vj;
      opts.order_cap = env.order_cap;
      opts.threads = env.threads;
      opts.suite.cover.max_nodes = env.cover_budget;
      std::vector<cck::GroupSpec> specs;
      if (!catalog_arg.empty()) specs = cck::default_catalog(parse_catalog_arg(catalog_arg));
      else if (!verify_srcs.empty()) specs = load_sources(verify_srcs);
      else throw UsageError("verify needs --catalog max-order=N or at least one source");

      const auto report = cck::run_verification(specs, opts);
      if (!out_dir.empty()) cck::write_reports(report, out_dir);
      else std::cout << cck::records_to_json(report.records);

      std::size_t counts[3] = {0, 0, 0};
      for (const auto& r : report.records) {
        ++counts[static_cast<int>(r.verdict)];
        if (r.verdict == cck::Verdict::fail)
          std::cerr << "FAIL " << r.group << " " << r.suite << (r.j ? " j=" + std::to_string(*r.j) : "") << ": "
                    << r.reason << "\n";
      }
      std::cerr << specs.size() << " groups, " << report.records.size() << " records: " << counts[0] << " pass, "
                << counts[1] << " fail, " << counts[2] << " skipped\n";
      return report.failures() ? kExitFail : 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
