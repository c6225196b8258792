#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cck/catalog.hpp"
#include "cck/cover.hpp"
#include "cck/series.hpp"

namespace cck {

enum class Verdict { pass, fail, skipped };
const char* to_string(Verdict v);

struct VerificationRecord {
  std::string group;
  std::size_t order = 0;
  std::string suite;
  std::optional<std::size_t> j;
  nlohmann::ordered_json facts = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::pass;
  std::string reason;
};

/// Records order as (group, suite, j), with a missing j first.
bool record_less(const VerificationRecord& a, const VerificationRecord& b);

struct SuiteOptions {
  CoverBudget cover;
  NormalSubgroupOptions lattice;
};

/// gamma*_j = gamma_inf for 2 <= j <= jmax, the delta* recursion for
/// 1 <= j < jmax, the nilpotency / Fitting height characterizations, and
/// quotient lifting of the commutator sets over every normal subgroup.
VerificationRecord suite_identities(const GroupTable& g, std::size_t jmax, const SuiteOptions& opts = {});

/// Cover number of the gamma*_j-commutators and the least |Delta| over normal
/// Delta <= gamma*_j(G) with cyclic quotient.
VerificationRecord suite_theorem1(const GroupTable& g, std::size_t j, const SuiteOptions& opts = {});

/// Cover number of the delta*_j-commutators against |delta*_j(G)|.
VerificationRecord suite_theorem2(const GroupTable& g, std::size_t j, const SuiteOptions& opts = {});

/// Names of the lemma families, in report order.
const std::vector<std::string>& lemma_families();

/// One aggregated record per lemma family with at least one instance in G.
std::vector<VerificationRecord> suite_lemmas(const GroupTable& g, const SuiteOptions& opts = {});

enum class Suite { identities, theorem1, theorem2, lemmas };
/// "identities", "theorem1", "theorem2", "lemmas" or "all".
std::vector<Suite> parse_suites(std::string_view s);

struct VerifyOptions {
  std::vector<Suite> suites{Suite::identities, Suite::theorem1, Suite::theorem2, Suite::lemmas};
  std::size_t jmax = 3;
  /// Overrides the default levels of theorem1 ({1,2}) and theorem2 ({2,3}).
  std::optional<std::size_t> j;
  SuiteOptions suite;
  std::size_t order_cap = kDefaultOrderCap;
  /// 0 leaves the OpenMP default.
  int threads = 0;
};

struct VerifyReport {
  std::vector<VerificationRecord> records;  // sorted with record_less
  std::size_t failures() const;
};

/// Runs every (group, suite) task in parallel and sorts the results.
VerifyReport run_verification(const std::vector<GroupSpec>& specs, const VerifyOptions& opts);

// report.cpp
std::string records_to_json(const std::vector<VerificationRecord>& records);
/// group,order,j,m,exact,delta_min
std::string theorem1_csv(const std::vector<VerificationRecord>& records);
/// group,order,j,m,exact,delta_star_order
std::string theorem2_csv(const std::vector<VerificationRecord>& records);
/// Writes report.json, theorem1.csv and theorem2.csv into dir.
void write_reports(const VerifyReport& report, const std::string& dir);

}  // namespace cck
