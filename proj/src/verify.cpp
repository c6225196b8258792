#include "cck/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <unordered_set>

#include <omp.h>

#include "cck/star.hpp"

namespace cck {

using nlohmann::ordered_json;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

bool record_less(const VerificationRecord& a, const VerificationRecord& b) {
  if (a.group != b.group) return a.group < b.group;
  if (a.suite != b.suite) return a.suite < b.suite;
  return a.j < b.j;  // nullopt sorts first
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return r.verdict == Verdict::fail; }));
}

namespace {

constexpr std::size_t kMaxListedFailures = 5;

VerificationRecord new_record(const GroupTable& g, std::string suite, std::optional<std::size_t> j) {
  VerificationRecord r;
  r.group = g.name();
  r.order = g.order();
  r.suite = std::move(suite);
  r.j = j;
  return r;
}

void finish_with_failures(VerificationRecord& r, const std::vector<std::string>& failures) {
  r.facts["failures"] = failures;
  if (!failures.empty()) {
    r.verdict = Verdict::fail;
    r.reason = failures.front();
  }
}

bool coprime_orders(std::size_t a, std::size_t b) { return std::gcd(a, b) == 1; }

bool is_trivial_set(const ElementSet& s) { return s.count() <= 1; }

/// [M, x] for a single element x.
SubgroupInfo commutator_with(const GroupTable& g, const SubgroupInfo& m, ElementId x) {
  return commutator_span(g, m.carrier, g.singleton(x));
}

bool centralizes(const GroupTable& g, const SubgroupInfo& m, ElementId x) {
  return std::all_of(m.generator_ids.begin(), m.generator_ids.end(),
                     [&](ElementId y) { return g.mul(x, y) == g.mul(y, x); });
}

/// Per-family tally; becomes one record.
struct Tally {
  std::string family;
  std::size_t passed = 0, failed = 0, skipped = 0;
  std::map<std::string, std::size_t> skip_reasons;
  std::vector<std::string> failures;
  ordered_json extra = ordered_json::object();

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (failures.size() < kMaxListedFailures) failures.push_back(what);
  }
  void skip(const std::string& reason) {
    ++skipped;
    ++skip_reasons[reason];
  }
  std::size_t instances() const { return passed + failed + skipped; }
};

struct Probes {
  NormalLattice normals;
  std::vector<SubgroupInfo> cyclic;
  std::vector<SubgroupInfo> sylows;
  std::map<std::uint32_t, std::optional<SubgroupInfo>> halls;  // only for soluble G
  std::vector<SubgroupInfo> all;  // deduplicated union, nontrivial
  bool soluble = false;
  std::optional<std::size_t> fitting_height;
};

Probes collect_probes(const GroupTable& g, const SuiteOptions& opts) {
  Probes p;
  p.normals = normal_subgroups(g, opts.lattice);
  p.cyclic = cyclic_subgroups(g, false);
  p.soluble = is_soluble(g);
  if (p.soluble) p.fitting_height = fitting_height(g);
  for (auto q : g.primes()) {
    p.sylows.push_back(sylow_subgroup(g, q));
    if (p.soluble) p.halls[q] = hall_p_prime_subgroup(g, q);
  }
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto add = [&](const SubgroupInfo& s) {
    if (!s.is_trivial() && seen.insert(s.carrier).second) p.all.push_back(s);
  };
  for (const auto& s : p.cyclic) add(s);
  for (const auto& s : p.sylows) add(s);
  for (const auto& [q, h] : p.halls)
    if (h) add(*h);
  for (const auto& s : p.normals.subgroups) add(s);
  add(whole_group(g));
  return p;
}

std::vector<const SubgroupInfo*> normal_p_subgroups(const Probes& pr, bool abelian_only) {
  std::vector<const SubgroupInfo*> out;
  for (const auto& n : pr.normals.subgroups)
    if (!n.is_trivial() && n.is_p_group && (!abelian_only || n.is_abelian)) out.push_back(&n);
  return out;
}

/// One generator per nontrivial cyclic subgroup of order prime to p.
std::vector<ElementId> p_prime_generators(const Probes& pr, std::uint32_t p) {
  std::vector<ElementId> out;
  for (const auto& c : pr.cyclic)
    if (!c.is_trivial() && c.order % p != 0) out.push_back(c.generator_ids.front());
  return out;
}

std::string label(const SubgroupInfo& s) { return "order " + std::to_string(s.order); }

void coprime_commutator_idempotent(const GroupTable& g, const Probes& pr, Tally& t) {
  for (const auto& m : pr.normals.subgroups) {
    if (m.is_trivial()) continue;
    for (const auto& a : pr.all) {
      if (!coprime_orders(m.order, a.order)) continue;
      const auto once = commutator_span(g, m.carrier, a.carrier);
      const auto twice = commutator_span(g, once.carrier, a.carrier);
      t.check(once == twice, "[M,A,A] != [M,A] for normal M of " + label(m) + ", A of " + label(a));
    }
  }
}

void coprime_abelian_splitting(const GroupTable& g, const Probes& pr, Tally& t) {
  for (const auto* m : normal_p_subgroups(pr, true)) {
    const auto omega = omega_1(g, *m, m->prime);
    for (const auto& a : pr.all) {
      if (a.order % m->prime == 0) continue;
      const auto c = centralizer(g, a, *m);
      const auto k = commutator_span(g, m->carrier, a.carrier);
      bool ok = c.order * k.order == m->order && is_trivial_set(c.carrier & k.carrier);
      // trivial on Omega_1 forces trivial on M
      if (commutator_span(g, omega.carrier, a.carrier).is_trivial()) ok = ok && k.is_trivial();
      t.check(ok, "M != C_M(A) x [M,A] for M of " + label(*m) + ", A of " + label(a));
    }
  }
}

void cyclic_commutator_powers(const GroupTable& g, const Probes& pr, Tally& t) {
  for (const auto* m : normal_p_subgroups(pr, true)) {
    for (ElementId x : p_prime_generators(pr, m->prime)) {
      const auto k = commutator_with(g, *m, x);
      if (!k.is_cyclic) continue;
      bool ok = true;
      const auto ox = g.element_order(x);
      for (std::uint32_t i = 2; i < ox && ok; ++i) {
        const ElementId y = g.pow(x, i);
        if (centralizes(g, *m, y)) continue;
        ok = commutator_with(g, *m, y) == k;
      }
      t.check(ok, "[M,x^i] != [M,x] for M of " + label(*m) + ", x = " + g.element(x).to_cycles());
    }
  }
}

void faithful_cyclic_action(const GroupTable& g, const Probes& pr, Tally& t) {
  const auto whole = whole_group(g);
  for (const auto& c : pr.normals.subgroups) {
    if (c.is_trivial() || !c.is_cyclic) continue;
    const auto cent = centralizer(g, c, whole);
    for (const auto& a : pr.all) {
      if (a.carrier.intersects(cent.carrier - g.singleton(GroupTable::identity()))) continue;
      bool ok = a.is_abelian;
      if (c.is_p_group && a.order % c.prime != 0) ok = ok && a.is_cyclic;
      t.check(ok, "faithful action of A (" + label(a) + ") on cyclic normal " + label(c) +
                      " but A is not abelian/cyclic");
    }
  }
}

void cyclic_quotient_rigidity(const GroupTable& g, const Probes& pr, StarCommutators& star, Tally& t) {
  for (std::size_t j : {2u, 3u}) {
    const auto& d = star.delta(j).subgroup;
    for (const auto& n : pr.normals.subgroups) {
      if (!n.is_subgroup_of(d) || !is_cyclic_quotient(g, d, n)) continue;
      t.check(n == d, "delta*_" + std::to_string(j) + "/N cyclic with N of " + label(n) + " < " + label(d));
    }
  }
}

void metanilpotent_hall(const GroupTable& g, const Probes& pr, Tally& t) {
  if (!pr.soluble || *pr.fitting_height > 2) return;
  const auto gi = gamma_infinity(g);
  for (auto p : prime_factors(gi.order)) {
    const auto sp = sylow_subgroup(g, gi, p);
    const auto& h = pr.halls.at(p);
    if (!h) {
      t.skip("hall-not-found");
      continue;
    }
    t.check(commutator_span(g, sp.carrier, h->carrier) == sp,
            "[P,H] != P for the Sylow " + std::to_string(p) + "-subgroup of gamma_inf");
  }
}

void delta_commutator_extension(const GroupTable& g, const Probes& pr, StarCommutators& star, Tally& t) {
  constexpr std::size_t kExhaustive = 4096, kSamples = 512;
  for (std::size_t j = 0; j <= 2; ++j) {
    const auto ys_all = star.delta(j).power_closure.ids();
    const ElementSet& target = star.delta(j + 1).commutators;
    for (std::size_t ni = 0; ni < pr.normals.subgroups.size(); ++ni) {
      const auto& n = pr.normals.subgroups[ni];
      if (n.is_trivial()) continue;
      std::vector<ElementId> ys;
      for (auto y : ys_all)
        if (y != GroupTable::identity() && coprime_orders(g.element_order(y), n.order)) ys.push_back(y);
      if (ys.empty()) continue;
      const auto ns = n.carrier.ids();
      const std::size_t len = j + 1;
      std::size_t total = ns.size();
      bool exhaustive = true;
      for (std::size_t i = 0; i < len && exhaustive; ++i) {
        total *= ys.size();
        if (total > kExhaustive) exhaustive = false;
      }
      bool ok = true;
      std::vector<ElementId> tuple(len);
      auto test = [&](ElementId x) {
        if (!target.contains(g.left_normed_commutator(x, tuple))) ok = false;
      };
      if (exhaustive) {
        std::vector<std::size_t> idx(len, 0);
        while (ok) {
          for (std::size_t i = 0; i < len; ++i) tuple[i] = ys[idx[i]];
          for (auto x : ns) test(x);
          std::size_t k = 0;
          while (k < len && ++idx[k] == ys.size()) idx[k++] = 0;
          if (k == len) break;
        }
      } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (j << 32) ^ ni);
        for (std::size_t s = 0; s < kSamples && ok; ++s) {
          for (auto& y : tuple) y = ys[rng() % ys.size()];
          test(ns[rng() % ns.size()]);
        }
      }
      t.check(ok, "left-normed commutator outside delta*_" + std::to_string(j + 1) + "-set for N of " + label(n));
    }
  }
}

void abelian_p_commutators(const GroupTable& g, const Probes& pr, StarCommutators& star, Tally& t) {
  for (std::size_t j = 1; j <= 3; ++j) {
    const ElementSet& gset = star.gamma(j).commutators;
    const ElementSet& dset = star.delta(j).commutators;
    const ElementSet& yprev = star.delta(j - 1).power_closure;
    for (const auto* p : normal_p_subgroups(pr, false)) {
      for (ElementId x : p_prime_generators(pr, p->prime)) {
        const auto k = commutator_with(g, *p, x);
        if (k.is_trivial()) continue;
        bool ok = subgroup_closure(g, k.carrier & gset) == k;
        if (p->is_abelian) ok = ok && k.carrier.is_subset_of(gset);
        if (yprev.contains(x)) {
          ok = ok && subgroup_closure(g, k.carrier & dset) == k;
          if (p->is_abelian) ok = ok && k.carrier.is_subset_of(dset);
        }
        t.check(ok, "[P,x] not covered/generated at level " + std::to_string(j) + " for P of " + label(*p) +
                        ", x = " + g.element(x).to_cycles());
      }
    }
  }
}

void sylow_generation(const GroupTable& g, const Probes& pr, StarCommutators& star, Tally& t) {
  if (!pr.soluble) return;
  for (std::size_t j = 0; j <= 3; ++j) {
    const auto& lvl = star.delta(j);
    for (const auto& sp : pr.sylows) {
      const auto lhs = intersect(g, sp, lvl.subgroup);
      const auto rhs = subgroup_closure(g, sp.carrier & lvl.power_closure);
      t.check(lhs == rhs, "P cap delta*_" + std::to_string(j) + " not generated by powers, P of " + label(sp));
    }
  }
}

void p_subgroup_cover_data(const GroupTable& g, const Probes& pr, const SuiteOptions& opts, Tally& t) {
  ordered_json rows = ordered_json::array();
  std::vector<const SubgroupInfo*> ps;
  for (const auto& s : pr.sylows) ps.push_back(&s);
  for (const auto& s : pr.normals.subgroups) ps.push_back(&s);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (const auto* s : ps) {
    if (s->is_trivial() || !s->is_p_group || s->is_cyclic || !seen.insert(s->carrier).second) continue;
    const auto c = min_cyclic_cover(g, s->carrier, opts.cover);
    rows.push_back({{"order", s->order}, {"prime", s->prime}, {"m", c.m}, {"exact", c.exact}});
    if (!c.exact) {
      t.skip("cover-budget");
      continue;
    }
    // a noncyclic p-group is never a union of p proper subgroups
    t.check(c.m >= s->prime + 1u, "noncyclic p-subgroup of " + label(*s) + " covered by " + std::to_string(c.m));
  }
  t.extra["rows"] = rows;
}

void noncyclic_commutator_exists(const GroupTable& g, const Probes& pr, Tally& t) {
  for (const auto* m : normal_p_subgroups(pr, true)) {
    if (m->is_cyclic) continue;
    for (const auto& a : pr.all) {
      if (a.order % m->prime == 0) continue;
      const auto ca = centralizer(g, *m, a);
      if (is_cyclic_quotient(g, a, ca)) continue;
      const auto ids = a.carrier.ids();
      const bool found = std::any_of(ids.begin(), ids.end(),
                                     [&](ElementId x) { return !commutator_with(g, *m, x).is_cyclic; });
      t.check(found, "every [M,a] cyclic for M of " + label(*m) + ", A of " + label(a));
    }
  }
}

}  // namespace

const std::vector<std::string>& lemma_families() {
  static const std::vector<std::string> names = {
      "coprime_commutator_idempotent", "coprime_abelian_splitting", "cyclic_commutator_powers",
      "faithful_cyclic_action",        "cyclic_quotient_rigidity",  "metanilpotent_hall",
      "delta_commutator_extension",    "abelian_p_commutators",     "sylow_generation",
      "p_subgroup_cover_data",         "noncyclic_commutator_exists",
  };
  return names;
}

VerificationRecord suite_identities(const GroupTable& g, std::size_t jmax, const SuiteOptions& opts) {
  if (jmax < 2) throw Error("identities suite needs jmax >= 2");
  auto r = new_record(g, "identities", jmax);
  std::vector<std::string> failures;
  StarCommutators star(g);

  const auto gi = gamma_infinity(g);
  r.facts["gamma_infinity_order"] = gi.order;
  ordered_json gamma_orders = ordered_json::object();
  for (std::size_t j = 2; j <= jmax; ++j) {
    const auto& s = star.gamma(j).subgroup;
    gamma_orders[std::to_string(j)] = s.order;
    if (!(s == gi)) failures.push_back("gamma*_" + std::to_string(j) + " != gamma_inf");
  }
  r.facts["gamma_star_orders"] = gamma_orders;
  // set-level stabilization is data only; the subgroups are what must agree
  ordered_json gamma_sizes = ordered_json::object();
  for (std::size_t j = 2; j <= jmax; ++j) gamma_sizes[std::to_string(j)] = star.gamma(j).commutators.count();
  r.facts["gamma_star_set_sizes"] = gamma_sizes;
  r.facts["gamma_star_sets_stable"] = star.gamma(2).commutators == star.gamma(3).commutators;

  ordered_json delta_orders = ordered_json::array();
  for (std::size_t j = 0; j <= jmax; ++j) delta_orders.push_back(star.delta(j).subgroup.order);
  r.facts["delta_star_orders"] = delta_orders;
  for (std::size_t j = 1; j < jmax; ++j)
    if (!(star.delta(j).subgroup == gamma_infinity(g, star.delta(j - 1).subgroup)))
      failures.push_back("delta*_" + std::to_string(j) + " != gamma_inf(delta*_" + std::to_string(j - 1) + ")");

  const bool nilpotent = is_nilpotent(g).nilpotent;
  r.facts["nilpotent"] = nilpotent;
  if (star.gamma(2).subgroup.is_trivial() != nilpotent) failures.push_back("gamma*_2 = 1 disagrees with nilpotency");

  const bool soluble = is_soluble(g);
  r.facts["soluble"] = soluble;
  if (soluble) {
    const auto fh = fitting_height(g);
    r.facts["fitting_height"] = fh;
    for (std::size_t j = 1; j < jmax; ++j)
      if (star.delta(j).subgroup.is_trivial() != (fh <= j))
        failures.push_back("delta*_" + std::to_string(j) + " = 1 disagrees with Fitting height " + std::to_string(fh));
  } else {
    r.facts["fitting_height"] = nullptr;
  }

  const auto lattice = normal_subgroups(g, opts.lattice);
  std::size_t checks = 0;
  const std::size_t jl = std::min<std::size_t>(jmax, 3);
  for (const auto& n : lattice.subgroups) {
    if (n.is_trivial()) continue;
    const auto q = quotient_group(g, n);
    for (std::size_t j = 1; j <= jl; ++j)
      for (StarKind kind : {StarKind::gamma, StarKind::delta}) {
        ++checks;
        if (!star_image_lifting_check(star, q, j, kind))
          failures.push_back(std::string(to_string(kind)) + "*_" + std::to_string(j) +
                             " set does not lift modulo normal " + label(n));
      }
  }
  r.facts["normal_subgroups"] = lattice.subgroups.size();
  r.facts["lattice_exhaustive"] = lattice.exhaustive;
  r.facts["lifting_checks"] = checks;
  if (failures.size() > kMaxListedFailures) failures.resize(kMaxListedFailures);
  finish_with_failures(r, failures);
  return r;
}

VerificationRecord suite_theorem1(const GroupTable& g, std::size_t j, const SuiteOptions& opts) {
  if (j < 1) throw Error("theorem1 suite needs j >= 1");
  auto r = new_record(g, "theorem1", j);
  StarCommutators star(g);
  const auto& lvl = star.gamma(j);
  const auto cover = min_cyclic_cover(g, lvl.commutators, opts.cover);
  const auto lattice = normal_subgroups(g, opts.lattice);
  const SubgroupInfo* best = nullptr;
  for (const auto& n : lattice.subgroups) {  // ascending order
    if (n.is_subgroup_of(lvl.subgroup) && is_cyclic_quotient(g, lvl.subgroup, n)) {
      best = &n;
      break;
    }
  }
  r.facts["gamma_star_order"] = lvl.subgroup.order;
  r.facts["commutators"] = lvl.commutators.count();
  r.facts["m"] = cover.m;
  r.facts["exact"] = cover.exact;
  r.facts["lower_bound"] = cover.lower_bound;
  r.facts["delta_min"] = best ? ordered_json(best->order) : ordered_json(nullptr);
  r.facts["lattice_exhaustive"] = lattice.exhaustive;
  if (!best) {
    r.verdict = Verdict::fail;
    r.reason = "no normal Delta with cyclic quotient";
  } else if (!cover.exact) {
    r.verdict = Verdict::skipped;
    r.reason = "cover-budget";
  } else if (!lattice.exhaustive) {
    r.verdict = Verdict::skipped;
    r.reason = "lattice-cap";
  }
  return r;
}

VerificationRecord suite_theorem2(const GroupTable& g, std::size_t j, const SuiteOptions& opts) {
  if (j < 2) throw Error("theorem2 suite needs j >= 2");
  auto r = new_record(g, "theorem2", j);
  StarCommutators star(g);
  const auto cover = star_cover_number(star, StarKind::delta, j, opts.cover);
  r.facts["delta_star_order"] = star.delta(j).subgroup.order;
  r.facts["commutators"] = star.delta(j).commutators.count();
  r.facts["m"] = cover.m;
  r.facts["exact"] = cover.exact;
  r.facts["lower_bound"] = cover.lower_bound;
  if (!cover.exact) {
    r.verdict = Verdict::skipped;
    r.reason = "cover-budget";
  }
  return r;
}

std::vector<VerificationRecord> suite_lemmas(const GroupTable& g, const SuiteOptions& opts) {
  const Probes pr = collect_probes(g, opts);
  StarCommutators star(g);
  std::vector<Tally> tallies;
  for (const auto& name : lemma_families()) {
    tallies.emplace_back();
    tallies.back().family = name;
  }
  std::size_t i = 0;
  coprime_commutator_idempotent(g, pr, tallies[i++]);
  coprime_abelian_splitting(g, pr, tallies[i++]);
  cyclic_commutator_powers(g, pr, tallies[i++]);
  faithful_cyclic_action(g, pr, tallies[i++]);
  cyclic_quotient_rigidity(g, pr, star, tallies[i++]);
  metanilpotent_hall(g, pr, tallies[i++]);
  delta_commutator_extension(g, pr, star, tallies[i++]);
  abelian_p_commutators(g, pr, star, tallies[i++]);
  sylow_generation(g, pr, star, tallies[i++]);
  p_subgroup_cover_data(g, pr, opts, tallies[i++]);
  noncyclic_commutator_exists(g, pr, tallies[i++]);

  std::vector<VerificationRecord> out;
  for (const auto& t : tallies) {
    if (t.instances() == 0) continue;  // hypotheses never arise in this group
    auto r = new_record(g, "lemma:" + t.family, std::nullopt);
    r.facts["instances"] = t.instances();
    r.facts["passed"] = t.passed;
    r.facts["failed"] = t.failed;
    r.facts["skipped_instances"] = t.skipped;
    r.facts["skip_reasons"] = t.skip_reasons;
    for (const auto& [k, v] : t.extra.items()) r.facts[k] = v;
    finish_with_failures(r, t.failures);
    if (t.failed == 0 && t.passed == 0) {
      r.verdict = Verdict::skipped;
      r.reason = t.skip_reasons.begin()->first;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Suite> parse_suites(std::string_view s) {
  if (s == "identities") return {Suite::identities};
  if (s == "theorem1") return {Suite::theorem1};
  if (s == "theorem2") return {Suite::theorem2};
  if (s == "lemmas") return {Suite::lemmas};
  if (s == "all") return {Suite::identities, Suite::theorem1, Suite::theorem2, Suite::lemmas};
  throw Error("unknown suite '" + std::string(s) + "'");
}

namespace {

struct Task {
  std::size_t spec;
  Suite suite;
  std::size_t j;
};

std::vector<VerificationRecord> run_task(const GroupSpec& spec, const Task& task, const VerifyOptions& opts) {
  const GroupTable g = build_group(spec, opts.order_cap);
  switch (task.suite) {
    case Suite::identities: {
      auto r = suite_identities(g, task.j, opts.suite);
      const auto hints = check_hints(spec, g);
      if (!hints.empty()) {
        r.facts["hint_mismatches"] = hints;
        r.verdict = Verdict::fail;
        r.reason = hints.front();
      }
      return {r};
    }
    case Suite::theorem1: return {suite_theorem1(g, task.j, opts.suite)};
    case Suite::theorem2: return {suite_theorem2(g, task.j, opts.suite)};
    case Suite::lemmas: return suite_lemmas(g, opts.suite);
  }
  return {};
}

const char* suite_label(Suite s) {
  switch (s) {
    case Suite::identities: return "identities";
    case Suite::theorem1: return "theorem1";
    case Suite::theorem2: return "theorem2";
    case Suite::lemmas: return "lemmas";
  }
  return "?";
}

}  // namespace

VerifyReport run_verification(const std::vector<GroupSpec>& specs, const VerifyOptions& opts) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (Suite s : opts.suites) {
      switch (s) {
        case Suite::identities: tasks.push_back({i, s, opts.jmax}); break;
        case Suite::theorem1:
          if (opts.j) tasks.push_back({i, s, *opts.j});
          else for (std::size_t j : {1u, 2u}) tasks.push_back({i, s, j});
          break;
        case Suite::theorem2:
          if (opts.j) tasks.push_back({i, s, *opts.j});
          else for (std::size_t j : {2u, 3u}) tasks.push_back({i, s, j});
          break;
        case Suite::lemmas: tasks.push_back({i, s, 0}); break;
      }
    }
  }

  std::vector<std::vector<VerificationRecord>> results(tasks.size());
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const auto& task = tasks[t];
    const auto& spec = specs[task.spec];
    try {
      results[t] = run_task(spec, task, opts);
    } catch (const std::exception& e) {
      VerificationRecord r;
      r.group = spec.name;
      r.suite = suite_label(task.suite);
      if (task.suite != Suite::lemmas) r.j = task.j;
      r.verdict = Verdict::fail;
      r.reason = dynamic_cast<const OrderCapExceeded*>(&e) ? "order-cap" : "error";
      r.facts["error"] = e.what();
      results[t] = {r};
    }
  }

  VerifyReport report;
  for (auto& rs : results)
    for (auto& r : rs) report.records.push_back(std::move(r));
  std::stable_sort(report.records.begin(), report.records.end(), record_less);
  return report;
}

}  // namespace cck
