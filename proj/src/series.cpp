#include "cck/series.hpp"

#include <algorithm>
#include <unordered_map>

namespace cck {

const char* to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::lower_central: return "lower_central";
    case SeriesKind::derived: return "derived";
    case SeriesKind::upper_central: return "upper_central";
    case SeriesKind::fitting: return "fitting";
  }
  return "?";
}

namespace {

template <class Step>
SeriesReport descending(SeriesKind kind, SubgroupInfo start, Step step) {
  SeriesReport r;
  r.kind = kind;
  r.terms.push_back(std::move(start));
  while (true) {
    SubgroupInfo next = step(r.terms.back());
    if (next.order == r.terms.back().order) break;
    r.terms.push_back(std::move(next));
  }
  r.stabilized_at = r.terms.size();
  return r;
}

}  // namespace

SeriesReport lower_central_series(const GroupTable& g, const SubgroupInfo& h) {
  return descending(SeriesKind::lower_central, h,
                    [&](const SubgroupInfo& t) { return commutator_subgroup(g, t, h); });
}

SubgroupInfo gamma_infinity(const GroupTable& g, const SubgroupInfo& h) { return lower_central_series(g, h).last(); }

SeriesReport derived_series(const GroupTable& g, const SubgroupInfo& h) {
  return descending(SeriesKind::derived, h, [&](const SubgroupInfo& t) { return commutator_subgroup(g, t, t); });
}

bool is_soluble(const GroupTable& g, const SubgroupInfo& h) { return derived_series(g, h).last().is_trivial(); }

SeriesReport upper_central_series(const GroupTable& g) {
  SeriesReport r;
  r.kind = SeriesKind::upper_central;
  SubgroupInfo current = trivial_subgroup(g);
  while (true) {
    ElementSet next(g.order());
    for (ElementId x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (ElementId s : g.generator_ids())
        if (!current.contains(g.commutator(x, s))) {
          ok = false;
          break;
        }
      if (ok) next.insert(x);
    }
    SubgroupInfo z = subgroup_closure(g, next);
    const bool stable = z.order == current.order;
    if (stable && !r.terms.empty()) break;
    r.terms.push_back(z);
    if (stable) break;  // Z(G) trivial: single trivial term
    current = std::move(z);
  }
  r.stabilized_at = r.terms.size();
  return r;
}

SubgroupInfo hypercenter(const GroupTable& g) { return upper_central_series(g).last(); }

Nilpotency is_nilpotent(const GroupTable& g, const SubgroupInfo& h) {
  auto lcs = lower_central_series(g, h);
  Nilpotency n;
  n.nilpotent = lcs.last().is_trivial();
  n.nilpotency_class = n.nilpotent ? lcs.stabilized_at - 1 : 0;
  return n;
}

SubgroupInfo sylow_subgroup(const GroupTable& g, const SubgroupInfo& h, std::uint32_t p) {
  if (!is_prime(p)) throw Error("sylow_subgroup: " + std::to_string(p) + " is not prime");
  const std::size_t target = p_part(h.order, p);
  if (target == 1) return trivial_subgroup(g);

  auto is_p_element = [&](ElementId x) { return p_part(g.element_order(x), p) == g.element_order(x); };

  ElementId start = GroupTable::identity();
  std::uint32_t best = 1;
  h.carrier.for_each([&](ElementId x) {
    if (is_p_element(x) && g.element_order(x) > best) {
      best = g.element_order(x);
      start = x;
    }
  });
  ClosureBuilder b(g);
  b.add_generator(start);
  while (b.carrier().count() < target) {
    const auto gens = b.generators();
    bool grown = false;
    h.carrier.for_each([&](ElementId y) {
      if (grown || b.carrier().contains(y) || !is_p_element(y)) return;
      for (ElementId x : gens)
        if (!b.carrier().contains(g.conj(x, y))) return;
      b.add_generator(y);
      grown = true;
    });
    if (!grown) throw Error("sylow growth stalled");  // unreachable for a valid subgroup h
  }
  return b.finish();
}

SubgroupInfo largest_normal_p_subgroup(const GroupTable& g, std::uint32_t p) {
  return core(g, sylow_subgroup(g, p));
}

SubgroupInfo fitting_subgroup(const GroupTable& g) {
  SubgroupInfo f = trivial_subgroup(g);
  for (std::uint32_t p : g.primes()) f = join(g, f, largest_normal_p_subgroup(g, p));
  return f;
}

SeriesReport fitting_series(const GroupTable& g) {
  if (!is_soluble(g)) throw Error("Fitting series requested for a non-soluble group");
  SeriesReport r;
  r.kind = SeriesKind::fitting;
  if (g.order() == 1) {
    r.terms.push_back(trivial_subgroup(g));
    r.stabilized_at = 1;
    return r;
  }
  SubgroupInfo current = fitting_subgroup(g);
  r.terms.push_back(current);
  while (current.order < g.order()) {
    QuotientGroup q = quotient_group(g, current);
    SubgroupInfo fq = fitting_subgroup(q.group);
    current = subgroup_closure(g, preimage(g, q.projection, fq.carrier));
    r.terms.push_back(current);
  }
  r.stabilized_at = r.terms.size();
  return r;
}

std::size_t fitting_height(const GroupTable& g) {
  auto fs = fitting_series(g);
  return g.order() == 1 ? 0 : fs.terms.size();
}

std::optional<SubgroupInfo> hall_p_prime_subgroup(const GroupTable& g, std::uint32_t p,
                                                  const std::vector<ElementId>& hint) {
  if (!is_soluble(g)) throw Error("Hall subgroup requested for a non-soluble group");
  const std::size_t target = g.order() / p_part(g.order(), p);
  if (!hint.empty()) {
    SubgroupInfo h = subgroup_generated(g, hint);
    if (h.order == target) return h;
  }
  SubgroupInfo h = trivial_subgroup(g);
  for (std::uint32_t q : g.primes()) {
    if (q == p) continue;
    SubgroupInfo sylow = sylow_subgroup(g, q);
    std::unordered_map<ElementSet, bool, ElementSetHash> tried;
    bool placed = false;
    for (ElementId x = 0; x < g.order() && !placed; ++x) {
      SubgroupInfo conj = conjugate_subgroup(g, sylow, x);
      if (!tried.emplace(conj.carrier, true).second) continue;
      SubgroupInfo candidate = join(g, h, conj);
      if (candidate.order == h.order * conj.order) {
        h = std::move(candidate);
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }
  return h;
}

namespace {

void require_p_group(const SubgroupInfo& p_group, std::uint32_t p, const char* what) {
  if (!p_group.is_p_group || (p_group.prime != 0 && p_group.prime != p))
    throw Error(std::string(what) + ": subgroup is not a " + std::to_string(p) + "-group");
}

}  // namespace

SubgroupInfo omega_1(const GroupTable& g, const SubgroupInfo& p_group, std::uint32_t p) {
  require_p_group(p_group, p, "omega_1");
  ElementSet s(g.order());
  p_group.carrier.for_each([&](ElementId x) {
    if (g.element_order(x) == p) s.insert(x);
  });
  return subgroup_closure(g, s);
}

SubgroupInfo frattini_p(const GroupTable& g, const SubgroupInfo& p_group, std::uint32_t p) {
  require_p_group(p_group, p, "frattini_p");
  SubgroupInfo derived = commutator_subgroup(g, p_group, p_group);
  ElementSet s = derived.carrier;
  p_group.carrier.for_each([&](ElementId x) { s.insert(g.pow(x, p)); });
  return subgroup_closure(g, s);
}

NormalLattice normal_subgroups(const GroupTable& g, const NormalSubgroupOptions& opts) {
  std::vector<SubgroupInfo> principal;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  NormalLattice lattice;
  auto add = [&](SubgroupInfo n) -> bool {
    if (seen.contains(n.carrier)) return false;
    seen.emplace(n.carrier, lattice.subgroups.size());
    lattice.subgroups.push_back(std::move(n));
    return true;
  };

  add(trivial_subgroup(g));
  for (const auto& cls : conjugacy_classes(g)) {
    const ElementId rep = cls.ids().front();
    if (rep == GroupTable::identity()) continue;
    SubgroupInfo n = normal_closure(g, g.singleton(rep));
    if (add(n)) principal.push_back(std::move(n));
  }

  for (std::size_t i = 1; i < lattice.subgroups.size(); ++i) {
    for (const auto& p : principal) {
      if (p.is_subgroup_of(lattice.subgroups[i])) continue;
      SubgroupInfo j = join(g, lattice.subgroups[i], p);
      if (add(std::move(j)) && lattice.subgroups.size() >= opts.lattice_cap) {
        lattice.exhaustive = false;
        break;
      }
    }
    if (!lattice.exhaustive) break;
  }

  std::vector<std::pair<std::vector<ElementId>, std::size_t>> keys;
  keys.reserve(lattice.subgroups.size());
  for (std::size_t i = 0; i < lattice.subgroups.size(); ++i) keys.emplace_back(lattice.subgroups[i].carrier.ids(), i);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<SubgroupInfo> sorted;
  sorted.reserve(keys.size());
  for (auto& [ids, i] : keys) sorted.push_back(std::move(lattice.subgroups[i]));
  lattice.subgroups = std::move(sorted);
  return lattice;
}

}  // namespace cck
