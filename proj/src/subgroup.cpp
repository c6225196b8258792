#include "cck/subgroup.hpp"

#include <algorithm>
#include <deque>

namespace cck {

ClosureBuilder::ClosureBuilder(const GroupTable& g) : g_(&g), carrier_(g.order()), elements_{GroupTable::identity()} {
  carrier_.insert(GroupTable::identity());
}

bool ClosureBuilder::add_generator(ElementId x) {
  if (carrier_.contains(x)) return false;
  const GroupTable& g = *g_;
  generators_.push_back(x);
  const std::vector<ElementId> previous = elements_;
  auto add_coset = [&](ElementId rep) {
    for (ElementId h : previous) {
      ElementId y = g.mul(h, rep);
      carrier_.insert(y);
      elements_.push_back(y);
    }
  };
  std::vector<ElementId> reps{x};
  add_coset(x);
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (ElementId s : generators_) {
      ElementId y = g.mul(reps[r], s);
      if (carrier_.contains(y)) continue;
      reps.push_back(y);
      add_coset(y);
    }
  }
  return true;
}

void ClosureBuilder::add_all(const ElementSet& s) {
  s.for_each([&](ElementId x) { add_generator(x); });
}

SubgroupInfo ClosureBuilder::finish() const { return describe_subgroup(*g_, carrier_, generators_); }

SubgroupInfo describe_subgroup(const GroupTable& g, ElementSet carrier, std::vector<ElementId> gens) {
  SubgroupInfo h;
  h.order = carrier.count();
  h.carrier = std::move(carrier);
  h.generator_ids = std::move(gens);

  h.is_abelian = true;
  for (std::size_t i = 0; i < h.generator_ids.size() && h.is_abelian; ++i)
    for (std::size_t j = i + 1; j < h.generator_ids.size(); ++j)
      if (g.mul(h.generator_ids[i], h.generator_ids[j]) != g.mul(h.generator_ids[j], h.generator_ids[i])) {
        h.is_abelian = false;
        break;
      }

  h.is_cyclic = false;
  if (h.order == 1) {
    h.is_cyclic = true;
  } else if (h.is_abelian) {
    h.carrier.for_each([&](ElementId x) {
      if (g.element_order(x) == h.order) h.is_cyclic = true;
    });
  }

  auto ps = prime_factors(h.order);
  h.is_p_group = ps.size() <= 1;
  h.prime = ps.size() == 1 ? ps.front() : 0;

  h.is_normal = true;
  for (ElementId x : h.generator_ids) {
    for (ElementId s : g.generator_ids())
      if (!h.carrier.contains(g.conj(x, s))) {
        h.is_normal = false;
        break;
      }
    if (!h.is_normal) break;
  }
  return h;
}

SubgroupInfo whole_group(const GroupTable& g) {
  return describe_subgroup(g, g.all(), g.generator_ids());
}

SubgroupInfo trivial_subgroup(const GroupTable& g) {
  return describe_subgroup(g, g.singleton(GroupTable::identity()), {});
}

SubgroupInfo subgroup_closure(const GroupTable& g, const ElementSet& s) {
  ClosureBuilder b(g);
  b.add_all(s);
  return b.finish();
}

SubgroupInfo subgroup_generated(const GroupTable& g, std::span<const ElementId> gens) {
  ClosureBuilder b(g);
  for (ElementId x : gens) b.add_generator(x);
  return b.finish();
}

SubgroupInfo cyclic_subgroup(const GroupTable& g, ElementId x) {
  ElementSet s(g.order());
  ElementId y = GroupTable::identity();
  do {
    s.insert(y);
    y = g.mul(y, x);
  } while (y != GroupTable::identity());
  std::vector<ElementId> gens;
  if (x != GroupTable::identity()) gens.push_back(x);
  return describe_subgroup(g, std::move(s), std::move(gens));
}

SubgroupInfo join(const GroupTable& g, const SubgroupInfo& a, const SubgroupInfo& b) {
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  ClosureBuilder cb(g);
  for (ElementId x : a.generator_ids) cb.add_generator(x);
  for (ElementId x : b.generator_ids) cb.add_generator(x);
  return cb.finish();
}

SubgroupInfo intersect(const GroupTable& g, const SubgroupInfo& a, const SubgroupInfo& b) {
  if (a.is_subgroup_of(b)) return a;
  if (b.is_subgroup_of(a)) return b;
  return subgroup_closure(g, a.carrier & b.carrier);
}

namespace {

void close_under_conjugation(const GroupTable& g, ClosureBuilder& b, std::span<const ElementId> by) {
  bool grew = true;
  while (grew) {
    grew = false;
    // generators() grows while we iterate; index-based loop picks up new ones.
    for (std::size_t i = 0; i < b.generators().size(); ++i) {
      const ElementId x = b.generators()[i];
      for (ElementId s : by)
        if (b.add_generator(g.conj(x, s))) grew = true;
    }
  }
}

}  // namespace

SubgroupInfo normal_closure(const GroupTable& g, const ElementSet& s) {
  ClosureBuilder b(g);
  b.add_all(s);
  close_under_conjugation(g, b, g.generator_ids());
  return b.finish();
}

SubgroupInfo normal_closure_in(const GroupTable& g, const ElementSet& s, const SubgroupInfo& h) {
  ClosureBuilder b(g);
  b.add_all(s);
  close_under_conjugation(g, b, h.generator_ids);
  return b.finish();
}

SubgroupInfo commutator_span(const GroupTable& g, const ElementSet& k, const ElementSet& h) {
  ElementSet comms(g.order());
  const auto hs = h.ids();
  k.for_each([&](ElementId a) {
    for (ElementId b : hs) comms.insert(g.commutator(a, b));
  });
  return subgroup_closure(g, comms);
}

SubgroupInfo commutator_subgroup(const GroupTable& g, const SubgroupInfo& a, const SubgroupInfo& b) {
  ElementSet comms(g.order());
  for (ElementId x : a.generator_ids)
    for (ElementId y : b.generator_ids) comms.insert(g.commutator(x, y));
  ClosureBuilder cb(g);
  cb.add_all(comms);
  std::vector<ElementId> by = a.generator_ids;
  by.insert(by.end(), b.generator_ids.begin(), b.generator_ids.end());
  close_under_conjugation(g, cb, by);
  return cb.finish();
}

bool is_normal_in(const GroupTable& g, const SubgroupInfo& n, const SubgroupInfo& h) {
  for (ElementId x : n.generator_ids)
    for (ElementId s : h.generator_ids)
      if (!n.carrier.contains(g.conj(x, s))) return false;
  return true;
}

SubgroupInfo normalizer(const GroupTable& g, const SubgroupInfo& h) {
  ElementSet s(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (ElementId y : h.generator_ids)
      if (!h.carrier.contains(g.conj(y, x))) {
        ok = false;
        break;
      }
    if (ok) s.insert(x);
  }
  return subgroup_closure(g, s);
}

SubgroupInfo centralizer(const GroupTable& g, const SubgroupInfo& s, const SubgroupInfo& within) {
  ElementSet c(g.order());
  within.carrier.for_each([&](ElementId x) {
    for (ElementId y : s.generator_ids)
      if (g.mul(x, y) != g.mul(y, x)) return;
    c.insert(x);
  });
  return subgroup_closure(g, c);
}

SubgroupInfo center(const GroupTable& g, const SubgroupInfo& h) { return centralizer(g, h, h); }

SubgroupInfo core(const GroupTable& g, const SubgroupInfo& h) {
  SubgroupInfo c = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId s : g.generator_ids()) {
      SubgroupInfo next = intersect(g, c, conjugate_subgroup(g, c, s));
      if (next.order != c.order) {
        c = std::move(next);
        changed = true;
      }
    }
  }
  return c;
}

SubgroupInfo conjugate_subgroup(const GroupTable& g, const SubgroupInfo& h, ElementId x) {
  ElementSet s(g.order());
  h.carrier.for_each([&](ElementId y) { s.insert(g.conj(y, x)); });
  std::vector<ElementId> gens;
  for (ElementId y : h.generator_ids) gens.push_back(g.conj(y, x));
  return describe_subgroup(g, std::move(s), std::move(gens));
}

std::vector<ElementSet> conjugacy_classes(const GroupTable& g) {
  std::vector<ElementSet> classes;
  ElementSet assigned(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    if (assigned.contains(x)) continue;
    ElementSet cls(g.order());
    std::deque<ElementId> queue{x};
    cls.insert(x);
    while (!queue.empty()) {
      ElementId y = queue.front();
      queue.pop_front();
      for (ElementId s : g.generator_ids()) {
        ElementId z = g.conj(y, s);
        if (cls.add(z)) queue.push_back(z);
      }
    }
    assigned |= cls;
    classes.push_back(std::move(cls));
  }
  return classes;
}

QuotientGroup quotient_group(const GroupTable& g, const SubgroupInfo& n) {
  if (!is_normal_in(g, n, whole_group(g))) throw Error("quotient by a subgroup that is not normal");
  const std::size_t order = g.order();
  constexpr ElementId kUnassigned = ~ElementId{0};
  std::vector<ElementId> coset_of(order, kUnassigned);
  std::vector<ElementId> reps;
  const auto nids = n.carrier.ids();
  for (ElementId x = 0; x < order; ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const auto c = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (ElementId m : nids) coset_of[g.mul(m, x)] = c;
  }
  const std::size_t k = reps.size();

  auto action_of = [&](ElementId x) {
    std::vector<Point> images(k);
    for (std::size_t d = 0; d < k; ++d) images[d] = coset_of[g.mul(reps[d], x)];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (ElementId s : g.generator_ids()) gens.push_back(action_of(s));
  QuotientGroup q;
  q.group = GroupTable::from_generators(g.name() + "/N", std::move(gens), k, order);
  std::vector<ElementId> coset_image(k);
  for (std::size_t c = 0; c < k; ++c) coset_image[c] = q.group.id_of(action_of(reps[c]));
  q.projection.resize(order);
  for (ElementId x = 0; x < order; ++x) q.projection[x] = coset_image[coset_of[x]];
  return q;
}

bool is_cyclic_quotient(const GroupTable& g, const SubgroupInfo& h, const SubgroupInfo& n) {
  if (!n.is_subgroup_of(h) || !is_normal_in(g, n, h)) throw Error("cyclic-quotient test needs N normal in H");
  const std::size_t index = h.order / n.order;
  if (index == 1) return true;
  bool found = false;
  h.carrier.for_each([&](ElementId x) {
    if (found || g.element_order(x) % index != 0) return;
    ElementId y = x;
    std::size_t k = 1;
    while (!n.carrier.contains(y)) {
      y = g.mul(y, x);
      ++k;
    }
    if (k == index) found = true;
  });
  return found;
}

SubgroupTable subgroup_as_group(const GroupTable& g, const SubgroupInfo& h) {
  std::vector<Permutation> gens;
  for (ElementId x : h.generator_ids) gens.push_back(g.element(x));
  SubgroupTable t;
  t.group = GroupTable::from_generators(g.name() + "<H>", std::move(gens), g.degree(), g.order());
  t.embedding.resize(t.group.order());
  for (ElementId x = 0; x < t.group.order(); ++x) t.embedding[x] = g.id_of(t.group.element(x));
  return t;
}

ElementSet preimage(const GroupTable& g, const std::vector<ElementId>& projection, const ElementSet& image) {
  ElementSet s(g.order());
  for (ElementId x = 0; x < g.order(); ++x)
    if (image.contains(projection[x])) s.insert(x);
  return s;
}

}  // namespace cck
