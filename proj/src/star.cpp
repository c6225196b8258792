#include "cck/star.hpp"

#include "cck/star_kernels.hpp"

namespace cck {

const char* to_string(StarKind k) { return k == StarKind::gamma ? "gamma" : "delta"; }

StarKind parse_star_kind(std::string_view s) {
  if (s == "gamma") return StarKind::gamma;
  if (s == "delta") return StarKind::delta;
  throw Error("unknown commutator kind '" + std::string(s) + "' (expected gamma or delta)");
}

ElementSet power_closure(const GroupTable& g, const ElementSet& s) {
  ElementSet out(g.order());
  out.insert(GroupTable::identity());
  // Anything already present is a power of an earlier element, so its
  // powers are present too.
  s.for_each([&](ElementId x) {
    if (out.contains(x)) return;
    ElementId y = x;
    while (y != GroupTable::identity()) {
      out.insert(y);
      y = g.mul(y, x);
    }
  });
  return out;
}

StarCommutators::StarCommutators(const GroupTable& g) : g_(&g) {}

StarSetReport StarCommutators::make_report(StarKind kind, std::size_t j, ElementSet commutators) const {
  StarSetReport r;
  r.kind = kind;
  r.j = j;
  r.power_closure = power_closure(*g_, commutators);
  r.subgroup = subgroup_closure(*g_, commutators);
  r.commutators = std::move(commutators);
  if (!r.subgroup.is_normal) throw Error("internal: coprime commutator subgroup is not normal");
  return r;
}

const StarSetReport& StarCommutators::gamma(std::size_t j) {
  if (j < 1) throw Error("gamma* levels start at j = 1");
  if (gamma_.empty()) gamma_.push_back(make_report(StarKind::gamma, 1, g_->all()));
  while (gamma_.size() < j) {
    const auto left = gamma_.back().power_closure.ids();
    std::vector<ElementId> right(g_->order());
    for (ElementId x = 0; x < g_->order(); ++x) right[x] = x;
    gamma_.push_back(make_report(StarKind::gamma, gamma_.size() + 1, kernels::coprime_commutators(*g_, left, right)));
  }
  return gamma_[j - 1];
}

const StarSetReport& StarCommutators::delta(std::size_t j) {
  if (delta_.empty()) delta_.push_back(make_report(StarKind::delta, 0, g_->all()));
  while (delta_.size() <= j) {
    const auto y = delta_.back().power_closure.ids();
    delta_.push_back(make_report(StarKind::delta, delta_.size(), kernels::coprime_commutators(*g_, y, y)));
  }
  return delta_[j];
}

const StarSetReport& StarCommutators::level(StarKind kind, std::size_t j) {
  return kind == StarKind::gamma ? gamma(j) : delta(j);
}

StarSetReport gamma_star_set(const GroupTable& g, std::size_t j) { return StarCommutators(g).gamma(j); }
StarSetReport delta_star_set(const GroupTable& g, std::size_t j) { return StarCommutators(g).delta(j); }
SubgroupInfo gamma_star_subgroup(const GroupTable& g, std::size_t j) { return gamma_star_set(g, j).subgroup; }
SubgroupInfo delta_star_subgroup(const GroupTable& g, std::size_t j) { return delta_star_set(g, j).subgroup; }

bool star_image_lifting_check(StarCommutators& upstairs, const QuotientGroup& q, std::size_t j, StarKind kind) {
  StarCommutators downstairs(q.group);
  const ElementSet& source = upstairs.level(kind, j).commutators;
  ElementSet image(q.group.order());
  source.for_each([&](ElementId x) { image.insert(q.projection[x]); });
  return image == downstairs.level(kind, j).commutators;
}

bool star_image_lifting_check(const GroupTable& g, const SubgroupInfo& n, std::size_t j, StarKind kind) {
  StarCommutators upstairs(g);
  return star_image_lifting_check(upstairs, quotient_group(g, n), j, kind);
}

}  // namespace cck
