#include "cck/element_set.hpp"

#include "cck/permutation.hpp"

namespace cck {

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<ElementId> ids) : ElementSet(universe) {
  for (ElementId x : ids) {
    if (x >= universe) throw Error("element id out of range");
    insert(x);
  }
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

void ElementSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::vector<ElementId> ElementSet::ids() const {
  std::vector<ElementId> out;
  out.reserve(count());
  for_each([&](ElementId x) { out.push_back(x); });
  return out;
}

void ElementSet::check_same(const ElementSet& o) const {
  if (o.universe_ != universe_) throw Error("element sets over different groups");
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet r(*this);
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& o) const {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

std::size_t ElementSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
  return h;
}

}  // namespace cck
