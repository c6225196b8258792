#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cck {

using ElementId = std::uint32_t;

/// Subset of a group's elements, indexed by element id. Binary operations
/// require both operands to range over the same group order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<ElementId> ids);

  static ElementSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  bool contains(ElementId x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(ElementId x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(ElementId x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  /// Inserts x and reports whether it was absent.
  bool add(ElementId x) {
    auto& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }

  std::size_t count() const;
  bool empty() const;
  std::vector<ElementId> ids() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  ElementSet& operator|=(const ElementSet& o);
  ElementSet& operator&=(const ElementSet& o);
  ElementSet& operator-=(const ElementSet& o);
  ElementSet operator|(const ElementSet& o) const { return ElementSet(*this) |= o; }
  ElementSet operator&(const ElementSet& o) const { return ElementSet(*this) &= o; }
  ElementSet operator-(const ElementSet& o) const { return ElementSet(*this) -= o; }
  ElementSet complement() const;

  bool is_subset_of(const ElementSet& o) const;
  bool intersects(const ElementSet& o) const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::size_t hash() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  void check_same(const ElementSet& o) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace cck
