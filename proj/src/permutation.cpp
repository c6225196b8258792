#include "cck/permutation.hpp"

#include <cctype>
#include <numeric>

namespace cck {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw Error("images do not form a bijection");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw Error("degree mismatch in product");
  Permutation r(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation acc(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

class CycleScanner {
 public:
  explicit CycleScanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void expect(char c) {
    if (done() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos_));
    ++pos_;
  }
  std::size_t number() {
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (1u << 30)) throw ParseError("point out of range");
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected a point at offset " + std::to_string(pos_));
    return value;
  }
  bool at_digit() const { return !done() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  CycleScanner sc(text);
  int empties = 0;
  std::size_t cycles = 0;
  while (true) {
    sc.skip_ws();
    if (sc.done()) break;
    sc.expect('(');
    sc.skip_ws();
    if (!sc.done() && sc.peek() == ')') {
      sc.expect(')');
      ++empties;
      continue;
    }
    std::vector<std::size_t> cycle;
    while (true) {
      sc.skip_ws();
      if (!sc.done() && sc.peek() == ')') break;
      std::size_t pt = sc.number();
      if (pt == 0 || pt > degree)
        throw ParseError("point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
      if (used[pt - 1]) throw ParseError("point " + std::to_string(pt) + " repeated");
      used[pt - 1] = true;
      cycle.push_back(pt - 1);
      if (!sc.done() && !std::isspace(static_cast<unsigned char>(sc.peek())) && sc.peek() != ')')
        throw ParseError("unexpected character in cycle");
    }
    sc.expect(')');
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    ++cycles;
  }
  if (empties > 1 || (empties == 1 && cycles > 0))
    throw ParseError("\"()\" must stand alone");
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cck
