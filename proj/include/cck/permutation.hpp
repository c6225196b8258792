#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cck {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

using Point = std::uint32_t;

/// A bijection on {1..degree}. Points are stored 0-based internally;
/// text I/O is 1-based cycle notation.
///
/// Products compose left to right: (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Takes 0-based images; throws Error if they do not form a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation pow(long long k) const;
  std::uint64_t order() const;

  /// Disjoint-cycle notation with 1-based points, "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Parses `expr := cycle* | "()"`, `cycle := "(" int (" "+ int)* ")"`.
/// Whitespace between cycles and inside parentheses is tolerated.
Permutation parse_permutation(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cck
