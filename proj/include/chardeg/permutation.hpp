#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace chardeg {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image list.
///
/// Products compose left to right: (a * b)[i] == b[a[i]], i.e. apply a first.
class Permutation {
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<Point const> images() const { return images_; }

  Permutation operator*(Permutation const &rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  /// lcm of the cycle lengths
  std::uint64_t order() const;

  /// Disjoint cycle notation with 1-based points, "()" for the identity.
  std::string to_cycle_string() const;

  /// Same permutation acting on `degree` points, fixing the new ones.
  Permutation extended(std::size_t degree) const;
  Permutation shifted(std::size_t shift, std::size_t degree) const;

  bool operator==(Permutation const &) const = default;
  auto operator<=>(Permutation const &) const = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const &perm) const noexcept;
};

} // namespace chardeg
