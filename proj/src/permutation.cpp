#include "chardeg/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace chardeg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation perm;
  perm.images_ = std::move(images);
  return perm;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  // cycles compose left to right, like products of generators
  Permutation result = identity(degree);
  for (auto const &cycle : cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[x])
        throw std::invalid_argument("repeated point in cycle");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
    result = result * Permutation(std::move(images));
  }
  return result;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[i] = rhs.images_[images_[i]];
  return result;
}

Permutation Permutation::inverse() const
{
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::uint64_t length = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Permutation::to_cycle_string() const
{
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    out += '(';
    bool first = true;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first)
        out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::extended(std::size_t degree) const
{
  Permutation result = identity(std::max(degree, images_.size()));
  std::copy(images_.begin(), images_.end(), result.images_.begin());
  return result;
}

Permutation Permutation::shifted(std::size_t shift, std::size_t degree) const
{
  if (shift + images_.size() > degree)
    throw std::invalid_argument("shifted permutation does not fit");
  Permutation result = identity(degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[i + shift] = static_cast<Point>(images_[i] + shift);
  return result;
}

std::size_t PermutationHash::operator()(Permutation const &perm) const noexcept
{
  // FNV-1a over the image list
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : perm.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace chardeg
