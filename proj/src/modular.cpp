#include "chardeg/modular.hpp"

#include <stdexcept>

namespace chardeg::modp {

Residue pow(Residue base, std::uint64_t exp, Residue p)
{
  Residue result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1)
      result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1;
  }
  return result;
}

Residue inv(Residue a, Residue p)
{
  if (a % p == 0)
    throw std::domain_error("zero has no inverse modulo p");
  return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Residue primitive_root(Residue p)
{
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0)
      continue;
    factors.push_back(d);
    while (m % d == 0)
      m /= d;
  }
  if (m > 1)
    factors.push_back(m);

  for (Residue g = 1; g < p; ++g) {
    bool generator = true;
    for (auto q : factors)
      if (pow(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    if (generator)
      return g;
  }
  throw std::domain_error("no primitive root found");
}

std::vector<std::size_t> row_reduce(Matrix &rows, Residue p)
{
  std::vector<std::size_t> pivots;
  std::size_t const cols = rows.empty() ? 0 : rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[rank], rows[pivot]);
    Residue const scale = inv(rows[rank][c], p);
    for (auto &x : rows[rank])
      x = mul(x, scale, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0)
        continue;
      Residue const f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = sub(rows[r][k], mul(f, rows[rank][k], p), p);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

Matrix kernel(Matrix a, std::size_t cols, Residue p)
{
  auto const pivots = row_reduce(a, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;

  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Residue> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = sub(0, a[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace chardeg::modp
