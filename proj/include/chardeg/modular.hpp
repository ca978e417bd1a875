#pragma once

#include <cstdint>
#include <vector>

namespace chardeg::modp {

using Residue = std::uint64_t;
using Matrix = std::vector<std::vector<Residue>>;

inline Residue mul(Residue a, Residue b, Residue p)
{
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % p);
}

inline Residue add(Residue a, Residue b, Residue p)
{
  Residue s = a + b;
  return s >= p ? s - p : s;
}

inline Residue sub(Residue a, Residue b, Residue p)
{
  return a >= b ? a - b : a + p - b;
}

Residue pow(Residue base, std::uint64_t exp, Residue p);
/// Inverse of a nonzero residue modulo the prime p.
Residue inv(Residue a, Residue p);

bool is_prime(std::uint64_t n);
/// Smallest generator of the multiplicative group mod p.
Residue primitive_root(Residue p);

/// In-place reduced row echelon form; returns the pivot column of each row
/// that remains (zero rows are dropped).
std::vector<std::size_t> row_reduce(Matrix &rows, Residue p);

/// Basis of {x : A x = 0} for a matrix with `cols` columns.
Matrix kernel(Matrix a, std::size_t cols, Residue p);

} // namespace chardeg::modp
