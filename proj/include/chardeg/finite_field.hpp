#pragma once

#include <cstdint>
#include <vector>

namespace chardeg {

/// GF(q) for a prime power q <= 32.
///
/// Elements are integers 0..q-1 encoding polynomials over GF(p) in base p
/// (digit i is the coefficient of x^i), reduced modulo the lexicographically
/// least monic irreducible polynomial of degree f. For f = 1 this is plain
/// arithmetic mod p.
class FiniteField {
public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return f_; }
  /// Coefficients c_0..c_f of the defining polynomial (c_f == 1).
  std::vector<int> const &modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  /// Multiplicative inverse; a must be nonzero.
  int inv(int a) const { return inv_[a]; }

  /// x^i as an element (the additive basis over GF(p)).
  int basis_element(int i) const;

private:
  int q_;
  int p_;
  int f_;
  std::vector<int> modulus_;
  std::vector<int> add_;
  std::vector<int> neg_;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

/// Returns {p, f} with q == p^f, or {0, 0} when q is not a prime power.
std::pair<int, int> prime_power_decomposition(int q);

} // namespace chardeg
