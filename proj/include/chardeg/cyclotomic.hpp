#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chardeg/rational.hpp"

namespace chardeg {

namespace detail {

/// Per-conductor data: Phi_n and zeta^m reduced into the power basis.
struct CyclotomicField {
  std::uint64_t n;
  std::size_t phi;
  std::vector<std::int64_t> cyclotomic_poly; // Phi_n, lowest degree first, monic
  std::vector<std::vector<std::int64_t>> powers; // powers[m] = zeta^m, 0 <= m < n
};

/// Cached for the lifetime of the process; safe to call concurrently.
CyclotomicField const &cyclotomic_field(std::uint64_t n);

} // namespace detail

/// Phi_n with integer coefficients, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

enum class ValueClass { rational, real_not_rational, complex };

/// An exact element of Q(zeta_n), stored in the power basis
/// {1, zeta, ..., zeta^(phi(n)-1)} modulo Phi_n.
///
/// The representation is canonical at a given conductor. Binary operations
/// embed both operands at the lcm of their conductors; results are never
/// moved back down to a smaller conductor.
class Cyclotomic {
public:
  /// Zero at conductor 1.
  Cyclotomic();
  explicit Cyclotomic(Rational const &value, std::uint64_t conductor = 1);

  /// sum_k coeffs[k] * zeta_n^k over all k in [0, coeffs.size()).
  static Cyclotomic from_exponents(std::uint64_t n, std::span<std::int64_t const> coeffs);

  std::uint64_t conductor() const { return field_->n; }
  std::size_t dimension() const { return field_->phi; }
  Rational coefficient(std::size_t i) const;
  std::vector<Rational> coefficients() const;

  /// Same value at conductor `n`, which must be a multiple of conductor().
  Cyclotomic embedded(std::uint64_t n) const;

  /// Image under zeta -> zeta^k; throws InvalidAutomorphism unless gcd(k, n) == 1.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic conjugate() const { return galois(-1); }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> to_rational() const;

  /// Lexicographic on coefficient vectors at the common conductor.
  int compare(Cyclotomic const &other) const;

  /// "c0 + c1*zn^1 + ..." with zero terms omitted; "0" for zero.
  std::string to_string() const;

  Cyclotomic operator-() const;
  Cyclotomic &operator+=(Cyclotomic const &rhs);
  Cyclotomic &operator-=(Cyclotomic const &rhs);
  Cyclotomic &operator*=(Cyclotomic const &rhs);
  Cyclotomic &operator*=(Rational const &rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, Cyclotomic const &rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, Cyclotomic const &rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, Cyclotomic const &rhs) { return lhs *= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, Rational const &rhs) { return lhs *= rhs; }
  friend Cyclotomic operator*(Rational const &lhs, Cyclotomic rhs) { return rhs *= lhs; }

  friend bool operator==(Cyclotomic const &a, Cyclotomic const &b);

private:
  void normalise();
  void align_with(Cyclotomic &other);

  detail::CyclotomicField const *field_;
  std::vector<mpz_class> num_; // numerators, length phi
  mpz_class den_;              // positive, coprime to gcd of num_
};

Cyclotomic root_of_unity(std::uint64_t n, std::int64_t k);
Cyclotomic galois_apply(Cyclotomic const &a, std::int64_t k);
ValueClass classify_value(Cyclotomic const &a);
std::optional<Rational> to_rational(Cyclotomic const &a);

char const *to_string(ValueClass c);

} // namespace chardeg
