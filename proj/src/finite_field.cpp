#include "chardeg/finite_field.hpp"

#include <stdexcept>
#include <utility>

#include "chardeg/errors.hpp"

namespace chardeg {

namespace {

using Poly = std::vector<int>; // coefficients, lowest degree first

std::vector<int> digits(int value, int p, int count)
{
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

// remainder of a modulo monic b over GF(p)
Poly poly_mod(Poly a, Poly const &b, int p)
{
  int const db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    int c = a[i] % p;
    if (c == 0)
      continue;
    for (int k = 0; k <= db; ++k)
      a[i - db + k] = ((a[i - db + k] - c * b[k]) % p + p) % p;
  }
  a.resize(std::min<std::size_t>(a.size(), db));
  return a;
}

bool is_zero(Poly const &a)
{
  for (int c : a)
    if (c != 0)
      return false;
  return true;
}

Poly monic_from_code(int code, int p, int degree)
{
  Poly poly = digits(code, p, degree);
  poly.push_back(1);
  return poly;
}

int int_pow(int base, int exp)
{
  int r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

bool is_irreducible(Poly const &poly, int p)
{
  int const f = static_cast<int>(poly.size()) - 1;
  for (int d = 1; 2 * d <= f; ++d) {
    for (int code = 0; code < int_pow(p, d); ++code)
      if (is_zero(poly_mod(poly, monic_from_code(code, p, d), p)))
        return false;
  }
  return true;
}

} // namespace

std::pair<int, int> prime_power_decomposition(int q)
{
  if (q < 2)
    return {0, 0};
  int p = 2;
  while (q % p != 0)
    ++p;
  int f = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++f;
  }
  if (rest != 1)
    return {0, 0};
  return {p, f};
}

FiniteField::FiniteField(int q) : q_(q)
{
  auto [p, f] = prime_power_decomposition(q);
  if (p == 0 || q > 32)
    throw SpecError("field order must be a prime power <= 32, got " + std::to_string(q));
  p_ = p;
  f_ = f;

  for (int code = 0; code < int_pow(p_, f_); ++code) {
    Poly candidate = monic_from_code(code, p_, f_);
    if (is_irreducible(candidate, p_)) {
      modulus_ = std::move(candidate);
      break;
    }
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a, p_, f_);
    int n = 0;
    for (int i = f_ - 1; i >= 0; --i)
      n = n * p_ + (p_ - da[i]) % p_;
    neg_[a] = n;
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b, p_, f_);
      int s = 0;
      for (int i = f_ - 1; i >= 0; --i)
        s = s * p_ + (da[i] + db[i]) % p_;
      add_[a * q_ + b] = s;

      Poly prod(2 * f_, 0);
      for (int i = 0; i < f_; ++i)
        for (int j = 0; j < f_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      Poly r = poly_mod(prod, modulus_, p_);
      r.resize(f_, 0);
      int m = 0;
      for (int i = f_ - 1; i >= 0; --i)
        m = m * p_ + r[i];
      mul_[a * q_ + b] = m;
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1)
        inv_[a] = b;
}

int FiniteField::basis_element(int i) const
{
  if (i < 0 || i >= f_)
    throw std::out_of_range("basis index out of range");
  return int_pow(p_, i);
}

} // namespace chardeg
