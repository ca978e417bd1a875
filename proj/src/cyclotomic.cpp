#include "chardeg/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "chardeg/errors.hpp"

namespace chardeg {

namespace {

using IntPoly = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw InternalError("cyclotomic polynomial coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw InternalError("cyclotomic polynomial coefficient overflow");
  return r;
}

// exact quotient of a by monic b
IntPoly divide_exact(IntPoly a, IntPoly const &b)
{
  std::size_t const db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0)
      continue;
    for (std::size_t k = 0; k <= db; ++k)
      a[i - db + k] = checked_sub(a[i - db + k], checked_mul(c, b[k]));
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0)
      throw InternalError("cyclotomic polynomial division is not exact");
  return q;
}

std::mutex &cache_mutex()
{
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, IntPoly> &poly_cache()
{
  static std::map<std::uint64_t, IntPoly> cache;
  return cache;
}

std::map<std::uint64_t, std::unique_ptr<detail::CyclotomicField>> &field_cache()
{
  static std::map<std::uint64_t, std::unique_ptr<detail::CyclotomicField>> cache;
  return cache;
}

std::uint64_t reduce_exponent(std::int64_t k, std::uint64_t n)
{
  auto const sn = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(((k % sn) + sn) % sn);
}

} // namespace

std::uint64_t euler_phi(std::uint64_t n)
{
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0)
      continue;
    while (m % p == 0)
      m /= p;
    result -= result / p;
  }
  if (m > 1)
    result -= result / m;
  return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("cyclotomic polynomial index must be positive");
  {
    std::lock_guard lock(cache_mutex());
    auto it = poly_cache().find(n);
    if (it != poly_cache().end())
      return it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  IntPoly poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0)
      poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));

  std::lock_guard lock(cache_mutex());
  return poly_cache().emplace(n, std::move(poly)).first->second;
}

namespace detail {

CyclotomicField const &cyclotomic_field(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("conductor must be positive");
  {
    std::lock_guard lock(cache_mutex());
    auto it = field_cache().find(n);
    if (it != field_cache().end())
      return *it->second;
  }

  auto field = std::make_unique<CyclotomicField>();
  field->n = n;
  field->cyclotomic_poly = cyclotomic_polynomial(n);
  field->phi = field->cyclotomic_poly.size() - 1;
  std::size_t const phi = field->phi;
  auto const &cp = field->cyclotomic_poly;

  field->powers.reserve(n);
  IntPoly current(phi, 0);
  current[0] = 1;
  for (std::uint64_t m = 0; m < n; ++m) {
    field->powers.push_back(current);
    // multiply by zeta: shift up, then fold the x^phi term back
    std::int64_t top = current[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i)
      current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi; ++i)
        current[i] = checked_sub(current[i], checked_mul(top, cp[i]));
  }

  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = field_cache().emplace(n, std::move(field));
  return *it->second;
}

} // namespace detail

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0)) {}

Cyclotomic::Cyclotomic(Rational const &value, std::uint64_t conductor)
  : field_(&detail::cyclotomic_field(conductor)), num_(field_->phi), den_(value.get_den())
{
  num_[0] = value.get_num();
}

Cyclotomic Cyclotomic::from_exponents(std::uint64_t n, std::span<std::int64_t const> coeffs)
{
  Cyclotomic out(Rational(0), n);
  auto const &field = *out.field_;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0)
      continue;
    auto const &row = field.powers[k % n];
    for (std::size_t i = 0; i < field.phi; ++i)
      if (row[i] != 0)
        out.num_[i] += mpz_class(static_cast<long>(coeffs[k])) * static_cast<long>(row[i]);
  }
  return out;
}

Rational Cyclotomic::coefficient(std::size_t i) const
{
  Rational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> Cyclotomic::coefficients() const
{
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i)
    out.push_back(coefficient(i));
  return out;
}

Cyclotomic Cyclotomic::embedded(std::uint64_t n) const
{
  if (n == conductor())
    return *this;
  if (n % conductor() != 0)
    throw std::invalid_argument("embedding conductor must be a multiple of the current one");
  std::uint64_t const step = n / conductor();
  Cyclotomic out(Rational(0), n);
  auto const &field = *out.field_;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0)
      continue;
    auto const &row = field.powers[i * step];
    for (std::size_t t = 0; t < field.phi; ++t)
      if (row[t] != 0)
        out.num_[t] += num_[i] * static_cast<long>(row[t]);
  }
  out.den_ = den_;
  return out;
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const
{
  std::uint64_t const n = conductor();
  std::uint64_t const kk = reduce_exponent(k, n);
  if (std::gcd(kk, n) != 1)
    throw InvalidAutomorphism("zeta -> zeta^" + std::to_string(k) +
                              " is not an automorphism of Q(zeta_" + std::to_string(n) + ")");
  Cyclotomic out(Rational(0), n);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0)
      continue;
    auto const &row = field_->powers[(i * kk) % n];
    for (std::size_t t = 0; t < field_->phi; ++t)
      if (row[t] != 0)
        out.num_[t] += num_[i] * static_cast<long>(row[t]);
  }
  out.den_ = den_;
  return out;
}

bool Cyclotomic::is_zero() const
{
  for (auto const &c : num_)
    if (c != 0)
      return false;
  return true;
}

bool Cyclotomic::is_rational() const
{
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0)
      return false;
  return true;
}

std::optional<Rational> Cyclotomic::to_rational() const
{
  if (!is_rational())
    return std::nullopt;
  return coefficient(0);
}

int Cyclotomic::compare(Cyclotomic const &other) const
{
  Cyclotomic a = *this;
  Cyclotomic b = other;
  a.align_with(b);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    int c = cmp(a.coefficient(i), b.coefficient(i));
    if (c != 0)
      return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Cyclotomic::to_string() const
{
  std::string out;
  std::string const zeta = "z" + std::to_string(conductor());
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0)
      continue;
    Rational c = coefficient(i);
    bool const negative = c < 0;
    Rational const magnitude = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string const power = i == 1 ? zeta : zeta + "^" + std::to_string(i);
    if (i == 0)
      out += magnitude.get_str();
    else if (magnitude == 1)
      out += power;
    else
      out += magnitude.get_str() + "*" + power;
  }
  return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic out = *this;
  for (auto &c : out.num_)
    c = -c;
  return out;
}

void Cyclotomic::align_with(Cyclotomic &other)
{
  if (conductor() == other.conductor())
    return;
  std::uint64_t const n = std::lcm(conductor(), other.conductor());
  *this = embedded(n);
  other = other.embedded(n);
}

Cyclotomic &Cyclotomic::operator+=(Cyclotomic const &rhs)
{
  if (conductor() != rhs.conductor()) {
    Cyclotomic r = rhs;
    align_with(r);
    return *this += r;
  }
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i)
      num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i)
      num_[i] = num_[i] * rhs.den_ + rhs.num_[i] * den_;
    den_ *= rhs.den_;
  }
  normalise();
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(Cyclotomic const &rhs)
{
  return *this += -rhs;
}

Cyclotomic &Cyclotomic::operator*=(Cyclotomic const &rhs)
{
  if (conductor() != rhs.conductor()) {
    Cyclotomic r = rhs;
    align_with(r);
    return *this *= r;
  }
  std::size_t const phi = field_->phi;
  std::vector<mpz_class> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (num_[i] == 0)
      continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (rhs.num_[j] != 0)
        mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
  }
  // reduce modulo the monic Phi_n from the top down
  auto const &cp = field_->cyclotomic_poly;
  for (std::size_t m = prod.size(); m-- > phi;) {
    if (prod[m] == 0)
      continue;
    mpz_class const c = prod[m];
    for (std::size_t t = 0; t <= phi; ++t)
      if (cp[t] != 0)
        prod[m - phi + t] -= c * static_cast<long>(cp[t]);
  }
  prod.resize(phi);
  num_ = std::move(prod);
  den_ *= rhs.den_;
  normalise();
  return *this;
}

Cyclotomic &Cyclotomic::operator*=(Rational const &rhs)
{
  for (auto &c : num_)
    c *= rhs.get_num();
  den_ *= rhs.get_den();
  normalise();
  return *this;
}

bool operator==(Cyclotomic const &a, Cyclotomic const &b)
{
  if (a.conductor() != b.conductor()) {
    Cyclotomic x = a;
    Cyclotomic y = b;
    x.align_with(y);
    return x == y;
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

void Cyclotomic::normalise()
{
  if (den_ == 1)
    return;
  if (is_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g = den_;
  for (auto const &c : num_) {
    if (c == 0)
      continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1)
      return;
  }
  for (auto &c : num_)
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

Cyclotomic root_of_unity(std::uint64_t n, std::int64_t k)
{
  if (n == 0)
    throw std::invalid_argument("root of unity order must be positive");
  std::vector<std::int64_t> coeffs(n, 0);
  coeffs[reduce_exponent(k, n)] = 1;
  return Cyclotomic::from_exponents(n, coeffs);
}

Cyclotomic galois_apply(Cyclotomic const &a, std::int64_t k)
{
  return a.galois(k);
}

ValueClass classify_value(Cyclotomic const &a)
{
  if (a.is_rational())
    return ValueClass::rational;
  if (a.conjugate() == a)
    return ValueClass::real_not_rational;
  return ValueClass::complex;
}

std::optional<Rational> to_rational(Cyclotomic const &a)
{
  return a.to_rational();
}

char const *to_string(ValueClass c)
{
  switch (c) {
  case ValueClass::rational:
    return "rational";
  case ValueClass::real_not_rational:
    return "real_not_rational";
  case ValueClass::complex:
    return "complex";
  }
  return "?";
}

} // namespace chardeg
