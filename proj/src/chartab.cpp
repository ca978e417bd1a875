#include "chardeg/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chardeg/errors.hpp"

namespace chardeg {

namespace {

using modp::Residue;

std::uint64_t ceil_sqrt(std::uint64_t n)
{
  std::uint64_t r = 0;
  while (r * r < n)
    ++r;
  return r;
}

// A common invariant subspace of the class matrices, kept in reduced row
// echelon form so coordinates are read off at the pivot columns.
struct Subspace {
  modp::Matrix basis;
  std::vector<std::size_t> pivots;

  std::size_t dimension() const { return basis.size(); }
};

Subspace make_subspace(modp::Matrix vectors, Residue p)
{
  Subspace s;
  s.pivots = modp::row_reduce(vectors, p);
  s.basis = std::move(vectors);
  return s;
}

// (M_i v)_j = sum_k a[i][j][k] v_k
std::vector<Residue> apply_class_matrix(ClassConstants const &c, std::size_t i,
                                        std::vector<Residue> const &v, Residue p)
{
  std::size_t const r = c.class_count();
  std::vector<Residue> out(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    Residue acc = 0;
    for (std::size_t k = 0; k < r; ++k)
      if (v[k] != 0)
        acc = modp::add(acc, modp::mul(c.at(i, j, k) % p, v[k], p), p);
    out[j] = acc;
  }
  return out;
}

// Eigenspace decomposition of M_i restricted to `space`.
std::vector<Subspace> split(ClassConstants const &c, std::size_t i, Subspace const &space, Residue p)
{
  std::size_t const d = space.dimension();
  modp::Matrix restricted(d, std::vector<Residue>(d, 0));
  for (std::size_t t = 0; t < d; ++t) {
    auto w = apply_class_matrix(c, i, space.basis[t], p);
    for (std::size_t s = 0; s < d; ++s)
      restricted[s][t] = w[space.pivots[s]];
  }

  std::vector<Subspace> parts;
  std::size_t covered = 0;
  for (Residue lambda = 0; lambda < p && covered < d; ++lambda) {
    modp::Matrix shifted = restricted;
    for (std::size_t s = 0; s < d; ++s)
      shifted[s][s] = modp::sub(shifted[s][s], lambda, p);
    auto coords = modp::kernel(std::move(shifted), d, p);
    if (coords.empty())
      continue;
    modp::Matrix vectors;
    for (auto const &x : coords) {
      std::vector<Residue> v(c.class_count(), 0);
      for (std::size_t t = 0; t < d; ++t)
        if (x[t] != 0)
          for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = modp::add(v[k], modp::mul(x[t], space.basis[t][k], p), p);
      vectors.push_back(std::move(v));
    }
    covered += vectors.size();
    parts.push_back(make_subspace(std::move(vectors), p));
  }
  if (covered != d)
    throw InternalError("class matrix " + std::to_string(i) + " is not diagonalisable over F_" +
                        std::to_string(p));
  return parts;
}

// Lexicographic comparison of two rows, value by value.
int compare_rows(std::vector<Cyclotomic> const &a, std::vector<Cyclotomic> const &b)
{
  for (std::size_t k = 0; k < a.size(); ++k) {
    int c = a[k].compare(b[k]);
    if (c != 0)
      return c;
  }
  return 0;
}

} // namespace

ClassConstants class_constants(PermutationGroup const &group, ClassData const &classes)
{
  std::size_t const r = classes.size();
  ClassConstants c;
  c.group_order = group.order();
  for (auto const &cls : classes.classes)
    c.class_sizes.push_back(cls.size);
  c.values.assign(r * r * r, 0);

  // for a fixed z in C_k: count x in C_i with x^-1 z in C_j
  for (std::size_t k = 0; k < r; ++k) {
    ElementIndex const z = classes.classes[k].representative;
    for (std::size_t i = 0; i < r; ++i)
      for (ElementIndex x : classes.classes[i].members) {
        std::size_t const j = classes.class_of[group.multiply(group.inverse(x), z)];
        ++c.values[(i * r + j) * r + k];
      }
  }
  return c;
}

std::uint64_t select_dixon_prime(std::uint64_t order, std::uint64_t exponent)
{
  std::uint64_t const bound = 2 * ceil_sqrt(order);
  std::uint64_t p = exponent + 1;
  while (p <= bound || !modp::is_prime(p))
    p += exponent;
  return p;
}

ModularTable modular_character_table(ClassConstants const &constants, Residue p)
{
  std::size_t const r = constants.class_count();
  if (r == 0)
    throw PreconditionError("class constants are empty");

  ModularTable table;
  table.prime = p;
  table.inverse_class.assign(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t l = 0; l < r; ++l)
      if (constants.at(j, l, 0) != 0)
        table.inverse_class[j] = l;

  modp::Matrix identity(r, std::vector<Residue>(r, 0));
  for (std::size_t k = 0; k < r; ++k)
    identity[k][k] = 1;
  std::vector<Subspace> spaces{make_subspace(std::move(identity), p)};

  // deterministic refinement in canonical class order; M_0 is the identity
  for (std::size_t i = 1; i < r; ++i) {
    bool const done = std::all_of(spaces.begin(), spaces.end(),
                                  [](Subspace const &s) { return s.dimension() == 1; });
    if (done)
      break;
    std::vector<Subspace> refined;
    for (auto const &space : spaces) {
      if (space.dimension() == 1) {
        refined.push_back(space);
        continue;
      }
      for (auto &part : split(constants, i, space, p))
        refined.push_back(std::move(part));
    }
    spaces = std::move(refined);
  }
  for (auto const &space : spaces)
    if (space.dimension() != 1)
      throw InternalError("common eigenspaces did not separate modulo " + std::to_string(p));

  Residue const order_mod = constants.group_order % p;
  for (auto const &space : spaces) {
    auto const &v = space.basis.front();
    if (v[0] == 0)
      throw InternalError("central character vanishes on the identity class");
    Residue const scale = modp::inv(v[0], p);
    std::vector<Residue> omega(r);
    for (std::size_t k = 0; k < r; ++k)
      omega[k] = modp::mul(v[k], scale, p);

    // d^2 = |G| / sum_j omega(j) omega(j') / |C_j|
    Residue norm = 0;
    for (std::size_t j = 0; j < r; ++j) {
      Residue term = modp::mul(omega[j], omega[table.inverse_class[j]], p);
      norm = modp::add(norm, modp::mul(term, modp::inv(constants.class_sizes[j] % p, p), p), p);
    }
    if (norm == 0)
      throw InternalError("degenerate central character norm");
    Residue const degree_sq = modp::mul(order_mod, modp::inv(norm, p), p);
    Residue degree = 0;
    for (Residue t = 1; t <= (p - 1) / 2; ++t)
      if (modp::mul(t, t, p) == degree_sq) {
        degree = t;
        break;
      }
    if (degree == 0)
      throw InternalError("character degree has no square root below p/2");

    std::vector<Residue> row(r);
    for (std::size_t k = 0; k < r; ++k)
      row[k] = modp::mul(modp::mul(degree, omega[k], p), modp::inv(constants.class_sizes[k] % p, p), p);
    table.rows.push_back(std::move(row));
    table.degrees.push_back(degree);
  }
  return table;
}

CharacterTable lift_table(ModularTable const &modular, PowerMap const &powers, ClassData const &classes)
{
  Residue const p = modular.prime;
  std::uint64_t const e = group_exponent(classes);
  if ((p - 1) % e != 0)
    throw PreconditionError("prime is not 1 modulo the group exponent");
  Residue const root = modp::primitive_root(p);

  CharacterTable table;
  for (auto const &cls : classes.classes)
    table.group_order += cls.size;
  table.classes = classes;
  table.powers = powers;
  table.conductor = e;

  std::size_t const r = classes.size();
  for (std::size_t s = 0; s < modular.rows.size(); ++s) {
    auto const &phi = modular.rows[s];
    std::uint64_t const degree = modular.degrees[s];
    std::vector<Cyclotomic> values;
    values.reserve(r);
    for (std::size_t j = 0; j < r; ++j) {
      std::uint64_t const m = classes.classes[j].element_order;
      Residue const w = modp::pow(root, (p - 1) / m, p);
      Residue const w_inv = modp::inv(w, p);
      Residue const m_inv = modp::inv(m % p, p);
      std::vector<std::int64_t> exponents(e, 0);
      std::uint64_t total = 0;
      for (std::uint64_t k = 0; k < m; ++k) {
        // mu_k = m^-1 sum_l phi(g^l) w^(-kl)
        Residue acc = 0;
        Residue const step = modp::pow(w_inv, k, p);
        Residue twist = 1;
        for (std::uint64_t l = 0; l < m; ++l) {
          acc = modp::add(acc, modp::mul(phi[powers.power(j, l)], twist, p), p);
          twist = modp::mul(twist, step, p);
        }
        Residue const mu = modp::mul(acc, m_inv, p);
        if (mu > degree)
          throw InternalError("lifted eigenvalue multiplicity exceeds the character degree");
        exponents[k * (e / m)] = static_cast<std::int64_t>(mu);
        total += mu;
      }
      if (total != degree)
        throw InternalError("lifted multiplicities do not sum to the degree");
      values.push_back(Cyclotomic::from_exponents(e, exponents));
    }
    table.rows.push_back(std::move(values));
    table.degrees.push_back(degree);
  }

  std::vector<std::size_t> order(table.rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (table.degrees[a] != table.degrees[b])
      return table.degrees[a] < table.degrees[b];
    return compare_rows(table.rows[a], table.rows[b]) > 0;
  });
  CharacterTable sorted = table;
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.rows[i] = table.rows[order[i]];
    sorted.degrees[i] = table.degrees[order[i]];
  }
  return sorted;
}

CharacterTable character_table(PermutationGroup const &group)
{
  ClassData classes = conjugacy_classes(group);
  PowerMap powers = power_map(group, classes);
  ClassConstants constants = class_constants(group, classes);
  Residue const p = select_dixon_prime(group.order(), group_exponent(classes));
  ModularTable modular = modular_character_table(constants, p);
  CharacterTable table = lift_table(modular, powers, classes);
  auto report = check_orthogonality(table);
  if (!report.all_ok())
    throw InternalError("character table failed verification: " + report.describe());
  return table;
}

bool OrthogonalityReport::all_ok() const
{
  return std::all_of(relations.begin(), relations.end(), [](RelationCheck const &c) { return c.ok; });
}

std::string OrthogonalityReport::describe() const
{
  std::ostringstream out;
  bool first = true;
  for (auto const &rel : relations) {
    if (!first)
      out << "; ";
    first = false;
    out << rel.name << (rel.ok ? " ok" : " FAILED");
    if (rel.counterexample)
      out << " at (" << rel.counterexample->first << ", " << rel.counterexample->second << ")";
  }
  return out.str();
}

OrthogonalityReport check_orthogonality(CharacterTable const &table)
{
  OrthogonalityReport report;
  std::size_t const r = table.class_count();
  std::size_t const rows = table.row_count();
  Rational const order(static_cast<unsigned long>(table.group_order));

  RelationCheck count{"row_count", true, std::nullopt};
  count.ok = rows == r;
  report.relations.push_back(count);
  if (!count.ok)
    return report;

  RelationCheck degree_sum{"degree_sum", true, std::nullopt};
  RelationCheck divides{"degree_divides_order", true, std::nullopt};
  RelationCheck identity{"identity_column", true, std::nullopt};
  std::uint64_t sum = 0;
  for (std::size_t s = 0; s < rows; ++s) {
    std::uint64_t const d = table.degrees[s];
    sum += d * d;
    if (divides.ok && (d == 0 || table.group_order % d != 0)) {
      divides.ok = false;
      divides.counterexample = std::pair{s, std::size_t{0}};
    }
    auto const at_identity = table.rows[s][0].to_rational();
    if (identity.ok && (!at_identity || *at_identity != Rational(static_cast<unsigned long>(d)))) {
      identity.ok = false;
      identity.counterexample = std::pair{s, std::size_t{0}};
    }
  }
  degree_sum.ok = sum == table.group_order;
  report.relations.push_back(degree_sum);
  report.relations.push_back(divides);
  report.relations.push_back(identity);

  std::vector<std::vector<Cyclotomic>> conj(rows);
  for (std::size_t s = 0; s < rows; ++s)
    for (auto const &v : table.rows[s])
      conj[s].push_back(v.conjugate());

  RelationCheck first{"first_orthogonality", true, std::nullopt};
  for (std::size_t s = 0; s < rows && first.ok; ++s)
    for (std::size_t t = s; t < rows && first.ok; ++t) {
      Cyclotomic acc(Rational(0), table.conductor);
      for (std::size_t k = 0; k < r; ++k)
        acc += (table.rows[s][k] * conj[t][k]) * Rational(static_cast<unsigned long>(table.class_size(k)));
      Cyclotomic const expected(s == t ? order : Rational(0), table.conductor);
      if (!(acc == expected)) {
        first.ok = false;
        first.counterexample = std::pair{s, t};
      }
    }
  report.relations.push_back(first);

  RelationCheck second{"second_orthogonality", true, std::nullopt};
  for (std::size_t k = 0; k < r && second.ok; ++k)
    for (std::size_t l = k; l < r && second.ok; ++l) {
      Cyclotomic acc(Rational(0), table.conductor);
      for (std::size_t s = 0; s < rows; ++s)
        acc += table.rows[s][k] * conj[s][l];
      Rational value = 0;
      if (k == l) {
        value = order / Rational(static_cast<unsigned long>(table.class_size(k)));
      }
      if (!(acc == Cyclotomic(value, table.conductor))) {
        second.ok = false;
        second.counterexample = std::pair{k, l};
      }
    }
  report.relations.push_back(second);
  return report;
}

} // namespace chardeg
