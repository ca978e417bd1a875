#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chardeg/cyclotomic.hpp"
#include "chardeg/group.hpp"
#include "chardeg/modular.hpp"

namespace chardeg {

/// Class multiplication coefficients: at(i, j, k) counts pairs
/// (x, y) in C_i x C_j with x*y == z for a fixed z in C_k.
struct ClassConstants {
  std::uint64_t group_order = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> values; // r*r*r, index (i*r + j)*r + k

  std::size_t class_count() const { return class_sizes.size(); }
  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const
  {
    std::size_t const r = class_count();
    return values[(i * r + j) * r + k];
  }

  bool operator==(ClassConstants const &) const = default;
};

ClassConstants class_constants(PermutationGroup const &group, ClassData const &classes);

/// Smallest prime p with p = 1 (mod exponent) and p > 2*ceil(sqrt(order)).
std::uint64_t select_dixon_prime(std::uint64_t order, std::uint64_t exponent);

/// Irreducible characters reduced modulo a prime: rows[s][k] is phi_s on class k.
struct ModularTable {
  modp::Residue prime = 0;
  std::vector<std::vector<modp::Residue>> rows;
  std::vector<std::uint64_t> degrees;
  /// inverse_class[k] is the class of g^-1 for g in class k
  std::vector<std::size_t> inverse_class;
};

/// Splits F_p^r into common eigenspaces of the class matrices and converts
/// each central character into a modular character.
ModularTable modular_character_table(ClassConstants const &constants, modp::Residue p);

/// Ordinary character table. Values of every row live at the single
/// conductor e = exponent(G). Rows are ordered by ascending degree, then by
/// descending coefficient vectors of their values in class order (so the
/// trivial character leads).
struct CharacterTable {
  std::uint64_t group_order = 0;
  ClassData classes;
  PowerMap powers;
  std::uint64_t conductor = 1;
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<std::uint64_t> degrees;

  std::size_t class_count() const { return classes.size(); }
  std::size_t row_count() const { return rows.size(); }
  std::uint64_t class_size(std::size_t k) const { return classes.classes[k].size; }
};

/// Recovers exact character values from modular ones via eigenvalue
/// multiplicities on each cyclic subgroup <g_j>.
CharacterTable lift_table(ModularTable const &modular, PowerMap const &powers, ClassData const &classes);

/// classes -> constants -> prime -> modular table -> lift, then verified.
/// Throws InternalError when any table invariant fails.
CharacterTable character_table(PermutationGroup const &group);

struct RelationCheck {
  std::string name;
  bool ok = true;
  /// first failing (row, row) or (class, class) pair, or (row, -) for degree checks
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

struct OrthogonalityReport {
  std::vector<RelationCheck> relations;

  bool all_ok() const;
  std::string describe() const;
};

/// Row count, degree sum of squares, degree divisibility, and both
/// orthogonality relations, all in exact arithmetic.
OrthogonalityReport check_orthogonality(CharacterTable const &table);

} // namespace chardeg
