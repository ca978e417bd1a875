#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chardeg/chartab.hpp"
#include "chardeg/normal.hpp"
#include "chardeg/rational.hpp"

namespace chardeg {

/// Field of values of a character, ordered Q < R < C by generality.
enum class FieldLabel { Q = 0, R = 1, C = 2 };

inline constexpr std::array<FieldLabel, 3> kFieldLabels{FieldLabel::Q, FieldLabel::R, FieldLabel::C};

char const *to_string(FieldLabel f);
FieldLabel parse_field_label(std::string const &text);

/// Is a character with values in `actual` also `target`-valued?
inline bool is_valued_in(FieldLabel actual, FieldLabel target)
{
  return static_cast<int>(actual) <= static_cast<int>(target);
}

FieldLabel field_of_values(CharacterTable const &table, std::size_t row);
std::vector<FieldLabel> field_labels(CharacterTable const &table);

/// Which characters to average over.
struct Selector {
  enum class Kind {
    all,        // Irr(G)
    valued,     // F-valued
    star,       // non-linear and F-valued
    rel,        // kernel does not contain N
    valued_rel, // F-valued, kernel does not contain N
    even,       // even degree, F-valued
    even_rel,   // even degree, F-valued, kernel does not contain N
  };

  Kind kind = Kind::all;
  FieldLabel field = FieldLabel::C;
  std::optional<NormalSubgroup> normal;

  static Selector all() { return {Kind::all, FieldLabel::C, std::nullopt}; }
  static Selector valued(FieldLabel f) { return {Kind::valued, f, std::nullopt}; }
  static Selector star(FieldLabel f) { return {Kind::star, f, std::nullopt}; }
  static Selector rel(NormalSubgroup n) { return {Kind::rel, FieldLabel::C, std::move(n)}; }
  static Selector valued_rel(FieldLabel f, NormalSubgroup n) { return {Kind::valued_rel, f, std::move(n)}; }
  static Selector even(FieldLabel f) { return {Kind::even, f, std::nullopt}; }
  static Selector even_rel(FieldLabel f, NormalSubgroup n) { return {Kind::even_rel, f, std::move(n)}; }

  std::string describe() const;
};

struct CharacterSelection {
  CharacterTable const *table = nullptr;
  std::vector<std::size_t> rows;
  Selector descriptor;
};

/// Throws PreconditionError for a relative selector with trivial N.
CharacterSelection select_characters(CharacterTable const &table, Selector const &selector);
CharacterSelection select_characters(CharacterTable const &table, std::vector<FieldLabel> const &labels,
                                     Selector const &selector);

/// Mean degree of the selection; the empty selection averages to 0.
Rational average_degree(CharacterSelection const &selection);

/// degree -> number of selected characters of that degree
std::map<std::uint64_t, std::size_t> degree_histogram(CharacterSelection const &selection);

/// |G|^-1 sum_g chi(g^2), computed classwise.
int frobenius_schur_indicator(CharacterTable const &table, std::size_t row);

using PerField = std::array<Rational, 3>;

struct NormalAcd {
  std::size_t index = 0; // position in the normal subgroup list
  std::string label;
  NormalSubgroup normal;
  bool solvable = false;
  Rational acd_rel;                      // acd(G|N)
  PerField acd_valued_rel;               // acd_F(G|N)
  PerField acd_even;                     // acd_{F,even}(G|N)
  std::array<std::size_t, 3> even_count{};
  /// n_d^F(G|N) per field
  std::array<std::map<std::uint64_t, std::size_t>, 3> histograms;
};

struct AcdReport {
  std::string group;
  std::uint64_t order = 0;
  bool solvable = false;
  Rational acd;                // acd(G)
  PerField acd_valued;         // acd_F(G)
  PerField acd_star;           // acd*_F(G)
  PerField acd_even;           // acd_{F,even}(G)
  std::array<std::size_t, 3> even_count{};
  std::vector<NormalAcd> per_normal; // nontrivial N only

  static Rational const &at(PerField const &values, FieldLabel f)
  {
    return values[static_cast<std::size_t>(f)];
  }
};

/// All average-degree invariants of a group; `normals` must be the complete
/// normal subgroup list (the trivial subgroup is skipped).
AcdReport acd_suite(std::string name, CharacterTable const &table, PermutationGroup const &group,
                    std::vector<NormalSubgroup> const &normals);

} // namespace chardeg
