#include "chardeg/acd.hpp"

#include "chardeg/errors.hpp"

namespace chardeg {

char const *to_string(FieldLabel f)
{
  switch (f) {
  case FieldLabel::Q:
    return "Q";
  case FieldLabel::R:
    return "R";
  case FieldLabel::C:
    return "C";
  }
  return "?";
}

FieldLabel parse_field_label(std::string const &text)
{
  if (text == "Q")
    return FieldLabel::Q;
  if (text == "R")
    return FieldLabel::R;
  if (text == "C")
    return FieldLabel::C;
  throw SpecError("field must be one of Q, R, C: " + text);
}

FieldLabel field_of_values(CharacterTable const &table, std::size_t row)
{
  FieldLabel result = FieldLabel::Q;
  for (auto const &value : table.rows.at(row)) {
    switch (classify_value(value)) {
    case ValueClass::rational:
      break;
    case ValueClass::real_not_rational:
      result = FieldLabel::R;
      break;
    case ValueClass::complex:
      return FieldLabel::C;
    }
  }
  return result;
}

std::vector<FieldLabel> field_labels(CharacterTable const &table)
{
  std::vector<FieldLabel> labels;
  for (std::size_t s = 0; s < table.row_count(); ++s)
    labels.push_back(field_of_values(table, s));
  return labels;
}

std::string Selector::describe() const
{
  std::string f = to_string(field);
  switch (kind) {
  case Kind::all:
    return "all";
  case Kind::valued:
    return "valued(" + f + ")";
  case Kind::star:
    return "star(" + f + ")";
  case Kind::rel:
    return "rel(N)";
  case Kind::valued_rel:
    return "valued_rel(" + f + ", N)";
  case Kind::even:
    return "even(" + f + ")";
  case Kind::even_rel:
    return "even_rel(" + f + ", N)";
  }
  return "?";
}

CharacterSelection select_characters(CharacterTable const &table, Selector const &selector)
{
  return select_characters(table, field_labels(table), selector);
}

CharacterSelection select_characters(CharacterTable const &table, std::vector<FieldLabel> const &labels,
                                     Selector const &selector)
{
  using Kind = Selector::Kind;
  bool const relative = selector.kind == Kind::rel || selector.kind == Kind::valued_rel ||
                        selector.kind == Kind::even_rel;
  if (relative && (!selector.normal || selector.normal->is_trivial()))
    throw PreconditionError("relative selections need a non-trivial normal subgroup");

  CharacterSelection out;
  out.table = &table;
  out.descriptor = selector;
  for (std::size_t s = 0; s < table.row_count(); ++s) {
    std::uint64_t const d = table.degrees[s];
    bool const valued = is_valued_in(labels[s], selector.field);
    bool keep = false;
    switch (selector.kind) {
    case Kind::all:
      keep = true;
      break;
    case Kind::valued:
      keep = valued;
      break;
    case Kind::star:
      keep = d > 1 && valued;
      break;
    case Kind::rel:
      keep = !contains(table, *selector.normal, s);
      break;
    case Kind::valued_rel:
      keep = valued && !contains(table, *selector.normal, s);
      break;
    case Kind::even:
      keep = d % 2 == 0 && valued;
      break;
    case Kind::even_rel:
      keep = d % 2 == 0 && valued && !contains(table, *selector.normal, s);
      break;
    }
    if (keep)
      out.rows.push_back(s);
  }
  return out;
}

Rational average_degree(CharacterSelection const &selection)
{
  if (selection.rows.empty())
    return Rational(0);
  mpz_class sum = 0;
  for (auto s : selection.rows)
    sum += static_cast<unsigned long>(selection.table->degrees[s]);
  Rational avg(sum, static_cast<unsigned long>(selection.rows.size()));
  avg.canonicalize();
  return avg;
}

std::map<std::uint64_t, std::size_t> degree_histogram(CharacterSelection const &selection)
{
  std::map<std::uint64_t, std::size_t> hist;
  for (auto s : selection.rows)
    ++hist[selection.table->degrees[s]];
  return hist;
}

int frobenius_schur_indicator(CharacterTable const &table, std::size_t row)
{
  Cyclotomic acc(Rational(0), table.conductor);
  for (std::size_t k = 0; k < table.class_count(); ++k)
    acc += table.rows.at(row)[table.powers.power(k, 2)] *
           Rational(static_cast<unsigned long>(table.class_size(k)));
  acc *= Rational(1, static_cast<unsigned long>(table.group_order));
  auto const value = acc.to_rational();
  if (!value || value->get_den() != 1 || abs(*value) > 1)
    throw InternalError("Frobenius-Schur indicator is not in {-1, 0, 1}: " + acc.to_string());
  return static_cast<int>(value->get_num().get_si());
}

AcdReport acd_suite(std::string name, CharacterTable const &table, PermutationGroup const &group,
                    std::vector<NormalSubgroup> const &normals)
{
  auto const labels = field_labels(table);
  auto avg = [&](Selector const &s) { return average_degree(select_characters(table, labels, s)); };

  AcdReport report;
  report.group = std::move(name);
  report.order = table.group_order;
  report.solvable = derived_series(group).is_solvable;
  report.acd = avg(Selector::all());
  for (auto f : kFieldLabels) {
    auto const i = static_cast<std::size_t>(f);
    report.acd_valued[i] = avg(Selector::valued(f));
    report.acd_star[i] = avg(Selector::star(f));
    auto even = select_characters(table, labels, Selector::even(f));
    report.acd_even[i] = average_degree(even);
    report.even_count[i] = even.rows.size();
  }

  for (std::size_t idx = 0; idx < normals.size(); ++idx) {
    auto const &n = normals[idx];
    if (n.is_trivial())
      continue;
    NormalAcd entry;
    entry.index = idx;
    entry.label = normal_label(table, n, idx);
    entry.normal = n;
    entry.solvable = is_solvable_normal(group, table.classes, n);
    entry.acd_rel = avg(Selector::rel(n));
    for (auto f : kFieldLabels) {
      auto const i = static_cast<std::size_t>(f);
      auto valued = select_characters(table, labels, Selector::valued_rel(f, n));
      entry.acd_valued_rel[i] = average_degree(valued);
      entry.histograms[i] = degree_histogram(valued);
      auto even = select_characters(table, labels, Selector::even_rel(f, n));
      entry.acd_even[i] = average_degree(even);
      entry.even_count[i] = even.rows.size();
    }
    report.per_normal.push_back(std::move(entry));
  }
  return report;
}

} // namespace chardeg
