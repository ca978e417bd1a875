#include <doctest.h>

#include <set>

#include "chardeg/acd.hpp"
#include "chardeg/errors.hpp"
#include "helpers.hpp"

using namespace chardeg;
using testing::analyse;

namespace {

std::vector<std::uint64_t> degrees_of(CharacterSelection const &sel)
{
  std::vector<std::uint64_t> out;
  for (auto s : sel.rows)
    out.push_back(sel.table->degrees[s]);
  return out;
}

NormalAcd const &per_normal(AcdReport const &r, std::string const &label)
{
  for (auto const &n : r.per_normal)
    if (n.label == label)
      return n;
  FAIL("no normal subgroup labelled " << label);
  return r.per_normal.front();
}

Rational frac(long a, long b)
{
  return make_rational(a, b);
}

} // namespace

TEST_CASE("field labels")
{
  auto a5 = analyse("alt:5");
  auto labels = field_labels(a5.table);
  CHECK(labels == std::vector<FieldLabel>{FieldLabel::Q, FieldLabel::R, FieldLabel::R, FieldLabel::Q, FieldLabel::Q});

  auto sl = analyse("sl2:5");
  for (std::size_t s = 0; s < sl.table.row_count(); ++s)
    if (sl.table.degrees[s] == 2 || sl.table.degrees[s] == 3)
      CHECK(field_of_values(sl.table, s) == FieldLabel::R);

  auto c3 = analyse("cyclic:3");
  CHECK(field_labels(c3.table) == std::vector<FieldLabel>{FieldLabel::Q, FieldLabel::C, FieldLabel::C});

  CHECK(is_valued_in(FieldLabel::Q, FieldLabel::R));
  CHECK(is_valued_in(FieldLabel::R, FieldLabel::C));
  CHECK_FALSE(is_valued_in(FieldLabel::C, FieldLabel::R));
  CHECK(parse_field_label("R") == FieldLabel::R);
  CHECK_THROWS_AS(parse_field_label("Z"), SpecError);
}

TEST_CASE("selections")
{
  auto sl = analyse("sl2:5");
  auto const &t = sl.table;
  auto star = select_characters(t, Selector::star(FieldLabel::C));
  CHECK(degrees_of(star) == std::vector<std::uint64_t>{2, 2, 3, 3, 4, 4, 5, 6});
  CHECK(average_degree(star) == frac(29, 8));

  auto even = select_characters(t, Selector::even_rel(FieldLabel::C, whole_group(t)));
  CHECK(degrees_of(even) == std::vector<std::uint64_t>{2, 2, 4, 4, 6});
  CHECK(average_degree(even) == frac(18, 5));

  auto a5 = analyse("alt:5");
  auto q_even = select_characters(a5.table, Selector::even_rel(FieldLabel::Q, whole_group(a5.table)));
  CHECK(degrees_of(q_even) == std::vector<std::uint64_t>{4});
  CHECK(average_degree(select_characters(a5.table, Selector::all())) == frac(16, 5));

  auto trivial = make_normal_subgroup(t, {0});
  CHECK_THROWS_AS(select_characters(t, Selector::rel(trivial)), PreconditionError);
  CHECK_THROWS_AS(select_characters(t, Selector::even_rel(FieldLabel::Q, trivial)), PreconditionError);
  Selector missing{Selector::Kind::valued_rel, FieldLabel::C, std::nullopt};
  CHECK_THROWS_AS(select_characters(t, missing), PreconditionError);
}

TEST_CASE("empty selections average to zero")
{
  auto c2 = analyse("cyclic:2");
  for (auto f : kFieldLabels) {
    auto sel = select_characters(c2.table, Selector::star(f));
    CHECK(sel.rows.empty());
    CHECK(average_degree(sel) == 0);
    CHECK(AcdReport::at(c2.report.acd_star, f) == 0);
  }
}

TEST_CASE("property: selected rows satisfy their predicate")
{
  for (std::string spec : {"sl2:5", "sym:4", "quaternion:8", "alt:6", "product:alt:5,cyclic:3"}) {
    CAPTURE(spec);
    auto a = analyse(spec);
    auto const &t = a.table;
    auto labels = field_labels(t);
    for (auto f : kFieldLabels) {
      std::vector<Selector> selectors{Selector::valued(f), Selector::star(f), Selector::even(f)};
      for (auto const &n : a.normals)
        if (!n.is_trivial()) {
          selectors.push_back(Selector::valued_rel(f, n));
          selectors.push_back(Selector::even_rel(f, n));
          selectors.push_back(Selector::rel(n));
        }
      for (auto const &sel : selectors) {
        auto chosen = select_characters(t, labels, sel);
        std::set<std::size_t> in(chosen.rows.begin(), chosen.rows.end());
        for (std::size_t s = 0; s < t.row_count(); ++s) {
          bool ok = true;
          auto const d = t.degrees[s];
          if (sel.kind != Selector::Kind::rel && sel.kind != Selector::Kind::all)
            ok = ok && is_valued_in(labels[s], sel.field);
          if (sel.kind == Selector::Kind::star)
            ok = ok && d > 1;
          if (sel.kind == Selector::Kind::even || sel.kind == Selector::Kind::even_rel)
            ok = ok && d % 2 == 0;
          if (sel.normal)
            ok = ok && !contains(t, *sel.normal, s);
          CHECK(in.count(s) == (ok ? 1u : 0u));
        }
        // the average is the plain mean of the selected degrees
        if (!chosen.rows.empty()) {
          std::uint64_t sum = 0;
          for (auto s : chosen.rows)
            sum += t.degrees[s];
          CHECK(average_degree(chosen) == frac(static_cast<long>(sum), static_cast<long>(chosen.rows.size())));
        }
      }
    }
  }
}

TEST_CASE("frobenius-schur indicators")
{
  auto q8 = analyse("quaternion:8");
  CHECK(frobenius_schur_indicator(q8.table, 4) == -1);
  CHECK(frobenius_schur_indicator(q8.table, 0) == 1);
  auto s3 = analyse("sym:3");
  CHECK(frobenius_schur_indicator(s3.table, 2) == 1);
  auto c3 = analyse("cyclic:3");
  CHECK(frobenius_schur_indicator(c3.table, 1) == 0);
  auto sl = analyse("sl2:5");
  // faithful characters of SL2(5) are quaternionic, the rest come from Alt5
  for (std::size_t s = 0; s < sl.table.row_count(); ++s)
    CHECK(frobenius_schur_indicator(sl.table, s) == (kernel_class_set(sl.table, s).is_trivial() ? -1 : 1));
}

TEST_CASE("acd suite constants")
{
  auto sl = analyse("sl2:5");
  auto const &r = sl.report;
  CHECK_FALSE(r.solvable);
  CHECK(AcdReport::at(r.acd_star, FieldLabel::C) == frac(29, 8));
  CHECK(AcdReport::at(r.acd_star, FieldLabel::R) == frac(29, 8));
  CHECK(AcdReport::at(per_normal(r, "G").acd_even, FieldLabel::C) == frac(18, 5));
  CHECK(AcdReport::at(per_normal(r, "G").acd_even, FieldLabel::R) == frac(18, 5));
  CHECK(AcdReport::at(per_normal(r, "Z").acd_even, FieldLabel::C) == frac(7, 2));
  CHECK(AcdReport::at(per_normal(r, "Z").acd_even, FieldLabel::R) == frac(7, 2));
  CHECK(per_normal(r, "Z").normal.order == 2);

  auto a5 = analyse("alt:5");
  CHECK(a5.report.acd == frac(16, 5));
  CHECK(AcdReport::at(a5.report.acd_star, FieldLabel::Q) == frac(9, 2));
  CHECK(AcdReport::at(a5.report.acd_valued, FieldLabel::Q) == frac(10, 3));
  CHECK(AcdReport::at(per_normal(a5.report, "G").acd_even, FieldLabel::Q) == 4);

  auto a6 = analyse("alt:6");
  CHECK(AcdReport::at(a6.report.acd_valued, FieldLabel::Q) == 6);
  CHECK(AcdReport::at(a6.report.acd_star, FieldLabel::Q) == frac(29, 4));

  auto s4 = analyse("sym:4");
  CHECK(AcdReport::at(s4.report.acd_star, FieldLabel::Q) == frac(8, 3));
  CHECK(s4.report.per_normal.size() == 3);
}

TEST_CASE("relative histograms")
{
  auto sl = analyse("sl2:5");
  auto const &z = per_normal(sl.report, "Z");
  auto const &h = z.histograms[static_cast<std::size_t>(FieldLabel::C)];
  CHECK(h == std::map<std::uint64_t, std::size_t>{{2, 2}, {4, 1}, {6, 1}});
  CHECK(z.even_count[static_cast<std::size_t>(FieldLabel::C)] == 4);
}
