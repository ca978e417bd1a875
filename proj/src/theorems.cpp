#include "chardeg/theorems.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "chardeg/errors.hpp"

namespace chardeg {

namespace {

struct Statement {
  char const *id;
  FieldLabel field;
  Rational bound;
  char const *witness;
  char const *witness_normal; // label of N on the witness, for relative statements
};

Rational frac(long num, long den)
{
  return make_rational(num, den);
}

TheoremCheckResult make_result(Statement const &st, AcdReport const &report, Rational const &value,
                               bool hypothesis, bool conclusion, NormalAcd const *n)
{
  TheoremCheckResult r;
  r.theorem = st.id;
  r.group = report.group;
  r.value = value;
  r.bound = st.bound;
  r.hypothesis = hypothesis;
  r.conclusion = conclusion;
  r.implication_ok = !hypothesis || conclusion;
  bool witness = report.group == st.witness;
  if (n) {
    r.normal = NormalRef{n->index, n->label, n->normal.order, n->normal.class_indices};
    witness = witness && n->label == st.witness_normal;
  }
  r.sharp = witness && value == st.bound;
  return r;
}

bool open_interval(Rational const &value, Rational const &bound)
{
  return value > 0 && value < bound;
}

} // namespace

std::vector<TheoremCheckResult> check_theorems(AcdReport const &report)
{
  std::vector<TheoremCheckResult> out;

  Statement const a[] = {
    {"A1", FieldLabel::C, frac(29, 8), "sl2:5", ""},
    {"A2", FieldLabel::R, frac(29, 8), "sl2:5", ""},
    {"A3", FieldLabel::Q, frac(9, 2), "alt:5", ""},
  };
  for (auto const &st : a) {
    auto const &v = AcdReport::at(report.acd_star, st.field);
    out.push_back(make_result(st, report, v, v < st.bound, report.solvable, nullptr));
  }

  Statement const b[] = {
    {"B1", FieldLabel::C, frac(18, 5), "sl2:5", "G"},
    {"B2", FieldLabel::R, frac(18, 5), "sl2:5", "G"},
    {"B3", FieldLabel::Q, frac(4, 1), "alt:5", "G"},
  };
  for (auto const &st : b)
    for (auto const &n : report.per_normal) {
      auto const &v = AcdReport::at(n.acd_even, st.field);
      out.push_back(make_result(st, report, v, open_interval(v, st.bound), n.solvable, &n));
    }

  Statement const c[] = {
    {"C1", FieldLabel::C, frac(18, 5), "sl2:5", ""},
    {"C2", FieldLabel::R, frac(18, 5), "sl2:5", ""},
    {"C3", FieldLabel::Q, frac(4, 1), "alt:5", ""},
  };
  for (auto const &st : c) {
    auto const &v = AcdReport::at(report.acd_even, st.field);
    // the Q statement needs a non-empty set; the C and R ones do not
    bool const hyp = st.field == FieldLabel::Q ? open_interval(v, st.bound) : v < st.bound;
    out.push_back(make_result(st, report, v, hyp, report.solvable, nullptr));
  }

  Statement const d[] = {
    {"D1", FieldLabel::C, frac(7, 2), "sl2:5", "Z"},
    {"D2", FieldLabel::R, frac(7, 2), "sl2:5", "Z"},
    {"D3", FieldLabel::Q, frac(4, 1), "alt:5", "G"},
  };
  for (auto const &st : d)
    for (auto const &n : report.per_normal) {
      auto const &v = AcdReport::at(n.acd_even, st.field);
      out.push_back(make_result(st, report, v, open_interval(v, st.bound), report.solvable, &n));
    }
  return out;
}

bool all_implications_hold(std::vector<TheoremCheckResult> const &results)
{
  return std::all_of(results.begin(), results.end(), [](auto const &r) { return r.implication_ok; });
}

ReportFormat parse_report_format(std::string const &text)
{
  if (text == "text")
    return ReportFormat::text;
  if (text == "csv")
    return ReportFormat::csv;
  if (text == "json")
    return ReportFormat::json;
  throw SpecError("format must be one of text, csv, json: " + text);
}

namespace {

std::string group_cell(TheoremCheckResult const &r)
{
  if (!r.normal)
    return r.group;
  return r.group + " (N=" + r.normal->label + " order " + std::to_string(r.normal->order) + ")";
}

std::string csv_field(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

char const *yes_no(bool b)
{
  return b ? "true" : "false";
}

std::string render_text(std::vector<TheoremCheckResult> const &results)
{
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"group", "theorem", "value", "bound", "hypothesis", "conclusion", "ok", "sharp"});
  for (auto const &r : results)
    cells.push_back({group_cell(r), r.theorem, to_string(r.value), to_string(r.bound), yes_no(r.hypothesis),
                     yes_no(r.conclusion), r.implication_ok ? "ok" : "FAIL", r.sharp ? "sharp" : "-"});

  std::vector<std::size_t> width(cells[0].size(), 0);
  for (auto const &row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  std::ostringstream os;
  for (auto const &row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size())
        line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

std::string render_csv(std::vector<TheoremCheckResult> const &results)
{
  std::ostringstream os;
  os << "group,theorem,value,bound,hypothesis,conclusion,ok,sharp\n";
  for (auto const &r : results)
    os << csv_field(group_cell(r)) << ',' << r.theorem << ',' << to_string(r.value) << ','
       << to_string(r.bound) << ',' << yes_no(r.hypothesis) << ',' << yes_no(r.conclusion) << ','
       << yes_no(r.implication_ok) << ',' << yes_no(r.sharp) << '\n';
  return os.str();
}

std::string render_json(std::vector<TheoremCheckResult> const &results)
{
  auto out = nlohmann::ordered_json::array();
  for (auto const &r : results) {
    nlohmann::ordered_json item;
    item["group"] = r.group;
    item["theorem"] = r.theorem;
    if (r.normal) {
      item["normal"] = {{"index", r.normal->index},
                        {"label", r.normal->label},
                        {"order", r.normal->order},
                        {"class_indices", r.normal->class_indices}};
    } else {
      item["normal"] = nullptr;
    }
    item["value"] = to_string(r.value);
    item["bound"] = to_string(r.bound);
    item["hypothesis"] = r.hypothesis;
    item["conclusion"] = r.conclusion;
    item["ok"] = r.implication_ok;
    item["sharp"] = r.sharp;
    out.push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

} // namespace

std::string render_report(std::vector<TheoremCheckResult> const &results, ReportFormat format)
{
  switch (format) {
  case ReportFormat::text:
    return render_text(results);
  case ReportFormat::csv:
    return render_csv(results);
  case ReportFormat::json:
    return render_json(results);
  }
  return {};
}

} // namespace chardeg
