#include "chardeg/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace chardeg {

using Json = nlohmann::ordered_json;

namespace {

Json per_field(PerField const &values)
{
  Json out = Json::object();
  for (auto f : kFieldLabels)
    out[to_string(f)] = to_string(AcdReport::at(values, f));
  return out;
}

Json per_field_counts(std::array<std::size_t, 3> const &counts)
{
  Json out = Json::object();
  for (auto f : kFieldLabels)
    out[to_string(f)] = counts[static_cast<std::size_t>(f)];
  return out;
}

std::string pad(std::string s, std::size_t width)
{
  if (s.size() < width)
    s.insert(0, width - s.size(), ' ');
  return s;
}

} // namespace

std::string render_table_text(GroupAnalysis const &a)
{
  auto const &t = a.table;
  auto const labels = field_labels(t);
  std::vector<std::vector<std::string>> grid;

  std::vector<std::string> rep{"class"}, size{"size"}, order{"order"};
  for (auto const &c : t.classes.classes) {
    rep.push_back(a.group.element(c.representative).to_cycle_string());
    size.push_back(std::to_string(c.size));
    order.push_back(std::to_string(c.element_order));
  }
  rep.insert(rep.begin() + 1, {"", ""});
  size.insert(size.begin() + 1, {"", ""});
  order.insert(order.begin() + 1, {"deg", "F"});
  grid.push_back(rep);
  grid.push_back(size);
  grid.push_back(order);

  for (std::size_t s = 0; s < t.row_count(); ++s) {
    std::vector<std::string> line{"X." + std::to_string(s + 1), std::to_string(t.degrees[s]),
                                  to_string(labels[s])};
    for (auto const &v : t.rows[s])
      line.push_back(v.to_string());
    grid.push_back(std::move(line));
  }

  std::vector<std::size_t> width(grid[0].size(), 0);
  for (auto const &row : grid)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  std::ostringstream os;
  os << a.name << "  order " << t.group_order << "  classes " << t.class_count() << "  conductor "
     << t.conductor << "\n";
  for (auto const &row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c)
      line += (c ? "  " : "") + pad(row[c], width[c]);
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string render_table_json(GroupAnalysis const &a)
{
  auto const &t = a.table;
  auto const labels = field_labels(t);
  Json out;
  out["group"] = a.name;
  out["order"] = t.group_order;
  out["conductor"] = t.conductor;
  Json classes = Json::array();
  for (auto const &c : t.classes.classes)
    classes.push_back({{"representative", a.group.element(c.representative).to_cycle_string()},
                       {"size", c.size},
                       {"order", c.element_order}});
  out["classes"] = std::move(classes);
  Json chars = Json::array();
  for (std::size_t s = 0; s < t.row_count(); ++s) {
    Json values = Json::array();
    for (auto const &v : t.rows[s])
      values.push_back(v.to_string());
    chars.push_back({{"degree", t.degrees[s]}, {"values", std::move(values)}, {"field", to_string(labels[s])}});
  }
  out["characters"] = std::move(chars);
  return out.dump(2) + "\n";
}

std::string render_acd_json(GroupAnalysis const &a)
{
  auto const &r = a.report;
  Json out;
  out["group"] = r.group;
  out["order"] = r.order;
  out["solvable"] = r.solvable;
  out["acd"] = to_string(r.acd);
  out["acd_valued"] = per_field(r.acd_valued);
  out["acd_star"] = per_field(r.acd_star);
  out["acd_even"] = per_field(r.acd_even);
  out["even_count"] = per_field_counts(r.even_count);
  Json normals = Json::array();
  for (auto const &n : r.per_normal) {
    Json item;
    item["index"] = n.index;
    item["label"] = n.label;
    item["order"] = n.normal.order;
    item["classes"] = n.normal.class_indices;
    item["solvable"] = n.solvable;
    item["acd_rel"] = to_string(n.acd_rel);
    item["acd_valued_rel"] = per_field(n.acd_valued_rel);
    item["acd_even"] = per_field(n.acd_even);
    item["even_count"] = per_field_counts(n.even_count);
    Json hist = Json::object();
    for (auto f : kFieldLabels) {
      Json h = Json::object();
      for (auto const &[d, count] : n.histograms[static_cast<std::size_t>(f)])
        h[std::to_string(d)] = count;
      hist[to_string(f)] = std::move(h);
    }
    item["histograms"] = std::move(hist);
    normals.push_back(std::move(item));
  }
  out["per_normal"] = std::move(normals);
  return out.dump(2) + "\n";
}

std::string render_normals_json(GroupAnalysis const &a)
{
  Json out = Json::array();
  for (std::size_t i = 0; i < a.normals.size(); ++i) {
    auto const &n = a.normals[i];
    out.push_back({{"index", i},
                   {"label", normal_label(a.table, n, i)},
                   {"order", n.order},
                   {"class_indices", n.class_indices},
                   {"solvable", is_solvable_normal(a.group, a.table.classes, n)}});
  }
  return out.dump(2) + "\n";
}

std::string render_normals_text(GroupAnalysis const &a)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < a.normals.size(); ++i) {
    auto const &n = a.normals[i];
    os << "#" << i << "  " << normal_label(a.table, n, i) << "  order " << n.order << "  classes {";
    for (std::size_t k = 0; k < n.class_indices.size(); ++k)
      os << (k ? ", " : "") << n.class_indices[k];
    os << "}  " << (is_solvable_normal(a.group, a.table.classes, n) ? "solvable" : "non-solvable") << '\n';
  }
  return os.str();
}

} // namespace chardeg
