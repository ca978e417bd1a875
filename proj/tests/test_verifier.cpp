#include <doctest.h>

#include <set>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chardeg/cli.hpp"
#include "chardeg/errors.hpp"
#include "chardeg/invariants.hpp"
#include "chardeg/render.hpp"
#include "chardeg/theorems.hpp"
#include "helpers.hpp"

using namespace chardeg;
using testing::analyse;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TheoremCheckResult const *find(std::vector<TheoremCheckResult> const &rs, std::string const &id,
                               std::string const &normal_label = "")
{
  for (auto const &r : rs)
    if (r.theorem == id && (normal_label.empty() || (r.normal && r.normal->label == normal_label)))
      return &r;
  return nullptr;
}

} // namespace

TEST_CASE("spec parser")
{
  CHECK(parse_group_spec("alt:5") == GroupSpec::named(Family::alternating, 5));
  CHECK(parse_group_spec("  sl2:9 ") == GroupSpec::named(Family::sl2, 9));
  auto prod = parse_group_spec("product:cyclic:2,alt:5");
  CHECK(prod == GroupSpec::product(GroupSpec::named(Family::cyclic, 2), GroupSpec::named(Family::alternating, 5)));
  auto perm = parse_group_spec("perm:(1 2 3 4 5) (1 2 3)");
  auto const &gens = std::get<GroupSpec::Explicit>(perm.node).generators;
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
  CHECK(construct_named_group(perm).order() == 60);

  auto two_cycles = parse_group_spec("perm:(1 2 3)(4 5)");
  CHECK(std::get<GroupSpec::Explicit>(two_cycles.node).generators.size() == 1);
  CHECK(construct_named_group(two_cycles).order() == 6);
  CHECK(parse_group_spec("perm:(1,2,3)") == parse_group_spec("perm:(1 2 3)"));
  CHECK(parse_group_spec("product:perm:(1 2) (3 4),cyclic:3") ==
        GroupSpec::product(parse_group_spec("perm:(1 2) (3 4)"), GroupSpec::named(Family::cyclic, 3)));
  CHECK(parse_group_spec("product:product:cyclic:2,cyclic:2,cyclic:2") ==
        GroupSpec::product(parse_group_spec("product:cyclic:2,cyclic:2"), GroupSpec::named(Family::cyclic, 2)));
}

TEST_CASE("spec parser errors carry position and expectation")
{
  auto position = [](std::string const &text) -> std::pair<std::size_t, std::string> {
    try {
      parse_group_spec(text);
    } catch (ParseError const &e) {
      return {e.position(), e.expected()};
    }
    return {9999, ""};
  };
  CHECK(position("alt").first == 3);
  CHECK(position("alt:").first == 4);
  CHECK(position("alt:x").second == "integer");
  CHECK(position("foo:3").first == 0);
  CHECK(position("alt:5 extra").first == 6);
  CHECK(position("perm:(1 2").first == 9);
  CHECK(position("perm:1 2").first == 5);
  CHECK(position("product:alt:5").first == 13);
  CHECK(position("perm:(0 1)").second == "1-based point");
  CHECK(position("").first == 0);
  CHECK_THROWS_AS(parse_group_spec("alt:99999999999"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("alt:5,"), SpecError);
}

TEST_CASE("spec round trip")
{
  for (auto const &entry : builtin_corpus()) {
    CAPTURE(entry.name);
    CHECK(render_group_spec(entry.spec) == entry.name);
    CHECK(parse_group_spec(entry.name) == entry.spec);
  }
  for (std::string text : {"perm:(1 2 3)(4 5) (1 4)", "product:perm:(1 2),psl2:7", "perm:()", "quaternion:16"})
    CHECK(parse_group_spec(render_group_spec(parse_group_spec(text))) == parse_group_spec(text));
}

TEST_CASE("builtin corpus")
{
  auto const &c = builtin_corpus();
  auto flag = [&](std::string const &name) -> std::optional<bool> {
    for (auto const &e : c)
      if (e.name == name)
        return e.expected_solvable;
    return std::nullopt;
  };
  CHECK(c.size() == 25);
  CHECK(flag("sl2:5") == false);
  CHECK(flag("sl2:9") == false);
  CHECK(flag("sym:4") == true);
  CHECK(flag("sl2:3") == true);
  CHECK(flag("product:cyclic:2,alt:5") == false);
  CHECK(flag("product:alt:5,cyclic:3") == false);
  for (auto const &e : c)
    CHECK(construct_named_group(e.spec).order() <= 2520);
}

TEST_CASE("theorem checks")
{
  auto sl = check_theorems(analyse("sl2:5").report);
  auto const *a1 = find(sl, "A1");
  REQUIRE(a1);
  CHECK(a1->value == make_rational(29, 8));
  CHECK_FALSE(a1->hypothesis);
  CHECK(a1->implication_ok);
  CHECK(a1->sharp);
  auto const *d1 = find(sl, "D1", "Z");
  REQUIRE(d1);
  CHECK(d1->value == make_rational(7, 2));
  CHECK(d1->sharp);
  CHECK_FALSE(find(sl, "D1", "G")->sharp);

  auto a5 = check_theorems(analyse("alt:5").report);
  auto const *b3 = find(a5, "B3", "G");
  REQUIRE(b3);
  CHECK(b3->value == 4);
  CHECK_FALSE(b3->hypothesis);
  CHECK(b3->implication_ok);
  CHECK(b3->sharp);

  auto s4 = check_theorems(analyse("sym:4").report);
  auto const *a3 = find(s4, "A3");
  REQUIRE(a3);
  CHECK(a3->value == make_rational(8, 3));
  CHECK(a3->hypothesis);
  CHECK(a3->conclusion);
  CHECK(a3->implication_ok);
  CHECK_FALSE(a3->sharp);

  // Q8: acd_{C,even}(G|Z) = 2 below 7/2 with G solvable
  auto q8 = check_theorems(analyse("quaternion:8").report);
  auto const *qd1 = find(q8, "D1");
  REQUIRE(qd1);
  CHECK(qd1->hypothesis);
  CHECK(qd1->implication_ok);

  for (auto const &r : sl)
    CHECK(r.implication_ok == (!r.hypothesis || r.conclusion));
}

TEST_CASE("theorem checks flag a contradiction")
{
  AcdReport fake;
  fake.group = "fake";
  fake.solvable = false;
  fake.acd_star = {Rational(3), Rational(3), Rational(3)};
  fake.acd_even = {Rational(0), Rational(2), Rational(2)}; // Q, R, C
  auto rs = check_theorems(fake);
  CHECK_FALSE(find(rs, "A1")->implication_ok);
  CHECK_FALSE(find(rs, "A3")->implication_ok);
  CHECK_FALSE(find(rs, "C1")->implication_ok);
  // the zero guard keeps C3 from firing
  CHECK(find(rs, "C3")->implication_ok);
  CHECK_FALSE(all_implications_hold(rs));
}

TEST_CASE("theorem result ordering")
{
  auto rs = check_theorems(analyse("sym:4").report);
  std::vector<std::string> ids;
  for (auto const &r : rs)
    if (ids.empty() || ids.back() != r.theorem)
      ids.push_back(r.theorem);
  CHECK(ids == std::vector<std::string>{"A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "C3", "D1", "D2", "D3"});
  for (std::size_t i = 1; i < rs.size(); ++i)
    if (rs[i].theorem == rs[i - 1].theorem && rs[i].normal)
      CHECK(rs[i - 1].normal->index < rs[i].normal->index);
}

TEST_CASE("sharpness set over the corpus")
{
  std::set<std::string> sharp;
  for (auto const &entry : builtin_corpus()) {
    auto rs = check_theorems(analyse_group(entry.spec).report);
    for (auto const &r : rs) {
      CHECK(r.implication_ok);
      if (r.sharp)
        sharp.insert(r.group + " " + r.theorem + (r.normal ? " " + r.normal->label : ""));
    }
  }
  CHECK(sharp == std::set<std::string>{"sl2:5 A1", "sl2:5 A2", "alt:5 A3", "sl2:5 B1 G", "sl2:5 B2 G",
                                       "alt:5 B3 G", "sl2:5 C1", "sl2:5 C2", "alt:5 C3", "sl2:5 D1 Z",
                                       "sl2:5 D2 Z", "alt:5 D3 G"});
}

TEST_CASE("report rendering")
{
  std::vector<TheoremCheckResult> none;
  CHECK(render_report(none, ReportFormat::csv) == "group,theorem,value,bound,hypothesis,conclusion,ok,sharp\n");
  CHECK(render_report(none, ReportFormat::json) == "[]\n");
  auto text = render_report(none, ReportFormat::text);
  CHECK(text.find("group") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1);

  auto rs = check_theorems(analyse("sl2:5").report);
  auto csv = render_report(rs, ReportFormat::csv);
  CHECK(csv.find("sl2:5,A1,29/8,29/8,false,false,true,true\n") != std::string::npos);
  CHECK(csv.find("sl2:5 (N=Z order 2),D1,7/2,7/2,false,false,true,true\n") != std::string::npos);
  CHECK(csv.find('.') == std::string::npos);

  auto json = nlohmann::json::parse(render_report(rs, ReportFormat::json));
  REQUIRE(json.is_array());
  CHECK(json.size() == rs.size());
  CHECK(json[0]["theorem"] == "A1");
  CHECK(json[0]["value"] == "29/8");
  CHECK(json[0]["sharp"] == true);
  CHECK(json[0]["normal"].is_null());

  auto prod = check_theorems(analyse("product:cyclic:2,alt:5").report);
  auto pcsv = render_report(prod, ReportFormat::csv);
  CHECK(pcsv.find("\"product:cyclic:2,alt:5\",A1,") != std::string::npos);
  CHECK_THROWS_AS(parse_report_format("xml"), SpecError);
}

TEST_CASE("other renderers")
{
  auto a5 = analyse("alt:5");
  auto table = nlohmann::json::parse(render_table_json(a5));
  CHECK(table["characters"].size() == 5);
  std::vector<std::string> fields;
  for (auto const &c : table["characters"])
    fields.push_back(c["field"]);
  CHECK(fields == std::vector<std::string>{"Q", "R", "R", "Q", "Q"});
  CHECK(table["classes"][1]["size"] == 15);

  auto acd = nlohmann::json::parse(render_acd_json(analyse("sl2:5")));
  CHECK(acd["acd_star"]["C"] == "29/8");
  CHECK(acd["per_normal"][0]["acd_even"]["C"] == "7/2");

  auto normals = nlohmann::json::parse(render_normals_json(analyse("sym:4")));
  CHECK(normals.size() == 4);
  CHECK(normals[1]["order"] == 4);
  CHECK(normals[3]["solvable"] == true);
}

TEST_CASE("invariant suite")
{
  for (std::string spec : {"sym:4", "sl2:5", "quaternion:8", "psl2:7"}) {
    CAPTURE(spec);
    for (auto const &c : check_all_invariants(analyse(spec))) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.ok);
    }
  }

  auto a5 = analyse("alt:5");
  std::swap(a5.table.rows[1][3], a5.table.rows[1][4]);
  std::swap(a5.table.rows[2][3], a5.table.rows[2][4]);
  std::swap(a5.table.rows[1][1], a5.table.rows[1][2]);
  bool any_failed = false;
  for (auto const &c : check_table_invariants(a5.name, a5.group, a5.table))
    any_failed = any_failed || !c.ok;
  CHECK(any_failed);
}

TEST_CASE("cli: verify and exit codes")
{
  auto v = cli({"verify", "--corpus", "builtin"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("FAIL") == std::string::npos);

  auto single = cli({"verify", "--spec", "sl2:5", "--format", "csv"});
  CHECK(single.code == kExitOk);
  CHECK(single.out.find("sl2:5,A1,29/8") != std::string::npos);

  auto j1 = cli({"verify", "--format", "json", "--jobs", "4"});
  auto j2 = cli({"verify", "--format", "json"});
  CHECK(j1.code == 0);
  CHECK(j1.out == j2.out);

  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"table"}).code == kExitUsage);
  CHECK(cli({"table", "alt:"}).code == kExitUsage);
  CHECK(cli({"table", "sl2:6"}).code == kExitUsage);
  CHECK(cli({"verify", "--format", "xml"}).code == kExitUsage);
  CHECK(cli({"verify", "--corpus", "other"}).code == kExitUsage);
  CHECK(cli({"acd", "alt:5", "--field", "Z"}).code == kExitUsage);
  CHECK(cli({"acd", "alt:5", "--normal", "0"}).code == kExitUsage);
  CHECK(cli({"acd", "alt:5", "--normal", "7"}).code == kExitUsage);
  auto cap = cli({"--max-order", "50", "table", "alt:5"});
  CHECK(cap.code == kExitUsage);
  CHECK_FALSE(cap.err.empty());
  CHECK(cli({"--max-order", "60", "table", "alt:5"}).code == kExitOk);
  CHECK(cli({"verify", "--spec", "sym:9"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("cli: table, acd, normals")
{
  auto t = cli({"table", "alt:5"});
  CHECK(t.code == 0);
  std::istringstream lines(t.out);
  std::string line;
  std::vector<std::string> labels;
  std::vector<std::string> degrees;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::string name, deg, field;
    words >> name >> deg >> field;
    if (name.rfind("X.", 0) == 0) {
      degrees.push_back(deg);
      labels.push_back(field);
    }
  }
  CHECK(degrees == std::vector<std::string>{"1", "3", "3", "4", "5"});
  CHECK(labels == std::vector<std::string>{"Q", "R", "R", "Q", "Q"});

  auto a = cli({"acd", "sl2:5", "--field", "C", "--normal", "all"});
  CHECK(a.code == 0);
  CHECK(a.out.find("\nN=Z (order 2): acd_even = 7/2\n") != std::string::npos);
  auto one = cli({"acd", "sl2:5", "--normal", "2"});
  CHECK(one.out.find("N=G (order 120): acd_even = 18/5") != std::string::npos);
  CHECK(one.out.find("N=Z") == std::string::npos);
  auto aj = cli({"acd", "alt:5", "--format", "json"});
  CHECK(nlohmann::json::parse(aj.out)["acd"] == "16/5");

  auto n = cli({"normals", "sl2:5", "--format", "json"});
  CHECK(n.code == 0);
  CHECK(nlohmann::json::parse(n.out).size() == 3);
}

TEST_CASE("cli: fault injection")
{
  auto p = cli({"table", "alt:5", "--perturb", "1,2"});
  CHECK(p.code == kExitCheckFailed);
  CHECK(p.out.find("first_orthogonality") != std::string::npos);
  CHECK(cli({"table", "alt:5", "--perturb", "9,9"}).code == kExitUsage);
  CHECK(cli({"table", "alt:5", "--perturb", "x"}).code == kExitUsage);
}

TEST_CASE("cli: --out writes the report to a file")
{
  auto path = std::filesystem::temp_directory_path() / "chardeg_cli_out_test.csv";
  std::filesystem::remove(path);
  auto r = cli({"--out", path.string(), "verify", "--spec", "alt:5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str().rfind("group,theorem,", 0) == 0);
  std::filesystem::remove(path);
}
