#include "chardeg/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "chardeg/analysis.hpp"
#include "chardeg/errors.hpp"
#include "chardeg/invariants.hpp"
#include "chardeg/render.hpp"
#include "chardeg/spec_parser.hpp"
#include "chardeg/theorems.hpp"

namespace chardeg {

namespace {

struct Options {
  std::optional<std::uint64_t> max_order;
  std::string out_path;

  std::string spec;
  std::string format = "text";

  std::string perturb;

  std::string field = "C";
  std::string normal = "all";

  std::string corpus;
  std::string verify_spec;
  unsigned jobs = 1;
};

GroupLimits limits_for(Options const &o)
{
  GroupLimits limits = default_limits();
  if (o.max_order)
    limits.max_order = *o.max_order;
  return limits;
}

std::string histogram_text(std::map<std::uint64_t, std::size_t> const &hist)
{
  std::string s = "{";
  bool first = true;
  for (auto const &[d, c] : hist) {
    s += (first ? "" : ", ") + std::to_string(d) + ": " + std::to_string(c);
    first = false;
  }
  return s + "}";
}

int cmd_table(Options const &o, std::ostream &out, std::ostream &err)
{
  auto a = analyse_group(parse_group_spec(o.spec), limits_for(o));
  if (!o.perturb.empty()) {
    std::size_t row = 0, cls = 0;
    char comma = 0;
    std::istringstream is(o.perturb);
    if (!(is >> row >> comma >> cls) || comma != ',' || !is.eof())
      throw SpecError("--perturb expects row,class");
    if (row >= a.table.row_count() || cls >= a.table.class_count())
      throw SpecError("--perturb index out of range");
    a.table.rows[row][cls] += Cyclotomic(Rational(1), a.table.conductor);
    auto const report = check_orthogonality(a.table);
    out << report.describe();
    if (!report.all_ok()) {
      err << "perturbed table fails its invariants\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  }
  auto const fmt = parse_report_format(o.format);
  out << (fmt == ReportFormat::json ? render_table_json(a) : render_table_text(a));
  return kExitOk;
}

int cmd_acd(Options const &o, std::ostream &out)
{
  auto const a = analyse_group(parse_group_spec(o.spec), limits_for(o));
  auto const fmt = parse_report_format(o.format);
  if (fmt == ReportFormat::json) {
    out << render_acd_json(a);
    return kExitOk;
  }
  if (fmt == ReportFormat::csv)
    throw SpecError("acd supports text and json output");

  FieldLabel const f = parse_field_label(o.field);
  auto const fi = static_cast<std::size_t>(f);
  std::string const F = to_string(f);
  auto const &r = a.report;

  std::vector<NormalAcd const *> selected;
  if (o.normal == "all") {
    for (auto const &n : r.per_normal)
      selected.push_back(&n);
  } else if (o.normal != "none") {
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(o.normal, &used);
      if (used != o.normal.size())
        throw std::invalid_argument(o.normal);
    } catch (std::exception const &) {
      throw SpecError("--normal expects an index, all or none: " + o.normal);
    }
    if (idx >= a.normals.size())
      throw SpecError("no normal subgroup with index " + o.normal);
    auto it = std::find_if(r.per_normal.begin(), r.per_normal.end(),
                           [&](NormalAcd const &n) { return n.index == idx; });
    if (it == r.per_normal.end())
      throw PreconditionError("relative invariants need a non-trivial normal subgroup");
    selected.push_back(&*it);
  }

  out << "group " << r.group << "  order " << r.order << "  " << (r.solvable ? "solvable" : "non-solvable")
      << "\n";
  out << "acd = " << to_string(r.acd) << "\n";
  out << "acd_" << F << " = " << to_string(r.acd_valued[fi]) << "\n";
  out << "acd*_" << F << " = " << to_string(r.acd_star[fi]) << "\n";
  out << "acd_" << F << ",even = " << to_string(r.acd_even[fi]) << "  (count " << r.even_count[fi] << ")\n";
  for (auto const *n : selected) {
    std::string const head = "N=" + n->label + " (order " + std::to_string(n->normal.order) + ")";
    out << head << ": acd_even = " << to_string(n->acd_even[fi]) << "\n";
    out << "  index " << n->index << ", " << n->even_count[fi] << " even characters, acd(G|N) = "
        << to_string(n->acd_rel) << ", acd_" << F << "(G|N) = " << to_string(n->acd_valued_rel[fi])
        << ", degrees " << histogram_text(n->histograms[fi]) << ", N " << (n->solvable ? "solvable" : "non-solvable")
        << "\n";
  }
  return kExitOk;
}

int cmd_normals(Options const &o, std::ostream &out)
{
  auto const a = analyse_group(parse_group_spec(o.spec), limits_for(o));
  auto const fmt = parse_report_format(o.format);
  out << (fmt == ReportFormat::json ? render_normals_json(a) : render_normals_text(a));
  return kExitOk;
}

struct VerifyOutcome {
  std::vector<TheoremCheckResult> results;
  std::string error; // non-empty when the group could not be analysed
  bool solvable_mismatch = false;
};

std::vector<VerifyOutcome> run_parallel(std::vector<CorpusEntry> const &entries, GroupLimits limits, unsigned jobs)
{
  std::vector<VerifyOutcome> outcomes(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      auto &o = outcomes[i];
      try {
        auto const a = analyse_group(entries[i].spec, limits);
        o.results = check_theorems(a.report);
        o.solvable_mismatch = a.report.solvable != entries[i].expected_solvable;
      } catch (std::exception const &e) {
        o.error = e.what();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  return outcomes;
}

int cmd_verify(Options const &o, std::ostream &out, std::ostream &err)
{
  auto const fmt = parse_report_format(o.format);
  if (!o.corpus.empty() && !o.verify_spec.empty())
    throw SpecError("--corpus and --spec are exclusive");
  if (!o.corpus.empty() && o.corpus != "builtin")
    throw SpecError("unknown corpus: " + o.corpus);

  std::vector<CorpusEntry> entries;
  bool check_expected = true;
  if (!o.verify_spec.empty()) {
    auto spec = parse_group_spec(o.verify_spec);
    entries.push_back({render_group_spec(spec), std::move(spec), false});
    check_expected = false;
  } else {
    entries = builtin_corpus();
  }

  // spec and cap errors on a single requested group are usage errors
  auto const outcomes = run_parallel(entries, limits_for(o), o.jobs);
  std::vector<TheoremCheckResult> all;
  int code = kExitOk;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto const &oc = outcomes[i];
    if (!oc.error.empty()) {
      err << entries[i].name << ": " << oc.error << "\n";
      code = std::max(code, kExitCheckFailed);
      if (!check_expected)
        code = kExitUsage;
      continue;
    }
    if (check_expected && oc.solvable_mismatch) {
      err << entries[i].name << ": solvability differs from the expected value\n";
      code = std::max(code, kExitCheckFailed);
    }
    all.insert(all.end(), oc.results.begin(), oc.results.end());
  }
  if (!all_implications_hold(all))
    code = std::max(code, kExitCheckFailed);
  out << render_report(all, fmt);
  return code;
}

int cmd_selftest(Options const &o, std::ostream &out)
{
  std::size_t checks = 0, failures = 0;
  for (auto const &entry : builtin_corpus()) {
    auto const a = analyse_group(entry.spec, limits_for(o));
    for (auto const &c : check_all_invariants(a)) {
      ++checks;
      if (!c.ok) {
        ++failures;
        out << "FAIL " << c.group << " " << c.name << ": " << c.detail << "\n";
      }
    }
    bool const implications = all_implications_hold(check_theorems(a.report));
    bool const solvable = a.report.solvable == entry.expected_solvable;
    checks += 2;
    failures += !implications + !solvable;
    out << (implications && solvable ? "ok   " : "FAIL ") << entry.name << "\n";
  }
  out << checks << " checks, " << failures << " failed\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

} // namespace

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Exact character tables and average character degree checks", "chardeg"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--max-order", o.max_order, "Largest group order to construct");
  app.add_option("--out", o.out_path, "Write the primary output to this file");

  auto *table = app.add_subcommand("table", "Print the character table of a group");
  table->add_option("spec", o.spec, "Group specification")->required();
  table->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  table->add_option("--perturb", o.perturb, "Add 1 to the value at row,class and re-check")->group("");

  auto *acd = app.add_subcommand("acd", "Print average character degree invariants");
  acd->add_option("spec", o.spec, "Group specification")->required();
  acd->add_option("--field", o.field, "Q, R or C")->check(CLI::IsMember({"Q", "R", "C"}));
  acd->add_option("--normal", o.normal, "Normal subgroup index, all or none");
  acd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto *normals = app.add_subcommand("normals", "List the normal subgroups of a group");
  normals->add_option("spec", o.spec, "Group specification")->required();
  normals->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto *verify = app.add_subcommand("verify", "Check the solvability criteria over a corpus");
  verify->add_option("--corpus", o.corpus, "Corpus name (builtin)");
  verify->add_option("--spec", o.verify_spec, "Check a single group instead");
  verify->add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto *selftest = app.add_subcommand("selftest", "Run the invariant checks over the builtin corpus");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return kExitOk;
  } catch (CLI::ParseError const &e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  std::ostream &sink = o.out_path.empty() ? out : buffer;
  int code = kExitOk;
  try {
    if (*table)
      code = cmd_table(o, sink, err);
    else if (*acd)
      code = cmd_acd(o, sink);
    else if (*normals)
      code = cmd_normals(o, sink);
    else if (*verify)
      code = cmd_verify(o, sink, err);
    else if (*selftest)
      code = cmd_selftest(o, sink);
  } catch (SpecError const &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (CapExceeded const &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (PreconditionError const &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::exception const &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out_path << "\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

} // namespace chardeg
