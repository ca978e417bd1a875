#include "chardeg/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "chardeg/errors.hpp"

namespace chardeg {

namespace {

class Recorder {
public:
  Recorder(std::string group, std::vector<InvariantCheck> &out) : group_(std::move(group)), out_(out) {}

  /// Starts a named check that passes unless fail() is called.
  void begin(std::string name) { out_.push_back({group_, std::move(name), true, {}}); }

  void fail(std::string detail)
  {
    auto &c = out_.back();
    if (c.ok) {
      c.ok = false;
      c.detail = std::move(detail);
    }
  }

  void expect(bool cond, std::string const &detail)
  {
    if (!cond)
      fail(detail);
  }

private:
  std::string group_;
  std::vector<InvariantCheck> &out_;
};

struct RowLess {
  bool operator()(std::vector<Cyclotomic> const &a, std::vector<Cyclotomic> const &b) const
  {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (int c = a[i].compare(b[i]); c != 0)
        return c < 0;
    return false;
  }
};

std::vector<std::int64_t> units_mod(std::uint64_t n)
{
  std::vector<std::int64_t> out;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1)
      out.push_back(static_cast<std::int64_t>(k));
  return out;
}

} // namespace

std::vector<InvariantCheck> check_group_invariants(std::string const &name, PermutationGroup const &group,
                                                   ClassData const &classes)
{
  std::vector<InvariantCheck> out;
  Recorder rec(name, out);
  std::uint64_t const n = group.order();

  rec.begin("identity first");
  rec.expect(group.element(0).is_identity(), "element 0 is not the identity");

  rec.begin("closure");
  for (ElementIndex x = 0; x < n; ++x)
    for (auto const &g : group.generators())
      rec.expect(group.contains(group.element(x) * g), "x*g escapes for x=" + std::to_string(x));
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<ElementIndex> pick(0, n - 1);
  for (int t = 0; t < 2000; ++t) {
    ElementIndex a = pick(rng), b = pick(rng);
    rec.expect(group.contains(group.element(a) * group.element(b)), "sampled product escapes");
  }

  rec.begin("inverses");
  for (ElementIndex x = 0; x < n; ++x) {
    ElementIndex const inv = group.inverse(x);
    rec.expect(group.inverse(inv) == x && group.multiply(x, inv) == 0,
               "inverse fails at " + std::to_string(x));
  }

  rec.begin("class equation");
  std::uint64_t total = 0;
  for (auto const &c : classes.classes) {
    total += c.size;
    rec.expect(n % c.size == 0, "class size does not divide the order");
    rec.expect(c.members.size() == c.size, "class member count mismatch");
  }
  rec.expect(total == n, "class sizes sum to " + std::to_string(total));

  rec.begin("class invariance");
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (auto x : classes.classes[k].members)
      for (auto g : group.generator_indices())
        rec.expect(classes.class_of[group.conjugate(x, g)] == k,
                   "conjugation leaves class " + std::to_string(k));

  rec.begin("derived series normality");
  auto const series = derived_series(group);
  for (std::size_t i = 1; i < series.terms.size(); ++i) {
    auto const &prev = series.terms[i - 1];
    auto const &cur = series.terms[i];
    rec.expect(is_subgroup(group, cur), "term " + std::to_string(i) + " is not a subgroup");
    rec.expect(prev.size() % cur.size() == 0, "term order does not divide its predecessor");
    for (auto g : generating_set(group, prev))
      for (auto x : cur)
        rec.expect(std::binary_search(cur.begin(), cur.end(), group.conjugate(x, g)),
                   "term " + std::to_string(i) + " not normal in its predecessor");
  }
  return out;
}

std::vector<InvariantCheck> check_table_invariants(std::string const &name, PermutationGroup const &group,
                                                   CharacterTable const &table)
{
  std::vector<InvariantCheck> out;
  Recorder rec(name, out);
  std::size_t const r = table.class_count();

  for (auto const &rel : check_orthogonality(table).relations) {
    rec.begin(rel.name);
    if (!rel.ok)
      rec.fail(rel.counterexample ? "at (" + std::to_string(rel.counterexample->first) + ", " +
                                        std::to_string(rel.counterexample->second) + ")"
                                  : "failed");
  }

  rec.begin("galois closure");
  std::map<std::vector<Cyclotomic>, std::size_t, RowLess> index;
  for (std::size_t s = 0; s < table.row_count(); ++s)
    index.emplace(table.rows[s], s);
  for (auto k : units_mod(table.conductor)) {
    for (std::size_t s = 0; s < table.row_count(); ++s) {
      std::vector<Cyclotomic> image;
      image.reserve(r);
      for (auto const &v : table.rows[s])
        image.push_back(v.galois(k));
      auto it = index.find(image);
      if (it == index.end()) {
        rec.fail("row " + std::to_string(s) + " under k=" + std::to_string(k));
        continue;
      }
      // the image is also chi composed with the k-th power map
      for (std::size_t j = 0; j < r; ++j)
        rec.expect(image[j] == table.rows[s][table.powers.power(j, static_cast<std::uint64_t>(k))],
                   "galois image disagrees with power map for row " + std::to_string(s));
    }
  }

  rec.begin("central character identity");
  auto const constants = class_constants(group, table.classes);
  for (std::size_t s = 0; s < table.row_count(); ++s) {
    auto const &chi = table.rows[s];
    Rational const d(static_cast<unsigned long>(table.degrees[s]));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        Cyclotomic lhs = chi[i] * chi[j] *
                         Rational(static_cast<unsigned long>(table.class_size(i) * table.class_size(j)));
        Cyclotomic rhs(Rational(0), table.conductor);
        for (std::size_t k = 0; k < r; ++k)
          if (auto a = constants.at(i, j, k))
            rhs += chi[k] * Rational(static_cast<unsigned long>(a * table.class_size(k)));
        rhs *= d;
        rec.expect(lhs == rhs, "row " + std::to_string(s) + " classes (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ")");
      }
  }

  rec.begin("frobenius-schur indicator");
  auto const labels = field_labels(table);
  for (std::size_t s = 0; s < table.row_count(); ++s) {
    int nu = 0;
    try {
      nu = frobenius_schur_indicator(table, s);
    } catch (InternalError const &e) {
      rec.fail(e.what());
      continue;
    }
    rec.expect((nu != 0) == (labels[s] != FieldLabel::C),
               "row " + std::to_string(s) + " has indicator " + std::to_string(nu) + " and field " +
                   to_string(labels[s]));
  }
  return out;
}

std::vector<InvariantCheck> check_acd_invariants(GroupAnalysis const &a)
{
  std::vector<InvariantCheck> out;
  Recorder rec(a.name, out);
  auto const &t = a.table;
  auto const &report = a.report;
  auto const labels = field_labels(t);

  rec.begin("normal lattice");
  auto const &ns = a.normals;
  rec.expect(!ns.empty() && ns.front().is_trivial(), "trivial subgroup missing");
  rec.expect(!ns.empty() && ns.back().order == t.group_order, "whole group missing");
  std::set<std::vector<std::size_t>> sets;
  for (auto const &n : ns) {
    sets.insert(n.class_indices);
    rec.expect(t.group_order % n.order == 0, "order does not divide |G|");
    rec.expect(!n.class_indices.empty() && n.class_indices.front() == 0, "identity class missing");
  }
  for (auto const &n : ns)
    for (auto const &m : ns)
      rec.expect(sets.count(intersect(t, n, m).class_indices) == 1, "not closed under intersection");

  rec.begin("kernels intersect trivially");
  NormalSubgroup all_kernels = whole_group(t);
  for (std::size_t s = 0; s < t.row_count(); ++s)
    all_kernels = intersect(t, all_kernels, kernel_class_set(t, s));
  rec.expect(all_kernels.is_trivial(), "intersection has order " + std::to_string(all_kernels.order));

  rec.begin("galois invariance of fields");
  for (auto k : units_mod(t.conductor)) {
    for (std::size_t s = 0; s < t.row_count(); ++s) {
      // the image of chi under zeta -> zeta^k is chi composed with the k-th power map
      std::size_t match = t.row_count();
      for (std::size_t u = 0; u < t.row_count() && match == t.row_count(); ++u) {
        bool same = true;
        for (std::size_t j = 0; j < t.class_count() && same; ++j)
          same = t.rows[u][j] == t.rows[s][t.powers.power(j, static_cast<std::uint64_t>(k))];
        if (same)
          match = u;
      }
      rec.expect(match < t.row_count() && labels[match] == labels[s],
                 "row " + std::to_string(s) + " under k=" + std::to_string(k));
    }
  }

  rec.begin("star equals rel(G')");
  NormalSubgroup const derived = derived_subgroup_classes(t);
  Rational const star_c = AcdReport::at(report.acd_star, FieldLabel::C);
  if (derived.is_trivial()) {
    rec.expect(star_c == 0, "abelian group with non-zero acd*");
  } else {
    auto it = std::find_if(report.per_normal.begin(), report.per_normal.end(),
                           [&](NormalAcd const &n) { return n.normal == derived; });
    rec.expect(it != report.per_normal.end(), "G' not among the normal subgroups");
    if (it != report.per_normal.end())
      rec.expect(it->acd_rel == star_c, "acd*(G) " + to_string(star_c) + " vs acd(G|G') " + to_string(it->acd_rel));
  }

  rec.begin("selector nesting");
  for (std::size_t fi = 0; fi + 1 < kFieldLabels.size(); ++fi) {
    auto inner = select_characters(t, labels, Selector::star(kFieldLabels[fi])).rows;
    auto outer = select_characters(t, labels, Selector::star(kFieldLabels[fi + 1])).rows;
    rec.expect(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()), "star sets not nested");
    inner = select_characters(t, labels, Selector::even(kFieldLabels[fi])).rows;
    outer = select_characters(t, labels, Selector::even(kFieldLabels[fi + 1])).rows;
    rec.expect(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()), "even sets not nested");
  }

  rec.begin("degree counting identity");
  for (auto const &n : report.per_normal)
    for (auto f : kFieldLabels) {
      auto const fi = static_cast<std::size_t>(f);
      mpz_class sum = 0, count = 0, even_sum = 0, even_count = 0;
      for (auto const &[d, c] : n.histograms[fi]) {
        sum += static_cast<unsigned long>(d * c);
        count += static_cast<unsigned long>(c);
        if (d % 2 == 0) {
          even_sum += static_cast<unsigned long>(d * c);
          even_count += static_cast<unsigned long>(c);
        }
      }
      Rational avg = count == 0 ? Rational(0) : Rational(sum, count);
      Rational even_avg = even_count == 0 ? Rational(0) : Rational(even_sum, even_count);
      avg.canonicalize();
      even_avg.canonicalize();
      rec.expect(avg == n.acd_valued_rel[fi], "acd_F(G|N) mismatch at N#" + std::to_string(n.index));
      rec.expect(even_avg == n.acd_even[fi] && even_count == static_cast<unsigned long>(n.even_count[fi]),
                 "acd_F,even(G|N) mismatch at N#" + std::to_string(n.index));
    }

  rec.begin("relative monotonicity");
  for (auto const &n : ns)
    for (auto const &m : ns) {
      if (n.is_trivial() || m.is_trivial())
        continue;
      if (!std::includes(m.class_indices.begin(), m.class_indices.end(), n.class_indices.begin(),
                         n.class_indices.end()))
        continue;
      // N <= M: Irr(G|N) is contained in Irr(G|M)
      auto rel_m = select_characters(t, labels, Selector::rel(m)).rows;
      auto rel_n = select_characters(t, labels, Selector::rel(n)).rows;
      rec.expect(std::includes(rel_m.begin(), rel_m.end(), rel_n.begin(), rel_n.end()), "not monotone");
    }
  return out;
}

std::vector<InvariantCheck> check_all_invariants(GroupAnalysis const &a)
{
  auto out = check_group_invariants(a.name, a.group, a.table.classes);
  auto table = check_table_invariants(a.name, a.group, a.table);
  auto acd = check_acd_invariants(a);
  out.insert(out.end(), table.begin(), table.end());
  out.insert(out.end(), acd.begin(), acd.end());
  return out;
}

} // namespace chardeg
