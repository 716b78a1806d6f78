// Stand-alone acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "zwdiag/annotate.hpp"
#include "zwdiag/io.hpp"
#include "zwdiag/oracle.hpp"
#include "zwdiag/pipeline.hpp"
#include "zwdiag/rules.hpp"

#include "support.hpp"

namespace {

using namespace zwdiag;
using zwdiag::testing::M;
using zwdiag::testing::P;
using Counts = std::vector<std::size_t>;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string join(Counts const &v)
{
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

struct Outcome
{
  bool ok;
  std::string detail;
};

Outcome stage2_counts()
{
  auto const start = Clock::now();
  auto const filtered = filter_z(generate_z_candidates(5));
  double const t = seconds_since(start);
  Counts sizes;
  for (auto const &cls : filtered)
    sizes.push_back(cls.size());
  return {sizes == Counts{3, 5, 4, 4, 2} && t < 5.0, "S=(" + join(sizes) + ") in " + std::to_string(t) + "s"};
}

Outcome t_counts()
{
  StageArtifacts artifacts;
  auto const set = run_pipeline(5, {}, &artifacts);
  bool orbits = true;
  for (std::size_t k = 0; k < artifacts.filtered.size(); ++k) {
    std::size_t total = 0;
    for (auto const &m : artifacts.filtered[k])
      total += oracle::orbit_expand(m).size();
    orbits = orbits && total == set.stats.t_sets[k];
  }
  return {set.stats.t_sets == Counts{16, 90, 70, 55, 11} && orbits,
          "T=(" + join(set.stats.t_sets) + "), orbit sums " + (orbits ? "agree" : "disagree")};
}

Outcome u_counts()
{
  auto const set = run_pipeline(5);
  bool const identity = oracle::verify_stage_identities(set.stats);
  return {set.stats.u_sets == Counts{726, 1130, 544, 264, 22} && identity,
          "U=(" + join(set.stats.u_sets) + "), cross-product identity " + (identity ? "holds" : "broken")};
}

Outcome final_count()
{
  auto const start = Clock::now();
  auto const set = run_pipeline(5);
  double const t = seconds_since(start);
  return {set.diagrams.size() == 31 && t < 60.0,
          std::to_string(set.diagrams.size()) + " diagrams in " + std::to_string(t) + "s"};
}

Outcome stage1_counts()
{
  Counts sizes;
  for (auto const &cls : generate_z_candidates(5))
    sizes.push_back(cls.size());
  return {sizes == Counts{84, 240, 240, 182, 84}, "S1=(" + join(sizes) + ")"};
}

Outcome oracle_equivalence()
{
  auto const start = Clock::now();
  bool ok = true;
  std::string detail;
  for (int n : {3, 4}) {
    auto const brute = oracle::brute_force_pipeline(n);
    auto const staged = run_pipeline(n);
    ok = ok && brute.keys == staged.keys;
    detail += "n=" + std::to_string(n) + ": " + std::to_string(brute.keys.size()) + "/" +
              std::to_string(staged.keys.size()) + "; ";
  }
  double const t = seconds_since(start);
  return {ok && t < 600.0, detail + std::to_string(t) + "s"};
}

Outcome rule_examples()
{
  struct Case
  {
    std::function<bool()> verdict;
    bool expected;
  };
  auto const single = [](RuleId id, char const *m) { return [=] { return holds(M(m), id); }; };
  auto const pair = [](RuleId id, char const *z, char const *w) { return [=] { return holds(P(z, w), id); }; };
  char const *k3 = "M(n=5; d=11100; s=12,13,23)";
  char const *k3w = "M(n=5; d=11101; s=12,13,23)";
  char const *k4w = "M(n=5; d=00000; s=12,13,14,23,24,34)";
  char const *uk3 = "M(n=4; d=0000; s=12,13,23)";
  std::vector<Case> const cases{
    {single(RuleId::column_sums, "M(n=4; d=0000; s=12)"), false},
    {single(RuleId::column_sums, "M(n=4; d=0000; s=∅)"), false},
    {single(RuleId::column_sums, "M(n=4; d=0000; s=12,13,14,23,24,34)"), true},
    {single(RuleId::trace, "M(n=4; d=1000; s=∅)"), false},
    {single(RuleId::trace, "M(n=4; d=0000; s=∅)"), true},
    {single(RuleId::trace, "M(n=4; d=1100; s=∅)"), true},
    {single(RuleId::triangle1, "M(n=3; d=000; s=12,13)"), false},
    {single(RuleId::triangle1, "M(n=3; d=000; s=12,13,23)"), true},
    {single(RuleId::triangle1, "M(n=3; d=000; s=12)"), true},
    {pair(RuleId::circling, "M(n=3; d=000; s=12)", "M(n=3; d=100; s=∅)"), false},
    {pair(RuleId::circling, "M(n=3; d=000; s=12)", "M(n=3; d=110; s=∅)"), true},
    {pair(RuleId::circling, "M(n=3; d=000; s=∅)", "M(n=3; d=100; s=∅)"), true},
    {pair(RuleId::trace2, "M(n=4; d=0011; s=34)", "M(n=4; d=0000; s=34)"), false},
    {pair(RuleId::trace2, "M(n=4; d=0011; s=34)", "M(n=4; d=0000; s=∅)"), true},
    {pair(RuleId::trace2, "M(n=4; d=0111; s=34)", "M(n=4; d=0000; s=34)"), true},
    {single(RuleId::components, "M(n=3; d=100; s=12,13,23)"), false},
    {single(RuleId::components, "M(n=3; d=000; s=12,13,23)"), true},
    {single(RuleId::components, "M(n=3; d=110; s=12,13,23)"), true},
    {single(RuleId::trace0_minors, "M(n=4; d=0000; s=12,23)"), false},
    {single(RuleId::trace0_minors, "M(n=4; d=0000; s=12,13,23)"), true},
    {single(RuleId::trace0_minors, "M(n=4; d=1111; s=12,23)"), true},
    {pair(RuleId::fully_edged, uk3, "M(n=4; d=1110; s=12,23,34)"), false},
    {pair(RuleId::fully_edged, uk3, "M(n=4; d=0000; s=12,13,14,23,24,34)"), false},
    {pair(RuleId::fully_edged, uk3, "M(n=4; d=1111; s=12,23,34)"), true},
    {pair(RuleId::triangle2, k3, k3w), false},
    {pair(RuleId::triangle2, "M(n=5; d=11110; s=12,13,23)", k3w), true},
    {pair(RuleId::triangle2, k3, "M(n=5; d=11101; s=12,13)"), true},
    {pair(RuleId::quadrilateral, "M(n=5; d=11110; s=12,13,14,23,24,34)", k4w), false},
    {pair(RuleId::quadrilateral, "M(n=5; d=11111; s=12,13,14,23,24,34)", k4w), true},
    {pair(RuleId::quadrilateral, "M(n=5; d=11100; s=12,13,14,23,24,34)", k4w), true},
    {pair(RuleId::dumbbells, "M(n=5; d=11110; s=12,34)", "M(n=5; d=11110; s=12,34)"), false},
    {pair(RuleId::dumbbells, "M(n=5; d=11110; s=12,34)", "M(n=5; d=11111; s=12,34)"), true},
    {pair(RuleId::dumbbells, "M(n=5; d=11110; s=12,34)", "M(n=5; d=11110; s=12)"), true},
  };
  std::size_t matched = 0;
  for (auto const &c : cases)
    matched += c.verdict() == c.expected;
  return {matched == cases.size(), std::to_string(matched) + "/" + std::to_string(cases.size()) + " examples"};
}

Outcome properties()
{
  constexpr int cases = 1000;
  using namespace zwdiag::testing;
  int bad = 0;
  for (int t = 0; t < cases; ++t) {
    int const n = random_n();
    auto const p = random_pair(n);
    auto const sigma = random_permutation(n);
    auto const q = permute(p, sigma);
    for (RuleId id : kAllRules)
      bad += holds(p, id) != holds(q, id);

    auto const cz = canonical_z(p.z());
    bad += canonical_z(cz.matrix).matrix != cz.matrix;
    bad += canonical_z(q.z()).key != cz.key;

    if (n <= 7) {
      auto const czw = canonical_zw(p, true);
      bad += canonical_zw(czw.pair, true).pair != czw.pair;
      bad += canonical_zw(q, true).key != czw.key;
    }

    bad += ZWMatrix::decode(p.encode()) != p;
    bad += io::pair_from_json(io::to_json(p)) != p;

    std::vector<int> subset;
    for (int j = 1; j <= n; ++j)
      if (std::bernoulli_distribution(0.5)(rng()))
        subset.push_back(j);
    auto const s = gamma_sum(n, subset);
    bad += s * s != square_sum(n, subset) + pair_sum(n, subset) * 2;
  }
  return {bad == 0, std::to_string(cases) + " random cases per property, " + std::to_string(bad) + " violations"};
}

Outcome determinism()
{
  PipelineOptions one, eight;
  one.jobs = 1;
  eight.jobs = 8;
  auto const a = io::write_diagram_set(run_pipeline(5, one));
  auto const b = io::write_diagram_set(run_pipeline(5, eight));
  return {a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

Outcome annotator()
{
  auto const g = [](int i) { return GammaPolynomial::gamma(5, i); };
  auto const has = [](std::vector<Constraint> const &cs, GammaPolynomial const &poly, LambdaBranch branch) {
    for (auto const &c : cs)
      if (c.poly == poly && c.kind == Relation::equals_zero && c.branch == branch)
        return true;
    return false;
  };
  auto const li = emit_constraints(P("M(n=5; d=00000; s=12,13,23)", "M(n=5; d=00000; s=∅)"));
  bool const li_ok = has(li, g(1) * g(2) + g(1) * g(3) + g(2) * g(3), LambdaBranch::any);

  auto const iso = emit_constraints(P("M(n=5; d=11000; s=12)", "M(n=5; d=00000; s=∅)"));
  bool const iso_ok = has(iso, g(3) + g(4) + g(5), LambdaBranch::real) &&
                      has(iso, total_pair_sum(5), LambdaBranch::imaginary) &&
                      has(iso, g(1) * g(2) - (g(3) * g(4) + g(3) * g(5) + g(4) * g(5)), LambdaBranch::imaginary);
  return {li_ok && iso_ok, std::string("isolated K3 ") + (li_ok ? "ok" : "missing") + ", isolated circled stroke " +
                               (iso_ok ? "ok" : "missing")};
}

} // namespace

int main()
{
  struct Criterion
  {
    int id;
    char const *title;
    Outcome (*run)();
  };
  Criterion const criteria[] = {
    {1, "N=5 stage-2 counts (3,5,4,4,2) under 5 s", stage2_counts},
    {2, "N=5 T-set counts (16,90,70,55,11) and orbit sums", t_counts},
    {3, "N=5 U-set counts (726,1130,544,264,22) and cross-product identity", u_counts},
    {4, "N=5 final count 31 under 60 s", final_count},
    {5, "N=5 stage-1 counts (84,240,240,182,84)", stage1_counts},
    {6, "oracle equivalence for n=3,4 (n=4 under 10 min)", oracle_equivalence},
    {7, "rule PASS/FAIL examples", rule_examples},
    {8, "property suite", properties},
    {9, "determinism --jobs 1 vs --jobs 8 at n=5", determinism},
    {10, "constraint annotator examples", annotator},
  };

  int failures = 0;
  for (auto const &c : criteria) {
    Outcome result{false, "threw"};
    try {
      result = c.run();
    } catch (std::exception const &e) {
      result.detail = std::string("exception: ") + e.what();
    }
    failures += !result.ok;
    std::printf("[%s] criterion %2d: %s | %s\n", result.ok ? "PASS" : "FAIL", c.id, c.title, result.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures ? 1 : 0;
}
