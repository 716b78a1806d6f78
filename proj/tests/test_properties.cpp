#include <doctest.h>

#include <algorithm>
#include <vector>

#include "support.hpp"
#include "zwdiag/gamma.hpp"
#include "zwdiag/io.hpp"
#include "zwdiag/rules.hpp"

using namespace zwdiag;
using namespace zwdiag::testing;

namespace {

constexpr int kCases = 1000;

} // namespace

TEST_SUITE("properties")
{
  TEST_CASE("rule verdicts are invariant under simultaneous relabeling")
  {
    int failing = 0;
    for (int t = 0; t < kCases; ++t) {
      int const n = random_n();
      auto const p = random_pair(n);
      auto const q = permute(p, random_permutation(n));
      for (RuleId id : kAllRules) {
        bool const before = holds(p, id);
        failing += !before;
        REQUIRE_MESSAGE(before == holds(q, id), p.encode(), " rule ", to_string(id));
      }
    }
    // The generator must actually exercise both outcomes.
    CHECK(failing > 0);
    CHECK(failing < kCases * static_cast<int>(kAllRules.size()));
  }

  TEST_CASE("rule verdicts on enumerated survivors under relabeling")
  {
    auto const set = run_pipeline(5);
    for (int t = 0; t < kCases; ++t) {
      auto const &p = set.diagrams[static_cast<std::size_t>(t) % set.diagrams.size()];
      REQUIRE(passes_all(permute(p, random_permutation(5)), kAllRules));
    }
  }

  TEST_CASE("canonical_z is idempotent and constant on orbits")
  {
    for (int t = 0; t < kCases; ++t) {
      int const n = random_n();
      auto const m = random_matrix(n);
      auto const c = canonical_z(m);
      REQUIRE(canonical_z(c.matrix).matrix == c.matrix);
      REQUIRE(c.key.bits == c.matrix.encode());
      REQUIRE(canonical_z(permute(m, random_permutation(n))).key == c.key);
      REQUIRE(c.key.bits <= m.encode());
    }
  }

  TEST_CASE("canonical_zw is idempotent and constant on orbits")
  {
    for (int t = 0; t < kCases; ++t) {
      int const n = random_n(3, 7);
      auto const p = random_pair(n);
      bool const swap = t % 2 == 0;
      auto const c = canonical_zw(p, swap);
      REQUIRE(canonical_zw(c.pair, swap).pair == c.pair);
      REQUIRE(c.key.bits == c.pair.z().encode() + c.pair.w().encode());
      REQUIRE(canonical_zw(permute(p, random_permutation(n)), swap).key == c.key);
      if (swap && trace(p.z()) == trace(p.w()))
        REQUIRE(canonical_zw(ZWMatrix(p.w(), p.z()), true).key == c.key);
    }
  }

  TEST_CASE("encodings round-trip")
  {
    for (int t = 0; t < kCases; ++t) {
      int const n = random_n();
      auto const p = random_pair(n);
      REQUIRE(BinarySymmetricMatrix::decode(n, p.z().encode()) == p.z());
      REQUIRE(BinarySymmetricMatrix::parse_compact(p.w().to_compact()) == p.w());
      REQUIRE(ZWMatrix::decode(p.encode()) == p);
      REQUIRE(io::pair_from_json(nlohmann::json::parse(io::to_json(p).dump())) == p);
      REQUIRE(BinarySymmetricMatrix::from_masks(n, p.z().circle_mask(), p.z().stroke_mask()) == p.z());
    }
  }

  TEST_CASE("square of a vorticity sum")
  {
    for (int t = 0; t < kCases; ++t) {
      int const n = random_n(1, kMaxVertices);
      std::vector<int> subset;
      for (int j = 1; j <= n; ++j)
        if (std::bernoulli_distribution(0.5)(rng()))
          subset.push_back(j);
      auto const s = gamma_sum(n, subset);
      REQUIRE(s * s == square_sum(n, subset) + pair_sum(n, subset) * 2);

      std::vector<std::int64_t> point(static_cast<std::size_t>(n));
      for (auto &x : point)
        x = std::uniform_int_distribution<std::int64_t>(-50, 50)(rng());
      std::int64_t const v = s.evaluate(point);
      REQUIRE(v * v == square_sum(n, subset).evaluate(point) + 2 * pair_sum(n, subset).evaluate(point));
    }
  }

  TEST_CASE("constraint emission commutes with relabeling")
  {
    auto const key = [](Constraint const &c) {
      return std::tuple(c.pattern, c.color, c.vertices, c.poly.to_string(), c.kind, c.branch);
    };
    auto const by_key = [&](Constraint const &a, Constraint const &b) { return key(a) < key(b); };
    int emitted = 0;
    for (int t = 0; t < kCases; ++t) {
      int const n = random_n();
      auto const p = random_pair(n);
      auto const sigma = random_permutation(n);
      auto direct = emit_constraints(permute(p, sigma));
      std::vector<Constraint> mapped;
      for (auto const &c : emit_constraints(p))
        mapped.push_back(relabel(c, sigma));
      std::sort(direct.begin(), direct.end(), by_key);
      std::sort(mapped.begin(), mapped.end(), by_key);
      REQUIRE(direct == mapped);
      emitted += static_cast<int>(direct.size());
    }
    CHECK(emitted > 0);
  }
}
