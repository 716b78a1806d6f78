#include "zwdiag/rules.hpp"

#include <bit>
#include <stdexcept>

namespace zwdiag {

namespace {

using Matrix = BinarySymmetricMatrix;
/// A failed check: engaged optional. The text is only built when asked for.
using Failure = std::optional<std::string>;

constexpr std::array<std::string_view, 11> kRuleNames{
  "column-sums", "trace",         "triangle-1", "circling",      "trace-2",  "components",
  "trace0-minors", "fully-edged", "triangle-2", "quadrilateral", "dumbbells",
};

std::string vertex_set(std::uint32_t mask)
{
  std::string s = "{";
  bool first = true;
  for (int v = 1; mask; ++v, mask >>= 1)
    if (mask & 1u) {
      if (!first)
        s += ',';
      s += std::to_string(v);
      first = false;
    }
  return s + "}";
}

std::string pair_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

template <typename F>
Failure failed(bool describe, F &&text)
{
  return describe ? Failure(text()) : Failure(std::string());
}

bool fully_stroked(Matrix const &m, std::uint32_t set)
{
  for (std::uint32_t rest = set; rest; rest &= rest - 1) {
    int const v = std::countr_zero(rest) + 1;
    std::uint32_t const others = set & ~(1u << (v - 1));
    if ((m.neighbours(v) & others) != others)
      return false;
  }
  return true;
}

bool fully_circled(Matrix const &m, std::uint32_t set) { return (m.circle_mask() & set) == set; }

// -- single-matrix checks ---------------------------------------------------

Failure check_column_sums(Matrix const &m, bool describe)
{
  bool all_zero = true;
  for (int j = 1; j <= m.size(); ++j) {
    int const sum = std::popcount(m.row(j));
    if (sum == 1)
      return failed(describe, [&] { return "column " + std::to_string(j) + " sums to 1"; });
    all_zero = all_zero && sum == 0;
  }
  if (all_zero)
    return failed(describe, [] { return std::string("all column sums are 0"); });
  return std::nullopt;
}

Failure check_trace(Matrix const &m, bool describe)
{
  if (trace(m) == 1)
    return failed(describe, [&] { return "single circle at " + vertex_set(m.circle_mask()); });
  return std::nullopt;
}

Failure check_triangle1(Matrix const &m, bool describe)
{
  int const n = m.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (m.stroke(i, j) + m.stroke(j, k) + m.stroke(i, k) == 2)
          return failed(describe, [&] {
            return "triple " + vertex_set((1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1))) +
                   " carries two strokes";
          });
  return std::nullopt;
}

Failure check_components(Matrix const &m, bool describe)
{
  std::uint32_t const circles = m.circle_mask();
  for (std::uint32_t block : component_masks(m))
    if (std::popcount(block & circles) == 1)
      return failed(describe, [&] { return "component " + vertex_set(block) + " has one circle"; });
  return std::nullopt;
}

Failure check_trace0_minors(Matrix const &m, bool describe)
{
  int const n = m.size();
  std::uint32_t const all = (1u << n) - 1;
  std::uint32_t const circles = m.circle_mask();
  for (std::uint32_t subset = 1; subset < all; ++subset) {
    if (subset & circles)
      continue;
    int crossing = 0;
    for (std::uint32_t rest = subset; rest && crossing < 2; rest &= rest - 1)
      crossing += std::popcount(m.row(std::countr_zero(rest) + 1) & all & ~subset);
    if (crossing == 1)
      return failed(describe, [&] { return vertex_set(subset) + " has one crossing stroke"; });
  }
  return std::nullopt;
}

// -- one direction of each pair rule; the caller mirrors ---------------------

Failure circling_one(Matrix const &stroked, Matrix const &circled, bool describe)
{
  std::uint32_t const c = circled.circle_mask();
  for (int i = 1; i <= stroked.size(); ++i)
    for (int j = i + 1; j <= stroked.size(); ++j)
      if (stroked.stroke(i, j) && (((c >> (i - 1)) ^ (c >> (j - 1))) & 1u))
        return failed(describe, [&] { return "stroke " + pair_name(i, j) + " joins circled and uncircled"; });
  return std::nullopt;
}

Failure trace2_one(Matrix const &circled, Matrix const &a, Matrix const &b, bool describe)
{
  std::uint32_t const c = circled.circle_mask();
  if (std::popcount(c) != 2)
    return std::nullopt;
  int const i = std::countr_zero(c) + 1;
  int const j = std::countr_zero(c & (c - 1)) + 1;
  if (a.stroke(i, j) && b.stroke(i, j))
    return failed(describe, [&] { return "zw-edge " + pair_name(i, j) + " between the only two circles"; });
  return std::nullopt;
}

Failure fully_edged_one(Matrix const &x, Matrix const &y, bool describe)
{
  auto const x_blocks = component_masks(x);
  auto const y_blocks = component_masks(y);
  std::uint32_t const y_circles = y.circle_mask();
  for (std::uint32_t k : x_blocks) {
    if (std::popcount(k) < 3 || !fully_stroked(x, k) || (x.circle_mask() & k))
      continue;

    // Parts 1 and 4: circle-free blocks never change the circled set, so the
    // union of the blocks meeting K is the only cover that matters.
    std::uint32_t cover = 0;
    for (std::uint32_t i : y_blocks)
      if (i & k)
        cover |= i;
    if ((cover & y_circles) == k)
      return failed(describe,
                    [&] { return "circled vertices covering " + vertex_set(k) + " are exactly that set"; });

    for (std::uint32_t rest = k; rest; rest &= rest - 1) {
      std::uint32_t const k1 = k & ~(rest & (~rest + 1));
      for (std::uint32_t i : y_blocks)
        if ((k1 & i) == k1 && (i & y_circles) == k1)
          return failed(describe, [&] {
            return "circled vertices of " + vertex_set(i) + " are exactly " + vertex_set(k1);
          });
    }

    for (std::uint32_t j : y_blocks)
      if ((k & j) == k && std::popcount(j) == std::popcount(k) + 1 && fully_stroked(y, j) && !(j & y_circles))
        return failed(describe, [&] {
          return vertex_set(j) + " is fully stroked and circle-free around " + vertex_set(k);
        });
  }
  return std::nullopt;
}

Failure triangle2_one(Matrix const &x, Matrix const &y, bool describe)
{
  if (trace(x) > 3)
    return std::nullopt;
  for (std::uint32_t k : component_masks(x))
    if (std::popcount(k) == 3 && fully_stroked(x, k) && fully_circled(x, k) && fully_stroked(y, k) &&
        fully_circled(y, k))
      return failed(describe,
                    [&] { return "triangle " + vertex_set(k) + " with trace " + std::to_string(trace(x)); });
  return std::nullopt;
}

Failure quadrilateral_one(Matrix const &x, Matrix const &y, bool describe)
{
  if (trace(x) > 4)
    return std::nullopt;
  for (std::uint32_t k : component_masks(x))
    if (std::popcount(k) == 4 && fully_stroked(x, k) && fully_circled(x, k) && fully_stroked(y, k))
      return failed(describe, [&] {
        return "quadrilateral " + vertex_set(k) + " with trace " + std::to_string(trace(x));
      });
  return std::nullopt;
}

Failure dumbbells_one(Matrix const &x, Matrix const &y, int total_trace, bool describe)
{
  if (total_trace > 8)
    return std::nullopt;
  std::uint32_t first = 0;
  for (std::uint32_t k : component_masks(x)) {
    if (std::popcount(k) != 2 || !fully_stroked(x, k) || !fully_circled(x, k) || !fully_stroked(y, k) ||
        !fully_circled(y, k))
      continue;
    if (!first) {
      first = k;
      continue;
    }
    return failed(describe, [&] {
      return "dumbbells " + vertex_set(first) + " and " + vertex_set(k) + " with total trace " +
             std::to_string(total_trace);
    });
  }
  return std::nullopt;
}

using SingleCheck = Failure (*)(Matrix const &, bool);

SingleCheck single_check(RuleId id)
{
  switch (id) {
  case RuleId::column_sums:
    return check_column_sums;
  case RuleId::trace:
    return check_trace;
  case RuleId::triangle1:
    return check_triangle1;
  case RuleId::components:
    return check_components;
  case RuleId::trace0_minors:
    return check_trace0_minors;
  default:
    return nullptr;
  }
}

/// Pair rule with its mirror; the witness names the color that failed.
Failure check_pair(ZWMatrix const &p, RuleId id, bool describe)
{
  Matrix const &a = p.z();
  Matrix const &b = p.w();
  auto const tagged = [&](Failure f, char const *color) {
    if (f && describe)
      *f = std::string(color) + ": " + *f;
    return f;
  };
  Failure f;
  switch (id) {
  case RuleId::circling:
    if ((f = circling_one(a, b, describe)))
      return tagged(f, "z");
    return tagged(circling_one(b, a, describe), "w");
  case RuleId::trace2:
    if ((f = trace2_one(a, a, b, describe)))
      return tagged(f, "z");
    return tagged(trace2_one(b, a, b, describe), "w");
  case RuleId::fully_edged:
    if ((f = fully_edged_one(a, b, describe)))
      return tagged(f, "z");
    return tagged(fully_edged_one(b, a, describe), "w");
  case RuleId::triangle2:
    if ((f = triangle2_one(a, b, describe)))
      return tagged(f, "z");
    return tagged(triangle2_one(b, a, describe), "w");
  case RuleId::quadrilateral:
    if ((f = quadrilateral_one(a, b, describe)))
      return tagged(f, "z");
    return tagged(quadrilateral_one(b, a, describe), "w");
  case RuleId::dumbbells: {
    int const total = trace(a) + trace(b);
    if ((f = dumbbells_one(a, b, total, describe)))
      return tagged(f, "z");
    return tagged(dumbbells_one(b, a, total, describe), "w");
  }
  default: {
    SingleCheck check = single_check(id);
    if (!check)
      throw std::invalid_argument("unknown rule id");
    if ((f = check(a, describe)))
      return tagged(f, "z");
    return tagged(check(b, describe), "w");
  }
  }
}

RuleVerdict verdict(RuleId id, Failure f)
{
  return f ? RuleVerdict::fail(id, std::move(*f)) : RuleVerdict::pass(id);
}

} // namespace

std::string_view to_string(RuleId id) { return kRuleNames[static_cast<std::size_t>(id)]; }

RuleId parse_rule_id(std::string_view name)
{
  for (std::size_t k = 0; k < kRuleNames.size(); ++k)
    if (kRuleNames[k] == name)
      return static_cast<RuleId>(k);
  throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
}

bool is_single_matrix_rule(RuleId id) { return single_check(id) != nullptr; }

RuleVerdict rule_column_sums(Matrix const &m) { return verdict(RuleId::column_sums, check_column_sums(m, true)); }
RuleVerdict rule_trace(Matrix const &m) { return verdict(RuleId::trace, check_trace(m, true)); }
RuleVerdict rule_triangle1(Matrix const &m) { return verdict(RuleId::triangle1, check_triangle1(m, true)); }
RuleVerdict rule_components(Matrix const &m) { return verdict(RuleId::components, check_components(m, true)); }
RuleVerdict rule_trace0_minors(Matrix const &m)
{
  return verdict(RuleId::trace0_minors, check_trace0_minors(m, true));
}

RuleVerdict rule_circling(ZWMatrix const &p) { return apply_rule(p, RuleId::circling); }
RuleVerdict rule_trace2(ZWMatrix const &p) { return apply_rule(p, RuleId::trace2); }
RuleVerdict rule_fully_edged(ZWMatrix const &p) { return apply_rule(p, RuleId::fully_edged); }
RuleVerdict rule_triangle2(ZWMatrix const &p) { return apply_rule(p, RuleId::triangle2); }
RuleVerdict rule_quadrilateral(ZWMatrix const &p) { return apply_rule(p, RuleId::quadrilateral); }
RuleVerdict rule_dumbbells(ZWMatrix const &p) { return apply_rule(p, RuleId::dumbbells); }

RuleVerdict apply_rule(ZWMatrix const &p, RuleId id) { return verdict(id, check_pair(p, id, true)); }

bool holds(Matrix const &m, RuleId id)
{
  SingleCheck check = single_check(id);
  if (!check)
    throw std::invalid_argument(std::string(to_string(id)) + " is not a single-matrix rule");
  return !check(m, false);
}

bool holds(ZWMatrix const &p, RuleId id) { return !check_pair(p, id, false); }

std::vector<RuleVerdict> apply_all(ZWMatrix const &p, std::span<RuleId const> rule_set)
{
  std::vector<RuleVerdict> out;
  out.reserve(rule_set.size());
  for (RuleId id : rule_set)
    out.push_back(apply_rule(p, id));
  return out;
}

bool passes_all(ZWMatrix const &p, std::span<RuleId const> rule_set)
{
  for (RuleId id : rule_set)
    if (!holds(p, id))
      return false;
  return true;
}

} // namespace zwdiag
