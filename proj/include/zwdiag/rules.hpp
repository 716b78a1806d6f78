#ifndef ZWDIAG_RULES_HPP
#define ZWDIAG_RULES_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zwdiag/matrix.hpp"

namespace zwdiag {

enum class RuleId {
  column_sums,
  trace,
  triangle1,
  circling,
  trace2,
  components,
  trace0_minors,
  fully_edged,
  triangle2,
  quadrilateral,
  dumbbells,
};

inline constexpr std::array<RuleId, 11> kAllRules{
  RuleId::column_sums, RuleId::trace,       RuleId::triangle1, RuleId::circling,
  RuleId::trace2,      RuleId::components,  RuleId::trace0_minors, RuleId::fully_edged,
  RuleId::triangle2,   RuleId::quadrilateral, RuleId::dumbbells,
};

/// Rules run on z-candidates before pairing, in application order.
inline constexpr std::array<RuleId, 3> kSingleStageRules{
  RuleId::column_sums, RuleId::triangle1, RuleId::trace0_minors};

/// Rules run on zw-pairs, in application order.
inline constexpr std::array<RuleId, 7> kPairStageRules{
  RuleId::circling,  RuleId::trace2,        RuleId::components, RuleId::fully_edged,
  RuleId::triangle2, RuleId::quadrilateral, RuleId::dumbbells};

/// Stable identifier, e.g. "trace0-minors".
std::string_view to_string(RuleId id);
/// Throws std::invalid_argument for an unknown identifier.
RuleId parse_rule_id(std::string_view name);

/// True for rules stated on a single matrix (applied to A and to B).
bool is_single_matrix_rule(RuleId id);

struct RuleVerdict
{
  RuleId rule;
  bool passed = true;
  /// Present iff the rule failed.
  std::optional<std::string> witness;

  static RuleVerdict pass(RuleId id) { return {id, true, std::nullopt}; }
  static RuleVerdict fail(RuleId id, std::string why) { return {id, false, std::move(why)}; }
};

RuleVerdict rule_column_sums(BinarySymmetricMatrix const &m);
RuleVerdict rule_trace(BinarySymmetricMatrix const &m);
RuleVerdict rule_triangle1(BinarySymmetricMatrix const &m);
RuleVerdict rule_components(BinarySymmetricMatrix const &m);
RuleVerdict rule_trace0_minors(BinarySymmetricMatrix const &m);

RuleVerdict rule_circling(ZWMatrix const &p);
RuleVerdict rule_trace2(ZWMatrix const &p);
RuleVerdict rule_fully_edged(ZWMatrix const &p);
RuleVerdict rule_triangle2(ZWMatrix const &p);
RuleVerdict rule_quadrilateral(ZWMatrix const &p);
RuleVerdict rule_dumbbells(ZWMatrix const &p);

/// One rule on a pair. Single-matrix rules are checked on z then w and fail
/// if either fails; the witness is prefixed with the color.
RuleVerdict apply_rule(ZWMatrix const &p, RuleId id);

/// One verdict per selected rule, in the order given.
std::vector<RuleVerdict> apply_all(ZWMatrix const &p, std::span<RuleId const> rule_set);

/// Verdict without a witness. The matrix overload takes single-matrix rules
/// only and throws std::invalid_argument otherwise.
bool holds(BinarySymmetricMatrix const &m, RuleId id);
bool holds(ZWMatrix const &p, RuleId id);

/// True iff every selected rule passes; stops at the first failure.
bool passes_all(ZWMatrix const &p, std::span<RuleId const> rule_set);

} // namespace zwdiag

#endif
