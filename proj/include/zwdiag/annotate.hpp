#ifndef ZWDIAG_ANNOTATE_HPP
#define ZWDIAG_ANNOTATE_HPP

#include <string_view>
#include <vector>

#include "zwdiag/gamma.hpp"
#include "zwdiag/matrix.hpp"

namespace zwdiag {

enum class Color { z, w };

enum class PatternId {
  /// Isolated fully stroked uncircled component, |K| >= 3.
  isolated_clique,
  /// Isolated stroke with both ends circled and no other circle of that color.
  isolated_pair,
  /// Isolated triangle with exactly two circles and no other circle of that color.
  isolated_triangle,
  /// Component whose (>= 2) circled vertices are pairwise zw-edged.
  close_circles,
};

enum class Relation { equals_zero, nonzero };

/// Branch of the rotation factor: any, ±1, or ±i.
enum class LambdaBranch { any, real, imaginary };

struct Pattern
{
  PatternId id;
  Color color;
  std::vector<int> vertices;

  friend bool operator==(Pattern const &, Pattern const &) = default;
};

struct Constraint
{
  PatternId pattern;
  Color color;
  std::vector<int> vertices;
  GammaPolynomial poly;
  Relation kind;
  LambdaBranch branch;

  friend bool operator==(Constraint const &, Constraint const &) = default;
};

/// "P-LI", "P-ISO2", "P-ISO3", "P-RIV0".
std::string_view to_string(PatternId id);
PatternId parse_pattern_id(std::string_view s);
std::string_view to_string(Color c);
std::string_view to_string(Relation r);
std::string_view to_string(LambdaBranch b);

/// Every pattern occurrence, z-color first, components by lowest vertex.
std::vector<Pattern> detect_patterns(ZWMatrix const &p);

/// Constraints forced by one pattern found in `p`.
std::vector<Constraint> constraints_for(Pattern const &pattern, ZWMatrix const &p);

/// Constraints of every detected pattern, in detection order.
std::vector<Constraint> emit_constraints(ZWMatrix const &p);

/// Constraint with its vertex set and polynomial relabeled by sigma.
Constraint relabel(Constraint const &c, Permutation const &sigma);

} // namespace zwdiag

#endif
