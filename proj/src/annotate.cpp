#include "zwdiag/annotate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace zwdiag {

namespace {

std::vector<int> vertices_of(std::uint32_t mask)
{
  std::vector<int> out;
  for (int v = 1; mask; ++v, mask >>= 1)
    if (mask & 1u)
      out.push_back(v);
  return out;
}

std::uint32_t mask_of(std::vector<int> const &vertices)
{
  std::uint32_t mask = 0;
  for (int v : vertices)
    mask |= 1u << (v - 1);
  return mask;
}

bool fully_stroked(BinarySymmetricMatrix const &m, std::uint32_t set)
{
  for (std::uint32_t rest = set; rest; rest &= rest - 1) {
    int const v = std::countr_zero(rest) + 1;
    std::uint32_t const others = set & ~(1u << (v - 1));
    if ((m.neighbours(v) & others) != others)
      return false;
  }
  return true;
}

void detect_in(BinarySymmetricMatrix const &m, BinarySymmetricMatrix const &other, Color color,
               std::vector<Pattern> &out)
{
  std::uint32_t const circles = m.circle_mask();
  for (std::uint32_t k : component_masks(m)) {
    int const size = std::popcount(k);
    std::uint32_t const inside = k & circles;
    bool const full = fully_stroked(m, k);
    bool const alone = inside == circles;

    if (size >= 3 && full && !inside)
      out.push_back({PatternId::isolated_clique, color, vertices_of(k)});
    if (size == 2 && full && inside == k && alone)
      out.push_back({PatternId::isolated_pair, color, vertices_of(k)});
    if (size == 3 && full && std::popcount(inside) == 2 && alone)
      out.push_back({PatternId::isolated_triangle, color, vertices_of(k)});

    if (std::popcount(inside) >= 2) {
      bool close = true;
      for (std::uint32_t rest = inside; rest && close; rest &= rest - 1) {
        int const v = std::countr_zero(rest) + 1;
        std::uint32_t const others = inside & ~(1u << (v - 1));
        close = (m.neighbours(v) & other.neighbours(v) & others) == others;
      }
      if (close)
        out.push_back({PatternId::close_circles, color, vertices_of(inside)});
    }
  }
}

Constraint make(Pattern const &p, GammaPolynomial poly, Relation kind, LambdaBranch branch)
{
  return {p.id, p.color, p.vertices, std::move(poly), kind, branch};
}

/// Zero-polynomial equalities carry no information and are dropped.
void push_eq(std::vector<Constraint> &out, Pattern const &p, GammaPolynomial poly, LambdaBranch branch)
{
  if (!poly.is_zero())
    out.push_back(make(p, std::move(poly), Relation::equals_zero, branch));
}

} // namespace

std::string_view to_string(PatternId id)
{
  switch (id) {
  case PatternId::isolated_clique:
    return "P-LI";
  case PatternId::isolated_pair:
    return "P-ISO2";
  case PatternId::isolated_triangle:
    return "P-ISO3";
  case PatternId::close_circles:
    return "P-RIV0";
  }
  return "?";
}

PatternId parse_pattern_id(std::string_view s)
{
  for (auto id : {PatternId::isolated_clique, PatternId::isolated_pair, PatternId::isolated_triangle,
                  PatternId::close_circles})
    if (to_string(id) == s)
      return id;
  throw std::invalid_argument("unknown pattern '" + std::string(s) + "'");
}

std::string_view to_string(Color c) { return c == Color::z ? "z" : "w"; }

std::string_view to_string(Relation r) { return r == Relation::equals_zero ? "eq0" : "ne0"; }

std::string_view to_string(LambdaBranch b)
{
  switch (b) {
  case LambdaBranch::any:
    return "any";
  case LambdaBranch::real:
    return "real";
  case LambdaBranch::imaginary:
    return "imag";
  }
  return "?";
}

std::vector<Pattern> detect_patterns(ZWMatrix const &p)
{
  std::vector<Pattern> out;
  detect_in(p.z(), p.w(), Color::z, out);
  detect_in(p.w(), p.z(), Color::w, out);
  return out;
}

std::vector<Constraint> constraints_for(Pattern const &pattern, ZWMatrix const &p)
{
  int const n = p.size();
  std::uint32_t const all = (1u << n) - 1;
  std::uint32_t const k = mask_of(pattern.vertices);
  std::vector<int> const rest = vertices_of(all & ~k);
  std::vector<Constraint> out;

  switch (pattern.id) {
  case PatternId::isolated_clique:
    push_eq(out, pattern, pair_sum(n, pattern.vertices), LambdaBranch::any);
    break;

  case PatternId::isolated_pair:
    out.push_back(make(pattern, gamma_sum(n, pattern.vertices), Relation::nonzero, LambdaBranch::any));
    push_eq(out, pattern, gamma_sum(n, rest), LambdaBranch::real);
    push_eq(out, pattern, total_pair_sum(n), LambdaBranch::imaginary);
    push_eq(out, pattern, pair_sum(n, pattern.vertices) - pair_sum(n, rest), LambdaBranch::imaginary);
    break;

  case PatternId::isolated_triangle: {
    BinarySymmetricMatrix const &m = pattern.color == Color::z ? p.z() : p.w();
    std::uint32_t const circled = k & m.circle_mask();
    if (std::popcount(circled) != 2 || std::popcount(k) != 3)
      throw std::invalid_argument("P-ISO3 needs a triangle with exactly two circles");
    int const apex = std::countr_zero(k & ~circled) + 1;
    out.push_back(make(pattern, gamma_sum(n, vertices_of(circled)), Relation::nonzero, LambdaBranch::any));
    push_eq(out, pattern, gamma_sum(n, rest), LambdaBranch::real);
    push_eq(out, pattern, total_pair_sum(n), LambdaBranch::imaginary);
    push_eq(out, pattern,
            pair_sum(n, pattern.vertices) - pair_sum(n, rest) - GammaPolynomial::gamma(n, apex) * gamma_sum(n, rest),
            LambdaBranch::imaginary);
    break;
  }

  case PatternId::close_circles:
    push_eq(out, pattern, gamma_sum(n, pattern.vertices), LambdaBranch::any);
    break;
  }
  return out;
}

std::vector<Constraint> emit_constraints(ZWMatrix const &p)
{
  std::vector<Constraint> out;
  for (auto const &pattern : detect_patterns(p)) {
    auto more = constraints_for(pattern, p);
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  return out;
}

Constraint relabel(Constraint const &c, Permutation const &sigma)
{
  Constraint out = c;
  for (int &v : out.vertices)
    v = sigma.image(v);
  std::sort(out.vertices.begin(), out.vertices.end());
  out.poly = c.poly.relabel(sigma);
  return out;
}

} // namespace zwdiag
