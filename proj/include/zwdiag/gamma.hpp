#ifndef ZWDIAG_GAMMA_HPP
#define ZWDIAG_GAMMA_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "zwdiag/matrix.hpp"

namespace zwdiag {

/// Exponent vector over Γ_1..Γ_n; unused trailing slots stay zero.
using Monomial = std::array<std::uint8_t, kMaxVertices>;

/// Sparse integer polynomial in the vorticities Γ_1..Γ_n. Zero coefficients
/// are never stored, so structural equality is polynomial equality.
class GammaPolynomial
{
public:
  /// Terms ordered with higher powers of Γ_1 first, then Γ_2, ...
  using Terms = std::map<Monomial, std::int64_t, std::greater<>>;

  explicit GammaPolynomial(int n);

  static GammaPolynomial constant(int n, std::int64_t c);
  /// Γ_i, 1-based.
  static GammaPolynomial gamma(int n, int i);

  int variables() const { return n_; }
  Terms const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial const &m, std::int64_t coeff);

  GammaPolynomial &operator+=(GammaPolynomial const &rhs);
  GammaPolynomial &operator-=(GammaPolynomial const &rhs);
  GammaPolynomial &operator*=(std::int64_t c);

  friend GammaPolynomial operator+(GammaPolynomial lhs, GammaPolynomial const &rhs) { return lhs += rhs; }
  friend GammaPolynomial operator-(GammaPolynomial lhs, GammaPolynomial const &rhs) { return lhs -= rhs; }
  friend GammaPolynomial operator*(GammaPolynomial const &lhs, GammaPolynomial const &rhs);
  friend GammaPolynomial operator*(GammaPolynomial lhs, std::int64_t c) { return lhs *= c; }
  GammaPolynomial operator-() const { return *this * -1; }

  /// Substitutes Γ_i -> Γ_sigma(i).
  GammaPolynomial relabel(Permutation const &sigma) const;

  /// Value at integer vorticities gammas[0..n).
  std::int64_t evaluate(std::span<std::int64_t const> gammas) const;

  /// e.g. "G1*G2 + G1*G3 - 2*G4^2"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(GammaPolynomial const &, GammaPolynomial const &) = default;

private:
  int n_;
  Terms terms_;
};

/// Γ_J = Σ_{j∈J} Γ_j.
GammaPolynomial gamma_sum(int n, std::span<int const> subset);
/// L_J = Σ_{j<k in J} Γ_j Γ_k.
GammaPolynomial pair_sum(int n, std::span<int const> subset);
/// L = L_{1..n}.
GammaPolynomial total_pair_sum(int n);
/// Σ_{j∈J} Γ_j².
GammaPolynomial square_sum(int n, std::span<int const> subset);

} // namespace zwdiag

#endif
