#include "zwdiag/gamma.hpp"

#include <stdexcept>

namespace zwdiag {

namespace {

void check_index(int n, int i)
{
  if (i < 1 || i > n)
    throw std::invalid_argument("vorticity index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
}

} // namespace

GammaPolynomial::GammaPolynomial(int n) : n_(n)
{
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("polynomial needs 1..8 variables");
}

GammaPolynomial GammaPolynomial::constant(int n, std::int64_t c)
{
  GammaPolynomial p(n);
  p.add_term(Monomial{}, c);
  return p;
}

GammaPolynomial GammaPolynomial::gamma(int n, int i)
{
  check_index(n, i);
  GammaPolynomial p(n);
  Monomial m{};
  m[i - 1] = 1;
  p.add_term(m, 1);
  return p;
}

void GammaPolynomial::add_term(Monomial const &m, std::int64_t coeff)
{
  for (int k = n_; k < kMaxVertices; ++k)
    if (m[k])
      throw std::invalid_argument("monomial uses a variable beyond Γ_" + std::to_string(n_));
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted && (it->second += coeff) == 0)
    terms_.erase(it);
}

GammaPolynomial &GammaPolynomial::operator+=(GammaPolynomial const &rhs)
{
  if (rhs.n_ != n_)
    throw std::invalid_argument("adding polynomials over different variable counts");
  for (auto const &[m, c] : rhs.terms_)
    add_term(m, c);
  return *this;
}

GammaPolynomial &GammaPolynomial::operator-=(GammaPolynomial const &rhs)
{
  if (rhs.n_ != n_)
    throw std::invalid_argument("subtracting polynomials over different variable counts");
  for (auto const &[m, c] : rhs.terms_)
    add_term(m, -c);
  return *this;
}

GammaPolynomial &GammaPolynomial::operator*=(std::int64_t c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &term : terms_)
    term.second *= c;
  return *this;
}

GammaPolynomial operator*(GammaPolynomial const &lhs, GammaPolynomial const &rhs)
{
  if (lhs.n_ != rhs.n_)
    throw std::invalid_argument("multiplying polynomials over different variable counts");
  GammaPolynomial out(lhs.n_);
  for (auto const &[ma, ca] : lhs.terms_)
    for (auto const &[mb, cb] : rhs.terms_) {
      Monomial m{};
      for (int k = 0; k < kMaxVertices; ++k)
        m[k] = static_cast<std::uint8_t>(ma[k] + mb[k]);
      out.add_term(m, ca * cb);
    }
  return out;
}

GammaPolynomial GammaPolynomial::relabel(Permutation const &sigma) const
{
  if (sigma.size() != n_)
    throw std::invalid_argument("permutation degree does not match variable count");
  GammaPolynomial out(n_);
  for (auto const &[m, c] : terms_) {
    Monomial image{};
    for (int i = 1; i <= n_; ++i)
      image[sigma.image(i) - 1] = m[i - 1];
    out.add_term(image, c);
  }
  return out;
}

std::int64_t GammaPolynomial::evaluate(std::span<std::int64_t const> gammas) const
{
  if (static_cast<int>(gammas.size()) != n_)
    throw std::invalid_argument("evaluation point has the wrong dimension");
  std::int64_t total = 0;
  for (auto const &[m, c] : terms_) {
    std::int64_t value = c;
    for (int k = 0; k < n_; ++k)
      for (int e = 0; e < m[k]; ++e)
        value *= gammas[k];
    total += value;
  }
  return total;
}

std::string GammaPolynomial::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (auto const &[m, c] : terms_) {
    std::int64_t magnitude = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;

    std::string factors;
    for (int k = 0; k < n_; ++k) {
      if (!m[k])
        continue;
      if (!factors.empty())
        factors += '*';
      factors += "G" + std::to_string(k + 1);
      if (m[k] > 1)
        factors += "^" + std::to_string(m[k]);
    }
    if (factors.empty())
      out += std::to_string(magnitude);
    else if (magnitude == 1)
      out += factors;
    else
      out += std::to_string(magnitude) + "*" + factors;
  }
  return out;
}

GammaPolynomial gamma_sum(int n, std::span<int const> subset)
{
  GammaPolynomial p(n);
  for (int j : subset)
    p += GammaPolynomial::gamma(n, j);
  return p;
}

GammaPolynomial pair_sum(int n, std::span<int const> subset)
{
  GammaPolynomial p(n);
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b)
      p += GammaPolynomial::gamma(n, subset[a]) * GammaPolynomial::gamma(n, subset[b]);
  return p;
}

GammaPolynomial total_pair_sum(int n)
{
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i)
    all[i] = i + 1;
  return pair_sum(n, all);
}

GammaPolynomial square_sum(int n, std::span<int const> subset)
{
  GammaPolynomial p(n);
  for (int j : subset)
    p += GammaPolynomial::gamma(n, j) * GammaPolynomial::gamma(n, j);
  return p;
}

} // namespace zwdiag
