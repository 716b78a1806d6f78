#include "zwdiag/matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "canon_detail.hpp"

namespace zwdiag {

namespace {

void check_size(int n)
{
  if (n < kMinVertices || n > kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [3, 8]");
}

void check_vertex(int n, int i)
{
  if (i < 1 || i > n)
    throw std::invalid_argument("vertex " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

} // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
  int const n = size();
  std::vector<bool> seen(n + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x])
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n)
{
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const
{
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i)
    inv[image(i) - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(Permutation const &other) const
{
  if (other.size() != size())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i)
    out[i - 1] = image(other.image(i));
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n)
{
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// ---------------------------------------------------------------------------
// BinarySymmetricMatrix

BinarySymmetricMatrix::BinarySymmetricMatrix(int n) : n_(n) { check_size(n); }

BinarySymmetricMatrix BinarySymmetricMatrix::from_masks(int n, std::uint32_t circles, std::uint32_t strokes)
{
  BinarySymmetricMatrix m(n);
  for (int i = 1; i <= n; ++i)
    if ((circles >> (i - 1)) & 1u)
      m.set_circle(i);
  int t = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++t)
      if ((strokes >> t) & 1u)
        m.set_stroke(i, j);
  return m;
}

BinarySymmetricMatrix BinarySymmetricMatrix::decode(int n, std::string_view bits)
{
  BinarySymmetricMatrix m(n);
  if (static_cast<int>(bits.size()) != m.encoding_width())
    throw std::invalid_argument("encoding has length " + std::to_string(bits.size()) + ", expected " +
                                std::to_string(m.encoding_width()));
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("encoding contains a character other than 0/1");
    value = (value << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return detail::from_encoding_bits(n, value);
}

BinarySymmetricMatrix BinarySymmetricMatrix::parse_compact(std::string_view text)
{
  auto const bad = [&] { return std::invalid_argument("malformed matrix literal: " + std::string(text)); };
  std::string_view s = trim(text);
  if (s.size() < 3 || s.substr(0, 2) != "M(" || s.back() != ')')
    throw bad();
  s = s.substr(2, s.size() - 3);

  int n = 0;
  std::string diag;
  std::string_view strokes;
  bool have_n = false, have_d = false;
  while (!s.empty()) {
    auto const semi = s.find(';');
    std::string_view field = trim(s.substr(0, semi));
    s = semi == std::string_view::npos ? std::string_view{} : s.substr(semi + 1);
    if (field.size() < 2 || field[1] != '=')
      throw bad();
    std::string_view value = trim(field.substr(2));
    switch (field[0]) {
    case 'n':
      if (value.size() != 1 || value[0] < '0' || value[0] > '9')
        throw bad();
      n = value[0] - '0';
      have_n = true;
      break;
    case 'd':
      diag = std::string(value);
      have_d = true;
      break;
    case 's':
      strokes = value;
      break;
    default:
      throw bad();
    }
  }
  if (!have_n)
    throw bad();
  BinarySymmetricMatrix m(n);
  if (have_d) {
    if (static_cast<int>(diag.size()) != n)
      throw bad();
    for (int i = 1; i <= n; ++i) {
      if (diag[i - 1] != '0' && diag[i - 1] != '1')
        throw bad();
      m.set_circle(i, diag[i - 1] == '1');
    }
  }
  if (!strokes.empty() && strokes.front() == '{') {
    if (strokes.back() != '}')
      throw bad();
    strokes = trim(strokes.substr(1, strokes.size() - 2));
  }
  if (strokes == "∅")
    strokes = {};
  while (!strokes.empty()) {
    auto const comma = strokes.find(',');
    std::string_view item = trim(strokes.substr(0, comma));
    strokes = comma == std::string_view::npos ? std::string_view{} : strokes.substr(comma + 1);
    if (item.size() != 2 || item[0] < '1' || item[0] > '9' || item[1] < '1' || item[1] > '9')
      throw bad();
    int const i = item[0] - '0', j = item[1] - '0';
    if (i == j || i > n || j > n)
      throw bad();
    m.set_stroke(i, j);
  }
  return m;
}

BinarySymmetricMatrix &BinarySymmetricMatrix::set_circle(int i, bool on)
{
  check_vertex(n_, i);
  auto const bit = static_cast<std::uint8_t>(1u << (i - 1));
  rows_[i - 1] = on ? rows_[i - 1] | bit : rows_[i - 1] & ~bit;
  return *this;
}

BinarySymmetricMatrix &BinarySymmetricMatrix::set_stroke(int i, int j, bool on)
{
  check_vertex(n_, i);
  check_vertex(n_, j);
  if (i == j)
    throw std::invalid_argument("a stroke needs two distinct vertices");
  auto const bi = static_cast<std::uint8_t>(1u << (i - 1));
  auto const bj = static_cast<std::uint8_t>(1u << (j - 1));
  rows_[i - 1] = on ? rows_[i - 1] | bj : rows_[i - 1] & ~bj;
  rows_[j - 1] = on ? rows_[j - 1] | bi : rows_[j - 1] & ~bi;
  return *this;
}

std::uint32_t BinarySymmetricMatrix::circle_mask() const
{
  std::uint32_t mask = 0;
  for (int i = 0; i < n_; ++i)
    mask |= ((rows_[i] >> i) & 1u) << i;
  return mask;
}

std::uint32_t BinarySymmetricMatrix::stroke_mask() const
{
  std::uint32_t mask = 0;
  int t = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j, ++t)
      mask |= ((rows_[i] >> j) & 1u) << t;
  return mask;
}

int BinarySymmetricMatrix::stroke_count() const { return std::popcount(stroke_mask()); }

std::uint64_t BinarySymmetricMatrix::encode_bits() const
{
  return detail::relabeled_bits(*this, detail::identity_relabel(n_));
}

std::string BinarySymmetricMatrix::encode() const
{
  return detail::bits_to_string(encode_bits(), encoding_width());
}

std::string BinarySymmetricMatrix::to_compact() const
{
  std::string out = "M(n=" + std::to_string(n_) + "; d=";
  for (int i = 1; i <= n_; ++i)
    out += circled(i) ? '1' : '0';
  out += "; s=";
  bool first = true;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (stroke(i, j)) {
        if (!first)
          out += ',';
        out += static_cast<char>('0' + i);
        out += static_cast<char>('0' + j);
        first = false;
      }
  out += ')';
  return out;
}

// ---------------------------------------------------------------------------
// ZWMatrix

ZWMatrix::ZWMatrix(BinarySymmetricMatrix z, BinarySymmetricMatrix w) : z_(z), w_(w)
{
  if (z_.size() != w_.size())
    throw std::invalid_argument("z- and w-matrix differ in dimension");
}

std::string ZWMatrix::encode() const
{
  return "N=" + std::to_string(size()) + ";A=" + z_.encode() + ";B=" + w_.encode();
}

ZWMatrix ZWMatrix::decode(std::string_view text)
{
  auto const bad = [&] { return std::invalid_argument("malformed pair encoding: " + std::string(text)); };
  if (text.size() < 4 || text.substr(0, 2) != "N=")
    throw bad();
  auto const a = text.find(";A=");
  auto const b = text.find(";B=");
  if (a == std::string_view::npos || b == std::string_view::npos || b < a || a != 3)
    throw bad();
  char const c = text[2];
  if (c < '0' || c > '9')
    throw bad();
  int const n = c - '0';
  return ZWMatrix(BinarySymmetricMatrix::decode(n, text.substr(a + 3, b - a - 3)),
                  BinarySymmetricMatrix::decode(n, text.substr(b + 3)));
}

// ---------------------------------------------------------------------------
// Operations

std::vector<int> column_sums(BinarySymmetricMatrix const &m)
{
  std::vector<int> sums(m.size());
  for (int j = 1; j <= m.size(); ++j)
    sums[j - 1] = std::popcount(m.row(j));
  return sums;
}

int trace(BinarySymmetricMatrix const &m) { return std::popcount(m.circle_mask()); }

std::vector<std::uint32_t> component_masks(BinarySymmetricMatrix const &m)
{
  std::vector<std::uint32_t> out;
  std::uint32_t seen = 0;
  for (int v = 1; v <= m.size(); ++v) {
    if ((seen >> (v - 1)) & 1u)
      continue;
    std::uint32_t block = 1u << (v - 1);
    std::uint32_t frontier = block;
    while (frontier) {
      int const x = std::countr_zero(frontier) + 1;
      frontier &= frontier - 1;
      std::uint32_t const fresh = m.neighbours(x) & ~block;
      block |= fresh;
      frontier |= fresh;
    }
    seen |= block;
    out.push_back(block);
  }
  return out;
}

Partition components(BinarySymmetricMatrix const &m)
{
  Partition p;
  for (std::uint32_t mask : component_masks(m)) {
    std::vector<int> block;
    for (int v = 1; v <= m.size(); ++v)
      if ((mask >> (v - 1)) & 1u)
        block.push_back(v);
    p.blocks.push_back(std::move(block));
  }
  return p;
}

BinarySymmetricMatrix permute(BinarySymmetricMatrix const &m, Permutation const &sigma)
{
  if (sigma.size() != m.size())
    throw std::invalid_argument("permutation degree does not match matrix size");
  BinarySymmetricMatrix out(m.size());
  for (int i = 1; i <= m.size(); ++i) {
    if (m.circled(i))
      out.set_circle(sigma.image(i));
    for (int j = i + 1; j <= m.size(); ++j)
      if (m.stroke(i, j))
        out.set_stroke(sigma.image(i), sigma.image(j));
  }
  return out;
}

ZWMatrix permute(ZWMatrix const &p, Permutation const &sigma)
{
  return ZWMatrix(permute(p.z(), sigma), permute(p.w(), sigma));
}

CanonicalZ canonical_z(BinarySymmetricMatrix const &m)
{
  std::uint64_t const best = detail::canonical_bits(m);
  return {detail::from_encoding_bits(m.size(), best), CanonicalKey{detail::bits_to_string(best, m.encoding_width())}};
}

CanonicalZW canonical_zw(ZWMatrix const &p, bool swap_colors)
{
  int const n = p.size();
  auto best = detail::minimal_pair_bits(p.z(), p.w());
  if (swap_colors && trace(p.z()) == trace(p.w()))
    best = std::min(best, detail::minimal_pair_bits(p.w(), p.z()));
  ZWMatrix pair(detail::from_encoding_bits(n, best[0]), detail::from_encoding_bits(n, best[1]));
  int const width = p.z().encoding_width();
  return {pair, CanonicalKey{detail::bits_to_string(best[0], width) + detail::bits_to_string(best[1], width)}};
}

std::vector<Edge> classify_edges(ZWMatrix const &p)
{
  std::vector<Edge> edges;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j) {
      bool const a = p.z().stroke(i, j), b = p.w().stroke(i, j);
      if (a && b)
        edges.push_back({i, j, EdgeKind::zw});
      else if (a)
        edges.push_back({i, j, EdgeKind::z});
      else if (b)
        edges.push_back({i, j, EdgeKind::w});
    }
  return edges;
}

char const *to_string(EdgeKind kind)
{
  switch (kind) {
  case EdgeKind::z:
    return "z";
  case EdgeKind::w:
    return "w";
  case EdgeKind::zw:
    return "zw";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Relabeling kernels

namespace detail {

Relabel identity_relabel(int n)
{
  Relabel tau{};
  for (int k = 0; k < n; ++k)
    tau[k] = static_cast<std::uint8_t>(k);
  return tau;
}

std::uint64_t relabeled_bits(BinarySymmetricMatrix const &m, Relabel const &tau)
{
  int const n = m.size();
  std::uint64_t bits = 0;
  for (int k = 0; k < n; ++k)
    bits = (bits << 1) | ((m.row(tau[k] + 1) >> tau[k]) & 1u);
  for (int k = 0; k < n; ++k) {
    std::uint32_t const row = m.row(tau[k] + 1);
    for (int l = k + 1; l < n; ++l)
      bits = (bits << 1) | ((row >> tau[l]) & 1u);
  }
  return bits;
}

bool relabeled_bits_bounded(BinarySymmetricMatrix const &m, Relabel const &tau, std::uint64_t bound,
                            std::uint64_t &out, bool &strictly_less)
{
  int const n = m.size();
  int const width = m.encoding_width();
  std::uint64_t bits = 0;
  int len = 0;
  strictly_less = false;
  auto const push = [&](std::uint64_t bit) {
    bits = (bits << 1) | bit;
    ++len;
    if (strictly_less)
      return true;
    std::uint64_t const prefix = bound >> (width - len);
    if (bits > prefix)
      return false;
    if (bits < prefix)
      strictly_less = true;
    return true;
  };
  for (int k = 0; k < n; ++k)
    if (!push((m.row(tau[k] + 1) >> tau[k]) & 1u))
      return false;
  for (int k = 0; k < n; ++k) {
    std::uint32_t const row = m.row(tau[k] + 1);
    for (int l = k + 1; l < n; ++l)
      if (!push((row >> tau[l]) & 1u))
        return false;
  }
  out = bits;
  return true;
}

BinarySymmetricMatrix from_encoding_bits(int n, std::uint64_t bits)
{
  BinarySymmetricMatrix m(n);
  int pos = m.encoding_width();
  auto const next = [&] { return (bits >> --pos) & 1u; };
  for (int i = 1; i <= n; ++i)
    if (next())
      m.set_circle(i);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (next())
        m.set_stroke(i, j);
  return m;
}

MinimalRelabeling minimal_relabeling(BinarySymmetricMatrix const &m)
{
  int const n = m.size();
  Relabel tau = identity_relabel(n);
  MinimalRelabeling best;
  best.bits = relabeled_bits(m, tau);
  best.minimisers.push_back(tau);
  while (std::next_permutation(tau.begin(), tau.begin() + n)) {
    std::uint64_t bits = 0;
    bool less = false;
    if (!relabeled_bits_bounded(m, tau, best.bits, bits, less))
      continue;
    if (less) {
      best.bits = bits;
      best.minimisers.clear();
    }
    best.minimisers.push_back(tau);
  }
  return best;
}

std::uint64_t canonical_bits(BinarySymmetricMatrix const &m)
{
  int const n = m.size();
  Relabel tau = identity_relabel(n);
  std::uint64_t best = relabeled_bits(m, tau);
  while (std::next_permutation(tau.begin(), tau.begin() + n)) {
    std::uint64_t bits = 0;
    bool less = false;
    if (relabeled_bits_bounded(m, tau, best, bits, less) && less)
      best = bits;
  }
  return best;
}

std::array<std::uint64_t, 2> minimal_pair_bits(BinarySymmetricMatrix const &a, BinarySymmetricMatrix const &b)
{
  int const n = a.size();
  Relabel tau = identity_relabel(n);
  std::array<std::uint64_t, 2> best{relabeled_bits(a, tau), relabeled_bits(b, tau)};
  while (std::next_permutation(tau.begin(), tau.begin() + n)) {
    std::uint64_t bits_a = 0;
    bool less = false;
    if (!relabeled_bits_bounded(a, tau, best[0], bits_a, less))
      continue;
    if (less) {
      best = {bits_a, relabeled_bits(b, tau)};
      continue;
    }
    std::uint64_t bits_b = 0;
    if (relabeled_bits_bounded(b, tau, best[1], bits_b, less) && less)
      best[1] = bits_b;
  }
  return best;
}

std::uint64_t minimal_bits_over(BinarySymmetricMatrix const &b, std::vector<Relabel> const &taus)
{
  std::uint64_t best = relabeled_bits(b, taus.front());
  for (std::size_t t = 1; t < taus.size(); ++t) {
    std::uint64_t bits = 0;
    bool less = false;
    if (relabeled_bits_bounded(b, taus[t], best, bits, less) && less)
      best = bits;
  }
  return best;
}

std::string bits_to_string(std::uint64_t bits, int width)
{
  std::string s(width, '0');
  for (int k = 0; k < width; ++k)
    if ((bits >> (width - 1 - k)) & 1u)
      s[k] = '1';
  return s;
}

} // namespace detail

} // namespace zwdiag
