#ifndef ZWDIAG_MATRIX_HPP
#define ZWDIAG_MATRIX_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zwdiag {

inline constexpr int kMinVertices = 3;
inline constexpr int kMaxVertices = 8;

/// Number of vertex pairs (i<j) for n vertices.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Row-major position of pair (i,j), 1-based, i != j.
constexpr int pair_index(int n, int i, int j)
{
  if (i > j) {
    int t = i;
    i = j;
    j = t;
  }
  // pairs (1,2)..(1,n) come first, then (2,3)..
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

/// Permutation of {1..n}; `image(i)` is sigma(i).
class Permutation
{
public:
  /// Throws std::invalid_argument unless `images` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;

  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(Permutation const &other) const;

  friend bool operator==(Permutation const &, Permutation const &) = default;

private:
  std::vector<int> images_;
};

/// All n! permutations of {1..n} in lexicographic order of image vectors.
std::vector<Permutation> all_permutations(int n);

/// Symmetric 0/1 matrix on n vertices. Diagonal bits are circles, off-diagonal
/// bits are strokes. Only one bit per unordered pair exists, so a_ij == a_ji.
class BinarySymmetricMatrix
{
public:
  /// The zero matrix. Throws std::invalid_argument if n is outside [3, 8].
  explicit BinarySymmetricMatrix(int n);

  /// `circles` bit v-1 marks vertex v; `strokes` bit t marks the t-th pair in
  /// row-major order, t = 0 being (1,2).
  static BinarySymmetricMatrix from_masks(int n, std::uint32_t circles, std::uint32_t strokes);

  /// Inverse of `encode()`. Throws std::invalid_argument on a malformed string.
  static BinarySymmetricMatrix decode(int n, std::string_view bits);

  /// Compact literal, e.g. "M(n=5; d=00011; s=12,45)". Braces and "∅" are
  /// accepted around the stroke list.
  static BinarySymmetricMatrix parse_compact(std::string_view text);

  int size() const { return n_; }
  bool circled(int i) const { return (rows_[i - 1] >> (i - 1)) & 1u; }
  bool stroke(int i, int j) const { return i != j && ((rows_[i - 1] >> (j - 1)) & 1u); }
  /// a_ij including the diagonal.
  bool at(int i, int j) const { return (rows_[i - 1] >> (j - 1)) & 1u; }

  BinarySymmetricMatrix &set_circle(int i, bool on = true);
  BinarySymmetricMatrix &set_stroke(int i, int j, bool on = true);

  /// Bit i-1 set for every circled vertex i.
  std::uint32_t circle_mask() const;
  /// Adjacency row of vertex i (bit j-1 = a_ij), diagonal included.
  std::uint32_t row(int i) const { return rows_[i - 1]; }
  /// Same as row(i) with the diagonal bit cleared.
  std::uint32_t neighbours(int i) const { return rows_[i - 1] & ~(1u << (i - 1)); }
  /// Stroke bits in row-major pair order (bit t = t-th pair).
  std::uint32_t stroke_mask() const;
  int stroke_count() const;

  /// d_1..d_n s_(1,2)..s_(n-1,n) as '0'/'1' characters.
  std::string encode() const;
  /// The encoding read as a binary number, d_1 most significant.
  std::uint64_t encode_bits() const;
  /// n + n(n-1)/2.
  int encoding_width() const { return n_ + pair_count(n_); }

  std::string to_compact() const;

  friend bool operator==(BinarySymmetricMatrix const &, BinarySymmetricMatrix const &) = default;

private:
  int n_;
  std::array<std::uint8_t, kMaxVertices> rows_{};
};

/// The pair (A|B): z-matrix and w-matrix of one candidate diagram.
class ZWMatrix
{
public:
  /// Throws std::invalid_argument if the dimensions differ.
  ZWMatrix(BinarySymmetricMatrix z, BinarySymmetricMatrix w);

  int size() const { return z_.size(); }
  BinarySymmetricMatrix const &z() const { return z_; }
  BinarySymmetricMatrix const &w() const { return w_; }

  /// "N=<n>;A=<enc>;B=<enc>".
  std::string encode() const;
  static ZWMatrix decode(std::string_view text);

  friend bool operator==(ZWMatrix const &, ZWMatrix const &) = default;

private:
  BinarySymmetricMatrix z_;
  BinarySymmetricMatrix w_;
};

/// Lexicographically minimal encoding over the admitted symmetry group.
struct CanonicalKey
{
  std::string bits;

  friend auto operator<=>(CanonicalKey const &, CanonicalKey const &) = default;
};

/// Disjoint vertex blocks covering {1..n}, each sorted, ordered by first vertex.
struct Partition
{
  std::vector<std::vector<int>> blocks;

  friend bool operator==(Partition const &, Partition const &) = default;
};

enum class EdgeKind { z, w, zw };

struct Edge
{
  int i;
  int j;
  EdgeKind kind;

  friend bool operator==(Edge const &, Edge const &) = default;
};

std::vector<int> column_sums(BinarySymmetricMatrix const &m);
int trace(BinarySymmetricMatrix const &m);

Partition components(BinarySymmetricMatrix const &m);
/// Same as `components`, one vertex bitmask per block.
std::vector<std::uint32_t> component_masks(BinarySymmetricMatrix const &m);

/// a'_{sigma(i) sigma(j)} = a_ij. Throws std::invalid_argument on a size mismatch.
BinarySymmetricMatrix permute(BinarySymmetricMatrix const &m, Permutation const &sigma);
ZWMatrix permute(ZWMatrix const &p, Permutation const &sigma);

struct CanonicalZ
{
  BinarySymmetricMatrix matrix;
  CanonicalKey key;
};

struct CanonicalZW
{
  ZWMatrix pair;
  CanonicalKey key;
};

/// Orbit representative with minimal encoding over all n! relabelings.
CanonicalZ canonical_z(BinarySymmetricMatrix const &m);

/// Minimal enc(A)‖enc(B) over simultaneous relabelings. With `swap_colors`
/// and equal traces the exchanged pair (B|A) is admitted as well.
CanonicalZW canonical_zw(ZWMatrix const &p, bool swap_colors = false);

std::vector<Edge> classify_edges(ZWMatrix const &p);

char const *to_string(EdgeKind kind);

} // namespace zwdiag

#endif
