#ifndef ZWDIAG_CANON_DETAIL_HPP
#define ZWDIAG_CANON_DETAIL_HPP

// Bit-level relabeling kernels shared by matrix-core and the pipeline.

#include <array>
#include <cstdint>
#include <vector>

#include "zwdiag/matrix.hpp"

namespace zwdiag::detail {

/// tau[k] = old vertex (0-based) placed at new position k, i.e. sigma^-1.
using Relabel = std::array<std::uint8_t, kMaxVertices>;

Relabel identity_relabel(int n);

/// Encoding bits of the matrix relabeled by tau.
std::uint64_t relabeled_bits(BinarySymmetricMatrix const &m, Relabel const &tau);

/// Like relabeled_bits, but gives up (returns false) once the prefix exceeds
/// the matching prefix of `bound`. `strictly_less` reports whether the
/// result ended strictly below `bound`.
bool relabeled_bits_bounded(BinarySymmetricMatrix const &m, Relabel const &tau,
                            std::uint64_t bound, std::uint64_t &out, bool &strictly_less);

BinarySymmetricMatrix from_encoding_bits(int n, std::uint64_t bits);

/// Minimal relabeled key of one matrix over all n! relabelings, plus every
/// relabeling achieving it.
struct MinimalRelabeling
{
  std::uint64_t bits = 0;
  std::vector<Relabel> minimisers;
};

MinimalRelabeling minimal_relabeling(BinarySymmetricMatrix const &m);

/// Just the minimal bits of `minimal_relabeling`.
std::uint64_t canonical_bits(BinarySymmetricMatrix const &m);

/// Minimal (enc(a), enc(b)) over all n! simultaneous relabelings.
std::array<std::uint64_t, 2> minimal_pair_bits(BinarySymmetricMatrix const &a,
                                               BinarySymmetricMatrix const &b);

/// Minimal enc(b) over the given relabelings.
std::uint64_t minimal_bits_over(BinarySymmetricMatrix const &b, std::vector<Relabel> const &taus);

std::string bits_to_string(std::uint64_t bits, int width);

} // namespace zwdiag::detail

#endif
