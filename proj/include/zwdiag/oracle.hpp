#ifndef ZWDIAG_ORACLE_HPP
#define ZWDIAG_ORACLE_HPP

#include <span>
#include <vector>

#include "zwdiag/matrix.hpp"
#include "zwdiag/pipeline.hpp"

namespace zwdiag::oracle {

inline constexpr int kMaxBruteForceVertices = 4;

/// {permute(m, sigma) : sigma in S_n}, duplicate-free, sorted by encoding.
std::vector<BinarySymmetricMatrix> orbit_expand(BinarySymmetricMatrix const &m);

/// Every (A|B) with traces not 1 and trace(A) <= trace(B) that passes all
/// eleven rules, canonicalized and deduplicated. No staging.
/// Throws std::invalid_argument when n > 4.
DiagramSet brute_force_pipeline(int n, bool dedupe_swap = true);

/// card_U[k] == card_S[k] * sum_{j>=k} card_T[j] for every class. When the
/// filtered classes are given, also card_T[k] == sum of their orbit sizes.
bool verify_stage_identities(StageStats const &stats,
                             std::span<std::vector<BinarySymmetricMatrix> const> filtered = {});

} // namespace zwdiag::oracle

#endif
