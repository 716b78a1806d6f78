#include "zwdiag/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "zwdiag/rules.hpp"

namespace zwdiag::oracle {

std::vector<BinarySymmetricMatrix> orbit_expand(BinarySymmetricMatrix const &m)
{
  std::set<std::string> seen;
  std::vector<BinarySymmetricMatrix> out;
  for (auto const &sigma : all_permutations(m.size())) {
    BinarySymmetricMatrix image = permute(m, sigma);
    if (seen.insert(image.encode()).second)
      out.push_back(image);
  }
  std::sort(out.begin(), out.end(), [](auto const &a, auto const &b) { return a.encode() < b.encode(); });
  return out;
}

DiagramSet brute_force_pipeline(int n, bool dedupe_swap)
{
  if (n < kMinVertices || n > kMaxBruteForceVertices)
    throw std::invalid_argument("brute force is limited to 3 <= n <= 4, got " + std::to_string(n));

  std::uint32_t const circle_patterns = 1u << n;
  std::uint32_t const stroke_patterns = 1u << pair_count(n);
  std::vector<BinarySymmetricMatrix> all;
  for (std::uint32_t c = 0; c < circle_patterns; ++c)
    for (std::uint32_t s = 0; s < stroke_patterns; ++s)
      all.push_back(BinarySymmetricMatrix::from_masks(n, c, s));

  std::map<CanonicalKey, ZWMatrix> found;
  for (auto const &a : all) {
    int const ta = trace(a);
    if (ta == 1)
      continue;
    for (auto const &b : all) {
      int const tb = trace(b);
      if (tb == 1 || ta > tb)
        continue;
      ZWMatrix const p(a, b);
      if (!passes_all(p, kAllRules))
        continue;
      auto canonical = canonical_zw(p, dedupe_swap);
      found.emplace(std::move(canonical.key), canonical.pair);
    }
  }

  DiagramSet out;
  out.n = n;
  out.manifest.n = n;
  out.manifest.dedupe_swap = dedupe_swap;
  out.manifest.pair_rules.assign(kAllRules.begin(), kAllRules.end());
  out.stats.n = n;
  for (auto &[key, pair] : found) {
    out.keys.push_back(key);
    out.diagrams.push_back(pair);
  }
  out.stats.final_count = out.diagrams.size();
  return out;
}

bool verify_stage_identities(StageStats const &stats, std::span<std::vector<BinarySymmetricMatrix> const> filtered)
{
  std::size_t const classes = stats.s_filtered.size();
  if (stats.t_sets.size() != classes || stats.u_sets.size() != classes)
    return false;
  for (std::size_t k = 0; k < classes; ++k) {
    std::size_t partners = 0;
    for (std::size_t j = k; j < classes; ++j)
      partners += stats.t_sets[j];
    if (stats.u_sets[k] != stats.s_filtered[k] * partners)
      return false;
  }
  if (filtered.empty())
    return true;
  if (filtered.size() != classes)
    return false;
  for (std::size_t k = 0; k < classes; ++k) {
    if (filtered[k].size() != stats.s_filtered[k])
      return false;
    std::size_t orbit_total = 0;
    for (auto const &m : filtered[k])
      orbit_total += orbit_expand(m).size();
    if (orbit_total != stats.t_sets[k])
      return false;
  }
  return true;
}

} // namespace zwdiag::oracle
