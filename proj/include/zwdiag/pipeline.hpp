#ifndef ZWDIAG_PIPELINE_HPP
#define ZWDIAG_PIPELINE_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zwdiag/matrix.hpp"
#include "zwdiag/rules.hpp"

namespace zwdiag {

inline constexpr char kToolVersion[] = "1.0.0";

/// Trace classes follow the usual numbering: class 1 holds trace 0, class k
/// holds trace k for k >= 2. Trace 1 never occurs.
constexpr int class_trace(int k) { return k == 1 ? 0 : k; }
constexpr int trace_class(int tr) { return tr == 0 ? 1 : tr; }

/// Per-class cardinalities, index k-1 for class k.
struct StageStats
{
  int n = 0;
  std::vector<std::size_t> s_initial;
  std::vector<std::size_t> s_filtered;
  std::vector<std::size_t> t_sets;
  std::vector<std::size_t> u_sets;
  std::size_t final_count = 0;

  struct Timings
  {
    double candidates = 0;
    double filter_z = 0;
    double w_sets = 0;
    double filter_zw = 0;
  } seconds;
};

struct PipelineOptions
{
  /// Also identify (A|B) with (B|A) when the traces agree.
  bool dedupe_swap = true;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 1;
  /// Order of the pair-stage rules. Any order gives the same result.
  std::vector<RuleId> pair_rules{kPairStageRules.begin(), kPairStageRules.end()};
};

/// Echo of everything that determines the output.
struct RunManifest
{
  std::string tool_version = kToolVersion;
  int n = 0;
  bool dedupe_swap = true;
  std::vector<RuleId> pair_rules;
};

struct DiagramSet
{
  int n = 0;
  /// Canonical pairs, strictly increasing by key.
  std::vector<ZWMatrix> diagrams;
  std::vector<CanonicalKey> keys;
  StageStats stats;
  RunManifest manifest;
};

/// Stage-1 z-candidates of one trace class: the set of vertex-sorted stroke
/// patterns, kept as a bitmap indexed by stroke mask. The diagonal is the
/// fixed 0..01..1 pattern of the class.
class CandidateClass
{
public:
  CandidateClass(int n, int k);

  int n() const { return n_; }
  int class_index() const { return k_; }
  std::uint32_t circle_mask() const { return circles_; }

  std::size_t size() const { return count_; }
  bool contains(std::uint32_t strokes) const { return (bits_[strokes >> 6] >> (strokes & 63)) & 1u; }

  /// Materialised matrices in increasing stroke-mask order.
  std::vector<BinarySymmetricMatrix> matrices() const;

  template <typename F>
  void for_each_mask(F &&f) const
  {
    for (std::size_t word = 0; word < bits_.size(); ++word)
      for (std::uint64_t w = bits_[word]; w; w &= w - 1)
        f(static_cast<std::uint32_t>(word * 64 + static_cast<std::size_t>(std::countr_zero(w))));
  }

private:
  friend CandidateClass generate_z_class(int n, int k, unsigned jobs);

  int n_;
  int k_;
  std::uint32_t circles_;
  std::vector<std::uint64_t> bits_;
  std::size_t count_ = 0;
};

/// Circle mask of the class-k diagonal (last trace(k) vertices circled).
std::uint32_t class_circle_mask(int n, int k);

/// Step 1 for one class: every stroke pattern, vertices stably sorted by
/// (circle, column sum), duplicates dropped.
CandidateClass generate_z_class(int n, int k, unsigned jobs = 1);

/// Step 1 for all classes. Throws std::invalid_argument unless 3 <= n <= 8.
std::vector<CandidateClass> generate_z_candidates(int n, unsigned jobs = 1);

/// Step 2 on one class: column sums, first triangle rule, trace-0 minors,
/// then one canonical representative per orbit, sorted by encoding.
std::vector<BinarySymmetricMatrix> filter_z_class(CandidateClass const &cls, unsigned jobs = 1);
std::vector<std::vector<BinarySymmetricMatrix>> filter_z(std::vector<CandidateClass> const &classes,
                                                         unsigned jobs = 1);

/// Step 3a: T_k is the union of the full orbits of S_k, sorted by encoding.
std::vector<std::vector<BinarySymmetricMatrix>>
generate_w_sets(std::vector<std::vector<BinarySymmetricMatrix>> const &filtered);

/// Step 3b: U_k = S_k x (T_k u ... u T_n), materialised.
std::vector<std::vector<ZWMatrix>> match_zw(std::vector<std::vector<BinarySymmetricMatrix>> const &filtered,
                                            std::vector<std::vector<BinarySymmetricMatrix>> const &w_sets);

/// Step 4 over materialised U classes: pair rules, then dedup by canonical_zw.
DiagramSet filter_zw(int n, std::vector<std::vector<ZWMatrix>> const &u_classes,
                     PipelineOptions const &options = {});

/// Steps 1-4. Step 3b is streamed; U is never materialised.
DiagramSet run_pipeline(int n, PipelineOptions const &options = {});

/// Intermediate sets of a run, for stage dumps.
struct StageArtifacts
{
  std::vector<CandidateClass> candidates;
  std::vector<std::vector<BinarySymmetricMatrix>> filtered;
  std::vector<std::vector<BinarySymmetricMatrix>> w_sets;
};

DiagramSet run_pipeline(int n, PipelineOptions const &options, StageArtifacts *artifacts);

} // namespace zwdiag

#endif
