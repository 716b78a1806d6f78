#include "zwdiag/pipeline.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "canon_detail.hpp"
#include "parallel.hpp"

namespace zwdiag {

namespace {

using Clock = std::chrono::steady_clock;
using PairBits = std::array<std::uint64_t, 2>;

constexpr std::size_t kChunks = 256;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_range(int n)
{
  if (n < kMinVertices || n > kMaxVertices)
    throw std::invalid_argument("n must lie in [3, 8], got " + std::to_string(n));
}

/// Pair endpoints and the reverse lookup, 0-based.
struct PairTable
{
  std::array<std::uint8_t, 28> lo{};
  std::array<std::uint8_t, 28> hi{};
  std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> index{};

  explicit PairTable(int n)
  {
    int t = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++t) {
        lo[t] = static_cast<std::uint8_t>(i);
        hi[t] = static_cast<std::uint8_t>(j);
        index[i][j] = index[j][i] = static_cast<std::uint8_t>(t);
      }
  }
};

/// Stroke mask after stably sorting vertices by (circle, column sum).
std::uint32_t sorted_stroke_mask(int n, std::uint32_t circles, std::uint32_t strokes, PairTable const &pairs)
{
  std::array<int, kMaxVertices> key{};
  for (int v = 0; v < n; ++v)
    key[v] = static_cast<int>((circles >> v) & 1u) * 16 + static_cast<int>((circles >> v) & 1u);
  for (std::uint32_t rest = strokes; rest; rest &= rest - 1) {
    int const t = std::countr_zero(rest);
    ++key[pairs.lo[t]];
    ++key[pairs.hi[t]];
  }
  std::array<std::uint8_t, kMaxVertices> rank{};
  for (int v = 0; v < n; ++v) {
    int r = 0;
    for (int u = 0; u < n; ++u)
      r += key[u] < key[v] || (key[u] == key[v] && u < v);
    rank[v] = static_cast<std::uint8_t>(r);
  }
  std::uint32_t out = 0;
  for (std::uint32_t rest = strokes; rest; rest &= rest - 1) {
    int const t = std::countr_zero(rest);
    out |= 1u << pairs.index[rank[pairs.lo[t]]][rank[pairs.hi[t]]];
  }
  return out;
}

std::vector<BinarySymmetricMatrix> sorted_unique(std::vector<std::uint64_t> bits, int n)
{
  std::sort(bits.begin(), bits.end());
  bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
  std::vector<BinarySymmetricMatrix> out;
  out.reserve(bits.size());
  for (std::uint64_t b : bits)
    out.push_back(detail::from_encoding_bits(n, b));
  return out;
}

std::vector<BinarySymmetricMatrix> orbit_by_transpositions(BinarySymmetricMatrix const &m)
{
  int const n = m.size();
  std::vector<Permutation> generators;
  for (int i = 1; i < n; ++i) {
    std::vector<int> images(n);
    for (int v = 1; v <= n; ++v)
      images[v - 1] = v == i ? i + 1 : v == i + 1 ? i : v;
    generators.emplace_back(std::move(images));
  }
  std::unordered_set<std::uint64_t> seen{m.encode_bits()};
  std::vector<BinarySymmetricMatrix> orbit{m};
  std::deque<BinarySymmetricMatrix> queue{m};
  while (!queue.empty()) {
    BinarySymmetricMatrix const current = queue.front();
    queue.pop_front();
    for (auto const &g : generators) {
      BinarySymmetricMatrix next = permute(current, g);
      if (seen.insert(next.encode_bits()).second) {
        orbit.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return orbit;
}

/// Canonical key of (A|B) with A already canonical; `automorphisms` are the
/// relabelings fixing A.
PairBits pair_key(BinarySymmetricMatrix const &a, std::uint64_t a_bits,
                  std::vector<detail::Relabel> const &automorphisms, BinarySymmetricMatrix const &b, bool swap)
{
  PairBits key{a_bits, detail::minimal_bits_over(b, automorphisms)};
  if (swap && trace(a) == trace(b))
    key = std::min(key, detail::minimal_pair_bits(b, a));
  return key;
}

void fill_result(DiagramSet &out, std::vector<PairBits> keys)
{
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  int const n = out.n;
  int const width = n + pair_count(n);
  out.diagrams.clear();
  out.keys.clear();
  for (auto const &k : keys) {
    out.diagrams.emplace_back(detail::from_encoding_bits(n, k[0]), detail::from_encoding_bits(n, k[1]));
    out.keys.push_back(CanonicalKey{detail::bits_to_string(k[0], width) + detail::bits_to_string(k[1], width)});
  }
  out.stats.final_count = out.diagrams.size();
}

bool passes_pair_rules(ZWMatrix const &p, std::vector<RuleId> const &rules)
{
  return passes_all(p, rules);
}

} // namespace

// ---------------------------------------------------------------------------
// Step 1

std::uint32_t class_circle_mask(int n, int k)
{
  int const tr = class_trace(k);
  std::uint32_t const all = (1u << n) - 1;
  return all & ~((1u << (n - tr)) - 1);
}

CandidateClass::CandidateClass(int n, int k) : n_(n), k_(k), circles_(0)
{
  check_range(n);
  if (k < 1 || k > n)
    throw std::invalid_argument("trace class " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  circles_ = class_circle_mask(n, k);
  std::size_t const patterns = std::size_t{1} << pair_count(n);
  bits_.assign((patterns + 63) / 64, 0);
}

std::vector<BinarySymmetricMatrix> CandidateClass::matrices() const
{
  std::vector<BinarySymmetricMatrix> out;
  out.reserve(count_);
  for_each_mask([&](std::uint32_t strokes) { out.push_back(BinarySymmetricMatrix::from_masks(n_, circles_, strokes)); });
  return out;
}

CandidateClass generate_z_class(int n, int k, unsigned jobs)
{
  CandidateClass cls(n, k);
  PairTable const pairs(n);
  std::size_t const patterns = std::size_t{1} << pair_count(n);
  std::uint32_t const circles = cls.circles_;
  auto &bits = cls.bits_;
  detail::parallel_chunks(patterns, kChunks, jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      std::uint32_t const sorted = sorted_stroke_mask(n, circles, static_cast<std::uint32_t>(s), pairs);
      std::atomic_ref<std::uint64_t>(bits[sorted >> 6]).fetch_or(std::uint64_t{1} << (sorted & 63),
                                                                 std::memory_order_relaxed);
    }
  });
  std::size_t count = 0;
  for (std::uint64_t w : bits)
    count += static_cast<std::size_t>(std::popcount(w));
  cls.count_ = count;
  return cls;
}

std::vector<CandidateClass> generate_z_candidates(int n, unsigned jobs)
{
  check_range(n);
  std::vector<CandidateClass> out;
  for (int k = 1; k <= n; ++k)
    out.push_back(generate_z_class(n, k, jobs));
  return out;
}

// ---------------------------------------------------------------------------
// Step 2

std::vector<BinarySymmetricMatrix> filter_z_class(CandidateClass const &cls, unsigned jobs)
{
  int const n = cls.n();
  std::size_t const patterns = std::size_t{1} << pair_count(n);
  std::vector<std::vector<std::uint64_t>> found(kChunks);
  detail::parallel_chunks(patterns, kChunks, jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      auto const strokes = static_cast<std::uint32_t>(s);
      if (!cls.contains(strokes))
        continue;
      auto const m = BinarySymmetricMatrix::from_masks(n, cls.circle_mask(), strokes);
      if (holds(m, RuleId::column_sums) && holds(m, RuleId::triangle1) && holds(m, RuleId::trace0_minors))
        found[chunk].push_back(detail::canonical_bits(m));
    }
  });
  std::vector<std::uint64_t> all;
  for (auto &f : found)
    all.insert(all.end(), f.begin(), f.end());
  return sorted_unique(std::move(all), n);
}

std::vector<std::vector<BinarySymmetricMatrix>> filter_z(std::vector<CandidateClass> const &classes, unsigned jobs)
{
  std::vector<std::vector<BinarySymmetricMatrix>> out;
  for (auto const &cls : classes)
    out.push_back(filter_z_class(cls, jobs));
  return out;
}

// ---------------------------------------------------------------------------
// Step 3

std::vector<std::vector<BinarySymmetricMatrix>>
generate_w_sets(std::vector<std::vector<BinarySymmetricMatrix>> const &filtered)
{
  std::vector<std::vector<BinarySymmetricMatrix>> out;
  for (auto const &cls : filtered) {
    std::vector<std::uint64_t> bits;
    int n = 0;
    for (auto const &m : cls) {
      n = m.size();
      for (auto const &image : orbit_by_transpositions(m))
        bits.push_back(image.encode_bits());
    }
    out.push_back(n ? sorted_unique(std::move(bits), n) : std::vector<BinarySymmetricMatrix>{});
  }
  return out;
}

std::vector<std::vector<ZWMatrix>> match_zw(std::vector<std::vector<BinarySymmetricMatrix>> const &filtered,
                                            std::vector<std::vector<BinarySymmetricMatrix>> const &w_sets)
{
  if (filtered.size() != w_sets.size())
    throw std::invalid_argument("z classes and w sets differ in count");
  std::vector<std::vector<ZWMatrix>> out(filtered.size());
  for (std::size_t k = 0; k < filtered.size(); ++k)
    for (auto const &a : filtered[k])
      for (std::size_t j = k; j < w_sets.size(); ++j)
        for (auto const &b : w_sets[j])
          out[k].emplace_back(a, b);
  return out;
}

// ---------------------------------------------------------------------------
// Step 4

DiagramSet filter_zw(int n, std::vector<std::vector<ZWMatrix>> const &u_classes, PipelineOptions const &options)
{
  check_range(n);
  auto const start = Clock::now();
  DiagramSet out;
  out.n = n;
  out.manifest = {kToolVersion, n, options.dedupe_swap, options.pair_rules};
  out.stats.n = n;
  std::vector<PairBits> keys;
  for (auto const &cls : u_classes) {
    out.stats.u_sets.push_back(cls.size());
    std::vector<std::vector<PairBits>> found(kChunks);
    detail::parallel_chunks(cls.size(), kChunks, options.jobs,
                            [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                              for (std::size_t i = begin; i < end; ++i)
                                if (passes_pair_rules(cls[i], options.pair_rules)) {
                                  auto const c = canonical_zw(cls[i], options.dedupe_swap);
                                  found[chunk].push_back({c.pair.z().encode_bits(), c.pair.w().encode_bits()});
                                }
                            });
    for (auto &f : found)
      keys.insert(keys.end(), f.begin(), f.end());
  }
  fill_result(out, std::move(keys));
  out.stats.seconds.filter_zw = seconds_since(start);
  return out;
}

DiagramSet run_pipeline(int n, PipelineOptions const &options) { return run_pipeline(n, options, nullptr); }

DiagramSet run_pipeline(int n, PipelineOptions const &options, StageArtifacts *artifacts)
{
  check_range(n);
  DiagramSet out;
  out.n = n;
  out.manifest = {kToolVersion, n, options.dedupe_swap, options.pair_rules};
  StageStats &stats = out.stats;
  stats.n = n;

  // Steps 1-2, one class at a time so the stage-1 bitmaps never coexist.
  std::vector<std::vector<BinarySymmetricMatrix>> filtered;
  for (int k = 1; k <= n; ++k) {
    auto t0 = Clock::now();
    CandidateClass cls = generate_z_class(n, k, options.jobs);
    stats.seconds.candidates += seconds_since(t0);
    stats.s_initial.push_back(cls.size());

    t0 = Clock::now();
    filtered.push_back(filter_z_class(cls, options.jobs));
    stats.seconds.filter_z += seconds_since(t0);
    stats.s_filtered.push_back(filtered.back().size());
    if (artifacts)
      artifacts->candidates.push_back(std::move(cls));
  }

  auto t0 = Clock::now();
  auto w_sets = generate_w_sets(filtered);
  stats.seconds.w_sets = seconds_since(t0);
  for (auto const &t : w_sets)
    stats.t_sets.push_back(t.size());

  // Steps 3b-4 streamed: each A in S_k against T_k u ... u T_n.
  t0 = Clock::now();
  std::vector<PairBits> keys;
  for (int k = 1; k <= n; ++k) {
    std::vector<BinarySymmetricMatrix const *> partners;
    for (int j = k; j <= n; ++j)
      for (auto const &b : w_sets[j - 1])
        partners.push_back(&b);
    stats.u_sets.push_back(filtered[k - 1].size() * partners.size());

    for (auto const &a : filtered[k - 1]) {
      auto const fixing = detail::minimal_relabeling(a);
      std::uint64_t const a_bits = a.encode_bits();
      std::vector<std::vector<PairBits>> found(kChunks);
      detail::parallel_chunks(partners.size(), kChunks, options.jobs,
                              [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                                for (std::size_t i = begin; i < end; ++i) {
                                  ZWMatrix const p(a, *partners[i]);
                                  if (passes_pair_rules(p, options.pair_rules))
                                    found[chunk].push_back(
                                      pair_key(a, a_bits, fixing.minimisers, *partners[i], options.dedupe_swap));
                                }
                              });
      for (auto &f : found)
        keys.insert(keys.end(), f.begin(), f.end());
    }
  }
  fill_result(out, std::move(keys));
  stats.seconds.filter_zw = seconds_since(t0);

  if (artifacts) {
    artifacts->filtered = filtered;
    artifacts->w_sets = std::move(w_sets);
  }
  return out;
}

} // namespace zwdiag
