#ifndef ZWDIAG_IO_HPP
#define ZWDIAG_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zwdiag/annotate.hpp"
#include "zwdiag/matrix.hpp"
#include "zwdiag/pipeline.hpp"

namespace zwdiag::io {

using nlohmann::json;

// JSON is the interchange format; every reader throws std::invalid_argument
// on malformed input.

/// {"diag":[0/1...],"strokes":[[i,j],...]}, strokes sorted row-major.
json to_json(BinarySymmetricMatrix const &m);
BinarySymmetricMatrix matrix_from_json(json const &j, int n);

/// {"n":5,"z":{...},"w":{...}}
json to_json(ZWMatrix const &p);
ZWMatrix pair_from_json(json const &j);

json to_json(StageStats const &stats);
json to_json(RunManifest const &manifest);
json to_json(Constraint const &c);

/// Whole result document, one diagram per line. Byte-stable for equal input.
std::string write_diagram_set(DiagramSet const &set);

/// Accepts a diagram-set document, a single pair document, or an array of
/// pair documents.
std::vector<ZWMatrix> read_diagrams(std::string_view text);

/// DOT graph for one pair; z in red solid, w in blue dashed.
std::string render_dot(ZWMatrix const &p, std::string_view name = "zw");
std::string render_dot(std::vector<ZWMatrix> const &diagrams);

/// Stage counts followed by one line per diagram, ending in "total: <count>".
std::string render_table(DiagramSet const &set);
std::string render_stage_counts(StageStats const &stats);
std::string render_timings(StageStats const &stats, unsigned jobs);

/// "P-LI z {1,2,3}: G1*G2 + G1*G3 + G2*G3 = 0 [any]"
std::string to_text(Constraint const &c);

/// Per-diagram constraint lists, as JSON or text.
std::string write_constraints(std::vector<ZWMatrix> const &diagrams, bool as_json);

/// One file per stage and class, one sorted encoding per line.
void write_stage_dump(std::filesystem::path const &dir, DiagramSet const &set, StageArtifacts const &artifacts);

} // namespace zwdiag::io

#endif
