#include "zwdiag/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zwdiag::io {

namespace {

std::invalid_argument malformed(std::string const &what) { return std::invalid_argument("malformed input: " + what); }

int expect_int(json const &j, char const *what)
{
  if (!j.is_number_integer())
    throw malformed(std::string(what) + " is not an integer");
  return j.get<int>();
}

std::string vertex_list(std::vector<int> const &vs)
{
  std::string s = "{";
  for (std::size_t k = 0; k < vs.size(); ++k)
    s += (k ? "," : "") + std::to_string(vs[k]);
  return s + "}";
}

std::string padded(std::string s, std::size_t width)
{
  if (s.size() < width)
    s.append(width - s.size(), ' ');
  return s;
}

std::string count_row(std::string const &label, std::vector<std::size_t> const &values)
{
  std::string row = padded(label, 12);
  for (auto v : values) {
    std::string cell = std::to_string(v);
    row += std::string(cell.size() < 8 ? 8 - cell.size() : 1, ' ') + cell;
  }
  return row + "\n";
}

void write_lines(std::filesystem::path const &file, std::vector<std::string> lines)
{
  std::sort(lines.begin(), lines.end());
  std::ofstream out(file);
  if (!out)
    throw std::runtime_error("cannot write " + file.string());
  for (auto const &l : lines)
    out << l << '\n';
}

} // namespace

json to_json(BinarySymmetricMatrix const &m)
{
  json diag = json::array();
  json strokes = json::array();
  for (int i = 1; i <= m.size(); ++i) {
    diag.push_back(m.circled(i) ? 1 : 0);
    for (int j = i + 1; j <= m.size(); ++j)
      if (m.stroke(i, j))
        strokes.push_back({i, j});
  }
  return {{"diag", diag}, {"strokes", strokes}};
}

BinarySymmetricMatrix matrix_from_json(json const &j, int n)
{
  if (!j.is_object() || !j.contains("diag") || !j.contains("strokes"))
    throw malformed("matrix needs \"diag\" and \"strokes\"");
  json const &diag = j.at("diag");
  json const &strokes = j.at("strokes");
  if (!diag.is_array() || static_cast<int>(diag.size()) != n)
    throw malformed("\"diag\" must hold " + std::to_string(n) + " entries");
  if (!strokes.is_array())
    throw malformed("\"strokes\" must be an array");
  BinarySymmetricMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    int const bit = expect_int(diag[i - 1], "diag entry");
    if (bit != 0 && bit != 1)
      throw malformed("diag entries must be 0 or 1");
    m.set_circle(i, bit == 1);
  }
  for (json const &s : strokes) {
    if (!s.is_array() || s.size() != 2)
      throw malformed("each stroke must be a pair [i,j]");
    int const a = expect_int(s[0], "stroke end");
    int const b = expect_int(s[1], "stroke end");
    if (a < 1 || b < 1 || a > n || b > n || a == b)
      throw malformed("stroke [" + std::to_string(a) + "," + std::to_string(b) + "] out of range");
    m.set_stroke(a, b);
  }
  return m;
}

json to_json(ZWMatrix const &p) { return {{"n", p.size()}, {"z", to_json(p.z())}, {"w", to_json(p.w())}}; }

ZWMatrix pair_from_json(json const &j)
{
  if (!j.is_object() || !j.contains("n") || !j.contains("z") || !j.contains("w"))
    throw malformed("pair needs \"n\", \"z\" and \"w\"");
  int const n = expect_int(j.at("n"), "n");
  if (n < kMinVertices || n > kMaxVertices)
    throw malformed("n = " + std::to_string(n) + " outside [3, 8]");
  return ZWMatrix(matrix_from_json(j.at("z"), n), matrix_from_json(j.at("w"), n));
}

json to_json(StageStats const &stats)
{
  return {{"s_initial", stats.s_initial}, {"s_filtered", stats.s_filtered}, {"t", stats.t_sets},
          {"u", stats.u_sets},            {"final", stats.final_count}};
}

json to_json(RunManifest const &manifest)
{
  json rules = json::array();
  for (RuleId id : manifest.pair_rules)
    rules.push_back(std::string(to_string(id)));
  return {{"tool_version", manifest.tool_version},
          {"n", manifest.n},
          {"dedupe_swap", manifest.dedupe_swap},
          {"pair_rules", rules}};
}

json to_json(Constraint const &c)
{
  json poly = json::array();
  int const n = c.poly.variables();
  for (auto const &[mono, coeff] : c.poly.terms()) {
    json exponents = json::array();
    for (int k = 0; k < n; ++k)
      exponents.push_back(mono[k]);
    poly.push_back({coeff, exponents});
  }
  return {{"pattern", std::string(to_string(c.pattern))},
          {"color", std::string(to_string(c.color))},
          {"vertices", c.vertices},
          {"kind", std::string(to_string(c.kind))},
          {"branch", std::string(to_string(c.branch))},
          {"poly", poly}};
}

std::string write_diagram_set(DiagramSet const &set)
{
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(set.n) + ",\n";
  out += "  \"manifest\": " + to_json(set.manifest).dump() + ",\n";
  out += "  \"stats\": " + to_json(set.stats).dump() + ",\n";
  out += "  \"total\": " + std::to_string(set.diagrams.size()) + ",\n";
  out += "  \"diagrams\": [";
  for (std::size_t k = 0; k < set.diagrams.size(); ++k) {
    json entry = to_json(set.diagrams[k]);
    entry["key"] = set.diagrams[k].encode();
    out += (k ? ",\n    " : "\n    ") + entry.dump();
  }
  out += set.diagrams.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::vector<ZWMatrix> read_diagrams(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::exception const &e) {
    throw malformed(e.what());
  }
  std::vector<ZWMatrix> out;
  json const *list = nullptr;
  if (doc.is_object() && doc.contains("diagrams"))
    list = &doc.at("diagrams");
  else if (doc.is_array())
    list = &doc;
  if (!list) {
    out.push_back(pair_from_json(doc));
    return out;
  }
  if (!list->is_array())
    throw malformed("\"diagrams\" must be an array");
  for (json const &entry : *list)
    out.push_back(pair_from_json(entry));
  return out;
}

std::string render_dot(ZWMatrix const &p, std::string_view name)
{
  std::string out = "graph " + std::string(name) + " {\n";
  out += "  node [shape=circle];\n";
  for (int v = 1; v <= p.size(); ++v) {
    bool const zc = p.z().circled(v), wc = p.w().circled(v);
    out += "  " + std::to_string(v);
    if (zc && wc)
      out += " [color=\"red:blue\", style=dashed, peripheries=3]";
    else if (zc)
      out += " [color=red, peripheries=2]";
    else if (wc)
      out += " [color=blue, style=dashed, peripheries=2]";
    out += ";\n";
  }
  for (auto const &e : classify_edges(p)) {
    std::string const ends = "  " + std::to_string(e.i) + " -- " + std::to_string(e.j);
    if (e.kind != EdgeKind::w)
      out += ends + " [color=red];\n";
    if (e.kind != EdgeKind::z)
      out += ends + " [color=blue, style=dashed];\n";
  }
  return out + "}\n";
}

std::string render_dot(std::vector<ZWMatrix> const &diagrams)
{
  std::string out;
  for (std::size_t k = 0; k < diagrams.size(); ++k)
    out += render_dot(diagrams[k], "D" + std::to_string(k + 1));
  return out;
}

std::string render_stage_counts(StageStats const &stats)
{
  std::vector<std::size_t> traces;
  for (int k = 1; k <= stats.n; ++k)
    traces.push_back(static_cast<std::size_t>(class_trace(k)));
  std::string out = count_row("trace", traces);
  out += count_row("S initial", stats.s_initial);
  out += count_row("S filtered", stats.s_filtered);
  out += count_row("T", stats.t_sets);
  out += count_row("U", stats.u_sets);
  return out;
}

std::string render_timings(StageStats const &stats, unsigned jobs)
{
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "jobs %u\ncandidates %.3fs\nfilter-z %.3fs\nw-sets %.3fs\nfilter-zw %.3fs\n", jobs,
                stats.seconds.candidates, stats.seconds.filter_z, stats.seconds.w_sets, stats.seconds.filter_zw);
  return buf;
}

std::string render_table(DiagramSet const &set)
{
  std::string out = "n=" + std::to_string(set.n) + " dedupe-swap=" + (set.manifest.dedupe_swap ? "on" : "off") + "\n";
  out += render_stage_counts(set.stats);
  out += "\n";
  for (std::size_t k = 0; k < set.diagrams.size(); ++k) {
    auto const &p = set.diagrams[k];
    out += padded(std::to_string(k + 1), 4) + p.z().to_compact() + " | " + p.w().to_compact() + "\n";
  }
  out += "total: " + std::to_string(set.diagrams.size()) + "\n";
  return out;
}

std::string to_text(Constraint const &c)
{
  return std::string(to_string(c.pattern)) + " " + std::string(to_string(c.color)) + " " +
         vertex_list(c.vertices) + ": " + c.poly.to_string() +
         (c.kind == Relation::equals_zero ? " = 0" : " != 0") + " [" + std::string(to_string(c.branch)) + "]";
}

std::string write_constraints(std::vector<ZWMatrix> const &diagrams, bool as_json)
{
  if (as_json) {
    std::string out = "{\n  \"diagrams\": [";
    for (std::size_t k = 0; k < diagrams.size(); ++k) {
      json constraints = json::array();
      for (auto const &c : emit_constraints(diagrams[k]))
        constraints.push_back(to_json(c));
      json entry = {{"key", diagrams[k].encode()}, {"constraints", constraints}};
      out += (k ? ",\n    " : "\n    ") + entry.dump();
    }
    out += diagrams.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
  }
  std::string out;
  for (std::size_t k = 0; k < diagrams.size(); ++k) {
    out += "diagram " + std::to_string(k + 1) + " " + diagrams[k].encode() + "\n";
    for (auto const &c : emit_constraints(diagrams[k]))
      out += "  " + to_text(c) + "\n";
  }
  return out;
}

void write_stage_dump(std::filesystem::path const &dir, DiagramSet const &set, StageArtifacts const &artifacts)
{
  std::filesystem::create_directories(dir);
  auto const file = [&](std::string const &stage, std::size_t k) {
    return dir / (stage + "_class" + std::to_string(k + 1) + ".txt");
  };
  auto const encodings = [](std::vector<BinarySymmetricMatrix> const &ms) {
    std::vector<std::string> lines;
    lines.reserve(ms.size());
    for (auto const &m : ms)
      lines.push_back(m.encode());
    return lines;
  };

  for (std::size_t k = 0; k < artifacts.candidates.size(); ++k)
    write_lines(file("stage1", k), encodings(artifacts.candidates[k].matrices()));
  for (std::size_t k = 0; k < artifacts.filtered.size(); ++k)
    write_lines(file("stage2", k), encodings(artifacts.filtered[k]));
  for (std::size_t k = 0; k < artifacts.w_sets.size(); ++k)
    write_lines(file("w", k), encodings(artifacts.w_sets[k]));
  for (std::size_t k = 0; k < artifacts.filtered.size(); ++k) {
    std::vector<std::string> lines;
    for (auto const &a : artifacts.filtered[k])
      for (std::size_t j = k; j < artifacts.w_sets.size(); ++j)
        for (auto const &b : artifacts.w_sets[j])
          lines.push_back(ZWMatrix(a, b).encode());
    write_lines(file("u", k), std::move(lines));
  }
  std::vector<std::string> final_lines;
  for (auto const &p : set.diagrams)
    final_lines.push_back(p.encode());
  write_lines(dir / "final.txt", std::move(final_lines));
}

} // namespace zwdiag::io
