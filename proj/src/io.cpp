#include "fpclust/io.hpp"

#include <charconv>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpclust/error.hpp"

namespace fpclust {

namespace {

using nlohmann::json;

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    if (!line.empty() && line.front() != '#') {
      lines.push_back({number, line});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::uint64_t parse_number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw DomainError("line " + std::to_string(line_no) + ": expected a number, got '" +
                      std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace

Instance parse_instance(std::string_view text, std::string name) {
  std::vector<Fingerprint> fps;
  std::size_t expected = 0;
  bool have_expected = false;
  for (const Line& line : data_lines(text)) {
    for (std::size_t col = 0; col < line.text.size(); ++col) {
      const char c = line.text[col];
      if (c != '0' && c != '1' && c != 'N') {
        throw DomainError("line " + std::to_string(line.number) + ", column " +
                          std::to_string(col + 1) + ": illegal character '" + c + "'");
      }
    }
    if (have_expected && line.text.size() != expected) {
      throw DomainError("line " + std::to_string(line.number) + ": length " +
                        std::to_string(line.text.size()) + " differs from previous rows (" +
                        std::to_string(expected) + ")");
    }
    expected = line.text.size();
    have_expected = true;
    fps.push_back(Fingerprint::from_string(line.text));
  }
  return Instance::from_fingerprints(std::move(fps), std::move(name));
}

std::string emit_instance(const Instance& inst) {
  std::string out;
  out.reserve(inst.size() * (inst.length + 1));
  for (const Fingerprint& f : inst.fingerprints) {
    out += f.to_string();
    out += '\n';
  }
  return out;
}

CubicGraph parse_cubic_graph(std::string_view text) {
  const std::vector<Line> lines = data_lines(text);
  if (lines.empty()) {
    throw DomainError("graph: empty input (expected a header line 'n m')");
  }
  const auto header = split_fields(lines[0].text);
  if (header.size() != 2) {
    throw DomainError("line " + std::to_string(lines[0].number) +
                      ": expected header 'n m'");
  }
  const std::uint64_t n = parse_number(header[0], lines[0].number);
  const std::uint64_t m = parse_number(header[1], lines[0].number);
  if (lines.size() < 1 + m) {
    throw DomainError("graph: header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(lines.size() - 1));
  }
  if (lines.size() > 1 + m) {
    throw DomainError("line " + std::to_string(lines[1 + m].number) +
                      ": unexpected trailing content");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const Line& line = lines[1 + e];
    const auto fields = split_fields(line.text);
    if (fields.size() != 2) {
      throw DomainError("line " + std::to_string(line.number) + ": expected an edge 'u v'");
    }
    edges.emplace_back(static_cast<std::uint32_t>(parse_number(fields[0], line.number)),
                       static_cast<std::uint32_t>(parse_number(fields[1], line.number)));
  }
  return make_cubic_graph(static_cast<std::uint32_t>(n), std::move(edges));
}

std::string emit_cubic_graph(const CubicGraph& graph) {
  std::string out = std::to_string(graph.n) + " " + std::to_string(graph.m()) + "\n";
  for (const auto [u, v] : graph.edges) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

std::string emit_partition(const Partition& part, const Evaluation& eval) {
  Partition canonical = part;
  canonical.sort_canonical();
  json clusters = json::array();
  for (const Cluster& cluster : canonical.clusters) {
    clusters.push_back(json{{"members", cluster.members},
                            {"witness", cluster.witness.to_string()}});
  }
  const json doc = {
      {"clusters", std::move(clusters)},
      {"evaluation",
       {{"cmv", eval.cmv},
        {"iecmv", eval.iecmv},
        {"oecmv", eval.oecmv},
        {"total_compatible_pairs", eval.total_compatible_pairs}}},
  };
  return doc.dump(2) + "\n";
}

Partition parse_partition(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("partition: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("clusters") || !doc["clusters"].is_array()) {
    throw DomainError("partition: expected an object with a 'clusters' array");
  }
  Partition part;
  for (const json& entry : doc["clusters"]) {
    if (!entry.is_object() || !entry.contains("members") || !entry.contains("witness") ||
        !entry["members"].is_array() || !entry["witness"].is_string()) {
      throw DomainError("partition: each cluster needs 'members' and 'witness'");
    }
    Cluster cluster;
    for (const json& member : entry["members"]) {
      if (!member.is_number_unsigned()) {
        throw DomainError("partition: members must be non-negative integers");
      }
      cluster.members.push_back(member.get<std::uint32_t>());
    }
    cluster.witness = ResolvedVector::from_string(entry["witness"].get<std::string>());
    part.clusters.push_back(std::move(cluster));
  }
  return part;
}

std::string emit_certificate(const GadgetCertificate& cert) {
  json vertices = json::array();
  for (std::size_t id = 0; id < cert.gadget_vertex_count(); ++id) {
    vertices.push_back(json{{"id", id},
                            {"label", cert.vertex_labels[id]},
                            {"vector", cert.vertex_vectors[id].to_string()}});
  }
  json fingerprints = json::array();
  for (std::size_t f = 0; f < cert.fingerprint_edges.size(); ++f) {
    const auto [a, b] = cert.fingerprint_edges[f];
    fingerprints.push_back(json{{"index", f},
                                {"edge", {a, b}},
                                {"labels", {cert.vertex_labels[a], cert.vertex_labels[b]}}});
  }
  json docking = json::array();
  for (std::size_t e = 0; e < cert.graph.m(); ++e) {
    docking.push_back(json{{"edge", {cert.graph.edges[e].first, cert.graph.edges[e].second}},
                           {"slot_at_first", cert.docking_slots[e].first},
                           {"slot_at_second", cert.docking_slots[e].second}});
  }
  json graph_edges = json::array();
  for (const auto [u, v] : cert.graph.edges) {
    graph_edges.push_back({u, v});
  }
  const json doc = {
      {"graph", {{"n", cert.graph.n}, {"m", cert.graph.m()}, {"edges", graph_edges}}},
      {"chunk_width", 7},
      {"cover_size_formula", "3*k + 2*(n-k) + 2*m"},
      {"gadget_vertices", std::move(vertices)},
      {"docking", std::move(docking)},
      {"fingerprints", std::move(fingerprints)},
  };
  return doc.dump(2) + "\n";
}

}  // namespace fpclust
