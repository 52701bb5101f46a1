#include "fpclust/gen.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "fpclust/error.hpp"

namespace fpclust {

namespace {

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

bool next_bernoulli(std::mt19937_64& rng, double rate) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < rate;
}

std::uint64_t pack_edge(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

CubicGraph make_cubic_graph(std::uint32_t n,
                            std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::vector<std::uint32_t> degree(n, 0);
  std::set<std::uint64_t> seen;
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw DomainError("cubic graph: edge endpoint " + std::to_string(std::max(u, v)) +
                        " out of range (n=" + std::to_string(n) + ")");
    }
    if (u == v) {
      throw DomainError("cubic graph: self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert(pack_edge(u, v)).second) {
      throw DomainError("cubic graph: duplicate edge (" + std::to_string(u) + ", " +
                        std::to_string(v) + ")");
    }
    ++degree[u];
    ++degree[v];
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (degree[i] != 3) {
      throw DomainError("cubic graph: vertex " + std::to_string(i) + " has degree " +
                        std::to_string(degree[i]) + " (expected 3)");
    }
  }
  return CubicGraph{n, std::move(edges)};
}

CubicGraph k4() {
  return make_cubic_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph random_cubic_graph(std::uint32_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) {
    throw DomainError("random cubic graph: n must be even and >= 4");
  }
  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::uint32_t> points(3 * n);
    for (std::uint32_t i = 0; i < points.size(); ++i) points[i] = i;
    for (std::size_t i = points.size(); i > 1; --i) {
      std::swap(points[i - 1], points[next_below(rng, i)]);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::set<std::uint64_t> seen;
    bool ok = true;
    for (std::size_t t = 0; t + 1 < points.size(); t += 2) {
      std::uint32_t u = points[t] / 3;
      std::uint32_t v = points[t + 1] / 3;
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!seen.insert(pack_edge(u, v)).second) {
        ok = false;
        break;
      }
      edges.emplace_back(u, v);
    }
    if (ok) {
      std::sort(edges.begin(), edges.end());
      return make_cubic_graph(n, std::move(edges));
    }
  }
  throw CapacityError("random cubic graph: pairing model failed to produce a simple graph");
}

Instance gen_tight() {
  return Instance::from_strings({"00NN", "0N00", "001N", "0100"}, "tight");
}

Instance gen_random(const RandomInstanceParams& params) {
  if (params.max_missing > params.length) {
    throw DomainError("gen_random: max_missing exceeds the vector length");
  }
  if (params.centers == 0) {
    throw DomainError("gen_random: centers must be >= 1");
  }
  if (!(params.missing_rate >= 0.0 && params.missing_rate <= 1.0)) {
    throw DomainError("gen_random: missing_rate must lie in [0, 1]");
  }

  std::mt19937_64 rng(params.seed);
  std::vector<std::string> centers(params.centers, std::string(params.length, '0'));
  for (std::string& center : centers) {
    for (std::size_t i = 0; i < params.length; ++i) {
      if (rng() & 1U) center[i] = '1';
    }
  }

  std::vector<std::string> rows;
  rows.reserve(params.n);
  std::vector<std::size_t> positions(params.length);
  for (std::size_t r = 0; r < params.n; ++r) {
    std::string row = centers[next_below(rng, params.centers)];
    std::size_t masked = 0;
    for (std::size_t i = 0; i < params.length; ++i) {
      masked += next_bernoulli(rng, params.missing_rate);
    }
    masked = std::min(masked, params.max_missing);
    for (std::size_t i = 0; i < params.length; ++i) positions[i] = i;
    for (std::size_t j = 0; j < masked; ++j) {
      std::swap(positions[j], positions[j + next_below(rng, params.length - j)]);
      row[positions[j]] = 'N';
    }
    rows.push_back(std::move(row));
  }

  std::string name = "random(n=" + std::to_string(params.n) +
                     ",seed=" + std::to_string(params.seed) + ")";
  return Instance::from_strings(rows, std::move(name));
}

RandomInstanceParams bench_ratio_params(std::uint64_t seed, std::size_t max_n) {
  std::mt19937_64 rng(seed);
  RandomInstanceParams params;
  params.n = 2 + next_below(rng, max_n > 2 ? max_n - 1 : 1);
  params.length = 4 + next_below(rng, 9);
  params.max_missing = next_below(rng, 3);
  params.centers = 1 + next_below(rng, 3);
  params.missing_rate = 0.1 * static_cast<double>(1 + next_below(rng, 8));
  params.seed = seed;
  return params;
}

namespace {

// in-chunk bit offsets of the five vertex-gadget codes, slot index 1..5
constexpr std::array<std::array<int, 5>, 6> kSlotBits = {{
    {},              // unused slot 0
    {0, 1, 2, -1, -1},   // c1 = 1110000
    {0, 1, 2, 3, 4},     // c2 = 1111100
    {0, 1, 2, 5, 6},     // c3 = 1110011
    {0, 3, 4, -1, -1},   // c4 = 1001100
    {0, 5, 6, -1, -1},   // c5 = 1000011
}};

// the two non-leading one-bits of each docking code
constexpr std::array<std::pair<int, int>, 6> kSlotPair = {{
    {0, 0}, {1, 2}, {0, 0}, {0, 0}, {3, 4}, {5, 6},
}};

constexpr std::array<int, 3> kDockingSlots = {1, 4, 5};

ResolvedVector vector_with_bits(std::size_t length,
                                const std::vector<std::size_t>& bits) {
  ResolvedVector r(length);
  for (const std::size_t b : bits) r.set_bit(b, true);
  return r;
}

}  // namespace

std::uint32_t GadgetCertificate::vertex_gadget_id(std::uint32_t vertex, int slot) const {
  return 5 * vertex + static_cast<std::uint32_t>(slot - 1);
}

std::uint32_t GadgetCertificate::edge_interior_id(std::uint32_t edge_index,
                                                  int interior) const {
  return 5 * graph.n + 4 * edge_index + static_cast<std::uint32_t>(interior - 1);
}

bool GadgetCertificate::is_gadget_edge(std::uint32_t a, std::uint32_t b) const {
  return std::binary_search(edge_keys.begin(), edge_keys.end(), pack_edge(a, b));
}

std::uint64_t GadgetCertificate::cover_size_formula(std::uint64_t k) const {
  return 3 * k + 2 * (graph.n - k) + 2 * graph.m();
}

GadgetInstance gen_gadget(const CubicGraph& graph) {
  // revalidate: the struct may have been aggregate-built
  const CubicGraph g = make_cubic_graph(graph.n, graph.edges);
  const std::uint32_t n = g.n;
  const std::size_t m = g.m();
  const std::size_t length = 7 * static_cast<std::size_t>(n);

  GadgetCertificate cert;
  cert.graph = g;
  cert.vertex_vectors.resize(5 * static_cast<std::size_t>(n) + 4 * m);
  cert.vertex_labels.resize(cert.vertex_vectors.size());

  for (std::uint32_t i = 0; i < n; ++i) {
    for (int slot = 1; slot <= 5; ++slot) {
      std::vector<std::size_t> bits;
      for (const int b : kSlotBits[slot]) {
        if (b >= 0) bits.push_back(7 * static_cast<std::size_t>(i) + b);
      }
      const std::uint32_t id = cert.vertex_gadget_id(i, slot);
      cert.vertex_vectors[id] = vector_with_bits(length, bits);
      cert.vertex_labels[id] = "v" + std::to_string(i) + ".c" + std::to_string(slot);
    }
  }

  // ascending-neighbor docking: a vertex's three incident edges take slots
  // c1, c4, c5 in order of the neighbor id
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> incident(n);
  for (std::uint32_t e = 0; e < m; ++e) {
    const auto [u, v] = g.edges[e];
    incident[u].emplace_back(v, e);
    incident[v].emplace_back(u, e);
  }
  std::vector<std::pair<std::uint8_t, std::uint8_t>> slots(m, {0, 0});
  for (std::uint32_t i = 0; i < n; ++i) {
    std::sort(incident[i].begin(), incident[i].end());
    for (std::size_t r = 0; r < incident[i].size(); ++r) {
      const std::uint32_t e = incident[i][r].second;
      const auto slot = static_cast<std::uint8_t>(kDockingSlots[r]);
      if (g.edges[e].first == i) {
        slots[e].first = slot;
      } else {
        slots[e].second = slot;
      }
    }
  }
  cert.docking_slots = slots;

  for (std::uint32_t e = 0; e < m; ++e) {
    const auto [i, j] = g.edges[e];
    const auto [a1, a2] = kSlotPair[slots[e].first];
    const auto [b1, b2] = kSlotPair[slots[e].second];
    const std::size_t ci = 7 * static_cast<std::size_t>(i);
    const std::size_t cj = 7 * static_cast<std::size_t>(j);
    const std::array<std::vector<std::size_t>, 4> interior_bits = {{
        {ci + 0, ci + static_cast<std::size_t>(a1), cj + static_cast<std::size_t>(b1)},
        {ci + static_cast<std::size_t>(a1), cj + 0, cj + static_cast<std::size_t>(b1)},
        {ci + 0, ci + static_cast<std::size_t>(a2), cj + static_cast<std::size_t>(b2)},
        {ci + static_cast<std::size_t>(a2), cj + 0, cj + static_cast<std::size_t>(b2)},
    }};
    for (int u = 1; u <= 4; ++u) {
      const std::uint32_t id = cert.edge_interior_id(e, u);
      cert.vertex_vectors[id] = vector_with_bits(length, interior_bits[u - 1]);
      cert.vertex_labels[id] = "e" + std::to_string(e) + ".m" + std::to_string(u);
    }
  }

  // gadget edges: the path c4-c2-c1-c3-c5 inside every vertex gadget, then the
  // two docking-to-docking paths of every edge gadget
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gadget_edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    constexpr std::array<std::pair<int, int>, 4> kPath = {{{4, 2}, {2, 1}, {1, 3}, {3, 5}}};
    for (const auto [s, t] : kPath) {
      gadget_edges.emplace_back(cert.vertex_gadget_id(i, s), cert.vertex_gadget_id(i, t));
    }
  }
  for (std::uint32_t e = 0; e < m; ++e) {
    const auto [i, j] = g.edges[e];
    const std::uint32_t x = cert.vertex_gadget_id(i, slots[e].first);
    const std::uint32_t y = cert.vertex_gadget_id(j, slots[e].second);
    const std::uint32_t e1 = cert.edge_interior_id(e, 1);
    const std::uint32_t e2 = cert.edge_interior_id(e, 2);
    const std::uint32_t e3 = cert.edge_interior_id(e, 3);
    const std::uint32_t e4 = cert.edge_interior_id(e, 4);
    gadget_edges.emplace_back(x, e1);
    gadget_edges.emplace_back(e1, e2);
    gadget_edges.emplace_back(e2, y);
    gadget_edges.emplace_back(x, e3);
    gadget_edges.emplace_back(e3, e4);
    gadget_edges.emplace_back(e4, y);
  }
  cert.fingerprint_edges = gadget_edges;
  cert.edge_keys.reserve(gadget_edges.size());
  for (const auto [a, b] : gadget_edges) {
    cert.edge_keys.push_back(pack_edge(a, b));
  }
  std::sort(cert.edge_keys.begin(), cert.edge_keys.end());

  // one fingerprint per gadget edge: N exactly where the endpoints differ
  std::vector<Fingerprint> fps;
  fps.reserve(gadget_edges.size());
  for (const auto [a, b] : gadget_edges) {
    const auto wa = cert.vertex_vectors[a].words();
    const auto wb = cert.vertex_vectors[b].words();
    std::vector<Word> values(wa.size());
    std::vector<Word> missing(wa.size());
    for (std::size_t w = 0; w < wa.size(); ++w) {
      values[w] = wa[w] & wb[w];
      missing[w] = wa[w] ^ wb[w];
    }
    fps.push_back(Fingerprint::from_parts(length, std::move(values), std::move(missing)));
  }

  std::string name = "gadget(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
  GadgetInstance out;
  out.instance = Instance::from_fingerprints(std::move(fps), std::move(name));
  out.certificate = std::move(cert);
  return out;
}

Partition cover_to_partition(const GadgetCertificate& cert,
                             const std::vector<std::uint32_t>& cover) {
  const CubicGraph& g = cert.graph;
  std::vector<char> in_cover(g.n, 0);
  for (const std::uint32_t v : cover) {
    if (v >= g.n) {
      throw DomainError("cover: vertex " + std::to_string(v) + " out of range");
    }
    in_cover[v] = 1;
  }
  for (const auto [u, v] : g.edges) {
    if (!in_cover[u] && !in_cover[v]) {
      throw DomainError("not a vertex cover: edge (" + std::to_string(u) + ", " +
                        std::to_string(v) + ") is uncovered");
    }
  }

  // gadget-graph cover: {c1,c4,c5} over covered vertices, {c2,c3} elsewhere,
  // plus the two interior vertices on a covered side of every edge gadget
  std::vector<char> selected(cert.gadget_vertex_count(), 0);
  for (std::uint32_t i = 0; i < g.n; ++i) {
    if (in_cover[i]) {
      for (const int slot : {1, 4, 5}) selected[cert.vertex_gadget_id(i, slot)] = 1;
    } else {
      for (const int slot : {2, 3}) selected[cert.vertex_gadget_id(i, slot)] = 1;
    }
  }
  for (std::uint32_t e = 0; e < g.m(); ++e) {
    const auto [u, v] = g.edges[e];
    if (in_cover[u]) {
      selected[cert.edge_interior_id(e, 2)] = 1;
      selected[cert.edge_interior_id(e, 4)] = 1;
    } else {
      selected[cert.edge_interior_id(e, 1)] = 1;
      selected[cert.edge_interior_id(e, 3)] = 1;
    }
  }

  // assign each fingerprint to the smallest selected endpoint of its edge
  std::vector<std::uint32_t> owner(cert.fingerprint_edges.size());
  for (std::size_t f = 0; f < cert.fingerprint_edges.size(); ++f) {
    const auto [a, b] = cert.fingerprint_edges[f];
    const std::uint32_t lo = std::min(a, b);
    const std::uint32_t hi = std::max(a, b);
    if (selected[lo]) {
      owner[f] = lo;
    } else if (selected[hi]) {
      owner[f] = hi;
    } else {
      throw DomainError("internal: gadget edge left uncovered by the gadget cover");
    }
  }

  Partition part;
  std::vector<std::uint32_t> ordinal(cert.gadget_vertex_count(), ~std::uint32_t{0});
  for (std::uint32_t f = 0; f < owner.size(); ++f) {
    if (ordinal[owner[f]] == ~std::uint32_t{0}) {
      ordinal[owner[f]] = static_cast<std::uint32_t>(part.clusters.size());
      part.clusters.push_back(Cluster{{}, cert.vertex_vectors[owner[f]]});
    }
    part.clusters[ordinal[owner[f]]].members.push_back(f);
  }
  part.sort_canonical();
  return part;
}

}  // namespace fpclust
