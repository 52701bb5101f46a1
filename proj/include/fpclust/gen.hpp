#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fpclust/fingerprint.hpp"
#include "fpclust/partition.hpp"

namespace fpclust {

struct CubicGraph {
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // normalized u < v

  std::size_t m() const { return edges.size(); }
};

/// Validates simplicity and 3-regularity; normalizes edge endpoints to u < v.
CubicGraph make_cubic_graph(std::uint32_t n,
                            std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

CubicGraph k4();

/// Pairing-model sampling with rejection of loops and multi-edges. n must be
/// even and >= 4. Deterministic under seed; edges come out sorted.
CubicGraph random_cubic_graph(std::uint32_t n, std::uint64_t seed);

/// The four-fingerprint instance {00NN, 0N00, 001N, 0100} on which greedy is
/// exactly a factor 2 away from the optimum for both pair objectives.
Instance gen_tight();

struct RandomInstanceParams {
  std::size_t n = 0;
  std::size_t length = 0;
  std::size_t max_missing = 0;  // per-row cap on N positions
  std::size_t centers = 1;
  double missing_rate = 0.0;
  std::uint64_t seed = 0;
};

/// Planted-center instance: each row copies a uniformly chosen random center,
/// then masks Binomial(length, missing_rate) positions (capped at max_missing)
/// to N. Deterministic under seed.
Instance gen_random(const RandomInstanceParams& params);

/// Deterministic parameter schedule used by the ratio benchmark corpora:
/// n in [2, max_n], length in [4, 12], cap in [0, 2].
RandomInstanceParams bench_ratio_params(std::uint64_t seed, std::size_t max_n);

/// Certificate tying a cubic graph to its gadget-graph encoding.
///
/// Every graph vertex i contributes five gadget vertices c1..c5 whose length-7n
/// resolved vectors are zero outside chunk i; chunk i carries the fixed codes
/// c1=1110000, c2=1111100, c3=1110011, c4=1001100, c5=1000011. Every graph edge
/// contributes four interior gadget vertices spanning two chunks. Gadget
/// adjacency coincides with Hamming distance exactly 2 (non-adjacent vectors
/// are at distance >= 3): each vertex gadget forms the path c4-c2-c1-c3-c5 and
/// each edge gadget forms two 3-edge paths x-e1-e2-y, x-e3-e4-y between the
/// docking slots x, y it occupies at its endpoints. One fingerprint is emitted
/// per gadget edge, with N exactly at the two positions where the endpoint
/// vectors differ, so a vertex cover of the gadget graph of size
/// 3k + 2(n-k) + 2m translates into a clustering with that many clusters.
struct GadgetCertificate {
  CubicGraph graph;
  std::vector<ResolvedVector> vertex_vectors;  // gadget vertex id -> vector
  std::vector<std::string> vertex_labels;      // "v3.c4", "e2.m1", ...
  /// fingerprint index -> the gadget edge it encodes
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fingerprint_edges;
  /// graph edge -> docking slot numbers (1, 4 or 5) at its two endpoints,
  /// assigned per vertex in ascending-neighbor order
  std::vector<std::pair<std::uint8_t, std::uint8_t>> docking_slots;

  std::size_t gadget_vertex_count() const { return vertex_vectors.size(); }
  /// Gadget vertex id for graph vertex `vertex`, slot in 1..5.
  std::uint32_t vertex_gadget_id(std::uint32_t vertex, int slot) const;
  /// Gadget vertex id for interior vertex 1..4 of graph edge `edge_index`.
  std::uint32_t edge_interior_id(std::uint32_t edge_index, int interior) const;
  bool is_gadget_edge(std::uint32_t a, std::uint32_t b) const;
  std::uint64_t cover_size_formula(std::uint64_t k) const;  // 3k + 2(n-k) + 2m

  std::vector<std::uint64_t> edge_keys;  // sorted packed gadget edges (internal)
};

struct GadgetInstance {
  Instance instance;
  GadgetCertificate certificate;
};

/// Builds the gadget instance: 4n + 6m fingerprints of length 7n, each with
/// exactly two N positions. Throws DomainError on a non-cubic graph.
GadgetInstance gen_gadget(const CubicGraph& graph);

/// Converts a vertex cover of the certificate's graph into a valid partition
/// with at most cover_size_formula(|cover|) clusters: covered vertices use the
/// {c1,c4,c5} gadget cover, uncovered ones {c2,c3}, and each edge gadget
/// selects the two interior vertices on a covered side. Throws DomainError
/// naming an uncovered edge if the input is not a cover.
Partition cover_to_partition(const GadgetCertificate& cert,
                             const std::vector<std::uint32_t>& cover);

}  // namespace fpclust
