#pragma once

// Character-level reference implementations used as independent oracles.
// Everything here works on {0,1,N} strings and plain set-partition
// enumeration; none of it shares code with the word-packed library path.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fpclust/fingerprint.hpp"
#include "fpclust/objectives.hpp"

namespace ref {

inline bool compatible(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 'N' && b[i] != 'N' && a[i] != b[i]) return false;
  }
  return true;
}

inline bool is_resolution(const std::string& r, const std::string& v) {
  if (r.size() != v.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 'N' && v[i] != r[i]) return false;
  }
  return true;
}

inline std::vector<std::string> resolutions(const std::string& v) {
  std::vector<std::string> out{std::string()};
  for (const char c : v) {
    std::vector<std::string> next;
    for (const std::string& prefix : out) {
      if (c == 'N') {
        next.push_back(prefix + '0');
        next.push_back(prefix + '1');
      } else {
        next.push_back(prefix + c);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t total_pairs(const std::vector<std::string>& rows) {
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      pairs += compatible(rows[i], rows[j]);
    }
  }
  return pairs;
}

/// Calls fn once per set partition of {0..n-1}, encoded as a grouping vector
/// (restricted growth string).
inline void for_each_partition(std::size_t n,
                               const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (n == 0) {
    fn({});
    return;
  }
  std::vector<std::size_t> group(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      fn(group);
      return;
    }
    for (std::size_t g = 0; g <= used; ++g) {
      group[i] = g;
      rec(i + 1, std::max(used, g + 1));
    }
  };
  rec(1, 1);
}

struct Optima {
  std::uint64_t cmv = 0;
  std::uint64_t iecmv = 0;
  std::uint64_t oecmv = 0;
};

/// Exhaustive optimum over every valid set partition.
inline Optima optima(const std::vector<std::string>& rows) {
  const std::size_t n = rows.size();
  const std::uint64_t total = total_pairs(rows);
  Optima best{n, 0, total};
  if (n == 0) {
    return Optima{0, 0, 0};
  }
  for_each_partition(n, [&](const std::vector<std::size_t>& group) {
    std::uint64_t clusters = 0;
    for (const std::size_t g : group) clusters = std::max(clusters, g + 1);
    std::uint64_t inside = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (group[i] != group[j]) continue;
        if (!compatible(rows[i], rows[j])) return;  // invalid partition
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (group[i] == group[j] && compatible(rows[i], rows[j])) ++inside;
      }
    }
    best.cmv = std::min(best.cmv, clusters);
    best.iecmv = std::max(best.iecmv, inside);
    best.oecmv = std::min(best.oecmv, total - inside);
  });
  return best;
}

inline std::vector<std::string> rows_of(const fpclust::Instance& inst) {
  std::vector<std::string> rows;
  rows.reserve(inst.size());
  for (const auto& f : inst.fingerprints) rows.push_back(f.to_string());
  return rows;
}

inline std::string random_row(std::mt19937_64& rng, std::size_t length,
                              std::size_t max_missing, double missing_rate = 0.3) {
  std::string row(length, '0');
  std::size_t missing = 0;
  for (std::size_t i = 0; i < length; ++i) {
    const double roll = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (roll < missing_rate && missing < max_missing) {
      row[i] = 'N';
      ++missing;
    } else if (rng() & 1U) {
      row[i] = '1';
    }
  }
  return row;
}

inline std::vector<std::string> random_rows(std::mt19937_64& rng, std::size_t n,
                                            std::size_t length, std::size_t max_missing,
                                            double missing_rate = 0.3) {
  std::vector<std::string> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(random_row(rng, length, max_missing, missing_rate));
  }
  return rows;
}

/// Smallest vertex cover size by exhaustive subset search.
inline std::size_t min_vertex_cover_size(
    std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool covers = true;
    for (const auto [u, v] : edges) {
      if (((mask >> u) & 1U) == 0 && ((mask >> v) & 1U) == 0) {
        covers = false;
        break;
      }
    }
    if (covers) {
      best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
  }
  return best;
}

}  // namespace ref
