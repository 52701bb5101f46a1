#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpclust/error.hpp"

namespace fpclust {

using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline std::size_t word_count(std::size_t length) {
  return (length + kWordBits - 1) / kWordBits;
}

/// Mask of the in-range bits of the last word (all ones when length % 64 == 0).
inline Word tail_mask(std::size_t length) {
  const std::size_t rem = length % kWordBits;
  return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

/// A fixed-length vector over {0,1}, bit-packed LSB-first. Position 0 is the
/// lowest bit of the first word; bits beyond the length are kept zero so that
/// equality and hashing are plain word comparisons.
class ResolvedVector {
 public:
  ResolvedVector() = default;
  explicit ResolvedVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

  static ResolvedVector from_string(std::string_view text);
  /// Adopts pre-packed words; rejects bits set past the length.
  static ResolvedVector from_words(std::size_t length, std::vector<Word> words);
  std::string to_string() const;

  std::size_t length() const { return length_; }
  bool bit(std::size_t pos) const {
    return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1U;
  }
  void set_bit(std::size_t pos, bool value);

  std::span<const Word> words() const { return words_; }

  bool operator==(const ResolvedVector&) const = default;

 private:
  friend class Fingerprint;
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

/// String-lexicographic order with '0' < '1'. Both vectors must share a length.
bool lex_less(const ResolvedVector& a, const ResolvedVector& b);

std::size_t hamming_distance(const ResolvedVector& a, const ResolvedVector& b);

struct ResolvedVectorHash {
  std::size_t operator()(const ResolvedVector& v) const;
};

/// A fixed-length vector over {0,1,N}: one word sequence for the known bits and
/// one for the missing mask. Canonical form keeps the value bit zero wherever
/// the missing bit is set, so identical fingerprints compare word-equal.
class Fingerprint {
 public:
  Fingerprint() = default;

  static Fingerprint from_string(std::string_view text);
  static Fingerprint from_resolved(const ResolvedVector& r);
  /// Assembles a fingerprint from pre-packed words; rejects non-canonical input
  /// (value bit under the missing mask, or stray bits past the length).
  static Fingerprint from_parts(std::size_t length, std::vector<Word> values,
                                std::vector<Word> missing);

  std::string to_string() const;
  std::size_t length() const { return length_; }
  char symbol(std::size_t pos) const;
  bool is_missing(std::size_t pos) const {
    return (missing_[pos / kWordBits] >> (pos % kWordBits)) & 1U;
  }
  std::size_t missing_count() const;

  std::span<const Word> values() const { return values_; }
  std::span<const Word> missing() const { return missing_; }

  bool operator==(const Fingerprint&) const = default;

 private:
  std::size_t length_ = 0;
  std::vector<Word> values_;
  std::vector<Word> missing_;
};

/// True iff the two fingerprints agree at every position where both are known:
/// ((a.values ^ b.values) & ~a.missing & ~b.missing) == 0.
bool compatible(const Fingerprint& a, const Fingerprint& b);

/// True iff r agrees with v at every non-missing position of v.
bool is_resolution(const ResolvedVector& r, const Fingerprint& v);

/// All 2^k completions of v (k = missing positions), in lexicographic order.
/// Guarded at k <= 24 to keep the output addressable; beyond that a
/// CapacityError is thrown.
std::vector<ResolvedVector> enumerate_resolutions(const Fingerprint& v);

/// The canonical common resolution of a pairwise-compatible cluster: each
/// position takes the known symbol of any member, 0 where every member has N.
/// Throws DomainError naming a violating pair if the cluster is incompatible.
ResolvedVector merge_resolution(std::span<const Fingerprint> cluster);
ResolvedVector merge_resolution(const std::vector<Fingerprint>& cluster);

/// An ordered multiset of equal-length fingerprints. Duplicate rows are legal
/// and stay distinct by index.
struct Instance {
  std::vector<Fingerprint> fingerprints;
  std::size_t length = 0;
  std::size_t max_missing = 0;  // the instance parameter p
  std::string name;

  static Instance from_fingerprints(std::vector<Fingerprint> fps, std::string name = {});
  static Instance from_strings(std::initializer_list<std::string_view> rows,
                               std::string name = {});
  static Instance from_strings(const std::vector<std::string>& rows, std::string name = {});

  std::size_t size() const { return fingerprints.size(); }
  bool empty() const { return fingerprints.empty(); }
  const Fingerprint& operator[](std::size_t i) const { return fingerprints[i]; }
};

/// A candidate cluster representative together with every member it resolves.
struct Candidate {
  ResolvedVector vector;
  std::vector<std::uint32_t> members;  // ascending instance indices

  bool operator==(const Candidate&) const = default;
};

/// The deduplicated resolutions of all members, sorted lexicographically.
/// A member belongs to a candidate's set exactly when the candidate resolves
/// it, which coincides with {0,1,N}-compatibility against the candidate.
std::vector<Candidate> candidate_resolutions(const Instance& inst);

}  // namespace fpclust
