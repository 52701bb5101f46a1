#include "fpclust/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <utility>

namespace fpclust {

namespace {

std::string position_message(const char* what, char c, std::size_t pos) {
  std::string msg(what);
  msg += ": illegal character '";
  msg += c;
  msg += "' at position ";
  msg += std::to_string(pos + 1);
  return msg;
}

void require_equal_lengths(const char* what, std::size_t a, std::size_t b) {
  if (a != b) {
    throw DomainError(std::string(what) + ": length mismatch (" + std::to_string(a) +
                      " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

ResolvedVector ResolvedVector::from_string(std::string_view text) {
  ResolvedVector r(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '1') {
      r.words_[i / kWordBits] |= Word{1} << (i % kWordBits);
    } else if (c != '0') {
      throw DomainError(position_message("resolved vector", c, i));
    }
  }
  return r;
}

ResolvedVector ResolvedVector::from_words(std::size_t length, std::vector<Word> words) {
  if (words.size() != word_count(length)) {
    throw DomainError("from_words: word count does not match the length");
  }
  if (!words.empty() && (words.back() & ~tail_mask(length)) != 0) {
    throw DomainError("from_words: bits set past the declared length");
  }
  ResolvedVector r;
  r.length_ = length;
  r.words_ = std::move(words);
  return r;
}

std::string ResolvedVector::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

void ResolvedVector::set_bit(std::size_t pos, bool value) {
  const Word mask = Word{1} << (pos % kWordBits);
  if (value) {
    words_[pos / kWordBits] |= mask;
  } else {
    words_[pos / kWordBits] &= ~mask;
  }
}

bool lex_less(const ResolvedVector& a, const ResolvedVector& b) {
  require_equal_lengths("lex_less", a.length(), b.length());
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const Word diff = wa[i] ^ wb[i];
    if (diff != 0) {
      // the lowest differing bit is the earliest differing position
      const int bit = std::countr_zero(diff);
      return ((wa[i] >> bit) & 1U) == 0;
    }
  }
  return false;
}

std::size_t hamming_distance(const ResolvedVector& a, const ResolvedVector& b) {
  require_equal_lengths("hamming_distance", a.length(), b.length());
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t dist = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    dist += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  }
  return dist;
}

std::size_t ResolvedVectorHash::operator()(const ResolvedVector& v) const {
  // splitmix64-style mixing over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.length();
  for (const Word w : v.words()) {
    std::uint64_t x = w + 0x9e3779b97f4a7c15ULL + h;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    h = x ^ (x >> 31);
  }
  return static_cast<std::size_t>(h);
}

Fingerprint Fingerprint::from_string(std::string_view text) {
  Fingerprint f;
  f.length_ = text.size();
  f.values_.assign(word_count(f.length_), 0);
  f.missing_.assign(word_count(f.length_), 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const Word mask = Word{1} << (i % kWordBits);
    switch (text[i]) {
      case '0':
        break;
      case '1':
        f.values_[i / kWordBits] |= mask;
        break;
      case 'N':
        f.missing_[i / kWordBits] |= mask;
        break;
      default:
        throw DomainError(position_message("fingerprint", text[i], i));
    }
  }
  return f;
}

Fingerprint Fingerprint::from_resolved(const ResolvedVector& r) {
  Fingerprint f;
  f.length_ = r.length();
  f.values_.assign(r.words().begin(), r.words().end());
  f.missing_.assign(word_count(f.length_), 0);
  return f;
}

Fingerprint Fingerprint::from_parts(std::size_t length, std::vector<Word> values,
                                    std::vector<Word> missing) {
  const std::size_t words = word_count(length);
  if (values.size() != words || missing.size() != words) {
    throw DomainError("from_parts: word count does not match the length");
  }
  for (std::size_t i = 0; i < words; ++i) {
    const Word in_range = (i + 1 == words) ? tail_mask(length) : ~Word{0};
    if ((values[i] & ~in_range) != 0 || (missing[i] & ~in_range) != 0) {
      throw DomainError("from_parts: bits set past the declared length");
    }
    if ((values[i] & missing[i]) != 0) {
      throw DomainError("from_parts: value bit set under the missing mask");
    }
  }
  Fingerprint f;
  f.length_ = length;
  f.values_ = std::move(values);
  f.missing_ = std::move(missing);
  return f;
}

std::string Fingerprint::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    out[i] = symbol(i);
  }
  return out;
}

char Fingerprint::symbol(std::size_t pos) const {
  if (is_missing(pos)) return 'N';
  return ((values_[pos / kWordBits] >> (pos % kWordBits)) & 1U) ? '1' : '0';
}

std::size_t Fingerprint::missing_count() const {
  std::size_t count = 0;
  for (const Word w : missing_) {
    count += static_cast<std::size_t>(std::popcount(w));
  }
  return count;
}

bool compatible(const Fingerprint& a, const Fingerprint& b) {
  require_equal_lengths("compatible", a.length(), b.length());
  const auto av = a.values();
  const auto bv = b.values();
  const auto am = a.missing();
  const auto bm = b.missing();
  for (std::size_t i = 0; i < av.size(); ++i) {
    if (((av[i] ^ bv[i]) & ~am[i] & ~bm[i]) != 0) return false;
  }
  return true;
}

bool is_resolution(const ResolvedVector& r, const Fingerprint& v) {
  require_equal_lengths("is_resolution", r.length(), v.length());
  const auto rw = r.words();
  const auto vv = v.values();
  const auto vm = v.missing();
  for (std::size_t i = 0; i < rw.size(); ++i) {
    if (((rw[i] ^ vv[i]) & ~vm[i]) != 0) return false;
  }
  return true;
}

std::vector<ResolvedVector> enumerate_resolutions(const Fingerprint& v) {
  constexpr std::size_t kMaxMissing = 24;
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < v.length(); ++i) {
    if (v.is_missing(i)) positions.push_back(i);
  }
  if (positions.size() > kMaxMissing) {
    throw CapacityError("enumerate_resolutions: " + std::to_string(positions.size()) +
                        " missing positions exceed the enumeration cap of 2^" +
                        std::to_string(kMaxMissing));
  }

  const ResolvedVector base = ResolvedVector::from_words(
      v.length(), std::vector<Word>(v.values().begin(), v.values().end()));

  const std::size_t k = positions.size();
  std::vector<ResolvedVector> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << k); ++fill) {
    ResolvedVector r = base;
    for (std::size_t j = 0; j < k; ++j) {
      // earliest missing position takes the highest counter bit: lex order
      if ((fill >> (k - 1 - j)) & 1U) r.set_bit(positions[j], true);
    }
    out.push_back(std::move(r));
  }
  return out;
}

ResolvedVector merge_resolution(std::span<const Fingerprint> cluster) {
  if (cluster.empty()) {
    throw DomainError("merge_resolution: empty cluster");
  }
  const std::size_t length = cluster[0].length();
  for (std::size_t i = 1; i < cluster.size(); ++i) {
    require_equal_lengths("merge_resolution", length, cluster[i].length());
  }
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    for (std::size_t j = i + 1; j < cluster.size(); ++j) {
      if (!compatible(cluster[i], cluster[j])) {
        throw DomainError("merge_resolution: incompatible pair (" + std::to_string(i) +
                          ", " + std::to_string(j) + "): " + cluster[i].to_string() +
                          " vs " + cluster[j].to_string());
      }
    }
  }
  std::vector<Word> merged(word_count(length), 0);
  for (const Fingerprint& f : cluster) {
    const auto fv = f.values();
    for (std::size_t w = 0; w < merged.size(); ++w) {
      merged[w] |= fv[w];
    }
  }
  return ResolvedVector::from_words(length, std::move(merged));
}

ResolvedVector merge_resolution(const std::vector<Fingerprint>& cluster) {
  return merge_resolution(std::span<const Fingerprint>(cluster));
}

Instance Instance::from_fingerprints(std::vector<Fingerprint> fps, std::string name) {
  Instance inst;
  inst.name = std::move(name);
  if (!fps.empty()) {
    inst.length = fps[0].length();
    for (std::size_t i = 1; i < fps.size(); ++i) {
      if (fps[i].length() != inst.length) {
        throw DomainError("instance: fingerprint " + std::to_string(i) + " has length " +
                          std::to_string(fps[i].length()) + ", expected " +
                          std::to_string(inst.length));
      }
    }
    for (const Fingerprint& f : fps) {
      inst.max_missing = std::max(inst.max_missing, f.missing_count());
    }
  }
  inst.fingerprints = std::move(fps);
  return inst;
}

Instance Instance::from_strings(std::initializer_list<std::string_view> rows,
                                std::string name) {
  std::vector<Fingerprint> fps;
  fps.reserve(rows.size());
  for (const std::string_view row : rows) {
    fps.push_back(Fingerprint::from_string(row));
  }
  return from_fingerprints(std::move(fps), std::move(name));
}

Instance Instance::from_strings(const std::vector<std::string>& rows, std::string name) {
  std::vector<Fingerprint> fps;
  fps.reserve(rows.size());
  for (const std::string& row : rows) {
    fps.push_back(Fingerprint::from_string(row));
  }
  return from_fingerprints(std::move(fps), std::move(name));
}

std::vector<Candidate> candidate_resolutions(const Instance& inst) {
  // r resolves f exactly when r (read as an N-free fingerprint) is compatible
  // with f, so collecting members by generated resolution yields the full
  // compatibility set of every candidate.
  std::unordered_map<ResolvedVector, std::vector<std::uint32_t>, ResolvedVectorHash> sets;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (ResolvedVector& r : enumerate_resolutions(inst[i])) {
      sets[std::move(r)].push_back(static_cast<std::uint32_t>(i));
    }
  }
  std::vector<Candidate> out;
  out.reserve(sets.size());
  for (auto& [vector, members] : sets) {
    out.push_back(Candidate{vector, std::move(members)});
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return lex_less(a.vector, b.vector); });
  return out;
}

}  // namespace fpclust
