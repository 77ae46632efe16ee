#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace soflag {

/// Integer partition indexing the trace monomial p_lambda = p_{m_1} ... p_{m_s}.
///
/// Parts are stored non-increasing with zeros stripped, so (2,1,0) and (2,1)
/// are the same key. The empty partition is the constant function 1.
class Partition {
 public:
  Partition() = default;
  /// Canonicalizes: drops zero parts and sorts non-increasing.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

  /// (m, m, ..., m) with `count` copies.
  static Partition repeated(unsigned m, unsigned count);
  /// Parses "2,1"; "0" and "" give the empty partition.
  static Partition parse(std::string_view text);

  std::span<const unsigned> parts() const { return parts_; }
  unsigned degree() const { return degree_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// Number of parts equal to m.
  unsigned multiplicity(unsigned m) const;

  /// Merge of the parts of both partitions (the index of p_a * p_b).
  friend Partition concat(const Partition& a, const Partition& b);
  /// Removes the part at position i.
  Partition without(std::size_t i) const;

  /// "2,1"; the empty partition serializes as "0".
  std::string to_string() const;
  /// Zero-padded to its degree, e.g. "(2,1,0)"; empty partition gives "0".
  std::string padded() const;

  /// Flag order: degree ascending, then parts lexicographically descending.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<unsigned> parts_;
  unsigned degree_ = 0;
};

/// All partitions of every j <= k, each once, in flag order. Includes the empty partition.
std::vector<Partition> enumerate_upto(unsigned k);

/// All partitions of exactly k, lexicographically descending.
std::vector<Partition> enumerate_exact(unsigned k);

/// The partition function P(k).
std::uint64_t partition_count(unsigned k);

}  // namespace soflag
