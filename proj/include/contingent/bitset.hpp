#ifndef CONTINGENT_BITSET_HPP
#define CONTINGENT_BITSET_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace contingent {

/// Fixed-length dynamic bitset. Used both for sets of valuations (formula
/// semantics) and for events (sets of states of a subjective model).
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t size, bool value = false);

  static BitSet from_indices(std::size_t size, const std::vector<std::size_t>& indices);
  static BitSet from_mask(std::size_t size, std::uint64_t mask);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true);

  std::size_t count() const;
  bool none() const;
  bool all() const;
  bool is_subset_of(const BitSet& other) const;
  bool intersects(const BitSet& other) const;

  /// Low 64 bits; only meaningful when size() <= 64.
  std::uint64_t to_mask() const { return words_.empty() ? 0 : words_[0]; }
  std::vector<std::size_t> indices() const;

  BitSet operator~() const;
  BitSet& operator&=(const BitSet& other);
  BitSet& operator|=(const BitSet& other);
  BitSet& operator-=(const BitSet& other);
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

  friend bool operator==(const BitSet& a, const BitSet& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BitSet& a, const BitSet& b) { return !(a == b); }
  /// Arbitrary but deterministic total order (for ordered containers).
  friend bool operator<(const BitSet& a, const BitSet& b);

  std::size_t hash() const;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Set of truth assignments over the declared atoms.
using ValuationSet = BitSet;
/// Set of states of a subjective model.
using Event = BitSet;

}  // namespace contingent

template <>
struct std::hash<contingent::BitSet> {
  std::size_t operator()(const contingent::BitSet& b) const noexcept { return b.hash(); }
};

#endif  // CONTINGENT_BITSET_HPP
