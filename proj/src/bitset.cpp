#include "contingent/bitset.hpp"

#include <bit>
#include <stdexcept>

namespace contingent {

BitSet::BitSet(std::size_t size, bool value) : size_(size), words_((size + 63) / 64, value ? ~0ULL : 0ULL) {
  trim();
}

BitSet BitSet::from_indices(std::size_t size, const std::vector<std::size_t>& indices) {
  BitSet b(size);
  for (std::size_t i : indices) {
    if (i >= size) throw std::out_of_range("BitSet index out of range");
    b.set(i);
  }
  return b;
}

BitSet BitSet::from_mask(std::size_t size, std::uint64_t mask) {
  BitSet b(size);
  if (!b.words_.empty()) b.words_[0] = mask;
  b.trim();
  return b;
}

void BitSet::set(std::size_t i, bool value) {
  const std::uint64_t bit = 1ULL << (i % 64);
  if (value) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

std::size_t BitSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitSet::none() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool BitSet::all() const { return count() == size_; }

bool BitSet::is_subset_of(const BitSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool BitSet::intersects(const BitSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<std::size_t> BitSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

BitSet BitSet::operator~() const {
  BitSet b = *this;
  for (auto& w : b.words_) w = ~w;
  b.trim();
  return b;
}

BitSet& BitSet::operator&=(const BitSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitSet& BitSet::operator|=(const BitSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitSet& BitSet::operator-=(const BitSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool operator<(const BitSet& a, const BitSet& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return a.words_ < b.words_;
}

std::size_t BitSet::hash() const {
  std::size_t h = std::hash<std::size_t>{}(size_);
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

void BitSet::trim() {
  if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (size_ % 64)) - 1;
}

}  // namespace contingent
