#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wfs {

/// A subset of a category's morphisms, stored as a fixed-width bit vector
/// indexed by morphism id.
///
/// Classes compare by their value as an unsigned binary number (bit i has
/// weight 2^i), which is the canonical output order everywhere.
class MorphismClass {
 public:
  MorphismClass() = default;
  explicit MorphismClass(std::size_t universe_size)
      : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

  static MorphismClass full(std::size_t universe_size) {
    MorphismClass c(universe_size);
    for (std::size_t i = 0; i < universe_size; ++i) c.insert(static_cast<int>(i));
    return c;
  }

  static MorphismClass of(std::size_t universe_size, const std::vector<int>& members) {
    MorphismClass c(universe_size);
    for (int m : members) c.insert(m);
    return c;
  }

  std::size_t universe_size() const { return size_; }

  bool contains(int m) const {
    return (words_[static_cast<std::size_t>(m) / 64] >> (static_cast<std::size_t>(m) % 64)) & 1u;
  }
  void insert(int m) {
    words_[static_cast<std::size_t>(m) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(m) % 64);
  }
  void erase(int m) {
    words_[static_cast<std::size_t>(m) / 64] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(m) % 64));
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const MorphismClass& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  MorphismClass& operator&=(const MorphismClass& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  MorphismClass& operator|=(const MorphismClass& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  MorphismClass& operator-=(const MorphismClass& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend MorphismClass operator&(MorphismClass a, const MorphismClass& b) { return a &= b; }
  friend MorphismClass operator|(MorphismClass a, const MorphismClass& b) { return a |= b; }
  friend MorphismClass operator-(MorphismClass a, const MorphismClass& b) { return a -= b; }

  /// Members in increasing id order.
  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Smallest member of the symmetric difference, or -1 when equal.
  int first_difference(const MorphismClass& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto diff = words_[w] ^ o.words_[w];
      if (diff) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(diff)));
    }
    return -1;
  }

  /// Bit string, most significant (highest id) first.
  std::string to_bits() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (contains(static_cast<int>(i))) s[size_ - 1 - i] = '1';
    return s;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(w);
    return h;
  }

  friend bool operator==(const MorphismClass&, const MorphismClass&) = default;
  friend std::strong_ordering operator<=>(const MorphismClass& a, const MorphismClass& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct MorphismClassHash {
  std::size_t operator()(const MorphismClass& c) const { return c.hash(); }
};

}  // namespace wfs
