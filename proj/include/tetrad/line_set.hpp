#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace tetrad {

using LineId = std::uint32_t;

// Sorted, duplicate-free list of line ids.
class LineSet {
 public:
  LineSet() = default;
  LineSet(std::initializer_list<LineId> ids) : LineSet(std::vector<LineId>(ids)) {}
  explicit LineSet(std::vector<LineId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  LineId operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<LineId>& ids() const { return ids_; }

  bool contains(LineId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  friend bool operator==(const LineSet&, const LineSet&) = default;
  friend auto operator<=>(const LineSet& a, const LineSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<LineId> ids_;
};

// Fixed-size bit set over line ids; the working representation for all the
// set algebra. Bits past size() are always zero.
class LineBits {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  LineBits() = default;
  explicit LineBits(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static LineBits full(std::size_t size) {
    LineBits b(size);
    for (auto& w : b.words_) w = ~Word{0};
    b.trim();
    return b;
  }

  static LineBits from_set(std::size_t size, const LineSet& s) {
    LineBits b(size);
    for (LineId id : s) b.set(id);
    return b;
  }

  std::size_t size() const { return size_; }
  const std::vector<Word>& words() const { return words_; }

  bool test(LineId i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(LineId i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(LineId i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  LineBits& operator&=(const LineBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  LineBits& operator|=(const LineBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Set difference.
  LineBits& operator-=(const LineBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend LineBits operator&(LineBits a, const LineBits& b) { return a &= b; }
  friend LineBits operator|(LineBits a, const LineBits& b) { return a |= b; }
  friend LineBits operator-(LineBits a, const LineBits& b) { return a -= b; }
  friend bool operator==(const LineBits&, const LineBits&) = default;

  bool intersects(const LineBits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const LineBits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::size_t intersection_count(const LineBits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  // Smallest member strictly greater than `after`, or the smallest member
  // when `after` is absent.
  std::optional<LineId> next(std::optional<LineId> after = std::nullopt) const {
    std::size_t start = after ? *after + 1 : 0;
    if (start >= size_) return std::nullopt;
    std::size_t wi = start / kWordBits;
    Word w = words_[wi] & (~Word{0} << (start % kWordBits));
    while (true) {
      if (w) return static_cast<LineId>(wi * kWordBits + std::countr_zero(w));
      if (++wi == words_.size()) return std::nullopt;
      w = words_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(static_cast<LineId>(wi * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  LineSet to_set() const {
    std::vector<LineId> ids;
    ids.reserve(count());
    for_each([&](LineId id) { ids.push_back(id); });
    return LineSet(std::move(ids));
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (Word w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void trim() {
    if (size_ % kWordBits && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct LineBitsHash {
  std::size_t operator()(const LineBits& b) const { return b.hash(); }
};

}  // namespace tetrad
