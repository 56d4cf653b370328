#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace symnc {

/// Largest ground set size the bit-mask representation can hold. The general
/// construction works inside an auxiliary ground set of size d*k, which is
/// why this is well above the sizes collections usually live on.
inline constexpr int kMaxN = 1024;

/// A subset of [n] stored as a fixed-width membership mask. Elements are
/// 1-based at every public boundary; bit (i-1) holds element i.
class IndexSet {
 public:
  static constexpr std::size_t kWords = kMaxN / 64;

  constexpr IndexSet() = default;
  IndexSet(std::initializer_list<int> elements);

  /// Validating constructor: elements must be strictly increasing and in [1, n].
  static IndexSet from_elements(std::span<const int> elements, int n);
  /// Elements 1..64 taken from the bits of `word`.
  static IndexSet from_low_word(std::uint64_t word) {
    IndexSet s;
    s.words_[0] = word;
    return s;
  }
  /// {1, ..., n}
  static IndexSet full(int n);
  /// {first, first+1, ..., first+length-1} taken cyclically in [n].
  static IndexSet cyclic_run(int first, int length, int n);

  std::uint64_t word(std::size_t i) const { return words_[i]; }

  bool contains(int i) const {
    return i >= 1 && i <= kMaxN && ((words_[static_cast<std::size_t>(i - 1) / 64] >> ((i - 1) % 64)) & 1U) != 0;
  }
  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  /// Smallest element; 0 when empty.
  int min() const;
  /// Largest element; 0 when empty.
  int max() const;
  /// Smallest element strictly greater than i; 0 if none.
  int next_after(int i) const;
  /// Largest element strictly smaller than i; 0 if none.
  int prev_before(int i) const;

  std::vector<int> elements() const;
  /// "1-2-3-5"
  std::string key() const;
  /// "{1,2,3,5}"
  std::string to_string() const;

  IndexSet with(int i) const;
  IndexSet without(int i) const;
  bool is_subset_of(const IndexSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  /// Rotates the first n bits: element i moves to i + r (mod n), 0 <= r < n.
  IndexSet rotated(int r, int n) const;

  friend IndexSet operator|(const IndexSet& a, const IndexSet& b) {
    IndexSet s;
    for (std::size_t i = 0; i < kWords; ++i) s.words_[i] = a.words_[i] | b.words_[i];
    return s;
  }
  friend IndexSet operator&(const IndexSet& a, const IndexSet& b) {
    IndexSet s;
    for (std::size_t i = 0; i < kWords; ++i) s.words_[i] = a.words_[i] & b.words_[i];
    return s;
  }
  friend IndexSet operator-(const IndexSet& a, const IndexSet& b) {
    IndexSet s;
    for (std::size_t i = 0; i < kWords; ++i) s.words_[i] = a.words_[i] & ~b.words_[i];
    return s;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) = default;
  /// Lexicographic order on the ascending element lists.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b);

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        f(static_cast<int>(i * 64) + std::countr_zero(w) + 1);
      }
    }
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::size_t i = 0; i < IndexSet::kWords; ++i) {
      h ^= s.word(i) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace symnc
