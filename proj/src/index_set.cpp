#include "symnc/index_set.hpp"

#include <sstream>

#include "symnc/error.hpp"

namespace symnc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MemberNotInSubset: return "MemberNotInSubset";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::StageOutOfRange: return "StageOutOfRange";
    case ErrorCode::NotAStageMember: return "NotAStageMember";
    case ErrorCode::ConditionNotSatisfied: return "ConditionNotSatisfied";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DegenerateEmbedding: return "DegenerateEmbedding";
    case ErrorCode::ComplexInconsistent: return "ComplexInconsistent";
    case ErrorCode::OrientationInconsistent: return "OrientationInconsistent";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kWords = IndexSet::kWords;

}  // namespace

IndexSet::IndexSet(std::initializer_list<int> elements) {
  for (int i : elements) {
    if (i < 1 || i > kMaxN) throw Error(ErrorCode::InvalidRange, "element " + std::to_string(i));
    *this = with(i);
  }
}

IndexSet IndexSet::from_elements(std::span<const int> elements, int n) {
  if (n < 0 || n > kMaxN) throw Error(ErrorCode::InvalidRange, "ground size " + std::to_string(n));
  IndexSet s;
  int prev = 0;
  for (int i : elements) {
    if (i < 1 || i > n) {
      throw Error(ErrorCode::InvalidRange,
                  "element " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
    }
    if (i <= prev) throw Error(ErrorCode::InvalidRange, "elements must be strictly increasing");
    prev = i;
    s = s.with(i);
  }
  return s;
}

IndexSet IndexSet::full(int n) {
  if (n < 0 || n > kMaxN) throw Error(ErrorCode::InvalidRange, "ground size " + std::to_string(n));
  IndexSet s;
  for (std::size_t i = 0; i < kWords; ++i) {
    const int lo = static_cast<int>(i * 64);
    if (n >= lo + 64) s.words_[i] = ~0ULL;
    else if (n > lo) s.words_[i] = (1ULL << (n - lo)) - 1;
  }
  return s;
}

IndexSet IndexSet::cyclic_run(int first, int length, int n) {
  IndexSet s;
  for (int j = 0; j < length; ++j) s = s.with((first - 1 + j) % n + 1);
  return s;
}

int IndexSet::min() const {
  for (std::size_t i = 0; i < kWords; ++i) {
    if (words_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(words_[i]) + 1;
  }
  return 0;
}

int IndexSet::max() const {
  for (std::size_t i = kWords; i-- > 0;) {
    if (words_[i] != 0) return static_cast<int>(i * 64) + 63 - std::countl_zero(words_[i]) + 1;
  }
  return 0;
}

int IndexSet::next_after(int i) const {
  if (i >= kMaxN) return 0;
  if (i < 0) i = 0;
  // Bit positions >= i (0-based) hold the elements > i.
  std::size_t w = static_cast<std::size_t>(i) / 64;
  std::uint64_t cur = words_[w] & (~0ULL << (i % 64));
  while (true) {
    if (cur != 0) return static_cast<int>(w * 64) + std::countr_zero(cur) + 1;
    if (++w == kWords) return 0;
    cur = words_[w];
  }
}

int IndexSet::prev_before(int i) const {
  if (i <= 1) return 0;
  if (i > kMaxN) i = kMaxN + 1;
  // Bit positions < i-1 (0-based) hold the elements < i.
  const int limit = i - 1;
  std::size_t w = static_cast<std::size_t>(limit - 1) / 64;
  const int top = (limit - 1) % 64;
  std::uint64_t cur = words_[w] & (top == 63 ? ~0ULL : ((1ULL << (top + 1)) - 1));
  while (true) {
    if (cur != 0) return static_cast<int>(w * 64) + 63 - std::countl_zero(cur) + 1;
    if (w == 0) return 0;
    cur = words_[--w];
  }
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int i) { out.push_back(i); });
  return out;
}

std::string IndexSet::key() const {
  std::string out;
  for_each([&](int i) {
    if (!out.empty()) out += '-';
    out += std::to_string(i);
  });
  return out;
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](int i) {
    if (!first) os << ',';
    first = false;
    os << i;
  });
  os << '}';
  return os.str();
}

IndexSet IndexSet::with(int i) const {
  IndexSet s = *this;
  s.words_[static_cast<std::size_t>(i - 1) / 64] |= 1ULL << ((i - 1) % 64);
  return s;
}

IndexSet IndexSet::without(int i) const {
  IndexSet s = *this;
  s.words_[static_cast<std::size_t>(i - 1) / 64] &= ~(1ULL << ((i - 1) % 64));
  return s;
}

IndexSet IndexSet::rotated(int r, int n) const {
  if (r == 0) return *this;
  if (n <= 64) {
    const std::uint64_t field = n == 64 ? ~0ULL : (1ULL << n) - 1;
    const std::uint64_t m = words_[0] & field;
    return from_low_word(((m << r) | (m >> (n - r))) & field);
  }
  IndexSet out;
  for_each([&](int i) {
    if (i <= n) out = out.with((i - 1 + r) % n + 1);
  });
  return out;
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  std::size_t w = 0;
  while (w < kWords && a.words_[w] == b.words_[w]) ++w;
  if (w == kWords) return std::strong_ordering::equal;
  const std::uint64_t diff = a.words_[w] ^ b.words_[w];
  const int bitpos = std::countr_zero(diff);
  // The set owning the first differing element is smaller, unless the other
  // list has already ended (it is then a proper prefix).
  const bool a_owns = ((a.words_[w] >> bitpos) & 1U) != 0;
  const IndexSet& other = a_owns ? b : a;
  const int element = static_cast<int>(w * 64) + bitpos + 1;
  const bool other_continues = other.next_after(element) != 0;
  if (a_owns) return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
  return other_continues ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace symnc
