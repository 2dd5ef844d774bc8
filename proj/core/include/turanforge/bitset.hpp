#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace turanforge {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

/// Read-only view over a packed bit row. Bits past size() are always zero.
class BitView {
public:
  BitView() = default;
  BitView(const Word* words, std::size_t size) noexcept : words_(words), size_(size) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_for(size_); }
  std::span<const Word> words() const noexcept { return {words_, word_count()}; }

  bool test(std::size_t i) const noexcept {
    assert(i < size_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words()) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const noexcept {
    for (Word w : words())
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    const std::size_t nw = word_count();
    while (true) {
      if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= nw) return size_;
      w = words_[wi];
    }
  }
  std::size_t first() const noexcept { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    const std::size_t nw = word_count();
    for (std::size_t wi = 0; wi < nw; ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

private:
  const Word* words_ = nullptr;
  std::size_t size_ = 0;
};

inline std::size_t intersect_count(BitView a, BitView b) noexcept {
  assert(a.size() == b.size());
  std::size_t c = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  return c;
}

inline std::size_t intersect_count(BitView a, BitView b, BitView c) noexcept {
  assert(a.size() == b.size() && b.size() == c.size());
  std::size_t n = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  const auto wc = c.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    n += static_cast<std::size_t>(std::popcount(wa[i] & wb[i] & wc[i]));
  return n;
}

/// |a \ b|
inline std::size_t difference_count(BitView a, BitView b) noexcept {
  assert(a.size() == b.size());
  std::size_t c = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) c += static_cast<std::size_t>(std::popcount(wa[i] & ~wb[i]));
  return c;
}

inline bool intersects(BitView a, BitView b) noexcept {
  assert(a.size() == b.size());
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    if (wa[i] & wb[i]) return true;
  return false;
}

inline bool operator==(BitView a, BitView b) noexcept {
  if (a.size() != b.size()) return false;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    if (wa[i] != wb[i]) return false;
  return true;
}

/// Owning fixed-size bitset.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : words_(words_for(size), 0), size_(size) {}
  explicit Bitset(BitView v) : words_(v.words().begin(), v.words().end()), size_(v.size()) {}

  static Bitset full(std::size_t size) {
    Bitset b(size);
    b.set_all();
    return b;
  }

  std::size_t size() const noexcept { return size_; }
  BitView view() const noexcept { return {words_.data(), size_}; }
  operator BitView() const noexcept { return view(); }

  bool test(std::size_t i) const noexcept { return view().test(i); }
  std::size_t count() const noexcept { return view().count(); }
  bool any() const noexcept { return view().any(); }
  bool none() const noexcept { return view().none(); }
  std::size_t first() const noexcept { return view().first(); }
  std::size_t next(std::size_t from) const noexcept { return view().next(from); }
  template <class F>
  void for_each(F&& f) const {
    view().for_each(std::forward<F>(f));
  }
  std::vector<int> to_indices() const { return view().to_indices(); }

  void set(std::size_t i) noexcept {
    assert(i < size_);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void reset(std::size_t i) noexcept {
    assert(i < size_);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void set(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }
  void flip(std::size_t i) noexcept {
    assert(i < size_);
    words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
  }

  void set_all() noexcept {
    for (Word& w : words_) w = ~Word{0};
    trim();
  }
  void reset_all() noexcept {
    for (Word& w : words_) w = 0;
  }

  Bitset& operator&=(BitView o) noexcept {
    assert(o.size() == size_);
    const auto wo = o.words();
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= wo[i];
    return *this;
  }
  Bitset& operator|=(BitView o) noexcept {
    assert(o.size() == size_);
    const auto wo = o.words();
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= wo[i];
    return *this;
  }
  /// Removes every bit set in `o`.
  Bitset& subtract(BitView o) noexcept {
    assert(o.size() == size_);
    const auto wo = o.words();
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~wo[i];
    return *this;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) noexcept { return a.view() == b.view(); }

private:
  void trim() noexcept {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::vector<Word> words_;
  std::size_t size_ = 0;
};

inline Bitset operator&(BitView a, BitView b) {
  Bitset r(a);
  r &= b;
  return r;
}

/// rows x cols bits in one allocation; each row is word-aligned.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BitView row(std::size_t r) const noexcept {
    assert(r < rows_);
    return {data_.data() + r * stride_, cols_};
  }

  bool test(std::size_t r, std::size_t c) const noexcept { return row(r).test(c); }
  void set(std::size_t r, std::size_t c) noexcept {
    assert(r < rows_ && c < cols_);
    data_[r * stride_ + c / kWordBits] |= Word{1} << (c % kWordBits);
  }
  void reset(std::size_t r, std::size_t c) noexcept {
    assert(r < rows_ && c < cols_);
    data_[r * stride_ + c / kWordBits] &= ~(Word{1} << (c % kWordBits));
  }
  void set(std::size_t r, std::size_t c, bool v) noexcept { v ? set(r, c) : reset(r, c); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : data_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

} // namespace turanforge
