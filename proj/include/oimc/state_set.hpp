#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oimc {

// Fixed-universe bitset over dense state indices. All analyses manipulate
// state sets through this type; the universe size is the model's state count.
class StateSet {
public:
  StateSet() = default;
  explicit StateSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static StateSet all(std::size_t universe) {
    StateSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.clear_tail();
    return s;
  }

  static StateSet single(std::size_t universe, int index) {
    StateSet s(universe);
    s.set(index);
    return s;
  }

  static StateSet of(std::size_t universe, std::initializer_list<int> indices) {
    StateSet s(universe);
    for (int i : indices) s.set(i);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool test(int i) const {
    assert(i >= 0 && static_cast<std::size_t>(i) < universe_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    assert(i >= 0 && static_cast<std::size_t>(i) < universe_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && static_cast<std::size_t>(i) < universe_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  StateSet& operator|=(const StateSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  StateSet& operator&=(const StateSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  StateSet& operator-=(const StateSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  StateSet complemented() const {
    StateSet r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.clear_tail();
    return r;
  }

  bool is_subset_of(const StateSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const StateSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  friend bool operator==(const StateSet& a, const StateSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int bit = std::countr_zero(w);
        out.push_back(static_cast<int>(wi * 64 + bit));
        w &= w - 1;
      }
    }
    return out;
  }

  // Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(words_[wi]));
    return -1;
  }

private:
  void clear_tail() {
    if (std::size_t rem = universe_ & 63; rem && !words_.empty())
      words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace oimc
