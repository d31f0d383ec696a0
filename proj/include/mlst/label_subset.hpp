#ifndef MLST_LABEL_SUBSET_HPP
#define MLST_LABEL_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlst/errors.hpp"

namespace mlst {

// Fixed-width bitstring over the label set. Bit i (0-based) corresponds to
// label i+1 in the 1-based external numbering; all in-library indices are
// 0-based. Unused high bits of the last block are kept zero.
class LabelSubset {
public:
  LabelSubset() : width_(0) {}
  explicit LabelSubset(int width) : width_(width), blocks_((width + 63) / 64, 0) {}

  static LabelSubset zeros(int width) { return LabelSubset(width); }

  static LabelSubset ones(int width) {
    LabelSubset s(width);
    for (auto& b : s.blocks_) b = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  // Parses a string of '0'/'1' characters, leftmost char = label index 0.
  static LabelSubset from_string(std::string_view bits) {
    LabelSubset s(static_cast<int>(bits.size()));
    for (int i = 0; i < s.width_; ++i) {
      if (bits[i] == '1')
        s.set(i);
      else if (bits[i] != '0')
        fail(Errc::parse_error, "bit string may contain only '0' and '1'");
    }
    return s;
  }

  static LabelSubset of(int width, std::initializer_list<int> indices) {
    LabelSubset s(width);
    for (int i : indices) s.set(i);
    return s;
  }

  int width() const { return width_; }

  bool test(int i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool value = true) {
    if (value)
      blocks_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(int i) { blocks_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  int count() const {
    int c = 0;
    for (auto b : blocks_) c += std::popcount(b);
    return c;
  }
  bool none() const {
    for (auto b : blocks_)
      if (b) return false;
    return true;
  }

  // |this - other|, the number of bits set here but not in other.
  int diff_count(const LabelSubset& other) const {
    int c = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) c += std::popcount(blocks_[i] & ~other.blocks_[i]);
    return c;
  }

  // Calls fn(i) for every set bit, ascending.
  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < blocks_.size(); ++w) {
      std::uint64_t b = blocks_[w];
      while (b) {
        int i = static_cast<int>(w * 64) + std::countr_zero(b);
        fn(i);
        b &= b - 1;
      }
    }
  }

  std::vector<int> set_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each_set([&](int i) { out.push_back(i); });
    return out;
  }

  std::string to_string() const {
    std::string s(width_, '0');
    for_each_set([&](int i) { s[i] = '1'; });
    return s;
  }

  bool operator==(const LabelSubset& o) const { return width_ == o.width_ && blocks_ == o.blocks_; }
  bool operator!=(const LabelSubset& o) const { return !(*this == o); }

private:
  void trim() {
    int extra = static_cast<int>(blocks_.size()) * 64 - width_;
    if (extra > 0 && !blocks_.empty()) blocks_.back() &= ~std::uint64_t{0} >> extra;
  }

  int width_;
  std::vector<std::uint64_t> blocks_;
};

inline void check_width(const LabelSubset& x, int k) {
  if (x.width() != k)
    fail(Errc::width_mismatch,
         "subset width " + std::to_string(x.width()) + " does not match label count " + std::to_string(k));
}

}  // namespace mlst

#endif
