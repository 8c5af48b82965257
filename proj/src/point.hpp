#ifndef ZGEN_SRC_POINT_HPP_
#define ZGEN_SRC_POINT_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zgen/nvec.hpp"

namespace zgen::detail {

inline constexpr std::size_t kMaxDim = 8;
using Coord = std::uint16_t;
inline constexpr std::uint64_t kMaxCoord = 0xFFFF;

// Fixed-capacity vector; entries at positions >= n are zero.
struct Pt {
  std::array<Coord, kMaxDim> v{};

  Coord& operator[](std::size_t i) { return v[i]; }
  Coord operator[](std::size_t i) const { return v[i]; }
  friend bool operator==(const Pt&, const Pt&) = default;
};

inline Pt to_pt(const NatVec& x) {
  if (x.size() > kMaxDim) throw std::invalid_argument("dimension above engine limit");
  Pt p;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > kMaxCoord) throw std::invalid_argument("entry above engine limit");
    p[i] = static_cast<Coord>(x[i]);
  }
  return p;
}

inline NatVec to_nat(const Pt& p, std::size_t n) {
  NatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = p[i];
  return x;
}

inline Pt add(const Pt& a, const Pt& b, std::size_t n) {
  Pt s;
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Coord>(a[i] + b[i]);
  return s;
}

inline bool is_zero(const Pt& p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i]) return false;
  }
  return true;
}

inline unsigned total(const Pt& p, std::size_t n) {
  unsigned t = 0;
  for (std::size_t i = 0; i < n; ++i) t += p[i];
  return t;
}

inline void sort_pt(Pt& p, std::size_t n) { std::sort(p.v.begin(), p.v.begin() + static_cast<std::ptrdiff_t>(n)); }

// Mixed-radix box prod [0, caps(i)), coordinate 0 most significant.
class Box {
 public:
  Box() = default;
  Box(std::size_t n, const Pt& caps) : n_(n), caps_(caps) {
    cells_ = 1;
    for (std::size_t i = n; i-- > 0;) {
      stride_[i] = cells_;
      // Saturates; callers compare against much smaller dense limits.
      cells_ = (caps[i] != 0 && cells_ > (std::uint64_t{1} << 62) / caps[i]) ? (std::uint64_t{1} << 62)
                                                                            : cells_ * caps[i];
    }
  }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::uint64_t cells() const { return cells_; }
  [[nodiscard]] Coord cap(std::size_t i) const { return caps_[i]; }
  [[nodiscard]] std::uint64_t stride(std::size_t i) const { return stride_[i]; }
  [[nodiscard]] bool inside(const Pt& p) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (p[i] >= caps_[i]) return false;
    }
    return true;
  }
  [[nodiscard]] std::uint64_t index(const Pt& p) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < n_; ++i) idx += p[i] * stride_[i];
    return idx;
  }

 private:
  std::size_t n_ = 0;
  Pt caps_;
  std::array<std::uint64_t, kMaxDim> stride_{};
  std::uint64_t cells_ = 0;
};

class Bitmap {
 public:
  Bitmap() = default;
  explicit Bitmap(std::uint64_t cells) : w_((cells + 63) / 64, 0) {}
  [[nodiscard]] bool test(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::uint64_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  // Returns true if the bit was clear.
  bool test_and_set(std::uint64_t i) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    bool was = w_[i >> 6] & m;
    w_[i >> 6] |= m;
    return !was;
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

 private:
  std::vector<std::uint64_t> w_;
};

// Up-closure of a growing set of points inside a box. In sorted mode only
// ascending points are represented (all caps equal) and dominance is between
// sorted vectors; cells are ranked by the combinatorial number system.
class UpSet {
 public:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 31;

  UpSet(const Box& box, bool sorted) : box_(box), sorted_(sorted) {
    std::uint64_t cells = box.cells();
    if (sorted_ && box.n() > 0) {
      const std::size_t n = box.n();
      const std::uint64_t top = box.cap(0) + n;
      binom_.assign((top + 1) * (n + 1), 0);
      for (std::uint64_t a = 0; a <= top; ++a) {
        for (std::size_t b = 0; b <= n; ++b) {
          std::uint64_t v;
          if (b == 0) {
            v = 1;
          } else if (a == 0) {
            v = 0;
          } else {
            v = binom(a - 1, b - 1) + binom(a - 1, b);
            if (v > (std::uint64_t{1} << 62)) v = std::uint64_t{1} << 62;
          }
          binom_[a * (n + 1) + b] = v;
        }
      }
      cells = box.cap(0) == 0 ? 0 : binom(box.cap(0) + n - 1, n);
    }
    dense_ = cells <= kDenseLimit;
    if (dense_) bits_ = Bitmap(cells);
  }

  [[nodiscard]] bool covered(const Pt& p) const {
    if (dense_) return bits_.test(index(p));
    for (const auto& m : minimal_) {
      bool ge = true;
      for (std::size_t i = 0; i < box_.n(); ++i) {
        if (p[i] < m[i]) {
          ge = false;
          break;
        }
      }
      if (ge) return true;
    }
    return false;
  }

  // True iff some covered point lies strictly below p.
  [[nodiscard]] bool strictly_covered(const Pt& p) const {
    const std::size_t n = box_.n();
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] == 0) continue;
      if (sorted_ && i > 0 && p[i - 1] == p[i]) continue;
      Pt q = p;
      --q[i];
      if (covered(q)) return true;
    }
    return false;
  }

  // Adds the up-closure of p (inside the box). p must lie inside the box.
  void add(const Pt& p) {
    if (!dense_) {
      minimal_.push_back(p);
      return;
    }
    if (!bits_.test_and_set(index(p))) return;
    const std::size_t n = box_.n();
    stack_.clear();
    stack_.push_back(p);
    while (!stack_.empty()) {
      Pt c = stack_.back();
      stack_.pop_back();
      for (std::size_t i = 0; i < n; ++i) {
        if (c[i] + 1 >= box_.cap(i)) continue;
        if (sorted_ && i + 1 < n && c[i] + 1 > c[i + 1]) continue;
        Pt d = c;
        ++d[i];
        if (bits_.test_and_set(index(d))) stack_.push_back(d);
      }
    }
  }

  void clear() {
    if (dense_) bits_.clear();
    minimal_.clear();
  }

 private:
  [[nodiscard]] std::uint64_t binom(std::uint64_t a, std::size_t b) const { return binom_[a * (box_.n() + 1) + b]; }

  [[nodiscard]] std::uint64_t index(const Pt& p) const {
    if (!sorted_) return box_.index(p);
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < box_.n(); ++i) r += binom(p[i] + i, i + 1);
    return r;
  }

  Box box_;
  bool sorted_;
  bool dense_ = false;
  Bitmap bits_;
  std::vector<Pt> minimal_;
  std::vector<Pt> stack_;
  std::vector<std::uint64_t> binom_;
};

}  // namespace zgen::detail

#endif  // ZGEN_SRC_POINT_HPP_
