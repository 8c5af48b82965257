#ifndef ZGEN_NVEC_HPP_
#define ZGEN_NVEC_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zgen/rational.hpp"

namespace zgen {

using Entry = std::uint64_t;
// perm[i] is the source coordinate of position i: (f o perm)(i) = f(perm[i]).
using Permutation = std::vector<std::size_t>;

// A function n -> omega stored as n naturals.
class NatVec {
 public:
  NatVec() = default;
  explicit NatVec(std::size_t n) : e_(n, 0) {}
  NatVec(std::initializer_list<Entry> values) : e_(values) {}
  explicit NatVec(std::vector<Entry> values) : e_(std::move(values)) {}

  [[nodiscard]] std::size_t size() const { return e_.size(); }
  Entry& operator[](std::size_t i) { return e_[i]; }
  Entry operator[](std::size_t i) const { return e_[i]; }
  [[nodiscard]] Entry at(std::size_t i) const { return e_.at(i); }
  [[nodiscard]] const std::vector<Entry>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_constant() const;
  // Max entry.
  [[nodiscard]] Entry norm() const;
  [[nodiscard]] Entry total() const;
  // Entries sorted ascending; equal for exactly the vectors of one orbit.
  [[nodiscard]] NatVec canonical() const;

  NatVec& operator+=(const NatVec& o);
  friend NatVec operator+(NatVec a, const NatVec& b) { return a += b; }
  // Scalar multiple.
  friend NatVec operator*(Entry k, NatVec a);

  friend bool operator==(const NatVec&, const NatVec&) = default;
  // Lexicographic; this is also the mixed-radix order with coordinate 0 most significant.
  friend auto operator<=>(const NatVec&, const NatVec&) = default;

 private:
  std::vector<Entry> e_;
};

std::string to_string(const NatVec& v);
// "2,3,7" or "(2,3,7)"; whitespace ignored.
NatVec parse_vec(std::string_view text);

NatVec unit_vector(std::size_t n, std::size_t i);
NatVec indicator(std::size_t n, const std::vector<std::size_t>& J);
// Indicator of {k, ..., n-1}: zeros exactly on 0..k-1.
NatVec indicator_tail(std::size_t n, std::size_t k);

bool strictly_below(const NatVec& x, const NatVec& h);
bool dominates(const NatVec& x, const NatVec& y);
// Dominance after sorting both; equivalent to x >= y o sigma for some sigma.
bool dominates_up_to_perm(const NatVec& x, const NatVec& y);

NatVec permute(const NatVec& f, const Permutation& perm);
bool is_permutation(const Permutation& perm, std::size_t n);
Permutation identity_perm(std::size_t n);
// sigma(0) = n-1, sigma(i) = i-1.
Permutation cyclic_perm(std::size_t n);
// A permutation p with permute(from, p) == to; nullopt if the orbits differ.
std::optional<Permutation> perm_between(const NatVec& from, const NatVec& to);
// Distinct vectors f o sigma, in lexicographic order.
std::vector<NatVec> distinct_permutations(const NatVec& f);

// result(0) = 0, result(i) = f(i-1).
NatVec shift_S(const NatVec& f);
// f - f(n-1) * 1_{n-1}.
NatVec zero_last(const NatVec& f);

// Set of vectors of one dimension. With caps, members inside the box
// prod [0, caps(i)) live in a bit-set; all others go to an overflow list.
class VecSet {
 public:
  explicit VecSet(std::size_t n);
  VecSet(std::size_t n, NatVec caps);
  static VecSet of(std::size_t n, const std::vector<NatVec>& members);

  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const std::optional<NatVec>& caps() const { return caps_; }
  // Returns true when newly inserted.
  bool insert(const NatVec& v);
  [[nodiscard]] bool contains(const NatVec& v) const;
  [[nodiscard]] std::size_t size() const { return count_ + overflow_.size(); }
  [[nodiscard]] bool empty() const { return size() == 0; }
  // Box members in mixed-radix order, then overflow members in lexicographic order.
  [[nodiscard]] std::vector<NatVec> elements() const;
  void for_each(const std::function<void(const NatVec&)>& fn) const;

  friend bool operator==(const VecSet& a, const VecSet& b) { return a.elements() == b.elements(); }

 private:
  [[nodiscard]] bool in_box(const NatVec& v) const;
  [[nodiscard]] std::size_t index_of(const NatVec& v) const;
  [[nodiscard]] NatVec decode(std::size_t index) const;

  std::size_t n_;
  std::optional<NatVec> caps_;
  std::vector<std::uint64_t> bits_;
  std::size_t count_ = 0;
  std::set<NatVec> overflow_;
};

// {a + b}; with a cap, sums having some coordinate >= cap(i) are dropped.
VecSet minkowski_sum(const VecSet& A, const VecSet& B, const std::optional<NatVec>& cap = std::nullopt);
// Sum of k copies of A; k = 0 gives {0}.
VecSet k_fold_sum(const VecSet& A, std::size_t k, const std::optional<NatVec>& cap = std::nullopt);
VecSet orbit_closure(const VecSet& A);
// Minimal elements under the coordinatewise order, lexicographically sorted.
std::vector<NatVec> antichain_min(const VecSet& A);
std::vector<NatVec> antichain_min(std::vector<NatVec> A);
// True iff some member of A is <= x.
bool in_upset(const std::vector<NatVec>& A, const NatVec& x);

// Power mean of degree q. Exact for q in {-inf, -1, 1, +inf}; double otherwise.
using MeanValue = std::variant<Rational, double>;
MeanValue mean(double q, const NatVec& f);
Rational harmonic_mean(const NatVec& f);

}  // namespace zgen

template <>
struct std::hash<zgen::NatVec> {
  std::size_t operator()(const zgen::NatVec& v) const noexcept;
};

#endif  // ZGEN_NVEC_HPP_
