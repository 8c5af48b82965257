#include "zgen/nvec.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace zgen {

namespace {

void require_same_dim(const NatVec& a, const NatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
}

constexpr std::size_t kMaxDenseCells = std::size_t{1} << 30;

}  // namespace

bool NatVec::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Entry x) { return x == 0; });
}

bool NatVec::is_constant() const {
  return std::all_of(e_.begin(), e_.end(), [&](Entry x) { return x == e_.front(); });
}

Entry NatVec::norm() const { return e_.empty() ? 0 : *std::max_element(e_.begin(), e_.end()); }

Entry NatVec::total() const { return std::accumulate(e_.begin(), e_.end(), Entry{0}); }

NatVec NatVec::canonical() const {
  NatVec c = *this;
  std::sort(c.e_.begin(), c.e_.end());
  return c;
}

NatVec& NatVec::operator+=(const NatVec& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

NatVec operator*(Entry k, NatVec a) {
  for (auto& x : a.e_) x *= k;
  return a;
}

std::string to_string(const NatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

NatVec parse_vec(std::string_view text) {
  std::vector<Entry> out;
  std::string digits;
  bool open = false, closed = false, expect_value = true;
  auto flush = [&] {
    if (digits.empty()) throw std::invalid_argument("empty entry in vector literal");
    if (digits.size() > 19) throw std::invalid_argument("entry too large in vector literal");
    out.push_back(std::stoull(digits));
    digits.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (closed) throw std::invalid_argument("trailing characters in vector literal");
    if (c == '(' && out.empty() && digits.empty() && !open) {
      open = true;
    } else if (c == ')' && open) {
      flush();
      closed = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      expect_value = false;
    } else if (c == ',') {
      flush();
      expect_value = true;
    } else {
      throw std::invalid_argument(std::string("unexpected character in vector literal: ") + c);
    }
  }
  if (open && !closed) throw std::invalid_argument("unbalanced parenthesis in vector literal");
  if (!closed) {
    if (expect_value && out.empty() && digits.empty()) throw std::invalid_argument("empty vector literal");
    flush();
  }
  return NatVec(std::move(out));
}

NatVec unit_vector(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("unit_vector index out of range");
  NatVec v(n);
  v[i] = 1;
  return v;
}

NatVec indicator(std::size_t n, const std::vector<std::size_t>& J) {
  NatVec v(n);
  for (std::size_t j : J) {
    if (j >= n) throw std::out_of_range("indicator index out of range");
    v[j] = 1;
  }
  return v;
}

NatVec indicator_tail(std::size_t n, std::size_t k) {
  if (k > n) throw std::out_of_range("indicator_tail k > n");
  NatVec v(n);
  for (std::size_t i = k; i < n; ++i) v[i] = 1;
  return v;
}

bool strictly_below(const NatVec& x, const NatVec& h) {
  require_same_dim(x, h);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= h[i]) return false;
  }
  return true;
}

bool dominates(const NatVec& x, const NatVec& y) {
  require_same_dim(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return false;
  }
  return true;
}

bool dominates_up_to_perm(const NatVec& x, const NatVec& y) {
  return dominates(x.canonical(), y.canonical());
}

NatVec permute(const NatVec& f, const Permutation& perm) {
  if (!is_permutation(perm, f.size())) throw std::invalid_argument("not a permutation of the right size");
  NatVec r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[perm[i]];
  return r;
}

bool is_permutation(const Permutation& perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

Permutation identity_perm(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Permutation cyclic_perm(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i == 0) ? n - 1 : i - 1;
  return p;
}

std::optional<Permutation> perm_between(const NatVec& from, const NatVec& to) {
  if (from.size() != to.size()) return std::nullopt;
  const std::size_t n = from.size();
  std::vector<bool> used(n, false);
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j] && from[j] == to[i]) {
        used[j] = true;
        p[i] = j;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return p;
}

std::vector<NatVec> distinct_permutations(const NatVec& f) {
  std::vector<Entry> e = f.canonical().entries();
  std::vector<NatVec> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

NatVec shift_S(const NatVec& f) {
  if (f.size() == 0) throw std::invalid_argument("shift_S of empty vector");
  NatVec r(f.size());
  for (std::size_t i = 1; i < f.size(); ++i) r[i] = f[i - 1];
  return r;
}

NatVec zero_last(const NatVec& f) {
  NatVec r = f;
  if (r.size() > 0) r[r.size() - 1] = 0;
  return r;
}

VecSet::VecSet(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("VecSet dimension must be positive");
}

VecSet::VecSet(std::size_t n, NatVec caps) : n_(n), caps_(std::move(caps)) {
  if (n == 0) throw std::invalid_argument("VecSet dimension must be positive");
  if (caps_->size() != n) throw std::invalid_argument("caps dimension mismatch");
  std::size_t cells = 1;
  for (Entry c : caps_->entries()) {
    if (c != 0 && cells > kMaxDenseCells / c) throw std::length_error("VecSet box too large for dense storage");
    cells *= static_cast<std::size_t>(c);
  }
  bits_.assign((cells + 63) / 64, 0);
}

VecSet VecSet::of(std::size_t n, const std::vector<NatVec>& members) {
  VecSet s(n);
  for (const auto& m : members) s.insert(m);
  return s;
}

bool VecSet::in_box(const NatVec& v) const {
  if (!caps_) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    if (v[i] >= (*caps_)[i]) return false;
  }
  return true;
}

std::size_t VecSet::index_of(const NatVec& v) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n_; ++i) idx = idx * (*caps_)[i] + v[i];
  return idx;
}

NatVec VecSet::decode(std::size_t index) const {
  NatVec v(n_);
  for (std::size_t i = n_; i-- > 0;) {
    v[i] = index % (*caps_)[i];
    index /= (*caps_)[i];
  }
  return v;
}

bool VecSet::insert(const NatVec& v) {
  if (v.size() != n_) throw std::invalid_argument("VecSet insert: dimension mismatch");
  if (in_box(v)) {
    std::size_t idx = index_of(v);
    std::uint64_t mask = std::uint64_t{1} << (idx % 64);
    if (bits_[idx / 64] & mask) return false;
    bits_[idx / 64] |= mask;
    ++count_;
    return true;
  }
  return overflow_.insert(v).second;
}

bool VecSet::contains(const NatVec& v) const {
  if (v.size() != n_) return false;
  if (in_box(v)) {
    std::size_t idx = index_of(v);
    return (bits_[idx / 64] >> (idx % 64)) & 1U;
  }
  return overflow_.count(v) > 0;
}

void VecSet::for_each(const std::function<void(const NatVec&)>& fn) const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word) {
      int b = __builtin_ctzll(word);
      fn(decode(w * 64 + static_cast<std::size_t>(b)));
      word &= word - 1;
    }
  }
  for (const auto& v : overflow_) fn(v);
}

std::vector<NatVec> VecSet::elements() const {
  std::vector<NatVec> out;
  out.reserve(size());
  for_each([&](const NatVec& v) { out.push_back(v); });
  return out;
}

namespace {

VecSet make_like(std::size_t n, const std::optional<NatVec>& cap) {
  return cap ? VecSet(n, *cap) : VecSet(n);
}

}  // namespace

VecSet minkowski_sum(const VecSet& A, const VecSet& B, const std::optional<NatVec>& cap) {
  if (A.dim() != B.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  if (cap && cap->size() != A.dim()) throw std::invalid_argument("minkowski_sum: cap dimension mismatch");
  VecSet out = make_like(A.dim(), cap);
  auto bs = B.elements();
  A.for_each([&](const NatVec& a) {
    for (const auto& b : bs) {
      NatVec s = a + b;
      if (!cap || strictly_below(s, *cap)) out.insert(s);
    }
  });
  return out;
}

VecSet k_fold_sum(const VecSet& A, std::size_t k, const std::optional<NatVec>& cap) {
  VecSet acc = make_like(A.dim(), cap);
  NatVec zero(A.dim());
  if (!cap || strictly_below(zero, *cap)) acc.insert(zero);
  for (std::size_t i = 0; i < k; ++i) acc = minkowski_sum(acc, A, cap);
  return acc;
}

VecSet orbit_closure(const VecSet& A) {
  VecSet out = A.caps() ? VecSet(A.dim(), *A.caps()) : VecSet(A.dim());
  A.for_each([&](const NatVec& a) {
    for (const auto& p : distinct_permutations(a)) out.insert(p);
  });
  return out;
}

std::vector<NatVec> antichain_min(std::vector<NatVec> A) {
  std::sort(A.begin(), A.end(), [](const NatVec& x, const NatVec& y) {
    Entry sx = x.total(), sy = y.total();
    return sx != sy ? sx < sy : x < y;
  });
  A.erase(std::unique(A.begin(), A.end()), A.end());
  std::vector<NatVec> kept;
  for (const auto& x : A) {
    if (!in_upset(kept, x)) kept.push_back(x);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<NatVec> antichain_min(const VecSet& A) { return antichain_min(A.elements()); }

bool in_upset(const std::vector<NatVec>& A, const NatVec& x) {
  return std::any_of(A.begin(), A.end(), [&](const NatVec& a) { return dominates(x, a); });
}

Rational harmonic_mean(const NatVec& f) {
  if (f.size() == 0) throw std::domain_error("mean of empty vector");
  Rational denom(0);
  for (Entry x : f) {
    if (x == 0) throw std::domain_error("harmonic mean of a vector with a zero entry");
    denom += Rational(1, BigInt(x));
  }
  return Rational(static_cast<long long>(f.size())) / denom;
}

MeanValue mean(double q, const NatVec& f) {
  if (f.size() == 0) throw std::domain_error("mean of empty vector");
  const double inf = std::numeric_limits<double>::infinity();
  if (q < 0 && q != -inf && std::any_of(f.begin(), f.end(), [](Entry x) { return x == 0; })) {
    throw std::domain_error("mean of negative degree needs positive entries");
  }
  if (q == -inf) return Rational(BigInt(*std::min_element(f.begin(), f.end())), 1);
  if (q == inf) return Rational(BigInt(f.norm()), 1);
  if (q == -1) return harmonic_mean(f);
  if (q == 1) {
    BigInt sum = 0;
    for (Entry x : f) sum += x;
    return Rational(sum, BigInt(f.size()));
  }
  if (q == 0) {
    double logs = 0;
    for (Entry x : f) logs += std::log(static_cast<double>(x));
    return std::exp(logs / static_cast<double>(f.size()));
  }
  double acc = 0;
  for (Entry x : f) acc += std::pow(static_cast<double>(x), q);
  return std::pow(acc / static_cast<double>(f.size()), 1.0 / q);
}

}  // namespace zgen

std::size_t std::hash<zgen::NatVec>::operator()(const zgen::NatVec& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : v) h = (h ^ x) * 1099511628211ULL;
  return h;
}
