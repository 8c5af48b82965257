#include "zgen/generacy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "point.hpp"

namespace zgen {

using detail::Bitmap;
using detail::Box;
using detail::Coord;
using detail::kMaxDim;
using detail::Pt;
using detail::UpSet;

std::string to_string(Mode m) { return m == Mode::Full ? "full" : "antichain"; }

Mode parse_mode(const std::string& s) {
  if (s == "full") return Mode::Full;
  if (s == "antichain") return Mode::Antichain;
  throw std::invalid_argument("unknown mode: " + s);
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Generating: return "generating";
    case Outcome::NotGenerating: return "not_generating";
    case Outcome::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

BudgetMeter::BudgetMeter(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

// In milliseconds so that an unlimited max_wall never overflows the comparison.
std::chrono::milliseconds BudgetMeter::elapsed() const {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
}

void BudgetMeter::charge(std::uint64_t tuples) {
  tuples_ += tuples;
  if (tuples_ > budget_.max_tuples) throw BudgetExhausted{"tuples"};
  if (tuples_ >= next_clock_check_) {
    next_clock_check_ = tuples_ + (1U << 16);
    if (elapsed() > budget_.max_wall) throw BudgetExhausted{"wall"};
  }
}

void BudgetMeter::check_set_size(std::uint64_t size) const {
  if (size > budget_.max_set_size) throw BudgetExhausted{"set_size"};
}

void BudgetMeter::check_stage(std::uint64_t stage) const {
  if (stage >= budget_.max_stages) throw BudgetExhausted{"stages"};
  if (elapsed() > budget_.max_wall) throw BudgetExhausted{"wall"};
}

namespace {

constexpr std::uint32_t kNoRec = 0xFFFFFFFFU;
constexpr std::uint64_t kFullModeCellLimit = std::uint64_t{1} << 32;

// A partial sum with the summands that built it.
struct Node {
  Pt p;
  std::array<Pt, kMaxDim> pv{};
  std::array<std::uint32_t, kMaxDim> rec{};
};

// Dense level of a semi-naive prefix-sum chain.
struct Level {
  Bitmap bits;
  std::vector<Node> items;
  std::size_t old = 0;
};

Pt unit_pt(std::size_t i) {
  Pt p;
  p[i] = 1;
  return p;
}

Pt tail_pt(std::size_t n, std::size_t k) {
  Pt p;
  for (std::size_t i = k; i < n; ++i) p[i] = 1;
  return p;
}

Pt apply_perm(const Pt& p, const std::array<std::uint8_t, kMaxDim>& perm, std::size_t n) {
  Pt r;
  for (std::size_t i = 0; i < n; ++i) r[i] = p[perm[i]];
  return r;
}

// Sorts p ascending and returns the permutation used: sorted[i] = p[perm[i]].
std::array<std::uint8_t, kMaxDim> sort_with_perm(Pt& p, std::size_t n) {
  std::array<std::uint8_t, kMaxDim> perm{};
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(i);
  std::stable_sort(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n),
                   [&](std::uint8_t a, std::uint8_t b) { return p[a] < p[b]; });
  p = apply_perm(p, perm, n);
  return perm;
}

// All distinct rearrangements of p with the index permutation producing each.
struct PermCopy {
  Pt p;
  std::array<std::uint8_t, kMaxDim> perm;
};

std::vector<PermCopy> perm_copies(const Pt& p, std::size_t n) {
  std::array<std::uint8_t, kMaxDim> idx{};
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint8_t>(i);
  auto less = [&](std::uint8_t a, std::uint8_t b) { return p[a] < p[b]; };
  auto first = idx.begin();
  auto last = idx.begin() + static_cast<std::ptrdiff_t>(n);
  std::sort(first, last, less);
  std::vector<PermCopy> out;
  do {
    out.push_back({apply_perm(p, idx, n), idx});
  } while (std::next_permutation(first, last, less));
  return out;
}

bool strictly_below_const(const Pt& p, std::size_t n, Coord c) {
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] >= c) return false;
  }
  return true;
}

bool by_total(const Pt& a, const Pt& b, std::size_t n) {
  unsigned ta = detail::total(a, n), tb = detail::total(b, n);
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.v.begin(), a.v.begin() + static_cast<std::ptrdiff_t>(n), b.v.begin(),
                                      b.v.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// General recursion.

struct ReachState::Impl {
  NatVec h;
  std::size_t n = 0;
  Mode mode = Mode::Antichain;
  bool prov = false;
  std::size_t stage = 0;
  bool changed = true;
  std::optional<std::size_t> zero_index;
  std::optional<std::size_t> zero_rec;
  Box box;
  std::vector<Derivation> recs;
  std::vector<std::uint32_t> unit_rec;
  // 1_i lies inside the box, so it takes part in sums.
  std::vector<bool> unit_inside;

  struct Pool {
    std::vector<Pt> items;
    std::vector<std::uint32_t> rec;
    std::size_t fresh_begin = 0;
    Bitmap bits;
    std::unique_ptr<UpSet> up;
    std::vector<Pt> last_fresh;
  };
  std::vector<Pool> pools;
  std::vector<Level> levels;
  std::vector<std::unique_ptr<UpSet>> level_up;

  std::uint32_t add_record(const Pt& p, std::size_t index, const Node* from) {
    if (!prov) return kNoRec;
    Derivation d;
    d.point = detail::to_nat(p, n);
    d.index = index;
    d.birth = stage + 1;
    if (from) {
      d.sum = detail::to_nat(from->p, n);
      for (std::size_t j = 0; j < n; ++j) {
        d.parts.push_back(from->rec[j]);
        d.part_vectors.push_back(detail::to_nat(from->pv[j], n));
      }
    } else {
      d.birth = 0;
      d.seed = true;
    }
    recs.push_back(std::move(d));
    return static_cast<std::uint32_t>(recs.size() - 1);
  }

  void init() {
    n = h.size();
    if (n == 0) throw std::invalid_argument("vector dimension must be positive");
    Pt caps = detail::to_pt(h);
    box = Box(n, caps);
    pools.resize(n);
    unit_inside.assign(n, false);
    unit_rec.assign(n, kNoRec);
    if (mode == Mode::Full && box.cells() > kFullModeCellLimit) throw BudgetExhausted{"box"};
    for (std::size_t i = 0; i < n; ++i) {
      Pool& P = pools[i];
      if (mode == Mode::Full) {
        P.bits = Bitmap(box.cells());
      } else {
        P.up = std::make_unique<UpSet>(box, false);
      }
      Pt u = unit_pt(i);
      unit_rec[i] = add_record(u, i, nullptr);
      if (box.inside(u)) {
        unit_inside[i] = true;
        P.items.push_back(u);
        P.rec.push_back(unit_rec[i]);
        if (mode == Mode::Full) {
          P.bits.set(box.index(u));
        } else {
          P.up->add(u);
        }
      }
    }
    if (mode == Mode::Full) {
      levels.resize(n);
      for (auto& L : levels) L.bits = Bitmap(box.cells());
    } else {
      for (std::size_t k = 0; k < n; ++k) level_up.push_back(std::make_unique<UpSet>(box, false));
    }
  }

  // Inserts s - s(i) 1_i into pool i (Antichain mode: into `added`); returns true if new.
  bool produce(const Node& s, std::size_t i, std::vector<Pt>& added, std::vector<std::uint32_t>& added_rec) {
    Pt r = s.p;
    r[i] = 0;
    Pool& P = pools[i];
    std::uint32_t id;
    if (mode == Mode::Full) {
      if (!P.bits.test_and_set(box.index(r))) return false;
      id = add_record(r, i, &s);
      P.items.push_back(r);
      P.rec.push_back(id);
    } else {
      if (P.up->covered(r)) return false;
      P.up->add(r);
      id = add_record(r, i, &s);
      added.push_back(r);
      added_rec.push_back(id);
    }
    if (detail::is_zero(r, n) && !zero_index) {
      zero_index = i;
      if (prov) zero_rec = id;
    }
    return true;
  }

  void step_full(BudgetMeter& meter) {
    Node zero_node;
    for (std::size_t k = 0; k < n; ++k) {
      Level& L = levels[k];
      const std::size_t lold = L.items.size();
      Pool& P = pools[k];
      const std::size_t pfresh = P.fresh_begin;
      const std::size_t psize = P.items.size();
      std::vector<Node> virtual_prev;
      const std::vector<Node>* prev;
      std::size_t prev_old;
      if (k == 0) {
        virtual_prev.push_back(zero_node);
        prev = &virtual_prev;
        prev_old = stage == 0 ? 0 : 1;
      } else {
        prev = &levels[k - 1].items;
        prev_old = levels[k - 1].old;
      }
      auto try_sum = [&](const Node& q, std::size_t pi) {
        Pt s = detail::add(q.p, P.items[pi], n);
        if (!box.inside(s)) return;
        if (!L.bits.test_and_set(box.index(s))) return;
        Node node;
        node.p = s;
        if (prov) {
          node.pv = q.pv;
          node.rec = q.rec;
          node.pv[k] = P.items[pi];
          node.rec[k] = P.rec[pi];
        }
        L.items.push_back(node);
      };
      const std::size_t prev_size = prev->size();
      for (std::size_t qi = prev_old; qi < prev_size; ++qi) {
        meter.charge(psize);
        for (std::size_t pi = 0; pi < psize; ++pi) try_sum((*prev)[qi], pi);
      }
      if (pfresh < psize) {
        for (std::size_t qi = 0; qi < prev_old; ++qi) {
          meter.charge(psize - pfresh);
          for (std::size_t pi = pfresh; pi < psize; ++pi) try_sum((*prev)[qi], pi);
        }
      }
      L.old = lold;
      meter.check_set_size(L.items.size());
    }
    for (auto& P : pools) {
      P.fresh_begin = P.items.size();
      P.last_fresh.clear();
    }
    changed = false;
    Level& S = levels[n - 1];
    std::vector<Pt> unused;
    std::vector<std::uint32_t> unused_rec;
    for (std::size_t si = S.old; si < S.items.size() && !zero_index; ++si) {
      for (std::size_t i = 0; i < n; ++i) {
        if (produce(S.items[si], i, unused, unused_rec)) {
          changed = true;
          pools[i].last_fresh.push_back(pools[i].items.back());
          if (zero_index) break;
        }
      }
    }
  }

  void step_antichain(BudgetMeter& meter) {
    std::vector<Node> T(1);
    std::vector<Node> next;
    for (std::size_t k = 0; k < n; ++k) {
      Pool& P = pools[k];
      std::vector<std::size_t> order(P.items.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return by_total(P.items[a], P.items[b], n); });
      UpSet& U = *level_up[k];
      U.clear();
      next.clear();
      for (const Node& t : T) {
        meter.charge(order.size());
        for (std::size_t pi : order) {
          Pt s = detail::add(t.p, P.items[pi], n);
          if (!box.inside(s) || U.covered(s)) continue;
          U.add(s);
          Node node;
          node.p = s;
          if (prov) {
            node.pv = t.pv;
            node.rec = t.rec;
            node.pv[k] = P.items[pi];
            node.rec[k] = P.rec[pi];
          }
          next.push_back(node);
        }
      }
      T.clear();
      for (const Node& x : next) {
        if (!U.strictly_covered(x.p)) T.push_back(x);
      }
      std::sort(T.begin(), T.end(), [&](const Node& a, const Node& b) { return by_total(a.p, b.p, n); });
      meter.check_set_size(T.size());
    }
    changed = false;
    std::vector<std::vector<Pt>> added(n);
    std::vector<std::vector<std::uint32_t>> added_rec(n);
    for (auto& P : pools) P.last_fresh.clear();
    for (const Node& s : T) {
      for (std::size_t i = 0; i < n; ++i) {
        if (produce(s, i, added[i], added_rec[i])) {
          changed = true;
          if (zero_index) break;
        }
      }
      if (zero_index) break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Pool& P = pools[i];
      if (added[i].empty()) continue;
      std::vector<Pt> items;
      std::vector<std::uint32_t> rec;
      for (std::size_t j = 0; j < P.items.size(); ++j) {
        if (!P.up->strictly_covered(P.items[j])) {
          items.push_back(P.items[j]);
          rec.push_back(P.rec[j]);
        }
      }
      for (std::size_t j = 0; j < added[i].size(); ++j) {
        if (!P.up->strictly_covered(added[i][j])) {
          items.push_back(added[i][j]);
          rec.push_back(added_rec[i][j]);
        }
      }
      P.items = std::move(items);
      P.rec = std::move(rec);
      P.last_fresh = added[i];
    }
  }
};

ReachState::ReachState(NatVec h, Mode mode, bool provenance) : impl_(std::make_unique<Impl>()) {
  impl_->h = std::move(h);
  impl_->mode = mode;
  impl_->prov = provenance;
  impl_->init();
}
ReachState::ReachState(ReachState&&) noexcept = default;
ReachState& ReachState::operator=(ReachState&&) noexcept = default;
ReachState::~ReachState() = default;

const NatVec& ReachState::h() const { return impl_->h; }
Mode ReachState::mode() const { return impl_->mode; }
std::size_t ReachState::stage() const { return impl_->stage; }
std::optional<std::size_t> ReachState::zero_index() const { return impl_->zero_index; }
bool ReachState::changed() const { return impl_->changed; }
bool ReachState::has_provenance() const { return impl_->prov; }
const std::vector<Derivation>& ReachState::derivations() const { return impl_->recs; }
std::optional<std::size_t> ReachState::zero_derivation() const { return impl_->zero_rec; }

std::vector<NatVec> ReachState::pool(std::size_t i) const {
  const auto& P = impl_->pools.at(i);
  std::vector<NatVec> out;
  for (const auto& p : P.items) out.push_back(detail::to_nat(p, impl_->n));
  if (!impl_->unit_inside[i]) out.push_back(unit_vector(impl_->n, i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NatVec> ReachState::fresh(std::size_t i) const {
  std::vector<NatVec> out;
  for (const auto& p : impl_->pools.at(i).last_fresh) out.push_back(detail::to_nat(p, impl_->n));
  std::sort(out.begin(), out.end());
  return out;
}

void ReachState::step(BudgetMeter& meter) {
  if (impl_->zero_index || !impl_->changed) return;
  meter.check_stage(impl_->stage);
  if (impl_->mode == Mode::Full) {
    impl_->step_full(meter);
  } else {
    impl_->step_antichain(meter);
  }
  ++impl_->stage;
}

// ---------------------------------------------------------------------------
// Constant-case recursion.

struct ConstReach::Impl {
  Coord c = 0;
  std::size_t n = 0;
  Mode mode = Mode::Antichain;
  bool prov = false;
  std::size_t stage = 0;
  bool changed = true;
  bool zero = false;
  std::optional<std::size_t> zero_rec;
  Box box;
  std::vector<Derivation> recs;

  std::vector<Pt> items;
  std::vector<std::uint32_t> rec;
  std::size_t fresh_begin = 0;
  Bitmap bits;
  std::unique_ptr<UpSet> up;
  // Full: levels[j] holds sums of j members (j = 1..n-1); index 0 unused.
  std::vector<Level> levels;
  std::vector<std::unique_ptr<UpSet>> level_up;

  void init() {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    if (n > kMaxDim) throw std::invalid_argument("dimension above engine limit");
    Pt caps;
    for (std::size_t i = 0; i < n; ++i) caps[i] = c;
    box = Box(n, caps);
    if (mode == Mode::Full) {
      if (box.cells() > kFullModeCellLimit) throw BudgetExhausted{"box"};
      bits = Bitmap(box.cells());
      levels.resize(n);
      for (std::size_t j = 1; j < n; ++j) levels[j].bits = Bitmap(box.cells());
    } else {
      up = std::make_unique<UpSet>(box, true);
      for (std::size_t j = 0; j < n; ++j) level_up.push_back(std::make_unique<UpSet>(box, true));
    }
  }

  std::uint32_t add_record(const Pt& f, const Node& y, std::size_t k, const Pt& fhat,
                           const std::array<std::uint8_t, kMaxDim>* perm) {
    if (!prov) return kNoRec;
    Derivation d;
    d.point = detail::to_nat(f, n);
    d.birth = stage + 1;
    d.k = k;
    d.sum = detail::to_nat(fhat, n);
    for (std::size_t j = 0; j < k; ++j) {
      d.parts.push_back(y.rec[j]);
      Pt v = perm ? apply_perm(y.pv[j], *perm, n) : y.pv[j];
      d.part_vectors.push_back(detail::to_nat(v, n));
    }
    recs.push_back(std::move(d));
    return static_cast<std::uint32_t>(recs.size() - 1);
  }

  // x = tail + y; returns false if x is not strictly below c.
  bool make_fhat(const Pt& y, std::size_t k, Pt& x) const {
    x = detail::add(tail_pt(n, k), y, n);
    return strictly_below_const(x, n, c);
  }

  void step_full(BudgetMeter& meter) {
    Node zero_node;
    for (std::size_t j = 1; j < n; ++j) {
      Level& L = levels[j];
      const std::size_t lold = L.items.size();
      std::vector<Node> virtual_prev;
      const std::vector<Node>* prev;
      std::size_t prev_old;
      if (j == 1) {
        virtual_prev.push_back(zero_node);
        prev = &virtual_prev;
        prev_old = stage == 0 ? 0 : 1;
      } else {
        prev = &levels[j - 1].items;
        prev_old = levels[j - 1].old;
      }
      const std::size_t psize = items.size();
      auto try_sum = [&](const Node& q, std::size_t pi) {
        Pt s = detail::add(q.p, items[pi], n);
        if (!box.inside(s)) return;
        if (!L.bits.test_and_set(box.index(s))) return;
        Node node;
        node.p = s;
        if (prov) {
          node.pv = q.pv;
          node.rec = q.rec;
          node.pv[j - 1] = items[pi];
          node.rec[j - 1] = rec[pi];
        }
        L.items.push_back(node);
      };
      const std::size_t prev_size = prev->size();
      for (std::size_t qi = prev_old; qi < prev_size; ++qi) {
        meter.charge(psize);
        for (std::size_t pi = 0; pi < psize; ++pi) try_sum((*prev)[qi], pi);
      }
      if (fresh_begin < psize) {
        for (std::size_t qi = 0; qi < prev_old; ++qi) {
          meter.charge(psize - fresh_begin);
          for (std::size_t pi = fresh_begin; pi < psize; ++pi) try_sum((*prev)[qi], pi);
        }
      }
      L.old = lold;
      meter.check_set_size(L.items.size());
    }
    fresh_begin = items.size();
    changed = false;
    auto emit = [&](const Node& y, std::size_t k) {
      Pt x;
      if (!make_fhat(y.p, k, x)) return;
      Pt r = x;
      r[n - 1] = 0;
      for (const auto& pc : perm_copies(r, n)) {
        if (!bits.test_and_set(box.index(pc.p))) continue;
        items.push_back(pc.p);
        rec.push_back(add_record(pc.p, y, k, x, nullptr));
        changed = true;
        if (detail::is_zero(pc.p, n)) {
          zero = true;
          if (prov) zero_rec = rec.back();
          return;
        }
      }
    };
    if (stage == 0) emit(zero_node, 0);
    for (std::size_t k = 1; k < n && !zero; ++k) {
      const Level& L = levels[k];
      for (std::size_t yi = L.old; yi < L.items.size() && !zero; ++yi) emit(L.items[yi], k);
    }
  }

  void step_antichain(BudgetMeter& meter) {
    std::vector<PermCopy> expanded;
    std::vector<std::uint32_t> expanded_rec;
    for (std::size_t a = 0; a < items.size(); ++a) {
      for (const auto& pc : perm_copies(items[a], n)) {
        expanded.push_back(pc);
        expanded_rec.push_back(rec[a]);
      }
    }
    std::vector<std::vector<Node>> T(n);
    T[0].emplace_back();
    std::vector<Node> next;
    for (std::size_t j = 1; j < n; ++j) {
      UpSet& U = *level_up[j];
      U.clear();
      next.clear();
      for (const Node& t : T[j - 1]) {
        meter.charge(expanded.size());
        for (std::size_t e = 0; e < expanded.size(); ++e) {
          Pt s = detail::add(t.p, expanded[e].p, n);
          if (!strictly_below_const(s, n, c)) continue;
          Pt cs = s;
          if (!prov) {
            detail::sort_pt(cs, n);
            if (U.covered(cs)) continue;
            U.add(cs);
            Node node;
            node.p = cs;
            next.push_back(node);
            continue;
          }
          auto perm = sort_with_perm(cs, n);
          if (U.covered(cs)) continue;
          U.add(cs);
          Node node;
          node.p = cs;
          for (std::size_t q = 0; q + 1 < j; ++q) {
            node.pv[q] = apply_perm(t.pv[q], perm, n);
            node.rec[q] = t.rec[q];
          }
          node.pv[j - 1] = apply_perm(expanded[e].p, perm, n);
          node.rec[j - 1] = expanded_rec[e];
          next.push_back(node);
        }
      }
      for (const Node& x : next) {
        if (!U.strictly_covered(x.p)) T[j].push_back(x);
      }
      std::sort(T[j].begin(), T[j].end(), [&](const Node& a, const Node& b) { return by_total(a.p, b.p, n); });
      meter.check_set_size(T[j].size());
    }
    changed = false;
    std::vector<Pt> added;
    std::vector<std::uint32_t> added_rec;
    for (std::size_t k = 0; k < n && !zero; ++k) {
      for (const Node& y : T[k]) {
        auto copies = perm_copies(y.p, n);
        meter.charge(copies.size());
        for (const auto& pc : copies) {
          Pt x;
          if (!make_fhat(pc.p, k, x)) continue;
          Pt r = x;
          r[n - 1] = 0;
          detail::sort_pt(r, n);
          if (up->covered(r)) continue;
          up->add(r);
          added.push_back(r);
          added_rec.push_back(add_record(r, y, k, x, &pc.perm));
          changed = true;
          if (detail::is_zero(r, n)) {
            zero = true;
            if (prov) zero_rec = added_rec.back();
            break;
          }
        }
        if (zero) break;
      }
    }
    if (!added.empty()) {
      std::vector<Pt> kept;
      std::vector<std::uint32_t> kept_rec;
      for (std::size_t j = 0; j < items.size(); ++j) {
        if (!up->strictly_covered(items[j])) {
          kept.push_back(items[j]);
          kept_rec.push_back(rec[j]);
        }
      }
      for (std::size_t j = 0; j < added.size(); ++j) {
        if (!up->strictly_covered(added[j])) {
          kept.push_back(added[j]);
          kept_rec.push_back(added_rec[j]);
        }
      }
      items = std::move(kept);
      rec = std::move(kept_rec);
      meter.check_set_size(items.size());
    }
  }
};

ConstReach::ConstReach(Entry c, std::size_t n, Mode mode, bool provenance) : impl_(std::make_unique<Impl>()) {
  if (c > detail::kMaxCoord) throw std::invalid_argument("constant above engine limit");
  impl_->c = static_cast<Coord>(c);
  impl_->n = n;
  impl_->mode = mode;
  impl_->prov = provenance;
  impl_->init();
}
ConstReach::ConstReach(ConstReach&&) noexcept = default;
ConstReach& ConstReach::operator=(ConstReach&&) noexcept = default;
ConstReach::~ConstReach() = default;

Entry ConstReach::c() const { return impl_->c; }
std::size_t ConstReach::n() const { return impl_->n; }
Mode ConstReach::mode() const { return impl_->mode; }
std::size_t ConstReach::stage() const { return impl_->stage; }
bool ConstReach::has_zero() const { return impl_->zero; }
bool ConstReach::changed() const { return impl_->changed; }
bool ConstReach::has_provenance() const { return impl_->prov; }
const std::vector<Derivation>& ConstReach::derivations() const { return impl_->recs; }
std::optional<std::size_t> ConstReach::zero_derivation() const { return impl_->zero_rec; }

std::vector<NatVec> ConstReach::members() const {
  std::vector<NatVec> out;
  for (const auto& p : impl_->items) out.push_back(detail::to_nat(p, impl_->n));
  std::sort(out.begin(), out.end());
  return out;
}

void ConstReach::step(BudgetMeter& meter) {
  if (impl_->zero || !impl_->changed) return;
  meter.check_stage(impl_->stage);
  if (impl_->mode == Mode::Full) {
    impl_->step_full(meter);
  } else {
    impl_->step_antichain(meter);
  }
  ++impl_->stage;
}

void step_general(ReachState& state) {
  BudgetMeter meter(Budget{std::numeric_limits<std::uint64_t>::max(), std::chrono::milliseconds::max()});
  state.step(meter);
}

void step_const(ConstReach& state) {
  BudgetMeter meter(Budget{std::numeric_limits<std::uint64_t>::max(), std::chrono::milliseconds::max()});
  state.step(meter);
}

// ---------------------------------------------------------------------------
// Drivers.

GeneralDecision decide_general(const NatVec& h, const EngineOptions& options) {
  GeneralDecision out;
  BudgetMeter meter(options.budget);
  try {
    out.state = std::make_shared<ReachState>(h, options.mode, options.provenance);
    while (true) {
      std::size_t before = out.state->stage();
      out.state->step(meter);
      if (out.state->zero_index()) {
        out.verdict.outcome = Outcome::Generating;
        out.verdict.stage = out.state->stage();
        out.verdict.witness_index = *out.state->zero_index();
        break;
      }
      if (!out.state->changed()) {
        out.verdict.outcome = Outcome::NotGenerating;
        out.verdict.stage = before;
        break;
      }
    }
  } catch (const BudgetExhausted& e) {
    out.verdict.outcome = Outcome::BudgetExceeded;
    out.verdict.resource = e.resource;
    out.verdict.stage = out.state ? out.state->stage() : 0;
  }
  out.verdict.tuples = meter.tuples();
  return out;
}

ConstDecision decide_const(Entry c, std::size_t n, const EngineOptions& options) {
  ConstDecision out;
  BudgetMeter meter(options.budget);
  try {
    out.state = std::make_shared<ConstReach>(c, n, options.mode, options.provenance);
    while (true) {
      std::size_t before = out.state->stage();
      out.state->step(meter);
      if (out.state->has_zero()) {
        out.verdict.outcome = Outcome::Generating;
        out.verdict.stage = out.state->stage();
        break;
      }
      if (!out.state->changed()) {
        out.verdict.outcome = Outcome::NotGenerating;
        out.verdict.stage = before;
        break;
      }
    }
  } catch (const BudgetExhausted& e) {
    out.verdict.outcome = Outcome::BudgetExceeded;
    out.verdict.resource = e.resource;
    out.verdict.stage = out.state ? out.state->stage() : 0;
  }
  out.verdict.tuples = meter.tuples();
  return out;
}

std::optional<Verdict> DecisionCache::find(const NatVec& h) const {
  std::shared_lock lock(mu_);
  auto it = map_.find(h.canonical());
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void DecisionCache::insert(const NatVec& h, const Verdict& v) {
  if (!v.definitive()) return;
  std::unique_lock lock(mu_);
  map_.emplace(h.canonical(), v);
}

std::size_t DecisionCache::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

Verdict decide(const NatVec& h, const DecideOptions& options) {
  if (h.size() == 0) throw std::invalid_argument("vector dimension must be positive");
  if (options.cache) {
    if (auto hit = options.cache->find(h)) return *hit;
  }
  Verdict v;
  if (h.is_constant()) {
    v = decide_const(h[0], h.size(), options.engine).verdict;
    if (options.cross_check && v.definitive()) {
      Verdict g = decide_general(h, options.engine).verdict;
      if (g.definitive() && g.outcome != v.outcome) {
        throw std::logic_error("constant and general recursions disagree on " + to_string(h));
      }
    }
  } else {
    v = decide_general(h, options.engine).verdict;
  }
  if (options.cache) options.cache->insert(h, v);
  return v;
}

}  // namespace zgen
