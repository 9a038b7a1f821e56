#include "pmvlab/finite_pmv.hpp"

#include <algorithm>
#include <array>
#include <string_view>

#include "pmvlab/parallel.hpp"

namespace pmvlab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::malformed_table, what);
}

// Violation labels in reporting order.
constexpr std::array<std::string_view, 16> kLawOrder = {
    "closure",      "A1",           "A2",           "A3",
    "A4",           "A5",           "A6",           "A7",
    "A8",           "A8-dual",      "order-reflexive", "order-antisymmetric",
    "order-transitive", "order-bounds", "join-lub", "meet-glb"};

std::size_t law_rank(std::string_view label) {
  auto it = std::find(kLawOrder.begin(), kLawOrder.end(), label);
  return it == kLawOrder.end() ? kLawOrder.size() : static_cast<std::size_t>(it - kLawOrder.begin());
}

}  // namespace

FinitePMV::FinitePMV(std::vector<std::vector<Index>> oplus, std::vector<Index> neg_minus,
                     std::vector<Index> neg_tilde, Index zero, Index one)
    : size_(oplus.size()),
      neg_minus_(std::move(neg_minus)),
      neg_tilde_(std::move(neg_tilde)),
      zero_(zero),
      one_(one) {
  require(size_ > 0, "carrier must be non-empty");
  require(size_ <= (std::size_t{1} << 20), "carrier too large for a table algebra");
  require(neg_minus_.size() == size_, "neg_minus has wrong length");
  require(neg_tilde_.size() == size_, "neg_tilde has wrong length");
  require(zero_ < size_ && one_ < size_, "zero/one out of range");
  oplus_.reserve(size_ * size_);
  for (std::size_t i = 0; i < size_; ++i) {
    require(oplus[i].size() == size_, "oplus row " + std::to_string(i) + " has wrong length");
    for (auto v : oplus[i]) {
      require(v < size_, "oplus entry out of range in row " + std::to_string(i));
      oplus_.push_back(static_cast<Cell>(v));
    }
  }
  for (std::size_t i = 0; i < size_; ++i)
    require(neg_minus_[i] < size_ && neg_tilde_[i] < size_, "negation entry out of range");

  odot_.resize(size_ * size_);
  join_.resize(size_ * size_);
  meet_.resize(size_ * size_);
  order_.assign(size_, CarrierSet(size_));
  for (Index x = 0; x < size_; ++x) {
    for (Index y = 0; y < size_; ++y) {
      odot_[x * size_ + y] = static_cast<Cell>(formula::odot(*this, x, y));
      if (this->oplus(this->neg_minus(x), y) == one_) order_[x].set(y);
    }
  }
  // join/meet need odot_ filled first.
  for (Index x = 0; x < size_; ++x) {
    for (Index y = 0; y < size_; ++y) {
      join_[x * size_ + y] = static_cast<Cell>(this->oplus(x, odot(this->neg_tilde(x), y)));
      meet_[x * size_ + y] = static_cast<Cell>(odot(x, this->oplus(this->neg_minus(x), y)));
    }
  }
}

CarrierSet FinitePMV::down_set(Index x) const {
  CarrierSet s(size_);
  for (Index y = 0; y < size_; ++y)
    if (leq(y, x)) s.set(y);
  return s;
}

std::vector<std::vector<Index>> FinitePMV::oplus_table() const {
  std::vector<std::vector<Index>> t(size_, std::vector<Index>(size_));
  for (Index x = 0; x < size_; ++x)
    for (Index y = 0; y < size_; ++y) t[x][y] = oplus(x, y);
  return t;
}

namespace {

void check_range(const FinitePMV& m, Index x, std::vector<AxiomViolation>& out, bool first_only) {
  const std::size_t n = m.size();
  auto stop = [&] { return first_only && !out.empty(); };
  auto add = [&](std::string_view label, std::vector<Index> w) {
    if (stop()) return;
    out.push_back({std::string(label), std::move(w), {}});
  };

  // Unary laws are reported once per x, binary once per pair.
  for (Index y = 0; y < n && !stop(); ++y) {
    for (Index z = 0; z < n && !stop(); ++z) {
      std::array<bool, 16> seen{};
      check_axiom_instance(m, x, y, z, [&](std::string_view label) {
        seen[law_rank(label)] = true;
      });
      auto hit = [&](std::string_view l) { return seen[law_rank(l)]; };
      if (hit("A1")) add("A1", {x, y, z});
      if (z == 0) {
        for (auto l : {"A5", "A6", "A7"})
          if (hit(l)) add(l, {x, y});
        if (y == 0) {
          for (auto l : {"closure", "A2", "A3", "A8", "A8-dual"})
            if (hit(l)) add(l, {x});
          if (x == 0 && hit("A4")) add("A4", {});
        }
      }
    }
  }
  if (stop()) return;

  // Order laws on the relation x ≤ y ⟺ x⁻ ⊕ y = 1.
  if (!m.leq(x, x)) add("order-reflexive", {x});
  if (!(m.leq(m.zero(), x) && m.leq(x, m.one()))) add("order-bounds", {x});
  for (Index y = 0; y < n && !stop(); ++y) {
    if (y != x && m.leq(x, y) && m.leq(y, x)) add("order-antisymmetric", {x, y});
    const Index j = m.join(x, y);
    const Index k = m.meet(x, y);
    bool join_ok = m.leq(x, j) && m.leq(y, j);
    bool meet_ok = m.leq(k, x) && m.leq(k, y);
    for (Index z = 0; z < n && !stop(); ++z) {
      if (m.leq(x, y) && m.leq(y, z) && !m.leq(x, z)) add("order-transitive", {x, y, z});
      if (m.leq(x, z) && m.leq(y, z) && !m.leq(j, z)) join_ok = false;
      if (m.leq(z, x) && m.leq(z, y) && !m.leq(z, k)) meet_ok = false;
      if (m.meet(x, m.join(y, z)) != m.join(m.meet(x, y), m.meet(x, z))) add("distributive", {x, y, z});
    }
    if (!join_ok) add("join-lub", {x, y});
    if (!meet_ok) add("meet-glb", {x, y});
  }
}

}  // namespace

AxiomReport check_axioms(const FinitePMV& m, AxiomOptions options) {
  const std::size_t n = m.size();
  AxiomReport report;
  report.instances = n * n * n;
  if (options.first_only) {
    for (Index x = 0; x < n && report.violations.empty(); ++x)
      check_range(m, x, report.violations, true);
  } else {
    std::vector<std::vector<AxiomViolation>> parts(worker_count());
    auto chunks = parallel_chunks(n, [&](std::size_t w, std::size_t begin, std::size_t end) {
      for (Index x = begin; x < end; ++x) check_range(m, x, parts[w], false);
    });
    for (std::size_t w = 0; w < chunks; ++w)
      for (auto& v : parts[w]) report.violations.push_back(std::move(v));
    std::stable_sort(report.violations.begin(), report.violations.end(),
                     [](const AxiomViolation& a, const AxiomViolation& b) {
                       auto ra = law_rank(a.axiom), rb = law_rank(b.axiom);
                       if (ra != rb) return ra < rb;
                       if (a.axiom != b.axiom) return a.axiom < b.axiom;
                       return a.witness < b.witness;
                     });
  }
  report.passed = report.violations.empty();
  return report;
}

std::vector<Index> boolean_skeleton(const FinitePMV& m) {
  std::vector<Index> out;
  for (Index a = 0; a < m.size(); ++a)
    if (is_boolean(m, a)) out.push_back(a);
  return out;
}

Classification classify(const FinitePMV& m) {
  Classification c{true, true, false};
  for (Index x = 0; x < m.size(); ++x) {
    if (m.neg_minus(x) != m.neg_tilde(x)) c.symmetric = false;
    for (Index y = x + 1; y < m.size(); ++y)
      if (m.oplus(x, y) != m.oplus(y, x)) c.commutative = false;
  }
  return c;
}

std::pair<Index, Index> riesz_split(const FinitePMV& m, Index x, Index a, Index b) {
  for (auto v : {x, a, b})
    if (!m.contains(v)) throw Error(ErrorCode::out_of_carrier, "riesz_split argument out of range");
  if (!m.leq(x, m.oplus(a, b)))
    throw Error(ErrorCode::precondition_failed, "x is not below a ⊕ b");
  for (Index a1 = 0; a1 < m.size(); ++a1) {
    if (!m.leq(a1, a)) continue;
    for (Index b1 = 0; b1 < m.size(); ++b1)
      if (m.leq(b1, b) && m.oplus(a1, b1) == x) return {a1, b1};
  }
  throw Error(ErrorCode::no_split, "no Riesz decomposition exists; table is not a pseudo MV-algebra");
}

bool is_isomorphism(const FinitePMV& a, const FinitePMV& b, const std::vector<Index>& iso) {
  if (a.size() != b.size() || iso.size() != a.size()) return false;
  CarrierSet hit(b.size());
  for (auto v : iso) {
    if (v >= b.size() || hit.test(v)) return false;
    hit.set(v);
  }
  if (iso[a.zero()] != b.zero() || iso[a.one()] != b.one()) return false;
  for (Index x = 0; x < a.size(); ++x) {
    if (iso[a.neg_minus(x)] != b.neg_minus(iso[x]) || iso[a.neg_tilde(x)] != b.neg_tilde(iso[x])) return false;
    for (Index y = 0; y < a.size(); ++y)
      if (iso[a.oplus(x, y)] != b.oplus(iso[x], iso[y])) return false;
  }
  return true;
}

}  // namespace pmvlab
