#include "mring/chains.hpp"

#include "mring/error.hpp"

namespace mring {

FlatChain make_flat_chain(int n, std::vector<eset> sets) {
  if (n < 1 || n > kMaxGroundSet) fail(errc::validation_error, "ground set size " + std::to_string(n));
  if (sets.empty() || sets.back() != sets::full(n))
    fail(errc::validation_error, "a chain must end at the full ground set");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i] == 0) fail(errc::validation_error, "the empty set is implicit in chains");
    if (i > 0 && !sets::proper_subset(sets[i - 1], sets[i]))
      fail(errc::validation_error, "chain sets must strictly increase");
  }
  return FlatChain{n, std::move(sets)};
}

namespace {

void extend_all(int n, int r, std::vector<eset>& cur, std::vector<FlatChain>& out) {
  const int depth = static_cast<int>(cur.size());
  if (depth == r - 1) {
    cur.push_back(sets::full(n));
    if (depth == 0 || sets::proper_subset(cur[depth - 1], sets::full(n)))
      out.push_back(FlatChain{n, cur});
    cur.pop_back();
    return;
  }
  const eset below = depth == 0 ? 0 : cur.back();
  for (eset f = below + 1; f < sets::full(n); ++f) {
    if (!sets::proper_subset(below, f)) continue;
    cur.push_back(f);
    extend_all(n, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FlatChain> all_chains(int r, int n) {
  if (n < 1 || n > kMaxGroundSet || r < 1 || r > n)
    fail(errc::rank_out_of_range, "chains of length " + std::to_string(r) + " on " + std::to_string(n));
  std::vector<FlatChain> out;
  std::vector<eset> cur;
  extend_all(n, r, cur, out);
  return out;
}

RingElement RingElement::single(FlatChain chain, long long coeff) {
  RingElement out(chain.n);
  if (coeff != 0) out.coeffs_[std::move(chain)] = coeff;
  return out;
}

int RingElement::grade() const {
  if (is_zero()) fail(errc::grade_mismatch, "the zero element has no grade");
  return coeffs_.begin()->first.length();
}

long long RingElement::coeff(const FlatChain& c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? 0 : it->second;
}

RingElement indicator(const Matroid& m) {
  if (!is_loopfree(m)) fail(errc::input_has_loops, "indicator vectors are defined for loopfree matroids");
  RingElement out(m.n());
  MatroidTables t(m);
  for (auto& chain : maximal_flat_chains(t)) out.coeffs_[FlatChain{m.n(), std::move(chain)}] = 1;
  return out;
}

RingElement add(const RingElement& a, const RingElement& b) {
  if (a.n_ != b.n_) fail(errc::ground_set_mismatch, "cannot add over different ground sets");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.grade() != b.grade())
    fail(errc::grade_mismatch, std::to_string(a.grade()) + " vs " + std::to_string(b.grade()));
  RingElement out = a;
  for (const auto& [chain, c] : b.coeffs_) {
    auto [it, inserted] = out.coeffs_.try_emplace(chain, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.coeffs_.erase(it);
    }
  }
  return out;
}

RingElement scale(const RingElement& a, long long c) {
  RingElement out(a.n());
  if (c == 0) return out;
  out.coeffs_ = a.coeffs_;
  for (auto& [chain, v] : out.coeffs_) v *= c;
  return out;
}

RingElement indicator_sum(const FormalSum& terms) {
  if (terms.empty()) fail(errc::validation_error, "empty combination has no ground set");
  RingElement acc = RingElement::zero(terms.front().second.n());
  for (const auto& [c, m] : terms) acc = add(acc, scale(indicator(m), c));
  return acc;
}

}  // namespace mring
