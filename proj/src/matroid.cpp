#include "mring/matroid.hpp"

#include <algorithm>

#include "mring/error.hpp"

namespace mring {

const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_bases: return "EmptyBases";
    case errc::unequal_basis_sizes: return "UnequalBasisSizes";
    case errc::exchange_axiom_violation: return "ExchangeAxiomViolation";
    case errc::rank_out_of_range: return "RankOutOfRange";
    case errc::element_out_of_range: return "ElementOutOfRange";
    case errc::rank_zero: return "RankZero";
    case errc::ground_set_mismatch: return "GroundSetMismatch";
    case errc::not_a_flat: return "NotAFlat";
    case errc::invalid_cyclic_data: return "InvalidCyclicData";
    case errc::not_nested: return "NotNested";
    case errc::has_loops: return "HasLoops";
    case errc::coloop_set_too_large: return "CoLoopSetTooLarge";
    case errc::invalid_chain: return "InvalidChain";
    case errc::not_a_chain: return "NotAChain";
    case errc::grade_mismatch: return "GradeMismatch";
    case errc::input_has_loops: return "InputHasLoops";
    case errc::grading_violation: return "GradingViolation";
    case errc::incomparable_elements: return "IncomparableElements";
    case errc::rank_too_small: return "RankTooSmall";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::product_is_zero: return "ProductIsZero";
    case errc::bad_range: return "BadRange";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::infeasible_spec: return "InfeasibleSpec";
    case errc::resource_limit: return "ResourceLimit";
  }
  return "UnknownError";
}

namespace sets {

std::vector<int> elements(eset s) {
  std::vector<int> out;
  out.reserve(size(s));
  for (eset t = s; t; t &= t - 1) out.push_back(lowest(t));
  return out;
}

eset from_elements(const std::vector<int>& elems) {
  eset s = 0;
  for (int e : elems) s |= single(e);
  return s;
}

std::string to_string(eset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

eset compress(eset s, eset keep) {
  eset out = 0;
  int pos = 0;
  for (eset t = keep; t; t &= t - 1) {
    eset bit = t & (eset{0} - t);
    if (s & bit) out |= eset{1} << pos;
    ++pos;
  }
  return out;
}

}  // namespace sets

namespace {

void check_ground(int n) {
  if (n < 1 || n > kMaxGroundSet)
    fail(errc::validation_error,
         "ground set size " + std::to_string(n) + " outside [1," + std::to_string(kMaxGroundSet) + "]");
}

void canonicalize(std::vector<eset>& bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
}

}  // namespace

Matroid Matroid::unchecked(int n, std::vector<eset> bases) {
  canonicalize(bases);
  return Matroid(n, std::move(bases));
}

Matroid Matroid::from_bases(int n, std::vector<eset> bases) {
  check_ground(n);
  if (bases.empty()) fail(errc::empty_bases, "a matroid needs at least one basis");
  const eset ground = sets::full(n);
  for (eset b : bases)
    if (!sets::subset(b, ground))
      fail(errc::element_out_of_range, "basis " + sets::to_string(b) + " not inside {1,...," + std::to_string(n) + "}");
  canonicalize(bases);
  const int r = sets::size(bases[0]);
  for (eset b : bases)
    if (sets::size(b) != r)
      fail(errc::unequal_basis_sizes,
           sets::to_string(bases[0]) + " and " + sets::to_string(b) + " have different sizes");
  // Exchange: for B1, B2 and x in B1\B2 some y in B2\B1 gives a basis B1-x+y.
  for (eset b1 : bases) {
    for (eset b2 : bases) {
      if (b1 == b2) continue;
      for (eset xs = b1 & ~b2; xs; xs &= xs - 1) {
        const eset x = xs & (eset{0} - xs);
        bool found = false;
        for (eset ys = b2 & ~b1; ys; ys &= ys - 1) {
          const eset y = ys & (eset{0} - ys);
          if (std::binary_search(bases.begin(), bases.end(), (b1 & ~x) | y)) {
            found = true;
            break;
          }
        }
        if (!found)
          fail(errc::exchange_axiom_violation,
               "no exchange for element " + std::to_string(sets::lowest(x)) + " of " + sets::to_string(b1) +
                   " against " + sets::to_string(b2));
      }
    }
  }
  return Matroid(n, std::move(bases));
}

bool Matroid::is_basis(eset b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

Matroid uniform(int r, int n) {
  check_ground(n);
  if (r < 0 || r > n) fail(errc::rank_out_of_range, "uniform rank " + std::to_string(r) + " on " + std::to_string(n) + " elements");
  std::vector<eset> bases;
  for (eset b = 0; b < (eset{1} << n); ++b)
    if (sets::size(b) == r) bases.push_back(b);
  return Matroid::unchecked(n, std::move(bases));
}

int rank(const Matroid& m, eset a) {
  const int cap = std::min(sets::size(a), m.rank());
  int best = 0;
  for (eset b : m.bases()) {
    best = std::max(best, sets::size(a & b));
    if (best == cap) return best;
  }
  return best;
}

eset closure(const Matroid& m, eset a) {
  const int ra = rank(m, a);
  eset out = a;
  for (eset rest = m.ground() & ~a; rest; rest &= rest - 1) {
    const eset x = rest & (eset{0} - rest);
    if (rank(m, a | x) == ra) out |= x;
  }
  return out;
}

std::vector<eset> flats(const Matroid& m) {
  MatroidTables t(m);
  std::vector<eset> out;
  for (eset f = 0; f < (eset{1} << m.n()); ++f)
    if (t.is_flat(f)) out.push_back(f);
  return out;
}

std::vector<eset> flats_of_rank(const Matroid& m, int s) {
  MatroidTables t(m);
  std::vector<eset> out;
  for (eset f = 0; f < (eset{1} << m.n()); ++f)
    if (t.rank_of(f) == s && t.is_flat(f)) out.push_back(f);
  return out;
}

eset loops(const Matroid& m) {
  eset in_some = 0;
  for (eset b : m.bases()) in_some |= b;
  return m.ground() & ~in_some;
}

eset coloops(const Matroid& m) {
  eset in_all = m.ground();
  for (eset b : m.bases()) in_all &= b;
  return in_all;
}

bool is_loopfree(const Matroid& m) { return loops(m) == 0; }

Matroid dual(const Matroid& m) {
  std::vector<eset> bases;
  bases.reserve(m.bases().size());
  for (eset b : m.bases()) bases.push_back(m.ground() & ~b);
  return Matroid::unchecked(m.n(), std::move(bases));
}

namespace {

Matroid relabel_drop(const std::vector<eset>& new_bases, eset keep) {
  std::vector<eset> out;
  out.reserve(new_bases.size());
  for (eset b : new_bases) out.push_back(sets::compress(b, keep));
  return Matroid::unchecked(sets::size(keep), std::move(out));
}

void check_element(const Matroid& m, int e) {
  if (e < 1 || e > m.n()) fail(errc::element_out_of_range, "element " + std::to_string(e));
}

}  // namespace

Matroid deletion(const Matroid& m, int e) {
  check_element(m, e);
  if (m.n() == 1) fail(errc::element_out_of_range, "cannot delete the only element");
  const eset x = sets::single(e);
  std::vector<eset> bases;
  if (sets::subset(x, coloops(m))) {
    for (eset b : m.bases()) bases.push_back(b & ~x);
  } else {
    for (eset b : m.bases())
      if (!(b & x)) bases.push_back(b);
  }
  return relabel_drop(bases, m.ground() & ~x);
}

Matroid contraction(const Matroid& m, int e) {
  check_element(m, e);
  if (m.n() == 1) fail(errc::element_out_of_range, "cannot contract the only element");
  const eset x = sets::single(e);
  std::vector<eset> bases;
  if (sets::subset(x, loops(m))) {
    bases = m.bases();
  } else {
    for (eset b : m.bases())
      if (b & x) bases.push_back(b & ~x);
  }
  return relabel_drop(bases, m.ground() & ~x);
}

Matroid restriction(const Matroid& m, eset t) {
  if (t == 0 || !sets::subset(t, m.ground()))
    fail(errc::element_out_of_range, "restriction to " + sets::to_string(t));
  const int rt = rank(m, t);
  std::vector<eset> bases;
  for (eset b : m.bases())
    if (sets::size(b & t) == rt) bases.push_back(b & t);
  return relabel_drop(bases, t);
}

Matroid contraction_set(const Matroid& m, eset a) {
  if (!sets::subset(a, m.ground())) fail(errc::element_out_of_range, "contraction of " + sets::to_string(a));
  if (a == m.ground()) fail(errc::element_out_of_range, "cannot contract the whole ground set");
  const int ra = rank(m, a);
  std::vector<eset> bases;
  for (eset b : m.bases())
    if (sets::size(b & a) == ra) bases.push_back(b & ~a);
  return relabel_drop(bases, m.ground() & ~a);
}

Matroid truncate(const Matroid& m) {
  if (m.rank() == 0) fail(errc::rank_zero, "cannot truncate a rank zero matroid");
  std::vector<eset> bases;
  for (eset b : m.bases())
    for (eset xs = b; xs; xs &= xs - 1) bases.push_back(b & ~(xs & (eset{0} - xs)));
  return Matroid::unchecked(m.n(), std::move(bases));
}

bool is_quotient(const Matroid& q, const Matroid& m) {
  if (q.n() != m.n()) fail(errc::ground_set_mismatch, "quotient test needs equal ground sets");
  MatroidTables tq(q), tm(m);
  for (eset f = 0; f < (eset{1} << m.n()); ++f)
    if (tq.is_flat(f) && !tm.is_flat(f)) return false;
  return true;
}

MatroidTables::MatroidTables(const Matroid& m) : n_(m.n()), rank_full_(m.rank()) {
  const std::size_t words = std::size_t{1} << n_;
  ind_.assign(words, 0);
  rank_.assign(words, 0);
  for (eset b : m.bases()) ind_[b] = 1;
  // Independent sets are the downward closure of the bases.
  for (eset a = static_cast<eset>(words - 1);; --a) {
    if (ind_[a])
      for (eset xs = a; xs; xs &= xs - 1) ind_[a & ~(xs & (eset{0} - xs))] = 1;
    if (a == 0) break;
  }
  for (eset a = 1; a < words; ++a) {
    if (ind_[a]) {
      rank_[a] = static_cast<std::uint8_t>(sets::size(a));
    } else {
      std::uint8_t best = 0;
      for (eset xs = a; xs; xs &= xs - 1)
        best = std::max(best, rank_[a & ~(xs & (eset{0} - xs))]);
      rank_[a] = best;
    }
  }
}

eset MatroidTables::closure_of(eset a) const {
  const int ra = rank_[a];
  eset out = a;
  for (eset rest = sets::full(n_) & ~a; rest; rest &= rest - 1) {
    const eset x = rest & (eset{0} - rest);
    if (rank_[a | x] == ra) out |= x;
  }
  return out;
}

std::vector<std::vector<eset>> MatroidTables::flats_by_rank() const {
  std::vector<std::vector<eset>> out(rank_full_ + 1);
  for (eset f = 0; f < (eset{1} << n_); ++f)
    if (is_flat(f)) out[rank_[f]].push_back(f);
  return out;
}

namespace {

void extend_chain(const std::vector<std::vector<eset>>& by_rank, int r, std::vector<eset>& chain,
                  std::vector<std::vector<eset>>& out) {
  const int depth = static_cast<int>(chain.size());
  if (depth == r) {
    out.push_back(chain);
    return;
  }
  const eset below = depth == 0 ? 0 : chain.back();
  for (eset f : by_rank[depth + 1]) {
    if (sets::proper_subset(below, f)) {
      chain.push_back(f);
      extend_chain(by_rank, r, chain, out);
      chain.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<eset>> maximal_flat_chains(const MatroidTables& t) {
  const auto by_rank = t.flats_by_rank();
  std::vector<std::vector<eset>> out;
  std::vector<eset> chain;
  extend_chain(by_rank, t.rank(), chain, out);
  return out;
}

}  // namespace mring
