#include "mring/poset.hpp"

#include <cstdint>

#include "mring/error.hpp"

namespace mring {

Poset::Poset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const int m = static_cast<int>(leq_.size());
  for (int i = 0; i < m; ++i)
    if (static_cast<int>(leq_[i].size()) != m) fail(errc::validation_error, "order matrix not square");
  for (int i = 0; i < m; ++i)
    if (!leq_[i][i]) fail(errc::validation_error, "order not reflexive");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && leq_[i][j] && leq_[j][i]) fail(errc::validation_error, "order not antisymmetric");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (leq_[i][j])
        for (int k = 0; k < m; ++k)
          if (leq_[j][k] && !leq_[i][k]) fail(errc::validation_error, "order not transitive");
}

long long Poset::mobius(int x, int y) const {
  if (!leq_[x][y]) fail(errc::incomparable_elements, std::to_string(x) + " !<= " + std::to_string(y));
  // Row of mu(x, .) filled in order of interval size.
  const int m = size();
  std::vector<long long> mu(m, 0);
  std::vector<char> done(m, 0);
  mu[x] = 1;
  done[x] = 1;
  bool progress = true;
  while (!done[y] && progress) {
    progress = false;
    for (int z = 0; z < m; ++z) {
      if (done[z] || !leq_[x][z]) continue;
      bool ready = true;
      long long acc = 0;
      for (int w = 0; w < m; ++w) {
        if (w == z || !leq_[x][w] || !leq_[w][z]) continue;
        if (!done[w]) {
          ready = false;
          break;
        }
        acc += mu[w];
      }
      if (ready) {
        mu[z] = -acc;
        done[z] = 1;
        progress = true;
      }
    }
  }
  return mu[y];
}

long long Poset::mobius_number() const {
  const int m = size();
  std::vector<std::vector<bool>> ext(m + 2, std::vector<bool>(m + 2, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ext[i][j] = leq_[i][j];
  for (int i = 0; i < m + 2; ++i) {
    ext[m][i] = true;       // adjoined bottom
    ext[i][m + 1] = true;   // adjoined top
    ext[i][i] = true;
  }
  return Poset(std::move(ext)).mobius(m, m + 1);
}

Poset Poset::chain_poset() const {
  const int m = size();
  if (m > 20) fail(errc::resource_limit, "chain poset of " + std::to_string(m) + " elements");
  std::vector<std::uint32_t> chains;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << m); ++s) {
    bool chain = true;
    for (int i = 0; i < m && chain; ++i) {
      if (!((s >> i) & 1)) continue;
      for (int j = i + 1; j < m && chain; ++j)
        if (((s >> j) & 1) && !leq_[i][j] && !leq_[j][i]) chain = false;
    }
    if (chain) chains.push_back(s);
  }
  const int c = static_cast<int>(chains.size());
  std::vector<std::vector<bool>> leq(c, std::vector<bool>(c, false));
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) leq[i][j] = (chains[i] & ~chains[j]) == 0;
  return Poset(std::move(leq));
}

}  // namespace mring
