#pragma once

#include <set>

#include "helpers.hpp"

namespace hodge::testing {

inline Subspace block_sum(const Subspace& a, const Subspace& b) {
  size_t na = a.ambient_dim(), nb = b.ambient_dim();
  std::vector<Vector> vs;
  for (const auto& v : a.vectors()) {
    Vector x = v;
    x.resize(na + nb);
    vs.push_back(x);
  }
  for (const auto& v : b.vectors()) {
    Vector x(na);
    x.insert(x.end(), v.begin(), v.end());
    vs.push_back(x);
  }
  return Subspace::span(na + nb, vs);
}

inline MixedHodgeStructure direct_sum(const MixedHodgeStructure& a, const MixedHodgeStructure& b) {
  std::set<int> ks, ps;
  for (const auto& [k, s] : a.weight().jumps()) ks.insert(k);
  for (const auto& [k, s] : b.weight().jumps()) ks.insert(k);
  for (const auto& [p, s] : a.hodge().jumps()) ps.insert(p);
  for (const auto& [p, s] : b.hodge().jumps()) ps.insert(p);
  size_t n = a.rank() + b.rank();
  std::map<int, Subspace> w, f;
  for (int k : ks) w[k] = block_sum(a.weight().at(k), b.weight().at(k));
  for (int p : ps) f[p] = block_sum(a.hodge().at(p), b.hodge().at(p));
  return MixedHodgeStructure::create(IncreasingFiltration::create(n, w), DecreasingFiltration::create(n, f));
}

// Morphisms of mixed Hodge structures between fixture structures.
inline std::vector<MhsMorphism> fixture_morphisms() {
  std::vector<MhsMorphism> out;
  for (const char* z : {"i", "2+3i", "-1/2+1/3i", "5"}) {
    auto k = kummer(g(z));
    out.push_back({k, k, Matrix::identity(2)});
    out.push_back({k, tate(0), mat({{"1", "0"}})});
    out.push_back({tate(1), k, mat({{"0"}, {"1"}})});
    out.push_back({k, k, mat({{"2", "0"}, {"0", "2"}})});
    out.push_back({k, kummer(g(z) - Gaussian(1)), mat({{"1", "0"}, {"-1", "1"}})});
    auto e = elliptic(g("i"));
    auto s = direct_sum(k, e);
    out.push_back({s, k, mat({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}})});
    out.push_back({e, s, mat({{"0", "0"}, {"0", "0"}, {"1", "0"}, {"0", "1"}})});
    auto kk = direct_sum(k, k);
    // diagonal and sum maps
    out.push_back({k, kk, mat({{"1", "0"}, {"0", "1"}, {"1", "0"}, {"0", "1"}})});
    out.push_back({kk, k, mat({{"1", "0", "1", "0"}, {"0", "1", "0", "1"}})});
  }
  return out;
}

}  // namespace hodge::testing
