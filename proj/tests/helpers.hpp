#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mfunctor.hpp"

namespace testutil {

inline std::shared_ptr<const catv::FinCat> cat(catv::FinCat c) {
  return std::make_shared<const catv::FinCat>(std::move(c));
}

// Builds a functor from per-object sizes and tables/matrices for the named
// non-identity morphisms. Works for both bases (the raw data vector is a
// table for finset, a row-major matrix for finvect).
inline catv::MFunctor make_mf(
    std::shared_ptr<const catv::FinCat> I, std::shared_ptr<const catv::BaseCategory> B,
    std::vector<int64_t> sizes,
    std::vector<std::pair<std::string, std::vector<int64_t>>> data = {}) {
  catv::MFunctor M;
  M.index = I;
  M.base = B;
  for (int64_t s : sizes) M.on_objects.push_back(catv::Obj{s});
  M.on_morphisms.resize(I->n_morphisms());
  for (int i = 0; i < I->n_objects(); ++i)
    M.on_morphisms[I->identity_of(i)] = B->identity(M.at(i));
  for (auto& [name, d] : data) {
    int f = I->morphism_index(name);
    M.on_morphisms[f] = catv::Mor{M.at(I->src(f)), M.at(I->dst(f)), d};
  }
  return M;
}

// Independent naturality-count oracle: plain odometer plus filter.
inline int64_t naive_nat_count(const catv::MFunctor& M, const catv::MFunctor& N) {
  const catv::FinCat& I = *M.index;
  const catv::BaseCategory& B = *M.base;
  int n = I.n_objects();
  std::vector<int64_t> counts;
  int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    counts.push_back(B.hom_count(M.at(i), N.at(i)));
    total *= counts.back();
  }
  int64_t hit = 0;
  for (int64_t code = 0; code < total; ++code) {
    int64_t c = code;
    std::vector<catv::Mor> comp;
    for (int i = 0; i < n; ++i) {
      comp.push_back(B.hom_element(M.at(i), N.at(i), c % counts[i]));
      c /= counts[i];
    }
    bool ok = true;
    for (int f = 0; f < I.n_morphisms() && ok; ++f) {
      if (I.is_identity(f)) continue;
      ok = B.compose(N.map(f), comp[I.src(f)]) == B.compose(comp[I.dst(f)], M.map(f));
    }
    if (ok) ++hit;
  }
  return hit;
}

}  // namespace testutil
