#include "sampling.hpp"

namespace catv {

std::optional<Mor> Sampler::mor(const BaseCategory& B, Obj a, Obj b) {
  int64_t n = B.hom_count(a, b);
  if (n == 0) return std::nullopt;
  if (n > B.caps().max_hom) {
    // Draw entries directly instead of indexing the full family.
    if (B.kind() == BaseKind::finset) {
      Mor m{a, b, {}};
      for (int64_t i = 0; i < a.size; ++i) m.data.push_back(below(b.size));
      return m;
    }
    Mor m{a, b, {}};
    for (int64_t i = 0; i < a.size * b.size; ++i) m.data.push_back(below(B.prime()));
    return m;
  }
  return B.hom_element(a, b, below(n));
}

MFunctor Sampler::functor(std::shared_ptr<const FinCat> index,
                          std::shared_ptr<const BaseCategory> base, int64_t max_size,
                          int max_attempts) {
  const FinCat& I = *index;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    MFunctor M;
    M.index = index;
    M.base = base;
    for (int i = 0; i < I.n_objects(); ++i) M.on_objects.push_back(obj(max_size));
    M.on_morphisms.resize(I.n_morphisms());
    bool feasible = true;
    for (int f = 0; f < I.n_morphisms() && feasible; ++f) {
      if (I.is_identity(f)) {
        M.on_morphisms[f] = base->identity(M.at(I.src(f)));
        continue;
      }
      auto m = mor(*base, M.at(I.src(f)), M.at(I.dst(f)));
      if (!m) {
        feasible = false;
        break;
      }
      M.on_morphisms[f] = std::move(*m);
    }
    if (feasible && M.validate().ok()) return M;
  }
  throw input_error("functor sampling exhausted its attempt budget");
}

std::optional<NatTrans> Sampler::nat(const MFunctor& M, const MFunctor& N) {
  auto all = enumerate_nat_trans(M, N);
  if (all.empty()) return std::nullopt;
  return all[below(static_cast<int64_t>(all.size()))];
}

std::vector<MFunctor> enumerate_functors(std::shared_ptr<const FinCat> index,
                                         std::shared_ptr<const BaseCategory> base,
                                         int64_t max_size) {
  const FinCat& I = *index;
  const BaseCategory& B = *base;
  std::vector<MFunctor> out;
  int n = I.n_objects();
  std::vector<int64_t> sizes(n, 0);

  std::vector<int> free_mors;
  for (int f = 0; f < I.n_morphisms(); ++f)
    if (!I.is_identity(f)) free_mors.push_back(f);

  auto emit_for_sizes = [&]() {
    MFunctor proto;
    proto.index = index;
    proto.base = base;
    for (int64_t s : sizes) proto.on_objects.push_back(Obj{s});
    proto.on_morphisms.resize(I.n_morphisms());
    for (int i = 0; i < n; ++i) proto.on_morphisms[I.identity_of(i)] = B.identity(Obj{sizes[i]});

    // Odometer over the table choices for non-identity morphisms.
    std::vector<int64_t> counts;
    int64_t space = 1;
    for (int f : free_mors) {
      counts.push_back(B.hom_count(proto.at(I.src(f)), proto.at(I.dst(f))));
      space = checked_mul(space, counts.back(), "enumerate_functors");
    }
    if (space > B.caps().max_hom)
      throw resource_error("functor family of size " + std::to_string(space) +
                           " exceeds cap " + std::to_string(B.caps().max_hom));
    std::vector<int64_t> pick(free_mors.size(), 0);
    while (true) {
      for (size_t t = 0; t < free_mors.size(); ++t) {
        int f = free_mors[t];
        proto.on_morphisms[f] = B.hom_element(proto.at(I.src(f)), proto.at(I.dst(f)), pick[t]);
      }
      if (proto.validate().ok()) out.push_back(proto);
      size_t t = 0;
      for (; t < pick.size(); ++t) {
        if (++pick[t] < counts[t]) break;
        pick[t] = 0;
      }
      if (t == pick.size()) break;
    }
  };

  // Sweep all size assignments.
  std::function<void(int)> rec = [&](int depth) {
    if (depth == n) {
      emit_for_sizes();
      return;
    }
    for (int64_t s = 0; s <= max_size; ++s) {
      sizes[depth] = s;
      rec(depth + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace catv
