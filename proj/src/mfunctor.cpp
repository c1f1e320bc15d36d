#include "mfunctor.hpp"

namespace catv {

Validation MFunctor::validate() const {
  Validation v;
  const FinCat& I = *index;
  const BaseCategory& B = *base;
  if (static_cast<int>(on_objects.size()) != I.n_objects() ||
      static_cast<int>(on_morphisms.size()) != I.n_morphisms())
    throw input_error("functor assignment is not total");
  for (int f = 0; f < I.n_morphisms(); ++f) {
    if (map(f).src != at(I.src(f)) || map(f).dst != at(I.dst(f)))
      v.violations.push_back("value of " + I.morphism_name(f) + " has wrong shape");
  }
  if (!v.violations.empty()) return v;
  for (int i = 0; i < I.n_objects(); ++i)
    if (map(I.identity_of(i)) != B.identity(at(i)))
      v.violations.push_back("identity of " + I.object_name(i) + " not preserved");
  for (int f = 0; f < I.n_morphisms(); ++f)
    for (int g = 0; g < I.n_morphisms(); ++g) {
      if (I.dst(f) != I.src(g)) continue;
      if (B.compose(map(g), map(f)) != map(I.compose(f, g)))
        v.violations.push_back("composite (" + I.morphism_name(f) + "," +
                               I.morphism_name(g) + ") not preserved");
    }
  return v;
}

MFunctor constant_functor(std::shared_ptr<const FinCat> index,
                          std::shared_ptr<const BaseCategory> base, Obj value) {
  MFunctor M;
  M.index = index;
  M.base = base;
  M.on_objects.assign(index->n_objects(), value);
  M.on_morphisms.assign(index->n_morphisms(), base->identity(value));
  return M;
}

MFunctor unit_functor(std::shared_ptr<const FinCat> index,
                      std::shared_ptr<const BaseCategory> base) {
  return constant_functor(index, base, base->unit());
}

bool naturality_holds(const MFunctor& M, const MFunctor& N, const NatTrans& t) {
  const FinCat& I = *M.index;
  const BaseCategory& B = *M.base;
  for (int f = 0; f < I.n_morphisms(); ++f) {
    if (I.is_identity(f)) continue;
    if (B.compose(N.map(f), t.components[I.src(f)]) !=
        B.compose(t.components[I.dst(f)], M.map(f)))
      return false;
  }
  return true;
}

Validation validate_nat(const MFunctor& M, const MFunctor& N, const NatTrans& t) {
  Validation v;
  const FinCat& I = *M.index;
  if (static_cast<int>(t.components.size()) != I.n_objects())
    throw input_error("transformation component list is not total");
  for (int i = 0; i < I.n_objects(); ++i)
    if (t.components[i].src != M.at(i) || t.components[i].dst != N.at(i))
      v.violations.push_back("component at " + I.object_name(i) + " has wrong shape");
  if (!v.violations.empty()) return v;
  const BaseCategory& B = *M.base;
  for (int f = 0; f < I.n_morphisms(); ++f) {
    if (I.is_identity(f)) continue;
    if (B.compose(N.map(f), t.components[I.src(f)]) !=
        B.compose(t.components[I.dst(f)], M.map(f)))
      v.violations.push_back("naturality fails at " + I.morphism_name(f));
  }
  return v;
}

int64_t nat_candidate_space(const MFunctor& M, const MFunctor& N) {
  const BaseCategory& B = *M.base;
  int64_t total = 1;
  for (int i = 0; i < M.index->n_objects(); ++i)
    total = checked_mul(total, B.hom_count(M.at(i), N.at(i)), "nat_candidate_space");
  return total;
}

namespace {

// Shared backtracking core. Components are chosen object by object; a
// morphism constraint is checked as soon as both endpoints have components.
void nat_backtrack(const MFunctor& M, const MFunctor& N,
                   const std::function<void(const std::vector<Mor>&)>& emit) {
  const FinCat& I = *M.index;
  const BaseCategory& B = *M.base;
  if (!B.same_as(*N.base) || !(*M.index == *N.index))
    throw input_error("natural transformations need matching index and base");
  int64_t space = nat_candidate_space(M, N);
  if (space > B.caps().max_hom)
    throw resource_error("natural-transformation candidate space " + std::to_string(space) +
                         " exceeds cap " + std::to_string(B.caps().max_hom));
  int n = I.n_objects();
  std::vector<std::vector<int>> check_at(n);
  for (int f = 0; f < I.n_morphisms(); ++f) {
    if (I.is_identity(f)) continue;
    check_at[std::max(I.src(f), I.dst(f))].push_back(f);
  }
  std::vector<Mor> comp(n);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == n) {
      emit(comp);
      return;
    }
    int64_t cnt = B.hom_count(M.at(depth), N.at(depth));
    for (int64_t idx = 0; idx < cnt; ++idx) {
      comp[depth] = B.hom_element(M.at(depth), N.at(depth), idx);
      bool ok = true;
      for (int f : check_at[depth]) {
        if (B.compose(N.map(f), comp[I.src(f)]) != B.compose(comp[I.dst(f)], M.map(f))) {
          ok = false;
          break;
        }
      }
      if (ok) rec(depth + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<NatTrans> enumerate_nat_trans(const MFunctor& M, const MFunctor& N) {
  std::vector<NatTrans> out;
  nat_backtrack(M, N, [&](const std::vector<Mor>& comp) { out.push_back(NatTrans{comp}); });
  return out;
}

int64_t count_nat_trans(const MFunctor& M, const MFunctor& N) {
  int64_t n = 0;
  nat_backtrack(M, N, [&](const std::vector<Mor>&) { ++n; });
  return n;
}

NatTrans identity_nat(const MFunctor& M) {
  NatTrans t;
  for (int i = 0; i < M.index->n_objects(); ++i)
    t.components.push_back(M.base->identity(M.at(i)));
  return t;
}

NatTrans compose_nat(const MFunctor& M, const NatTrans& t2, const NatTrans& t1) {
  NatTrans t;
  for (int i = 0; i < M.index->n_objects(); ++i)
    t.components.push_back(M.base->compose(t2.components[i], t1.components[i]));
  return t;
}

MFunctor act(Obj m, const MFunctor& M) {
  const BaseCategory& B = *M.base;
  MFunctor R;
  R.index = M.index;
  R.base = M.base;
  for (const Obj& o : M.on_objects) R.on_objects.push_back(B.tensor_obj(m, o));
  auto idm = B.identity(m);
  for (const Mor& f : M.on_morphisms) R.on_morphisms.push_back(B.tensor_mor(idm, f));
  return R;
}

MFunctor act_right(const MFunctor& M, Obj m) {
  const BaseCategory& B = *M.base;
  MFunctor R;
  R.index = M.index;
  R.base = M.base;
  for (const Obj& o : M.on_objects) R.on_objects.push_back(B.tensor_obj(o, m));
  auto idm = B.identity(m);
  for (const Mor& f : M.on_morphisms) R.on_morphisms.push_back(B.tensor_mor(f, idm));
  return R;
}

MFunctor tensor_pointwise(const MFunctor& M, const MFunctor& N) {
  const BaseCategory& B = *M.base;
  MFunctor R;
  R.index = M.index;
  R.base = M.base;
  for (int i = 0; i < M.index->n_objects(); ++i)
    R.on_objects.push_back(B.tensor_obj(M.at(i), N.at(i)));
  for (int f = 0; f < M.index->n_morphisms(); ++f)
    R.on_morphisms.push_back(B.tensor_mor(M.map(f), N.map(f)));
  return R;
}

MFunctor exponent(const MFunctor& M, Obj m) {
  const BaseCategory& B = *M.base;
  MFunctor R;
  R.index = M.index;
  R.base = M.base;
  for (const Obj& o : M.on_objects) R.on_objects.push_back(B.internal_hom(m, o));
  for (const Mor& f : M.on_morphisms) R.on_morphisms.push_back(postcompose_ih(B, m, f));
  return R;
}

MFunctor precompose(const MFunctor& X, const CatFunctor& phi) {
  if (!(*phi.target == *X.index))
    throw input_error("precompose: functor target does not match index category");
  MFunctor R;
  R.index = phi.source;
  R.base = X.base;
  for (int i = 0; i < phi.source->n_objects(); ++i)
    R.on_objects.push_back(X.at(phi.on_objects[i]));
  for (int f = 0; f < phi.source->n_morphisms(); ++f)
    R.on_morphisms.push_back(X.map(phi.on_morphisms[f]));
  return R;
}

}  // namespace catv
