#include "ends.hpp"

#include <set>

namespace catv {

Validation Bifunctor::validate() const {
  Validation v;
  const FinCat& I = *index;
  const BaseCategory& B = *base;
  int n = I.n_objects(), m = I.n_morphisms();
  if (static_cast<int>(objs.size()) != n * n || static_cast<int>(mors.size()) != m * m)
    throw input_error("bifunctor tables are not total");

  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const Mor& a = action(f, g);
      if (a.src != at(I.dst(f), I.src(g)) || a.dst != at(I.src(f), I.dst(g)))
        v.violations.push_back("action (" + I.morphism_name(f) + "," + I.morphism_name(g) +
                               ") has wrong shape");
    }
  if (!v.violations.empty()) return v;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (action(I.identity_of(i), I.identity_of(j)) != B.identity(at(i, j)))
        v.violations.push_back("identity action at (" + I.object_name(i) + "," +
                               I.object_name(j) + ") is not the identity");

  // Mixed interchange on all pairs.
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const Mor& both = action(f, g);
      const Mor& first = action(f, I.identity_of(I.src(g)));
      const Mor& second = action(I.identity_of(I.src(f)), g);
      const Mor& first2 = action(f, I.identity_of(I.dst(g)));
      const Mor& second2 = action(I.identity_of(I.dst(f)), g);
      if (B.compose(first2, second2) != both || B.compose(second, first) != both)
        v.violations.push_back("interchange fails on (" + I.morphism_name(f) + "," +
                               I.morphism_name(g) + ")");
    }

  // Composition in each slot.
  for (int f = 0; f < m; ++f)
    for (int f2 = 0; f2 < m; ++f2) {
      if (I.dst(f2) != I.src(f)) continue;
      int ff2 = I.compose(f2, f);
      for (int j = 0; j < n; ++j) {
        int idj = I.identity_of(j);
        if (B.compose(action(f2, idj), action(f, idj)) != action(ff2, idj))
          v.violations.push_back("contravariant slot composition fails on (" +
                                 I.morphism_name(f2) + "," + I.morphism_name(f) + ")");
      }
    }
  for (int g = 0; g < m; ++g)
    for (int g2 = 0; g2 < m; ++g2) {
      if (I.dst(g) != I.src(g2)) continue;
      int gg2 = I.compose(g, g2);
      for (int i = 0; i < n; ++i) {
        int idi = I.identity_of(i);
        if (B.compose(action(idi, g2), action(idi, g)) != action(idi, gg2))
          v.violations.push_back("covariant slot composition fails on (" +
                                 I.morphism_name(g) + "," + I.morphism_name(g2) + ")");
      }
    }
  return v;
}

Bifunctor make_bifunctor(std::shared_ptr<const FinCat> index,
                         std::shared_ptr<const BaseCategory> base,
                         const std::function<Obj(int, int)>& obj_at,
                         const std::function<Mor(int, int)>& mor_at) {
  Bifunctor F;
  F.index = index;
  F.base = base;
  int n = index->n_objects(), m = index->n_morphisms();
  F.objs.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) F.objs.push_back(obj_at(i, j));
  F.mors.reserve(static_cast<size_t>(m) * m);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) F.mors.push_back(mor_at(f, g));
  auto v = F.validate();
  if (!v.ok()) throw input_error("bifunctor construction: " + v.violations.front());
  return F;
}

Bifunctor homset_bifunctor(const MFunctor& M, const MFunctor& N) {
  if (!M.base->same_as(*N.base) || !(*M.index == *N.index))
    throw input_error("homset_bifunctor: mismatched functors");
  const BaseCategory& B = *M.base;
  auto fs = make_base(BaseSpec{BaseKind::finset}, B.caps());
  const FinCat& I = *M.index;
  return make_bifunctor(
      M.index, fs,
      [&](int i, int j) {
        int64_t c = B.hom_count(M.at(i), N.at(j));
        if (c > B.caps().max_hom)
          throw resource_error("homset_bifunctor: |hom| = " + std::to_string(c) +
                               " exceeds cap");
        return Obj{c};
      },
      [&](int f, int g) {
        // phi |-> N(g) ∘ phi ∘ M(f), on hom(M_dst(f), N_src(g)).
        Obj a = M.at(I.dst(f)), b = N.at(I.src(g));
        int64_t c = B.hom_count(a, b);
        Mor t{Obj{c}, Obj{B.hom_count(M.at(I.src(f)), N.at(I.dst(g)))}, {}};
        t.data.resize(c);
        for (int64_t e = 0; e < c; ++e) {
          Mor phi = B.hom_element(a, b, e);
          t.data[e] = B.hom_index(B.compose(N.map(g), B.compose(phi, M.map(f))));
        }
        return t;
      });
}

Bifunctor internal_hom_bifunctor(const MFunctor& M, const MFunctor& N) {
  if (!M.base->same_as(*N.base) || !(*M.index == *N.index))
    throw input_error("internal_hom_bifunctor: mismatched functors");
  const BaseCategory& B = *M.base;
  const FinCat& I = *M.index;
  return make_bifunctor(
      M.index, M.base, [&](int i, int j) { return B.internal_hom(M.at(i), N.at(j)); },
      [&](int f, int g) {
        // [M(f), N(g)]: [M_dst(f), N_src(g)] -> [M_src(f), N_dst(g)]
        Obj a = M.at(I.dst(f)), b = N.at(I.src(g));
        Obj h = B.internal_hom(a, b);
        Mor body = B.compose(N.map(g), B.compose(B.eval_mor(a, b),
                                                 B.tensor_mor(B.identity(h), M.map(f))));
        return B.curry_split(body, h, M.at(I.src(f)), N.at(I.dst(g)));
      });
}

EndResult compute_end(const Bifunctor& F) {
  const FinCat& I = *F.index;
  const BaseCategory& B = *F.base;
  int n = I.n_objects(), m = I.n_morphisms();

  EndResult r;
  r.base = F.base;
  std::vector<Obj> diag;
  for (int i = 0; i < n; ++i) diag.push_back(F.at(i, i));
  r.diag = B.product(diag);

  std::vector<Mor> lhs, rhs;
  for (int f = 0; f < m; ++f) {
    int i = I.src(f), j = I.dst(f);
    lhs.push_back(B.compose(F.action(I.identity_of(i), f), r.diag.projections[i]));
    rhs.push_back(B.compose(F.action(f, I.identity_of(j)), r.diag.projections[j]));
  }
  Mor phi = B.tuple(lhs, r.diag.carrier);
  Mor psi = B.tuple(rhs, r.diag.carrier);
  r.eq = B.equalizer(phi, psi);
  r.carrier = r.eq.carrier;
  for (int i = 0; i < n; ++i)
    r.legs.push_back(B.compose(r.diag.projections[i], r.eq.include));
  return r;
}

Mor EndResult::factor(std::span<const Mor> wedge) const {
  if (wedge.empty() && diag.projections.empty()) {
    // Empty index: the end is terminal; factor is the unique map.
    throw input_error("factor over the empty index needs an explicit source");
  }
  Mor t = base->tuple(wedge, wedge.front().src);
  return base->equalizer_factor(eq, t);
}

CoendResult compute_coend(const Bifunctor& F) {
  const FinCat& I = *F.index;
  const BaseCategory& B = *F.base;
  int n = I.n_objects(), m = I.n_morphisms();

  CoendResult r;
  r.base = F.base;
  std::vector<Obj> diag;
  for (int i = 0; i < n; ++i) diag.push_back(F.at(i, i));
  r.diag = B.coproduct(diag);

  std::vector<Mor> lhs, rhs;
  for (int f = 0; f < m; ++f) {
    int i = I.src(f), j = I.dst(f);
    // Summand F(j, i) maps into F(i,i) via the contravariant action and into
    // F(j,j) via the covariant one.
    lhs.push_back(B.compose(r.diag.injections[i], F.action(f, I.identity_of(i))));
    rhs.push_back(B.compose(r.diag.injections[j], F.action(I.identity_of(j), f)));
  }
  Mor u = B.cotuple(lhs, r.diag.carrier);
  Mor v = B.cotuple(rhs, r.diag.carrier);
  r.coeq = B.coequalizer(u, v);
  r.carrier = r.coeq.carrier;
  for (int i = 0; i < n; ++i)
    r.colegs.push_back(B.compose(r.coeq.project, r.diag.injections[i]));
  return r;
}

Mor CoendResult::cofactor(std::span<const Mor> cowedge) const {
  if (cowedge.empty() && diag.injections.empty())
    throw input_error("cofactor over the empty index needs an explicit target");
  Mor t = base->cotuple(cowedge, cowedge.front().dst);
  return base->coequalizer_factor(coeq, t);
}

namespace {

// Backtracking enumeration of constrained component tuples, shared by the
// wedge and cowedge oracles.
std::vector<std::vector<Mor>> enumerate_tuples(
    const Bifunctor& F, const std::function<int64_t(int)>& count_at,
    const std::function<Mor(int, int64_t)>& elem_at,
    const std::function<bool(const std::vector<Mor>&, int)>& mor_ok) {
  const FinCat& I = *F.index;
  const BaseCategory& B = *F.base;
  int n = I.n_objects();
  int64_t space = 1;
  for (int i = 0; i < n; ++i) space = checked_mul(space, count_at(i), "wedge enumeration");
  if (space > B.caps().max_hom)
    throw resource_error("wedge candidate space " + std::to_string(space) + " exceeds cap " +
                         std::to_string(B.caps().max_hom));
  std::vector<std::vector<int>> check_at(n);
  for (int f = 0; f < I.n_morphisms(); ++f) {
    if (I.is_identity(f)) continue;
    check_at[std::max(I.src(f), I.dst(f))].push_back(f);
  }
  std::vector<std::vector<Mor>> out;
  std::vector<Mor> comp(n);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == n) {
      out.push_back(comp);
      return;
    }
    int64_t cnt = count_at(depth);
    for (int64_t idx = 0; idx < cnt; ++idx) {
      comp[depth] = elem_at(depth, idx);
      bool ok = true;
      for (int f : check_at[depth])
        if (!mor_ok(comp, f)) {
          ok = false;
          break;
        }
      if (ok) rec(depth + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<std::vector<Mor>> enumerate_wedges(const Bifunctor& F, Obj d) {
  const FinCat& I = *F.index;
  const BaseCategory& B = *F.base;
  return enumerate_tuples(
      F, [&](int i) { return B.hom_count(d, F.at(i, i)); },
      [&](int i, int64_t idx) { return B.hom_element(d, F.at(i, i), idx); },
      [&](const std::vector<Mor>& comp, int f) {
        int i = I.src(f), j = I.dst(f);
        return B.compose(F.action(I.identity_of(i), f), comp[i]) ==
               B.compose(F.action(f, I.identity_of(j)), comp[j]);
      });
}

std::vector<std::vector<Mor>> enumerate_cowedges(const Bifunctor& F, Obj d) {
  const FinCat& I = *F.index;
  const BaseCategory& B = *F.base;
  return enumerate_tuples(
      F, [&](int i) { return B.hom_count(F.at(i, i), d); },
      [&](int i, int64_t idx) { return B.hom_element(F.at(i, i), d, idx); },
      [&](const std::vector<Mor>& comp, int f) {
        int i = I.src(f), j = I.dst(f);
        return B.compose(comp[i], F.action(f, I.identity_of(i))) ==
               B.compose(comp[j], F.action(I.identity_of(j), f));
      });
}

ContinuityReport check_end_continuity(const Bifunctor& F, Obj d) {
  const BaseCategory& B = *F.base;
  ContinuityReport rep;

  EndResult e = compute_end(F);
  auto wedges = enumerate_wedges(F, d);
  rep.wedges = static_cast<int64_t>(wedges.size());
  rep.hom_into_end = B.hom_count(d, e.carrier);
  bool end_ok = rep.hom_into_end == rep.wedges;
  if (end_ok) {
    // hom(d, carrier) -> wedges must be injective and land in the family.
    std::set<std::vector<Mor>> seen(wedges.begin(), wedges.end());
    std::set<std::vector<Mor>> image;
    for (const Mor& u : B.hom_enumerate(d, e.carrier)) {
      std::vector<Mor> w;
      for (const Mor& leg : e.legs) w.push_back(B.compose(leg, u));
      if (!seen.count(w) || !image.insert(w).second) {
        end_ok = false;
        break;
      }
    }
  }

  CoendResult c = compute_coend(F);
  auto cowedges = enumerate_cowedges(F, d);
  rep.cowedges = static_cast<int64_t>(cowedges.size());
  rep.hom_out_of_coend = B.hom_count(c.carrier, d);
  bool coend_ok = rep.hom_out_of_coend == rep.cowedges;
  if (coend_ok) {
    std::set<std::vector<Mor>> seen(cowedges.begin(), cowedges.end());
    std::set<std::vector<Mor>> image;
    for (const Mor& u : B.hom_enumerate(c.carrier, d)) {
      std::vector<Mor> w;
      for (const Mor& coleg : c.colegs) w.push_back(B.compose(u, coleg));
      if (!seen.count(w) || !image.insert(w).second) {
        coend_ok = false;
        break;
      }
    }
  }
  rep.pass = end_ok && coend_ok;
  return rep;
}

EndOfHomReport end_of_hom_equals_nat(const MFunctor& M, const MFunctor& N) {
  const BaseCategory& B = *M.base;
  Bifunctor H = homset_bifunctor(M, N);
  EndResult e = compute_end(H);

  EndOfHomReport rep;
  rep.end_cardinality = e.carrier.size;
  auto all = enumerate_nat_trans(M, N);
  rep.nat_trans_count = static_cast<int64_t>(all.size());
  if (rep.end_cardinality != rep.nat_trans_count) return rep;

  // Decode each end element into a component family and check it appears in
  // the brute-force list exactly once.
  std::set<std::vector<Mor>> expected;
  for (const auto& t : all) expected.insert(t.components);
  std::set<std::vector<Mor>> seen;
  for (int64_t x = 0; x < e.carrier.size; ++x) {
    std::vector<Mor> comp;
    for (int i = 0; i < M.index->n_objects(); ++i)
      comp.push_back(B.hom_element(M.at(i), N.at(i), e.legs[i].data[x]));
    if (!expected.count(comp) || !seen.insert(comp).second) return rep;
  }
  rep.pass = true;
  return rep;
}

}  // namespace catv
