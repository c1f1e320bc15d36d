#include "yoneda.hpp"

#include <set>

namespace catv {

Mor FreeFunctor::injection(int j, int f) const {
  const BaseCategory& B = *functor.base;
  std::vector<Obj> units(summands[j].size(), B.unit());
  return B.coproduct(units).injections[summand_pos(j, f)];
}

int FreeFunctor::summand_pos(int j, int f) const {
  for (size_t t = 0; t < summands[j].size(); ++t)
    if (summands[j][t] == f) return static_cast<int>(t);
  throw input_error("free functor: morphism is not a summand at this object");
}

FreeFunctor build_free(std::shared_ptr<const FinCat> index,
                       std::shared_ptr<const BaseCategory> base, int i) {
  const FinCat& I = *index;
  const BaseCategory& B = *base;
  FreeFunctor h;
  h.based_at = i;
  h.functor.index = index;
  h.functor.base = base;
  h.summands.resize(I.n_objects());
  for (int j = 0; j < I.n_objects(); ++j) {
    h.summands[j] = I.hom_set(i, j);
    h.functor.on_objects.push_back(Obj{static_cast<int64_t>(h.summands[j].size())});
  }
  h.functor.on_morphisms.resize(I.n_morphisms());
  for (int g = 0; g < I.n_morphisms(); ++g) {
    int j = I.src(g), j2 = I.dst(g);
    std::vector<Mor> legs;
    for (int f : h.summands[j]) legs.push_back(h.injection(j2, I.compose(f, g)));
    h.functor.on_morphisms[g] = B.cotuple(legs, h.functor.at(j2));
  }
  return h;
}

Obj free_on_set(const BaseCategory& B, int64_t s) {
  std::vector<Obj> units(s, B.unit());
  return B.coproduct(units).carrier;
}

std::vector<Mor> points_of(const BaseCategory& B, Obj m) {
  return B.hom_enumerate(B.unit(), m);
}

void verify_free_points_adjunction(Report& rep, const BaseCategory& B, int64_t s, Obj m,
                                   Sampler& probes, int64_t probe_max_size) {
  std::string inst = B.name() + " s=" + std::to_string(s) + " m=" + std::to_string(m.size);
  std::vector<Obj> units(s, B.unit());
  auto U = B.coproduct(units);
  auto points = points_of(B, m);
  int64_t pt = static_cast<int64_t>(points.size());

  auto forward = [&](const Mor& phi) {
    std::vector<int64_t> psi(s);
    for (int64_t t = 0; t < s; ++t)
      psi[t] = B.hom_index(B.compose(phi, U.injections[t]));
    return psi;
  };
  auto backward = [&](const std::vector<int64_t>& psi) {
    std::vector<Mor> legs;
    for (int64_t t = 0; t < s; ++t) legs.push_back(points[psi[t]]);
    return B.cotuple(legs, m);
  };

  int64_t lhs_count = B.hom_count(U.carrier, m);
  int64_t rhs_count = checked_pow(pt, s, (int64_t{1} << 62), "points");
  bool ok = lhs_count == rhs_count;

  std::set<std::vector<int64_t>> seen;
  for (const Mor& phi : B.hom_enumerate(U.carrier, m)) {
    auto psi = forward(phi);
    ok = ok && seen.insert(psi).second;
    ok = ok && backward(psi) == phi;
  }
  ok = ok && static_cast<int64_t>(seen.size()) == rhs_count;

  // Naturality in s (restriction along a set map) and in m (postcomposition).
  if (lhs_count > 0) {
    Mor phi = B.hom_element(U.carrier, m, probes.below(lhs_count));
    int64_t s2 = probes.below(s + 1);
    std::vector<Mor> restr_legs;
    std::vector<int64_t> umap;
    for (int64_t t2 = 0; t2 < s2; ++t2) {
      umap.push_back(probes.below(s));
      restr_legs.push_back(U.injections[umap.back()]);
    }
    std::vector<Obj> units2(s2, B.unit());
    auto U2 = B.coproduct(units2);
    if (s2 > 0) {
      Mor Uu = B.cotuple(restr_legs, U.carrier);
      Mor phi2 = B.compose(phi, Uu);
      auto full = forward(phi);
      for (int64_t t2 = 0; t2 < s2; ++t2)
        ok = ok && B.hom_index(B.compose(phi2, U2.injections[t2])) == full[umap[t2]];
    }
    Obj m2 = probes.obj(probe_max_size);
    if (auto v = probes.mor(B, m, m2)) {
      auto lhs = forward(B.compose(*v, phi));
      auto full = forward(phi);
      for (int64_t t = 0; t < s; ++t)
        ok = ok && lhs[t] == B.hom_index(B.compose(*v, points[full[t]]));
    }
  }
  rep.add("eq1", inst + " free/points adjunction", ok,
          "|hom(U(s),m)|=" + std::to_string(lhs_count) +
              " |maps|=" + std::to_string(rhs_count));
}

void verify_hom_from_free(Report& rep, const FreeFunctor& h, const MFunctor& M) {
  const BaseCategory& B = *M.base;
  const FinCat& I = *M.index;
  int i = h.based_at;
  std::string inst = B.name() + " I=" + I.name() + " i=" + I.object_name(i) +
                     " M=" + [&] {
                       std::string s = "(";
                       for (int t = 0; t < I.n_objects(); ++t)
                         s += (t ? "," : "") + std::to_string(M.at(t).size);
                       return s + ")";
                     }();

  auto lhs = enumerate_nat_trans(h.functor, M);
  auto rhs = points_of(B, M.at(i));

  auto forward = [&](const NatTrans& t) {
    return B.compose(t.components[i], h.injection(i, I.identity_of(i)));
  };
  auto backward = [&](const Mor& u) {
    NatTrans t;
    for (int j = 0; j < I.n_objects(); ++j) {
      std::vector<Mor> legs;
      for (int f : h.summands[j]) legs.push_back(B.compose(M.map(f), u));
      t.components.push_back(B.cotuple(legs, M.at(j)));
    }
    return t;
  };

  bool ok = lhs.size() == rhs.size();
  std::set<std::vector<int64_t>> seen;
  for (const auto& t : lhs) {
    Mor u = forward(t);
    ok = ok && seen.insert(u.data).second;
    ok = ok && backward(u) == t;
  }
  for (const auto& u : rhs) {
    NatTrans t = backward(u);
    ok = ok && naturality_holds(h.functor, M, t);
    ok = ok && forward(t) == u;
  }
  rep.add("eq1", inst, ok,
          "|hom(h_i,M)|=" + std::to_string(lhs.size()) +
              " |hom(k,M_i)|=" + std::to_string(rhs.size()));
}

FreeMapIso free_map_iso(const FreeFunctor& h, const MFunctor& M) {
  const BaseCategory& B = *M.base;
  const FinCat& I = *M.index;
  int i = h.based_at;

  FreeMapIso r;
  r.map = map_functors(h.functor, M);

  Mor pre = precompose_ih(B, h.injection(i, I.identity_of(i)), M.at(i));
  r.to_value = B.compose(hom_unit_out(B, M.at(i)), B.compose(pre, r.map.end.legs[i]));

  std::vector<Mor> wedge;
  for (int j = 0; j < I.n_objects(); ++j) {
    std::vector<Mor> legs;
    for (int f : h.summands[j])
      legs.push_back(B.compose(M.map(f), B.lunitor(M.at(i))));
    // The cotuple domain coincides with h(j) ⊗ M_i after the braiding.
    Mor glue = B.cotuple(legs, M.at(j));
    Mor body = B.compose(glue, B.braiding(M.at(i), h.at(j)));
    wedge.push_back(B.curry_split(body, M.at(i), h.at(j), M.at(j)));
  }
  r.from_value = r.map.end.factor(wedge);

  r.ok = B.is_iso(r.to_value) &&
         B.compose(r.to_value, r.from_value) == B.identity(M.at(i)) &&
         B.compose(r.from_value, r.to_value) == B.identity(r.map.carrier);
  return r;
}

void verify_free_map_iso(Report& rep, const FreeFunctor& h, const MFunctor& M) {
  const FinCat& I = *M.index;
  auto r = free_map_iso(h, M);
  std::string shape = "(";
  for (int t = 0; t < I.n_objects(); ++t)
    shape += (t ? "," : "") + std::to_string(M.at(t).size);
  shape += ")";
  rep.add("l2",
          M.base->name() + " I=" + I.name() + " i=" + I.object_name(h.based_at) +
              " M=" + shape,
          r.ok,
          "carrier=" + std::to_string(r.map.carrier.size) +
              " M_i=" + std::to_string(M.at(h.based_at).size));
}

void verify_eval_adjunction(Report& rep, const FreeFunctor& h, Obj m, const MFunctor& M,
                            Sampler& probes, int64_t probe_max_size) {
  const BaseCategory& B = *M.base;
  const FinCat& I = *M.index;
  int i = h.based_at;
  std::string inst = B.name() + " I=" + I.name() + " i=" + I.object_name(i) +
                     " m=" + std::to_string(m.size);

  MFunctor hm = act_right(h.functor, m);
  auto fm = free_map_iso(h, M);

  auto forward = [&](const NatTrans& tau) {
    NatTrans flipped;
    for (int j = 0; j < I.n_objects(); ++j)
      flipped.components.push_back(
          B.compose(tau.components[j], B.braiding(m, h.at(j))));
    Mor u = l1_to_map(m, h.functor, M, fm.map, flipped);
    return B.compose(fm.to_value, u);
  };
  auto backward = [&](const Mor& v) {
    Mor u = B.compose(fm.from_value, v);
    NatTrans flipped = l1_from_map(m, h.functor, M, fm.map, u);
    NatTrans tau;
    for (int j = 0; j < I.n_objects(); ++j)
      tau.components.push_back(
          B.compose(flipped.components[j], B.braiding(h.at(j), m)));
    return tau;
  };

  auto lhs = enumerate_nat_trans(hm, M);
  int64_t rhs_count = B.hom_count(m, M.at(i));
  bool ok = static_cast<int64_t>(lhs.size()) == rhs_count;

  std::set<std::vector<int64_t>> seen;
  for (const auto& tau : lhs) {
    Mor v = forward(tau);
    ok = ok && seen.insert(v.data).second;
    ok = ok && backward(v) == tau;
  }
  for (const auto& v : B.hom_enumerate(m, M.at(i))) {
    NatTrans tau = backward(v);
    ok = ok && naturality_holds(hm, M, tau);
    ok = ok && forward(tau) == v;
  }

  // Naturality in m and M.
  bool probed = false;
  if (!lhs.empty()) {
    const NatTrans& tau = lhs.front();
    Obj m2 = probes.obj(probe_max_size);
    if (auto w = probes.mor(B, m2, m)) {
      NatTrans tw;
      for (int j = 0; j < I.n_objects(); ++j)
        tw.components.push_back(
            B.compose(tau.components[j], B.tensor_mor(B.identity(h.at(j)), *w)));
      // forward over m2 uses the same map end
      auto fwd2 = [&](const NatTrans& t2) {
        NatTrans flipped;
        for (int j = 0; j < I.n_objects(); ++j)
          flipped.components.push_back(
              B.compose(t2.components[j], B.braiding(m2, h.at(j))));
        Mor u = l1_to_map(m2, h.functor, M, fm.map, flipped);
        return B.compose(fm.to_value, u);
      };
      ok = ok && fwd2(tw) == B.compose(forward(tau), *w);
      probed = true;
    }
    MFunctor M2 = probes.functor(M.index, M.base, probe_max_size);
    if (auto rho = probes.nat(M, M2)) {
      auto fm2 = free_map_iso(h, M2);
      NatTrans rt;
      for (int j = 0; j < I.n_objects(); ++j)
        rt.components.push_back(B.compose(rho->components[j], tau.components[j]));
      auto fwd_m2 = [&](const NatTrans& t2) {
        NatTrans flipped;
        for (int j = 0; j < I.n_objects(); ++j)
          flipped.components.push_back(
              B.compose(t2.components[j], B.braiding(m, h.at(j))));
        Mor u = l1_to_map(m, h.functor, M2, fm2.map, flipped);
        return B.compose(fm2.to_value, u);
      };
      ok = ok && fwd_m2(rt) == B.compose(rho->components[i], forward(tau));
      probed = true;
    }
  }
  rep.add("nl3", inst, ok,
          "|hom(h_i⊗m,M)|=" + std::to_string(lhs.size()) +
              " |hom(m,M_i)|=" + std::to_string(rhs_count) +
              (probed ? "" : " (no naturality probe)"));
}

Mor density_cowedge_leg(const FreeFunctor& h, const MFunctor& M, int j) {
  const BaseCategory& B = *M.base;
  int i = h.based_at;
  std::vector<Mor> legs;
  for (int f : h.summands[j]) legs.push_back(B.compose(M.map(f), B.lunitor(M.at(i))));
  // Domain coincides with h_i(j) ⊗ M_i: the left distributor is strict.
  Mor glue = B.cotuple(legs, M.at(j));
  glue.src = B.tensor_obj(h.at(j), M.at(i));
  return glue;
}

namespace {

// h_{dst(f)}(j) -> h_{src(f)}(j): summand g' goes to g' ∘ f.
Mor free_restriction(const std::vector<FreeFunctor>& hs, const FinCat& I,
                     const BaseCategory& B, int j, int f) {
  const FreeFunctor& from = hs[I.dst(f)];
  const FreeFunctor& to = hs[I.src(f)];
  std::vector<Mor> legs;
  for (int g : from.summands[j]) legs.push_back(to.injection(j, I.compose(f, g)));
  return B.cotuple(legs, to.at(j));
}

}  // namespace

DensityResult density_data(const MFunctor& M) {
  const BaseCategory& B = *M.base;
  const FinCat& I = *M.index;
  int n = I.n_objects();

  std::vector<FreeFunctor> hs;
  for (int i = 0; i < n; ++i) hs.push_back(build_free(M.index, M.base, i));

  DensityResult r;
  r.ok = true;
  for (int j = 0; j < n; ++j) {
    Bifunctor D = make_bifunctor(
        M.index, M.base,
        [&](int i, int i2) { return B.tensor_obj(hs[i].at(j), M.at(i2)); },
        [&](int f, int g) {
          return B.tensor_mor(free_restriction(hs, I, B, j, f), M.map(g));
        });
    r.coends.push_back(compute_coend(D));
    std::vector<Mor> cowedge;
    for (int i = 0; i < n; ++i) cowedge.push_back(density_cowedge_leg(hs[i], M, j));
    Mor cmp = r.coends.back().cofactor(cowedge);
    r.ok = r.ok && B.is_iso(cmp);
    r.comparisons.push_back(std::move(cmp));
  }

  // Naturality in the evaluation point: the square with M(g) commutes.
  for (int g = 0; g < I.n_morphisms(); ++g) {
    int j = I.src(g), j2 = I.dst(g);
    std::vector<Mor> legs;
    for (int i = 0; i < n; ++i)
      legs.push_back(B.compose(r.coends[j2].colegs[i],
                               B.tensor_mor(hs[i].functor.map(g), B.identity(M.at(i)))));
    Mor induced = r.coends[j].cofactor(legs);
    r.ok = r.ok && B.compose(M.map(g), r.comparisons[j]) ==
                       B.compose(r.comparisons[j2], induced);
  }
  return r;
}

void verify_density(Report& rep, const MFunctor& M) {
  const FinCat& I = *M.index;
  auto r = density_data(M);
  std::string shape = "(", sizes = "(";
  for (int t = 0; t < I.n_objects(); ++t) {
    shape += (t ? "," : "") + std::to_string(M.at(t).size);
    sizes += (t ? "," : "") + std::to_string(r.coends[t].carrier.size);
  }
  rep.add("l0", M.base->name() + " I=" + I.name() + " M=" + shape + ")", r.ok,
          "coend components=" + sizes + ")");
}

}  // namespace catv
