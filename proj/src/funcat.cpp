#include "funcat.hpp"

#include <set>

namespace catv {

MapResult map_functors(const MFunctor& M, const MFunctor& N) {
  MapResult r;
  r.end = compute_end(internal_hom_bifunctor(M, N));
  r.carrier = r.end.carrier;
  return r;
}

Mor map_post(const MapResult& src, const MapResult& dst, const MFunctor& M,
             const MFunctor& N, const MFunctor& N2, const NatTrans& v) {
  const BaseCategory& B = *M.base;
  std::vector<Mor> wedge;
  for (int i = 0; i < M.index->n_objects(); ++i)
    wedge.push_back(B.compose(postcompose_ih(B, M.at(i), v.components[i]), src.end.legs[i]));
  (void)N;
  return dst.end.factor(wedge);
}

Mor map_pre(const MapResult& src, const MapResult& dst, const MFunctor& M,
            const MFunctor& M2, const MFunctor& N, const NatTrans& x) {
  const BaseCategory& B = *M.base;
  std::vector<Mor> wedge;
  for (int i = 0; i < M.index->n_objects(); ++i)
    wedge.push_back(B.compose(precompose_ih(B, x.components[i], N.at(i)), src.end.legs[i]));
  (void)M2;
  return dst.end.factor(wedge);
}

Mor map_identity_point(const MapResult& r, const MFunctor& M) {
  const BaseCategory& B = *M.base;
  std::vector<Mor> wedge;
  for (int i = 0; i < M.index->n_objects(); ++i)
    wedge.push_back(B.curry_split(B.lunitor(M.at(i)), B.unit(), M.at(i), M.at(i)));
  return r.end.factor(wedge);
}

NatTrans l1_to_exponent(Obj m, const MFunctor& M, const MFunctor& N, const NatTrans& tau) {
  const BaseCategory& B = *M.base;
  NatTrans s;
  for (int i = 0; i < M.index->n_objects(); ++i) {
    Mor body = B.compose(tau.components[i], B.braiding(M.at(i), m));
    s.components.push_back(B.curry_split(body, M.at(i), m, N.at(i)));
  }
  return s;
}

NatTrans l1_from_exponent(Obj m, const MFunctor& M, const MFunctor& N, const NatTrans& sigma) {
  const BaseCategory& B = *M.base;
  NatTrans t;
  for (int i = 0; i < M.index->n_objects(); ++i) {
    Mor body = B.uncurry_split(sigma.components[i], M.at(i), m, N.at(i));
    t.components.push_back(B.compose(body, B.braiding(m, M.at(i))));
  }
  return t;
}

Mor l1_to_map(Obj m, const MFunctor& M, const MFunctor& N, const MapResult& r,
              const NatTrans& tau) {
  const BaseCategory& B = *M.base;
  std::vector<Mor> wedge;
  for (int i = 0; i < M.index->n_objects(); ++i)
    wedge.push_back(B.curry_split(tau.components[i], m, M.at(i), N.at(i)));
  return r.end.factor(wedge);
}

NatTrans l1_from_map(Obj m, const MFunctor& M, const MFunctor& N, const MapResult& r,
                     const Mor& u) {
  const BaseCategory& B = *M.base;
  NatTrans t;
  for (int i = 0; i < M.index->n_objects(); ++i)
    t.components.push_back(
        B.uncurry_split(B.compose(r.end.legs[i], u), m, M.at(i), N.at(i)));
  return t;
}

namespace {

std::string shape_of(const MFunctor& M) {
  std::string s = "(";
  for (int i = 0; i < M.index->n_objects(); ++i)
    s += (i ? "," : "") + std::to_string(M.at(i).size);
  return s + ")";
}

}  // namespace

void verify_closed_module(Report& rep, Obj m, const MFunctor& M, const MFunctor& N,
                          Sampler& probes, int64_t probe_max_size) {
  const BaseCategory& B = *M.base;
  const FinCat& I = *M.index;
  std::string inst = B.name() + " I=" + I.name() + " m=" + std::to_string(m.size) +
                     " M=" + shape_of(M) + " N=" + shape_of(N);

  MFunctor mM = act(m, M);
  MFunctor Nm = exponent(N, m);
  MapResult mp = map_functors(M, N);

  bool sampled = false;
  std::vector<NatTrans> A, Bs;
  try {
    A = enumerate_nat_trans(mM, N);
    Bs = enumerate_nat_trans(M, Nm);
  } catch (const resource_error&) {
    sampled = true;
  }

  if (!sampled) {
    int64_t c_count = B.hom_count(m, mp.carrier);
    bool counts_ok = static_cast<int64_t>(A.size()) == static_cast<int64_t>(Bs.size()) &&
                     static_cast<int64_t>(A.size()) == c_count;
    rep.add("l1", inst + " cardinalities", counts_ok,
            "|hom(m⊗M,N)|=" + std::to_string(A.size()) +
                " |hom(M,N^m)|=" + std::to_string(Bs.size()) +
                " |hom(m,map)|=" + std::to_string(c_count));

    std::set<std::vector<Mor>> in_B;
    for (const auto& s : Bs) in_B.insert(s.components);
    std::set<std::vector<int64_t>> u_seen;
    bool ok = counts_ok;
    for (const auto& tau : A) {
      NatTrans s = l1_to_exponent(m, M, N, tau);
      ok = ok && in_B.count(s.components) > 0;
      ok = ok && l1_from_exponent(m, M, N, s) == tau;
      Mor u = l1_to_map(m, M, N, mp, tau);
      ok = ok && l1_from_map(m, M, N, mp, u) == tau;
      ok = ok && u_seen.insert(u.data).second;
    }
    for (const auto& s : Bs) {
      NatTrans tau = l1_from_exponent(m, M, N, s);
      ok = ok && naturality_holds(mM, N, tau);
      ok = ok && l1_to_exponent(m, M, N, tau) == s;
    }
    for (const Mor& u : B.hom_enumerate(m, mp.carrier)) {
      NatTrans tau = l1_from_map(m, M, N, mp, u);
      ok = ok && naturality_holds(mM, N, tau);
      ok = ok && l1_to_map(m, M, N, mp, tau) == u;
    }
    rep.add("l1", inst + " round-trips", ok);
  } else {
    // Candidate space past the cap: spot-check through the map side.
    bool ok = true;
    int64_t c_count = B.hom_count(m, mp.carrier);
    for (int probe = 0; probe < 16 && c_count > 0; ++probe) {
      Mor u = B.hom_element(m, mp.carrier, probes.below(c_count));
      NatTrans tau = l1_from_map(m, M, N, mp, u);
      ok = ok && naturality_holds(mM, N, tau);
      ok = ok && l1_to_map(m, M, N, mp, tau) == u;
      NatTrans s = l1_to_exponent(m, M, N, tau);
      ok = ok && naturality_holds(M, Nm, s);
      ok = ok && l1_from_exponent(m, M, N, s) == tau;
    }
    rep.add("l1", inst + " round-trips", ok, "sampled (candidate space exceeds cap)");
  }

  // Naturality of the translations in all three slots.
  {
    bool ok = true;
    bool probed = false;
    NatTrans tau;
    bool have_tau = false;
    if (!sampled && !A.empty()) {
      tau = A.front();
      have_tau = true;
    }
    if (have_tau) {
      Mor u = l1_to_map(m, M, N, mp, tau);
      Obj m2 = probes.obj(probe_max_size);
      if (auto w = probes.mor(B, m2, m)) {
        NatTrans tw;
        for (int i = 0; i < I.n_objects(); ++i)
          tw.components.push_back(
              B.compose(tau.components[i], B.tensor_mor(*w, B.identity(M.at(i)))));
        ok = ok && l1_to_map(m2, M, N, mp, tw) == B.compose(u, *w);
        NatTrans s = l1_to_exponent(m, M, N, tau);
        NatTrans sw = l1_to_exponent(m2, M, N, tw);
        for (int i = 0; i < I.n_objects(); ++i)
          ok = ok && sw.components[i] ==
                         B.compose(precompose_ih(B, *w, N.at(i)), s.components[i]);
        probed = true;
      }
      MFunctor M2 = probes.functor(M.index, M.base, probe_max_size);
      if (auto xi = probes.nat(M2, M)) {
        NatTrans tx;
        for (int i = 0; i < I.n_objects(); ++i)
          tx.components.push_back(
              B.compose(tau.components[i], B.tensor_mor(B.identity(m), xi->components[i])));
        MapResult mp2 = map_functors(M2, N);
        ok = ok && l1_to_map(m, M2, N, mp2, tx) ==
                       B.compose(map_pre(mp, mp2, M, M2, N, *xi), u);
        probed = true;
      }
      MFunctor N2 = probes.functor(M.index, M.base, probe_max_size);
      if (auto up = probes.nat(N, N2)) {
        NatTrans tu;
        for (int i = 0; i < I.n_objects(); ++i)
          tu.components.push_back(B.compose(up->components[i], tau.components[i]));
        MapResult mp3 = map_functors(M, N2);
        ok = ok && l1_to_map(m, M, N2, mp3, tu) ==
                       B.compose(map_post(mp, mp3, M, N, N2, *up), u);
        probed = true;
      }
    }
    rep.add("l1", inst + " naturality", ok, probed ? "" : "no probe available");
  }

  // Module coherence diagrams, as exact table equalities.
  {
    Obj n = probes.obj(probe_max_size), p = probes.obj(probe_max_size);
    Obj k = B.unit();
    bool ok = true;
    for (int i = 0; i < I.n_objects(); ++i) {
      Obj c = M.at(i);
      Mor lhs1 = B.compose(B.associator(m, n, B.tensor_obj(p, c)),
                           B.associator(B.tensor_obj(m, n), p, c));
      Mor rhs1 = B.compose(
          B.tensor_mor(B.identity(m), B.associator(n, p, c)),
          B.compose(B.associator(m, B.tensor_obj(n, p), c),
                    B.tensor_mor(B.associator(m, n, p), B.identity(c))));
      ok = ok && lhs1 == rhs1;
      Mor lhs2 = B.compose(B.lunitor(B.tensor_obj(m, c)), B.associator(k, m, c));
      Mor rhs2 = B.tensor_mor(B.lunitor(m), B.identity(c));
      ok = ok && lhs2 == rhs2;
      Mor lhs3 = B.compose(B.tensor_mor(B.identity(m), B.lunitor(c)), B.associator(m, k, c));
      Mor rhs3 = B.tensor_mor(B.runitor(m), B.identity(c));
      ok = ok && lhs3 == rhs3;
    }
    rep.add("l1", inst + " module coherence", ok,
            "n=" + std::to_string(n.size) + " p=" + std::to_string(p.size));
  }
}

// --------------------------------------------------------------------------
// module functors
// --------------------------------------------------------------------------

namespace {

// mu components for F = identity and F = precompose are identities; both
// diagrams then reduce to the codomain module coherence, exercised through
// the general formulas.
bool strict_mu_diagrams(const BaseCategory& B, Obj m, Obj n, Obj c) {
  Obj k = B.unit();
  Mor lhs1 = B.compose(B.associator(m, n, c),
                       B.identity(B.tensor_obj(B.tensor_obj(m, n), c)));
  Mor rhs1 = B.compose(
      B.identity(B.tensor_obj(m, B.tensor_obj(n, c))),
      B.compose(B.tensor_mor(B.identity(m), B.identity(B.tensor_obj(n, c))),
                B.associator(m, n, c)));
  Mor lhs2 = B.compose(B.lunitor(c), B.identity(B.tensor_obj(k, c)));
  return lhs1 == rhs1 && lhs2 == B.lunitor(c);
}

}  // namespace

void verify_module_functor_identity(Report& rep, Obj m, const MFunctor& M) {
  const BaseCategory& B = *M.base;
  bool ok = true;
  for (int i = 0; i < M.index->n_objects(); ++i)
    ok = ok && strict_mu_diagrams(B, m, m, M.at(i));
  rep.add("l1", "module functor identity on " + B.name() + "^" + M.index->name(), ok);
}

void verify_module_functor_precompose(Report& rep, const CatFunctor& phi, Obj m, Obj n,
                                      const MFunctor& Y) {
  const BaseCategory& B = *Y.base;
  const FinCat& J = *phi.source;
  bool ok = true;
  // (m ⊗ (Y∘Phi))_j and ((m ⊗ Y)∘Phi)_j are the same object; mu = id.
  MFunctor lhs = act(m, precompose(Y, phi));
  MFunctor rhs = precompose(act(m, Y), phi);
  for (int j = 0; j < J.n_objects(); ++j) {
    ok = ok && lhs.at(j) == rhs.at(j);
    ok = ok && strict_mu_diagrams(B, m, n, Y.at(phi.on_objects[j]));
  }
  for (int f = 0; f < J.n_morphisms(); ++f) ok = ok && lhs.map(f) == rhs.map(f);
  rep.add("l1",
          "module functor precompose " + phi.source->name() + "<-" + phi.target->name(), ok);
}

void verify_module_functor_tensor(Report& rep, const MFunctor& N, Obj m, Obj n,
                                  const MFunctor& M) {
  const BaseCategory& B = *M.base;
  const FinCat& I = *M.index;
  Obj k = B.unit();
  bool ok = true;
  // F(M) = M ⊗ N pointwise; mu_{a,M} componentwise is the inverse
  // associator a⊗(M_i⊗N_i) -> (a⊗M_i)⊗N_i.
  auto mu = [&](Obj a, Obj c, Obj w) { return B.inverse(B.associator(a, c, w)); };
  for (int i = 0; i < I.n_objects(); ++i) {
    Obj c = M.at(i), w = N.at(i);
    ok = ok && B.is_iso(mu(m, c, w));
    Mor lhs1 = B.compose(B.tensor_mor(B.associator(m, n, c), B.identity(w)),
                         mu(B.tensor_obj(m, n), c, w));
    Mor rhs1 = B.compose(
        mu(m, B.tensor_obj(n, c), w),
        B.compose(B.tensor_mor(B.identity(m), mu(n, c, w)),
                  B.associator(m, n, B.tensor_obj(c, w))));
    ok = ok && lhs1 == rhs1;
    Mor lhs2 = B.compose(B.tensor_mor(B.lunitor(c), B.identity(w)), mu(k, c, w));
    ok = ok && lhs2 == B.lunitor(B.tensor_obj(c, w));
  }
  rep.add("l1", "module functor -⊗N on " + B.name() + "^" + I.name(), ok,
          "m=" + std::to_string(m.size) + " n=" + std::to_string(n.size));
}

void verify_module_functor_free(Report& rep, const MFunctor& h, Obj m, Obj n, Obj x) {
  const BaseCategory& B = *h.base;
  const FinCat& I = *h.index;
  Obj k = B.unit();
  bool ok = true;
  // F(x) = h ⊗ x; mu_{a,x} at j: a⊗(h_j⊗x) -> h_j⊗(a⊗x) through the
  // braiding, a genuinely non-identity permutation.
  auto mu = [&](Obj a, Obj xx, Obj hj) {
    Mor to_left = B.inverse(B.associator(a, hj, xx));
    Mor swap = B.tensor_mor(B.braiding(a, hj), B.identity(xx));
    Mor re = B.associator(hj, a, xx);
    return B.compose(re, B.compose(swap, to_left));
  };
  for (int j = 0; j < I.n_objects(); ++j) {
    Obj hj = h.at(j);
    ok = ok && B.is_iso(mu(m, x, hj));
    Mor lhs1 = B.compose(B.tensor_mor(B.identity(hj), B.associator(m, n, x)),
                         mu(B.tensor_obj(m, n), x, hj));
    Mor rhs1 = B.compose(
        mu(m, B.tensor_obj(n, x), hj),
        B.compose(B.tensor_mor(B.identity(m), mu(n, x, hj)),
                  B.associator(m, n, B.tensor_obj(hj, x))));
    ok = ok && lhs1 == rhs1;
    Mor lhs2 = B.compose(B.tensor_mor(B.identity(hj), B.lunitor(x)), mu(k, x, hj));
    ok = ok && lhs2 == B.lunitor(B.tensor_obj(hj, x));
  }
  rep.add("l1", "module functor h⊗- from " + B.name(), ok,
          "m=" + std::to_string(m.size) + " n=" + std::to_string(n.size) +
              " x=" + std::to_string(x.size));
}

}  // namespace catv
