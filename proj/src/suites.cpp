#include "suites.hpp"

#include <sstream>

namespace catv {

namespace {

std::string sizes_of(const MFunctor& M) {
  std::string s = "(";
  for (int i = 0; i < M.index->n_objects(); ++i)
    s += (i ? "," : "") + std::to_string(M.at(i).size);
  return s + ")";
}

void bump(int64_t* n, int64_t by = 1) {
  if (n) *n += by;
}

}  // namespace

void suite_coherence(Report& rep, const BaseCategory& B, int64_t max_size,
                     int64_t closure_max_size, int64_t* identities) {
  auto nm = [&](int64_t v) { return std::to_string(v); };
  const std::string base = B.name();

  for (int64_t a = 0; a <= max_size; ++a)
    for (int64_t b = 0; b <= max_size; ++b) {
      Obj A{a}, Bo{b};
      Mor lhs = B.compose(B.tensor_mor(B.identity(A), B.lunitor(Bo)),
                          B.associator(A, B.unit(), Bo));
      rep.add("triangle", base + " a=" + nm(a) + " b=" + nm(b),
              lhs == B.tensor_mor(B.runitor(A), B.identity(Bo)));
      bump(identities);
      Mor s = B.braiding(A, Bo);
      bool inv = B.compose(B.braiding(Bo, A), s) == B.identity(B.tensor_obj(A, Bo)) &&
                 B.is_iso(s);
      rep.add("hexagon", base + " involution a=" + nm(a) + " b=" + nm(b), inv);
      bump(identities);
      for (int64_t c = 0; c <= max_size; ++c) {
        Obj C{c};
        Mor right = B.compose(
            B.associator(Bo, C, A),
            B.compose(B.braiding(A, B.tensor_obj(Bo, C)), B.associator(A, Bo, C)));
        Mor left = B.compose(
            B.tensor_mor(B.identity(Bo), B.braiding(A, C)),
            B.compose(B.associator(Bo, A, C), B.tensor_mor(B.braiding(A, Bo), B.identity(C))));
        rep.add("hexagon", base + " a=" + nm(a) + " b=" + nm(b) + " c=" + nm(c),
                right == left);
        bump(identities);
        for (int64_t d = 0; d <= max_size; ++d) {
          Obj D{d};
          Mor top = B.compose(B.associator(A, Bo, B.tensor_obj(C, D)),
                              B.associator(B.tensor_obj(A, Bo), C, D));
          Mor bot = B.compose(
              B.tensor_mor(B.identity(A), B.associator(Bo, C, D)),
              B.compose(B.associator(A, B.tensor_obj(Bo, C), D),
                        B.tensor_mor(B.associator(A, Bo, C), B.identity(D))));
          rep.add("pentagon",
                  base + " a=" + nm(a) + " b=" + nm(b) + " c=" + nm(c) + " d=" + nm(d),
                  top == bot);
          bump(identities);
        }
      }
    }

  // Closure: curry/uncurry are mutually inverse across entire hom-sets, and
  // eval recovers the uncurried map.
  for (int64_t a = 0; a <= closure_max_size; ++a)
    for (int64_t b = 0; b <= closure_max_size; ++b)
      for (int64_t c = 0; c <= closure_max_size; ++c) {
        Obj A{a}, Bo{b}, C{c};
        bool ok = true;
        int64_t count = 0;
        for (const Mor& f : B.hom_enumerate(B.tensor_obj(A, Bo), C)) {
          Mor cur = B.curry_split(f, A, Bo, C);
          ok = ok && B.uncurry_split(cur, A, Bo, C) == f;
          ok = ok &&
               B.compose(B.eval_mor(Bo, C), B.tensor_mor(cur, B.identity(Bo))) == f;
          ++count;
        }
        for (const Mor& g : B.hom_enumerate(A, B.internal_hom(Bo, C))) {
          Mor unc = B.uncurry_split(g, A, Bo, C);
          ok = ok && B.curry_split(unc, A, Bo, C) == g;
          ++count;
        }
        rep.add("closure", base + " a=" + nm(a) + " b=" + nm(b) + " c=" + nm(c), ok,
                "round-trips=" + nm(count));
        bump(identities, count);
      }
}

namespace {

// Data shared by the sampled suites: index category, base, sampler.
struct SuiteContext {
  std::shared_ptr<const FinCat> I;
  std::shared_ptr<const BaseCategory> B;
  Sampler smp;
  int samples;
  int64_t max_size;
};

SuiteContext make_context(Workspace& ws, const SuiteOptions& opt) {
  SuiteContext cx{ws.category(opt.category), ws.default_base(), Sampler(ws.seed),
                  opt.samples, opt.max_size};
  return cx;
}

MFunctor pick_functor(Workspace& ws, SuiteContext& cx, const std::string& name) {
  if (!name.empty()) return ws.functor(name, "selection");
  return cx.smp.functor(cx.I, cx.B, cx.max_size);
}

std::vector<int> objects_to_check(const FinCat& I, const std::string& object) {
  if (!object.empty()) return {I.object_index(object)};
  std::vector<int> all(I.n_objects());
  for (int i = 0; i < I.n_objects(); ++i) all[i] = i;
  return all;
}

Report check_module(Workspace& ws, const SuiteOptions& opt) {
  Report rep;
  SuiteContext cx = make_context(ws, opt);
  for (int s = 0; s < cx.samples; ++s) {
    Obj m = cx.smp.obj(cx.max_size);
    MFunctor M = pick_functor(ws, cx, opt.M);
    MFunctor N = pick_functor(ws, cx, opt.N);
    verify_closed_module(rep, m, M, N, cx.smp, cx.max_size);
  }
  // Module-functor coherence over the same index.
  MFunctor M = pick_functor(ws, cx, opt.M);
  verify_module_functor_identity(rep, cx.smp.obj(cx.max_size), M);
  auto term = ws.category("terminal");
  if (cx.I->n_objects() > 0) {
    CatFunctor phi = pick_object(term, cx.I, 0);
    verify_module_functor_precompose(rep, phi, cx.smp.obj(cx.max_size),
                                     cx.smp.obj(cx.max_size), M);
    auto h = build_free(cx.I, cx.B, 0);
    verify_module_functor_free(rep, h.functor, cx.smp.obj(cx.max_size),
                               cx.smp.obj(cx.max_size), cx.smp.obj(cx.max_size));
  }
  verify_module_functor_tensor(rep, unit_functor(cx.I, cx.B), cx.smp.obj(cx.max_size),
                               cx.smp.obj(cx.max_size), M);
  return rep;
}

Report check_yoneda(Workspace& ws, const SuiteOptions& opt) {
  Report rep;
  SuiteContext cx = make_context(ws, opt);
  // The free/points adjunction underlying the translation.
  verify_free_points_adjunction(rep, *cx.B, cx.smp.below(3) + 1,
                                cx.smp.obj(cx.max_size), cx.smp, cx.max_size);
  for (int s = 0; s < cx.samples; ++s) {
    MFunctor M = pick_functor(ws, cx, opt.M);
    for (int i : objects_to_check(*cx.I, opt.object)) {
      auto h = build_free(cx.I, cx.B, i);
      verify_hom_from_free(rep, h, M);
      verify_free_map_iso(rep, h, M);
    }
  }
  return rep;
}

Report check_density(Workspace& ws, const SuiteOptions& opt) {
  Report rep;
  SuiteContext cx = make_context(ws, opt);
  for (int s = 0; s < cx.samples; ++s)
    verify_density(rep, pick_functor(ws, cx, opt.M));
  return rep;
}

Report check_eval_adjunction(Workspace& ws, const SuiteOptions& opt) {
  Report rep;
  SuiteContext cx = make_context(ws, opt);
  for (int s = 0; s < cx.samples; ++s) {
    MFunctor M = pick_functor(ws, cx, opt.M);
    Obj m = cx.smp.obj(cx.max_size);
    for (int i : objects_to_check(*cx.I, opt.object))
      verify_eval_adjunction(rep, build_free(cx.I, cx.B, i), m, M, cx.smp, cx.max_size);
  }
  return rep;
}

Report check_kan(Workspace& ws, const SuiteOptions& opt) {
  Report rep;
  const CatFunctor& phi = ws.cat_functor(opt.phi);
  SuiteContext cx{phi.source, ws.default_base(), Sampler(ws.seed), opt.samples,
                  opt.max_size};

  MFunctor Y = opt.Y.empty() ? cx.smp.functor(phi.source, cx.B, cx.max_size)
                             : ws.functor(opt.Y, "Y");
  KanRight kr = right_adjoint_of_precomposition(phi, Y);
  rep.add("ex1",
          cx.B->name() + " kan right adjoint along " + phi.source->name() + "->" +
              phi.target->name() + " Y=" + sizes_of(Y),
          kr.G.validate().ok(), "G(Y)=" + sizes_of(kr.G));

  for (int s = 0; s < cx.samples; ++s) {
    MFunctor X = opt.M.empty() ? cx.smp.functor(phi.target, cx.B, cx.max_size)
                               : ws.functor(opt.M, "X");
    verify_precomposition_adjunction(rep, phi, X, Y, cx.smp, cx.max_size);
  }
  verify_cocontinuity_precompose(rep, phi, Y);
  verify_kan_limit_consistency(rep, Y);
  return rep;
}

Report check_closed(Workspace& ws, const SuiteOptions& opt) {
  Report rep;
  SuiteContext cx = make_context(ws, opt);
  for (int s = 0; s < cx.samples; ++s) {
    MFunctor M = pick_functor(ws, cx, opt.M);
    MFunctor N = pick_functor(ws, cx, opt.N);
    MFunctor P = pick_functor(ws, cx, opt.P);
    verify_closed_monoidal_functorcat(rep, M, N, P);
    if (s == 0) {
      // Unit degenerate cases and pointwise coherence.
      MFunctor K = unit_functor(cx.I, cx.B);
      verify_closed_monoidal_functorcat(rep, K, N, P);
      verify_closed_monoidal_functorcat(rep, M, K, P);
      MFunctor Q = pick_functor(ws, cx, opt.M);
      verify_functorcat_coherence(rep, M, N, P, Q);
    }
  }
  return rep;
}

Report check_coherence_suite(Workspace& ws, const SuiteOptions& opt) {
  Report rep;
  auto B = ws.default_base();
  int64_t closure_max =
      B->kind() == BaseKind::finset ? std::min<int64_t>(opt.max_size, 3) : 2;
  suite_coherence(rep, *B, opt.max_size, closure_max);
  return rep;
}

}  // namespace

Report run_check(Workspace& ws, const std::string& suite, const SuiteOptions& opt) {
  if (suite == "coherence") return check_coherence_suite(ws, opt);
  if (suite == "module") return check_module(ws, opt);
  if (suite == "yoneda") return check_yoneda(ws, opt);
  if (suite == "density") return check_density(ws, opt);
  if (suite == "eval-adjunction") return check_eval_adjunction(ws, opt);
  if (suite == "kan") return check_kan(ws, opt);
  if (suite == "closed") return check_closed(ws, opt);
  throw input_error("unknown check suite '" + suite +
                    "' (expected coherence|module|yoneda|density|eval-adjunction|kan|closed)");
}

namespace {

std::string show_legs(const BaseCategory& B, const FinCat& I,
                      const std::vector<Mor>& legs, const char* what) {
  std::ostringstream os;
  os << what << ":\n";
  for (int i = 0; i < I.n_objects(); ++i)
    os << "  " << I.object_name(i) << ": " << B.show_mor(legs[i]) << "\n";
  return os.str();
}

}  // namespace

std::string run_compute(Workspace& ws, const std::string& what, const SuiteOptions& opt) {
  std::ostringstream os;
  if (what == "end") {
    const MFunctor& M = ws.functor(opt.M, "M");
    const MFunctor& N = ws.functor(opt.N, "N");
    Bifunctor H = homset_bifunctor(M, N);
    EndResult e = compute_end(H);
    os << "end carrier: " << e.carrier.size << "\n";
    if (ws.show_legs) os << show_legs(*H.base, *M.index, e.legs, "legs");
    return os.str();
  }
  if (what == "map") {
    const MFunctor& M = ws.functor(opt.M, "M");
    const MFunctor& N = ws.functor(opt.N, "N");
    MapResult r = map_functors(M, N);
    os << "map carrier: " << r.carrier.size << "\n";
    if (ws.show_legs) os << show_legs(*M.base, *M.index, r.end.legs, "legs");
    return os.str();
  }
  if (what == "coend") {
    const MFunctor& M = ws.functor(opt.M, "M");
    DensityResult d = density_data(M);
    os << "coend components:";
    for (int j = 0; j < M.index->n_objects(); ++j)
      os << " " << M.index->object_name(j) << "=" << d.coends[j].carrier.size;
    os << "\n";
    if (ws.show_legs)
      for (int j = 0; j < M.index->n_objects(); ++j)
        os << show_legs(*M.base, *M.index, d.coends[j].colegs,
                        ("colegs at " + M.index->object_name(j)).c_str());
    return os.str();
  }
  if (what == "kan-right") {
    const CatFunctor& phi = ws.cat_functor(opt.phi);
    const MFunctor& Y = ws.functor(opt.Y, "Y");
    KanRight kr = right_adjoint_of_precomposition(phi, Y);
    os << "kan right adjoint:";
    for (int j = 0; j < phi.target->n_objects(); ++j)
      os << " " << phi.target->object_name(j) << "=" << kr.G.at(j).size;
    os << "\n";
    return os.str();
  }
  if (what == "internal-hom") {
    const MFunctor& N = ws.functor(opt.N, "N");
    const MFunctor& P = ws.functor(opt.P, "P");
    ExponentFunctor e = internal_hom_functorcat(N, P);
    os << "internal hom:";
    for (int i = 0; i < N.index->n_objects(); ++i)
      os << " " << N.index->object_name(i) << "=" << e.F.at(i).size;
    os << "\n";
    return os.str();
  }
  throw input_error("unknown compute target '" + what +
                    "' (expected end|coend|map|kan-right|internal-hom)");
}

}  // namespace catv
