#include "io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace catv {

using nlohmann::json;

namespace {

void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                 const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw input_error(where + ": unknown key '" + it.key() + "'");
  }
}

json parse_text(const std::string& text, const std::string& origin) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error(origin + ": not well-formed JSON");
  if (!j.is_object() || j.size() != 1)
    throw input_error(origin + ": expected exactly one top-level entity key");
  return j;
}

FinCatInput parse_category(const json& c, const std::string& origin) {
  expect_keys(c, {"name", "objects", "morphisms", "composition"}, origin);
  FinCatInput in;
  in.name = c.value("name", origin);
  if (!c.contains("objects") || !c["objects"].is_array())
    throw input_error(origin + ": category needs an 'objects' list");
  for (const auto& o : c["objects"]) in.objects.push_back(o.get<std::string>());
  if (c.contains("morphisms"))
    for (const auto& m : c["morphisms"]) {
      expect_keys(m, {"name", "src", "dst"}, origin + "/morphisms");
      in.morphisms.push_back({m.at("name").get<std::string>(),
                              m.at("src").get<std::string>(),
                              m.at("dst").get<std::string>()});
    }
  if (c.contains("composition"))
    for (const auto& t : c["composition"]) {
      expect_keys(t, {"first", "then", "equals"}, origin + "/composition");
      in.composition.push_back({t.at("first").get<std::string>(),
                                t.at("then").get<std::string>(),
                                t.at("equals").get<std::string>()});
    }
  return in;
}

BaseSpec parse_base(const json& b, const std::string& origin) {
  if (b.is_string()) {
    if (b.get<std::string>() == "finset") return {BaseKind::finset, 2};
    throw input_error(origin + ": unknown base '" + b.get<std::string>() + "'");
  }
  if (b.is_object() && b.contains("finvect")) {
    expect_keys(b, {"finvect"}, origin);
    expect_keys(b["finvect"], {"p"}, origin + "/finvect");
    return {BaseKind::finvect, b["finvect"].at("p").get<int64_t>()};
  }
  throw input_error(origin + ": base must be \"finset\" or {\"finvect\":{\"p\":..}}");
}

// A morphism literal: flat integer list for finset, list of rows for
// finvect (dst rows x src columns, entries reduced mod p).
Mor parse_mor(const json& v, Obj src, Obj dst, const BaseSpec& spec,
              const std::string& where) {
  Mor m{src, dst, {}};
  if (spec.kind == BaseKind::finset) {
    if (!v.is_array()) throw input_error(where + ": finset morphism must be a list");
    for (const auto& x : v) {
      int64_t e = x.get<int64_t>();
      if (e < 0 || e >= dst.size) throw input_error(where + ": table entry out of range");
      m.data.push_back(e);
    }
    if (static_cast<int64_t>(m.data.size()) != src.size)
      throw input_error(where + ": table length does not match the source");
    return m;
  }
  if (!v.is_array() || static_cast<int64_t>(v.size()) != dst.size)
    throw input_error(where + ": matrix must list " + std::to_string(dst.size) + " rows");
  for (const auto& row : v) {
    if (!row.is_array() || static_cast<int64_t>(row.size()) != src.size)
      throw input_error(where + ": matrix rows must have " + std::to_string(src.size) +
                        " entries");
    for (const auto& x : row) {
      int64_t e = x.get<int64_t>();
      m.data.push_back(((e % spec.p) + spec.p) % spec.p);
    }
  }
  return m;
}

}  // namespace

std::shared_ptr<const BaseCategory> Workspace::base_for(const BaseSpec& spec) {
  auto key = std::make_pair(static_cast<int>(spec.kind),
                            spec.kind == BaseKind::finvect ? spec.p : 0);
  auto it = base_pool_.find(key);
  if (it != base_pool_.end()) return it->second;
  auto b = make_base(spec, caps);
  base_pool_[key] = b;
  return b;
}

void Workspace::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  load_string(ss.str(), path);
}

void Workspace::load_string(const std::string& text, const std::string& origin) {
  json j = parse_text(text, origin);

  if (j.contains("category")) {
    FinCatInput in = parse_category(j["category"], origin);
    auto c = std::make_shared<const FinCat>(FinCat::build(in, caps));
    if (categories.count(c->name()))
      throw input_error(origin + ": category '" + c->name() + "' already loaded");
    categories[c->name()] = c;
    return;
  }

  if (j.contains("functor")) {
    const json& f = j["functor"];
    expect_keys(f, {"name", "category", "base", "on_objects", "on_morphisms"}, origin);
    std::string name = f.value("name", origin);
    std::shared_ptr<const FinCat> I;
    if (f.at("category").is_string()) {
      I = category(f["category"].get<std::string>());
    } else {
      FinCatInput in = parse_category(f["category"], origin + "/category");
      I = std::make_shared<const FinCat>(FinCat::build(in, caps));
    }
    BaseSpec spec = parse_base(f.at("base"), origin);
    MFunctor M;
    M.index = I;
    M.base = base_for(spec);
    M.on_objects.resize(I->n_objects());
    const json& oo = f.at("on_objects");
    if (static_cast<int>(oo.size()) != I->n_objects())
      throw input_error(origin + ": on_objects must cover every object");
    for (auto it = oo.begin(); it != oo.end(); ++it) {
      int64_t s = it.value().get<int64_t>();
      if (s < 0) throw input_error(origin + ": sizes must be non-negative");
      M.on_objects[I->object_index(it.key())] = Obj{s};
    }
    M.on_morphisms.resize(I->n_morphisms());
    for (int i = 0; i < I->n_objects(); ++i)
      M.on_morphisms[I->identity_of(i)] = M.base->identity(M.at(i));
    const json& om = f.contains("on_morphisms") ? f["on_morphisms"] : json::object();
    int needed = I->n_morphisms() - I->n_objects();
    if (static_cast<int>(om.size()) != needed)
      throw input_error(origin + ": on_morphisms must cover every non-identity morphism");
    for (auto it = om.begin(); it != om.end(); ++it) {
      int fm = I->morphism_index(it.key());
      if (I->is_identity(fm))
        throw input_error(origin + ": identity values are implicit");
      M.on_morphisms[fm] = parse_mor(it.value(), M.at(I->src(fm)), M.at(I->dst(fm)), spec,
                                     origin + "/" + it.key());
    }
    if (functors.count(name))
      throw input_error(origin + ": functor '" + name + "' already loaded");
    functors[name] = std::move(M);
    return;
  }

  if (j.contains("cat_functor")) {
    const json& f = j["cat_functor"];
    expect_keys(f, {"name", "source", "target", "on_objects", "on_morphisms"}, origin);
    std::string name = f.value("name", origin);
    auto resolve = [&](const json& c, const char* role) -> std::shared_ptr<const FinCat> {
      if (c.is_string()) return category(c.get<std::string>());
      return std::make_shared<const FinCat>(
          FinCat::build(parse_category(c, origin + "/" + role), caps));
    };
    CatFunctor F;
    F.source = resolve(f.at("source"), "source");
    F.target = resolve(f.at("target"), "target");
    F.on_objects.resize(F.source->n_objects());
    const json& oo = f.at("on_objects");
    if (static_cast<int>(oo.size()) != F.source->n_objects())
      throw input_error(origin + ": on_objects must cover every object");
    for (auto it = oo.begin(); it != oo.end(); ++it)
      F.on_objects[F.source->object_index(it.key())] =
          F.target->object_index(it.value().get<std::string>());
    F.on_morphisms.resize(F.source->n_morphisms());
    for (int i = 0; i < F.source->n_objects(); ++i)
      F.on_morphisms[F.source->identity_of(i)] = F.target->identity_of(F.on_objects[i]);
    const json& om = f.contains("on_morphisms") ? f["on_morphisms"] : json::object();
    int needed = F.source->n_morphisms() - F.source->n_objects();
    if (static_cast<int>(om.size()) != needed)
      throw input_error(origin + ": on_morphisms must cover every non-identity morphism");
    for (auto it = om.begin(); it != om.end(); ++it) {
      int fm = F.source->morphism_index(it.key());
      F.on_morphisms[fm] = F.target->morphism_index(it.value().get<std::string>());
    }
    if (cat_functors.count(name))
      throw input_error(origin + ": cat_functor '" + name + "' already loaded");
    cat_functors[name] = std::move(F);
    return;
  }

  if (j.contains("nat_trans")) {
    const json& t = j["nat_trans"];
    expect_keys(t, {"name", "src", "dst", "components"}, origin);
    std::string name = t.value("name", origin);
    NamedNat nn;
    nn.src = t.at("src").get<std::string>();
    nn.dst = t.at("dst").get<std::string>();
    const MFunctor& M = functor(nn.src, "src");
    const MFunctor& N = functor(nn.dst, "dst");
    if (!M.base->same_as(*N.base) || !(*M.index == *N.index))
      throw input_error(origin + ": src and dst functors are not parallel");
    BaseSpec spec{M.base->kind(), M.base->prime() ? M.base->prime() : 2};
    const json& comp = t.at("components");
    if (static_cast<int>(comp.size()) != M.index->n_objects())
      throw input_error(origin + ": components must cover every object");
    nn.value.components.resize(M.index->n_objects());
    for (auto it = comp.begin(); it != comp.end(); ++it) {
      int i = M.index->object_index(it.key());
      nn.value.components[i] =
          parse_mor(it.value(), M.at(i), N.at(i), spec, origin + "/" + it.key());
    }
    if (nat_transes.count(name))
      throw input_error(origin + ": nat_trans '" + name + "' already loaded");
    nat_transes[name] = std::move(nn);
    return;
  }

  throw input_error(origin + ": unknown entity kind '" + j.begin().key() + "'");
}

Validation Workspace::validate_all() const {
  Validation all;
  auto collect = [&](const std::string& what, const Validation& v) {
    for (const auto& s : v.violations) all.violations.push_back(what + ": " + s);
  };
  for (const auto& [name, c] : categories) collect("category " + name, c->validate());
  for (const auto& [name, F] : cat_functors) collect("cat_functor " + name, F.validate());
  for (const auto& [name, M] : functors) collect("functor " + name, M.validate());
  for (const auto& [name, t] : nat_transes) {
    const MFunctor& M = functors.at(t.src);
    const MFunctor& N = functors.at(t.dst);
    collect("nat_trans " + name, validate_nat(M, N, t.value));
  }
  return all;
}

std::shared_ptr<const FinCat> Workspace::category(const std::string& name) {
  if (name.empty()) {
    if (categories.size() == 1) return categories.begin()->second;
    throw input_error(categories.empty() ? "no category loaded; pass a category file"
                                         : "several categories loaded; select one");
  }
  auto it = categories.find(name);
  if (it != categories.end()) return it->second;
  // Built-in fixtures.
  std::shared_ptr<const FinCat> fx;
  if (name == "terminal") fx = std::make_shared<const FinCat>(FinCat::terminal());
  if (name == "arrow") fx = std::make_shared<const FinCat>(FinCat::arrow());
  if (name == "idempotent")
    fx = std::make_shared<const FinCat>(FinCat::walking_idempotent());
  if (name == "square") fx = std::make_shared<const FinCat>(FinCat::commutative_square());
  if (name == "chain3") fx = std::make_shared<const FinCat>(FinCat::chain3());
  if (name == "empty") fx = std::make_shared<const FinCat>(FinCat::empty());
  if (fx) {
    categories[name] = fx;
    return fx;
  }
  throw input_error("unknown category '" + name + "'");
}

const MFunctor& Workspace::functor(const std::string& name, const char* role) const {
  if (name.empty()) {
    if (functors.size() == 1) return functors.begin()->second;
    throw input_error(std::string("select a functor for ") + role);
  }
  auto it = functors.find(name);
  if (it == functors.end()) throw input_error("unknown functor '" + name + "'");
  return it->second;
}

const CatFunctor& Workspace::cat_functor(const std::string& name) const {
  if (name.empty()) {
    if (cat_functors.size() == 1) return cat_functors.begin()->second;
    throw input_error("select a cat_functor (--phi)");
  }
  auto it = cat_functors.find(name);
  if (it == cat_functors.end()) throw input_error("unknown cat_functor '" + name + "'");
  return it->second;
}

}  // namespace catv
