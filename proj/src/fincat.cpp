#include "fincat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace catv {

namespace {
const std::string kIdPrefix = "id_";

bool has_id_prefix(const std::string& s) {
  return s.rfind(kIdPrefix, 0) == 0;
}
}  // namespace

FinCat FinCat::build(const FinCatInput& in, const Caps& caps) {
  FinCat c;
  c.name_ = in.name;
  c.caps_ = caps;
  if (static_cast<int64_t>(in.objects.size()) > caps.max_objects)
    throw resource_error("category '" + in.name + "' has " +
                         std::to_string(in.objects.size()) +
                         " objects, cap is " + std::to_string(caps.max_objects));
  if (static_cast<int64_t>(in.morphisms.size()) + static_cast<int64_t>(in.objects.size()) >
      caps.max_morphisms)
    throw resource_error("category '" + in.name + "' has " +
                         std::to_string(in.morphisms.size()) +
                         " morphisms, cap is " + std::to_string(caps.max_morphisms));

  std::map<std::string, int> obj_idx;
  for (const auto& o : in.objects) {
    if (obj_idx.count(o))
      throw input_error("duplicate object name '" + o + "'");
    obj_idx[o] = static_cast<int>(c.objects_.size());
    c.objects_.push_back(o);
  }

  // Identities first, then presentation order.
  std::map<std::string, int> mor_idx;
  for (int i = 0; i < c.n_objects(); ++i) {
    std::string nm = kIdPrefix + c.objects_[i];
    mor_idx[nm] = i;
    c.mor_names_.push_back(nm);
    c.mor_src_.push_back(i);
    c.mor_dst_.push_back(i);
  }
  for (const auto& m : in.morphisms) {
    if (has_id_prefix(m.name))
      throw input_error("morphism name '" + m.name + "' uses the reserved identity prefix");
    if (mor_idx.count(m.name))
      throw input_error("duplicate morphism name '" + m.name + "'");
    auto s = obj_idx.find(m.src);
    auto d = obj_idx.find(m.dst);
    if (s == obj_idx.end())
      throw input_error("morphism " + m.name + ": unknown source object '" + m.src + "'");
    if (d == obj_idx.end())
      throw input_error("morphism " + m.name + ": unknown target object '" + m.dst + "'");
    mor_idx[m.name] = static_cast<int>(c.mor_names_.size());
    c.mor_names_.push_back(m.name);
    c.mor_src_.push_back(s->second);
    c.mor_dst_.push_back(d->second);
  }

  for (const auto& t : in.composition) {
    auto f = mor_idx.find(t.first);
    auto g = mor_idx.find(t.then);
    auto e = mor_idx.find(t.equals);
    if (f == mor_idx.end())
      throw input_error("composition entry references unknown morphism '" + t.first + "'");
    if (g == mor_idx.end())
      throw input_error("composition entry references unknown morphism '" + t.then + "'");
    if (e == mor_idx.end())
      throw input_error("composition entry references unknown morphism '" + t.equals + "'");
    if (c.is_identity(f->second) || c.is_identity(g->second))
      throw input_error("composition entry (" + t.first + "," + t.then +
                        ") lists an identity; identity composites are implicit");
    auto key = std::make_pair(f->second, g->second);
    if (c.table_.count(key))
      throw input_error("duplicate composition entry for (" + t.first + "," + t.then + ")");
    c.table_[key] = e->second;
  }
  return c;
}

int FinCat::object_index(const std::string& name) const {
  for (int i = 0; i < n_objects(); ++i)
    if (objects_[i] == name) return i;
  throw input_error("unknown object '" + name + "' in category '" + name_ + "'");
}

int FinCat::morphism_index(const std::string& name) const {
  for (int m = 0; m < n_morphisms(); ++m)
    if (mor_names_[m] == name) return m;
  throw input_error("unknown morphism '" + name + "' in category '" + name_ + "'");
}

int FinCat::compose(int f, int g) const {
  if (dst(f) != src(g))
    throw input_error("compose: morphisms " + mor_names_[f] + " and " + mor_names_[g] +
                      " are not composable");
  if (is_identity(f)) return g;
  if (is_identity(g)) return f;
  auto it = table_.find({f, g});
  if (it == table_.end())
    throw input_error("composition table missing entry (" + mor_names_[f] + "," +
                      mor_names_[g] + ")");
  return it->second;
}

std::vector<int> FinCat::hom_set(int i, int j) const {
  std::vector<int> out;
  for (int m = 0; m < n_morphisms(); ++m)
    if (mor_src_[m] == i && mor_dst_[m] == j) out.push_back(m);
  return out;
}

Validation FinCat::validate() const {
  Validation v;
  // Table endpoints and totality on composable non-identity pairs.
  for (int f = n_objects(); f < n_morphisms(); ++f) {
    for (int g = n_objects(); g < n_morphisms(); ++g) {
      if (dst(f) != src(g)) {
        if (table_.count({f, g}))
          v.violations.push_back("composition entry (" + mor_names_[f] + "," + mor_names_[g] +
                                 ") is not a composable pair");
        continue;
      }
      auto it = table_.find({f, g});
      if (it == table_.end()) {
        v.violations.push_back("composition table missing entry for composable pair (" +
                               mor_names_[f] + "," + mor_names_[g] + ")");
        continue;
      }
      int e = it->second;
      if (src(e) != src(f) || dst(e) != dst(g))
        v.violations.push_back("composite of (" + mor_names_[f] + "," + mor_names_[g] +
                               ") is " + mor_names_[e] + " with mismatched endpoints");
    }
  }
  if (!v.violations.empty()) return v;  // associativity needs a well-formed table

  // Associativity on all composable non-identity triples.
  for (int f = n_objects(); f < n_morphisms(); ++f)
    for (int g = n_objects(); g < n_morphisms(); ++g) {
      if (dst(f) != src(g)) continue;
      for (int h = n_objects(); h < n_morphisms(); ++h) {
        if (dst(g) != src(h)) continue;
        int left = compose(compose(f, g), h);
        int right = compose(f, compose(g, h));
        if (left != right)
          v.violations.push_back("associativity fails on (" + mor_names_[f] + "," +
                                 mor_names_[g] + "," + mor_names_[h] + "): " +
                                 mor_names_[left] + " != " + mor_names_[right]);
      }
    }
  return v;
}

FinCat FinCat::opposite() const {
  FinCat op;
  op.name_ = name_;
  op.caps_ = caps_;
  op.objects_ = objects_;
  op.mor_names_ = mor_names_;
  op.mor_src_ = mor_dst_;
  op.mor_dst_ = mor_src_;
  for (const auto& [key, e] : table_) op.table_[{key.second, key.first}] = e;
  return op;
}

bool FinCat::operator==(const FinCat& o) const {
  return objects_ == o.objects_ && mor_names_ == o.mor_names_ && mor_src_ == o.mor_src_ &&
         mor_dst_ == o.mor_dst_ && table_ == o.table_;
}

FinCat FinCat::terminal() {
  FinCatInput in;
  in.name = "terminal";
  in.objects = {"x"};
  return build(in);
}

FinCat FinCat::arrow() {
  FinCatInput in;
  in.name = "arrow";
  in.objects = {"0", "1"};
  in.morphisms = {{"f", "0", "1"}};
  return build(in);
}

FinCat FinCat::walking_idempotent() {
  FinCatInput in;
  in.name = "idempotent";
  in.objects = {"x"};
  in.morphisms = {{"e", "x", "x"}};
  in.composition = {{"e", "e", "e"}};
  return build(in);
}

FinCat FinCat::commutative_square() {
  FinCatInput in;
  in.name = "square";
  in.objects = {"a", "b", "c", "d"};
  in.morphisms = {{"f", "a", "b"}, {"g", "a", "c"}, {"h", "b", "d"},
                  {"k", "c", "d"}, {"m", "a", "d"}};
  in.composition = {{"f", "h", "m"}, {"g", "k", "m"}};
  return build(in);
}

FinCat FinCat::empty() {
  FinCatInput in;
  in.name = "empty";
  return build(in);
}

FinCat FinCat::discrete(int n) {
  FinCatInput in;
  in.name = "discrete" + std::to_string(n);
  for (int i = 0; i < n; ++i) in.objects.push_back(std::to_string(i));
  return build(in);
}

FinCat FinCat::chain3() {
  FinCatInput in;
  in.name = "chain3";
  in.objects = {"0", "1", "2"};
  in.morphisms = {{"f", "0", "1"}, {"g", "1", "2"}, {"gf", "0", "2"}};
  in.composition = {{"f", "g", "gf"}};
  return build(in);
}

Validation CatFunctor::validate() const {
  Validation v;
  const FinCat& S = *source;
  const FinCat& T = *target;
  if (static_cast<int>(on_objects.size()) != S.n_objects() ||
      static_cast<int>(on_morphisms.size()) != S.n_morphisms())
    throw input_error("functor mapping is not total");
  for (int i = 0; i < S.n_objects(); ++i)
    if (on_objects[i] < 0 || on_objects[i] >= T.n_objects())
      throw input_error("functor maps object out of range");
  for (int m = 0; m < S.n_morphisms(); ++m) {
    int fm = on_morphisms[m];
    if (fm < 0 || fm >= T.n_morphisms())
      throw input_error("functor maps morphism out of range");
    if (T.src(fm) != on_objects[S.src(m)] || T.dst(fm) != on_objects[S.dst(m)])
      v.violations.push_back("endpoint mismatch on morphism " + S.morphism_name(m));
  }
  for (int i = 0; i < S.n_objects(); ++i)
    if (on_morphisms[S.identity_of(i)] != T.identity_of(on_objects[i]))
      v.violations.push_back("identity of " + S.object_name(i) + " not preserved");
  if (!v.violations.empty()) return v;
  for (int f = 0; f < S.n_morphisms(); ++f)
    for (int g = 0; g < S.n_morphisms(); ++g) {
      if (S.dst(f) != S.src(g)) continue;
      int lhs = on_morphisms[S.compose(f, g)];
      int rhs = T.compose(on_morphisms[f], on_morphisms[g]);
      if (lhs != rhs)
        v.violations.push_back("composition not preserved on (" + S.morphism_name(f) + "," +
                               S.morphism_name(g) + ")");
    }
  return v;
}

CatFunctor identity_functor(std::shared_ptr<const FinCat> c) {
  CatFunctor F;
  F.source = c;
  F.target = c;
  F.on_objects.resize(c->n_objects());
  for (int i = 0; i < c->n_objects(); ++i) F.on_objects[i] = i;
  F.on_morphisms.resize(c->n_morphisms());
  for (int m = 0; m < c->n_morphisms(); ++m) F.on_morphisms[m] = m;
  return F;
}

CatFunctor to_terminal(std::shared_ptr<const FinCat> c,
                       std::shared_ptr<const FinCat> term) {
  CatFunctor F;
  F.source = c;
  F.target = term;
  F.on_objects.assign(c->n_objects(), 0);
  F.on_morphisms.assign(c->n_morphisms(), term->identity_of(0));
  return F;
}

CatFunctor pick_object(std::shared_ptr<const FinCat> term,
                       std::shared_ptr<const FinCat> c, int obj) {
  CatFunctor F;
  F.source = term;
  F.target = c;
  F.on_objects = {obj};
  F.on_morphisms = {c->identity_of(obj)};
  return F;
}

}  // namespace catv
