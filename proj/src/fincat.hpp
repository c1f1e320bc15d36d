#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "errors.hpp"

namespace catv {

// Outcome of a law check: empty `violations` means the laws hold.
struct Validation {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Raw presentation as it appears in an input file. Identities are implicit;
// `composition` lists {first, then, equals} meaning equals = then ∘ first.
struct FinCatInput {
  std::string name;
  std::vector<std::string> objects;
  struct MorIn {
    std::string name, src, dst;
  };
  std::vector<MorIn> morphisms;
  struct CompIn {
    std::string first, then, equals;
  };
  std::vector<CompIn> composition;
};

// A finite category with a full composition table. Morphism indices
// [0, n_objects) are the synthesized identities, in object order; the
// remaining indices keep presentation order. That global order is the
// canonical order every downstream basis inherits.
class FinCat {
 public:
  // Structural problems (duplicate names, dangling references, reserved
  // prefix, duplicate table keys) throw input_error. Law violations do not;
  // they are reported by validate().
  static FinCat build(const FinCatInput& in, const Caps& caps = {});

  // Convenience builders for the standard fixtures used throughout.
  static FinCat terminal();
  static FinCat arrow();
  static FinCat walking_idempotent();
  static FinCat commutative_square();
  static FinCat empty();
  static FinCat discrete(int n);
  static FinCat chain3();  // 0 -f-> 1 -g-> 2 with composite gf

  const std::string& name() const { return name_; }
  int n_objects() const { return static_cast<int>(objects_.size()); }
  int n_morphisms() const { return static_cast<int>(mor_src_.size()); }

  const std::string& object_name(int i) const { return objects_[i]; }
  const std::string& morphism_name(int m) const { return mor_names_[m]; }
  int object_index(const std::string& name) const;    // throws input_error
  int morphism_index(const std::string& name) const;  // throws input_error

  int src(int m) const { return mor_src_[m]; }
  int dst(int m) const { return mor_dst_[m]; }
  bool is_identity(int m) const { return m < n_objects(); }
  int identity_of(int obj) const { return obj; }

  // g ∘ f, defined for every composable pair (identity cases synthesized).
  int compose(int f, int g) const;

  // Morphisms i → j in canonical order (identity first, then presentation
  // order). Unknown objects throw input_error at the name-based entry point.
  std::vector<int> hom_set(int i, int j) const;

  // Exhaustive law check: endpoints of table entries, totality,
  // associativity on all composable non-identity triples.
  Validation validate() const;

  FinCat opposite() const;

  bool operator==(const FinCat& other) const;

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<std::string> mor_names_;
  std::vector<int> mor_src_, mor_dst_;
  // (first, then) -> then∘first for non-identity pairs as given in the input.
  std::map<std::pair<int, int>, int> table_;
  Caps caps_;

  friend class FinCatBuilder;
};

// A functor between finite categories, with identities synthesized.
struct CatFunctor {
  std::shared_ptr<const FinCat> source, target;
  std::vector<int> on_objects;    // object index -> object index
  std::vector<int> on_morphisms;  // morphism index -> morphism index

  // Checks identity preservation, endpoint preservation and all composites.
  Validation validate() const;
};

// Builds the identity functor on c.
CatFunctor identity_functor(std::shared_ptr<const FinCat> c);

// The unique functor c -> terminal.
CatFunctor to_terminal(std::shared_ptr<const FinCat> c,
                       std::shared_ptr<const FinCat> term);

// terminal -> c picking the given object.
CatFunctor pick_object(std::shared_ptr<const FinCat> term,
                       std::shared_ptr<const FinCat> c, int obj);

}  // namespace catv
