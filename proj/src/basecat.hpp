#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"

namespace catv {

enum class BaseKind { finset, finvect };

// An object of a base-category instance: a cardinality (finset) or a
// dimension over F_p (finvect).
struct Obj {
  int64_t size = 0;
  friend auto operator<=>(const Obj&, const Obj&) = default;
};

// A morphism. finset: a total function table of length |src| with values in
// [0,|dst|). finvect: a |dst| x |src| matrix over F_p, row-major.
struct Mor {
  Obj src, dst;
  std::vector<int64_t> data;
  friend auto operator<=>(const Mor&, const Mor&) = default;
};

struct ProductResult {
  Obj carrier;
  std::vector<Mor> projections;
};

struct CoproductResult {
  Obj carrier;
  std::vector<Mor> injections;
};

// `aux` carries the data factor() needs: finset equalizer keeps the selected
// indices implicitly in `include`; finvect equalizer stores the free-column
// positions of the canonical kernel basis; finset coequalizer stores class
// representatives; finvect coequalizer stores the non-pivot coordinates.
struct EqualizerResult {
  Obj carrier;
  Mor include;  // carrier -> src(f)
  Mor lhs, rhs;
  std::vector<int64_t> aux;
};

struct CoequalizerResult {
  Obj carrier;
  Mor project;  // dst(f) -> carrier
  Mor lhs, rhs;
  std::vector<int64_t> aux;
};

// A bicomplete symmetric monoidal closed category at finite scale. Two exact
// instances ship: finite sets with cartesian product, and finite-dimensional
// F_p vector spaces with the Kronecker tensor. Pair encodings are row-major,
// which makes the associator and unitors identity permutations; the braiding
// is a genuine permutation.
class BaseCategory {
 public:
  explicit BaseCategory(Caps caps) : caps_(caps) {}
  virtual ~BaseCategory() = default;

  virtual BaseKind kind() const = 0;
  virtual int64_t prime() const { return 0; }  // finvect only
  virtual std::string name() const = 0;

  bool same_as(const BaseCategory& o) const {
    return kind() == o.kind() && prime() == o.prime();
  }
  const Caps& caps() const { return caps_; }

  virtual Mor identity(Obj a) const = 0;
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;  // g ∘ f

  virtual Obj unit() const = 0;
  virtual Obj tensor_obj(Obj a, Obj b) const = 0;
  virtual Mor tensor_mor(const Mor& f, const Mor& g) const = 0;

  // Structural isomorphisms, as explicit tables/matrices.
  virtual Mor associator(Obj a, Obj b, Obj c) const;  // (a⊗b)⊗c -> a⊗(b⊗c)
  virtual Mor lunitor(Obj a) const;                   // k⊗a -> a
  virtual Mor runitor(Obj a) const;                   // a⊗k -> a
  virtual Mor braiding(Obj a, Obj b) const = 0;       // a⊗b -> b⊗a

  virtual Obj internal_hom(Obj b, Obj c) const = 0;
  virtual Mor curry(const Mor& f) const = 0;    // f: a⊗b→c given via shapes below
  virtual Mor uncurry(const Mor& g) const = 0;  // g: a→[b,c]
  virtual Mor eval_mor(Obj b, Obj c) const = 0;  // [b,c]⊗b -> c

  // curry/uncurry need the (a,b,c) split, which a bare Mor does not carry.
  // These entry points take it explicitly.
  virtual Mor curry_split(const Mor& f, Obj a, Obj b, Obj c) const = 0;
  virtual Mor uncurry_split(const Mor& g, Obj a, Obj b, Obj c) const = 0;

  virtual ProductResult product(std::span<const Obj> objs) const = 0;
  virtual Mor tuple(std::span<const Mor> legs, Obj common_src) const = 0;
  virtual CoproductResult coproduct(std::span<const Obj> objs) const = 0;
  virtual Mor cotuple(std::span<const Mor> legs, Obj common_dst) const = 0;

  virtual EqualizerResult equalizer(const Mor& f, const Mor& g) const = 0;
  virtual Mor equalizer_factor(const EqualizerResult& e, const Mor& leg) const = 0;
  virtual CoequalizerResult coequalizer(const Mor& f, const Mor& g) const = 0;
  virtual Mor coequalizer_factor(const CoequalizerResult& c, const Mor& leg) const = 0;

  // |hom(a,b)| as an exact count; throws resource_error past the hom cap.
  virtual int64_t hom_count(Obj a, Obj b) const = 0;
  virtual std::vector<Mor> hom_enumerate(Obj a, Obj b) const;
  virtual Mor hom_element(Obj a, Obj b, int64_t index) const = 0;
  virtual int64_t hom_index(const Mor& f) const = 0;

  virtual bool is_iso(const Mor& f) const = 0;
  virtual Mor inverse(const Mor& f) const = 0;

  // Object description for reports: cardinality or dimension.
  virtual std::string show_obj(Obj a) const = 0;
  std::string show_mor(const Mor& f) const;

 protected:
  void check_elems(int64_t n, const char* what) const;
  Caps caps_;
};

struct BaseSpec {
  BaseKind kind = BaseKind::finset;
  int64_t p = 2;
  friend bool operator==(const BaseSpec&, const BaseSpec&) = default;
};

// Factory; validates that p is prime for finvect.
std::shared_ptr<const BaseCategory> make_base(const BaseSpec& spec, const Caps& caps = {});

// Overflow-checked helpers used by both instances.
int64_t checked_mul(int64_t a, int64_t b, const char* what);
int64_t checked_pow(int64_t base, int64_t exp, int64_t cap, const char* what);

// Closed-structure combinators shared by every module downstream.
// [b,c] -> [b',c] induced by u: b' -> b.
Mor precompose_ih(const BaseCategory& B, const Mor& u, Obj c);
// [b,c] -> [b,c'] induced by v: c -> c'.
Mor postcompose_ih(const BaseCategory& B, Obj b, const Mor& v);
// The two directions of [k,m] ≅ m (strict under the row-major encoding,
// but built from eval/curry rather than assumed).
Mor hom_unit_out(const BaseCategory& B, Obj m);  // [k,m] -> m
Mor hom_unit_in(const BaseCategory& B, Obj m);   // m -> [k,m]

}  // namespace catv
