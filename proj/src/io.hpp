#pragma once

#include <map>
#include <string>

#include "fincat.hpp"
#include "mfunctor.hpp"
#include "report.hpp"

namespace catv {

// A loaded, validated-by-shape natural transformation awaiting law checks.
struct NamedNat {
  std::string src, dst;  // functor names
  NatTrans value;
};

// Everything the tool layer works with: loaded entities addressed by name,
// plus the run configuration. Entity files are JSON with exactly one
// top-level key naming the kind; unknown keys are rejected everywhere.
class Workspace {
 public:
  Caps caps;
  uint64_t seed = 0;
  BaseSpec base_spec;
  ReportFormat format = ReportFormat::text;
  bool show_legs = false;

  std::map<std::string, std::shared_ptr<const FinCat>> categories;
  std::map<std::string, CatFunctor> cat_functors;
  std::map<std::string, MFunctor> functors;
  std::map<std::string, NamedNat> nat_transes;

  // Shared instances per (kind, p): functors loaded from files with the same
  // base selection share one object.
  std::shared_ptr<const BaseCategory> base_for(const BaseSpec& spec);
  std::shared_ptr<const BaseCategory> default_base() { return base_for(base_spec); }

  void load_file(const std::string& path);
  void load_string(const std::string& text, const std::string& origin);

  // Law checks for every loaded entity; structural problems have already
  // thrown input_error during load.
  Validation validate_all() const;

  // Name resolution with a built-in fixture fallback for categories
  // (terminal, arrow, idempotent, square, chain3, empty). An empty name
  // resolves only when exactly one entity of the kind is loaded.
  std::shared_ptr<const FinCat> category(const std::string& name);
  const MFunctor& functor(const std::string& name, const char* role) const;
  const CatFunctor& cat_functor(const std::string& name) const;

 private:
  std::map<std::pair<int, int64_t>, std::shared_ptr<const BaseCategory>> base_pool_;
};

}  // namespace catv
