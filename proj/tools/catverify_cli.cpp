// Command-line front end. Links only the C API.
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catverify.h"

namespace {

struct EngineDeleter {
  void operator()(catv_engine* e) const { catv_engine_free(e); }
};

int finish(catv_engine* eng, catv_status rc) {
  const char* rep = catv_report(eng);
  if (rep && *rep) std::fputs(rep, stdout);
  const char* err = catv_last_error(eng);
  if (err && *err) std::fprintf(stderr, "error: %s\n", err);
  return static_cast<int>(rc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catverify: exact checks of monoidal/functor-category identities "
               "over finite sets and F_p vector spaces"};
  app.require_subcommand(1);

  std::string base = "finset", format = "text";
  std::string p = "2", seed = "0", max_hom, max_elems;
  bool legs = false;
  app.add_option("--base", base, "base category: finset or finvect")
      ->envname("CATV_BASE");
  app.add_option("--p", p, "prime for finvect")->envname("CATV_P");
  app.add_option("--seed", seed, "sampling seed")->envname("CATV_SEED");
  app.add_option("--max-hom", max_hom, "hom enumeration cap")->envname("CATV_MAX_HOM");
  app.add_option("--max-elems", max_elems, "carrier size cap")->envname("CATV_MAX_ELEMS");
  app.add_option("--format", format, "report format: text or records")
      ->envname("CATV_FORMAT");
  app.add_flag("--legs", legs, "print universal-map legs from compute");

  std::vector<std::string> files;
  std::string suite, what;
  std::string category, object, M, N, P, Y, phi, samples, max_size;

  auto add_selection = [&](CLI::App* cmd) {
    cmd->fallthrough();  // global flags may follow the subcommand
    cmd->add_option("files", files, "entity files (JSON)");
    cmd->add_option("--category", category, "index category (name or built-in fixture)");
    cmd->add_option("--object,-i", object, "index object");
    cmd->add_option("--M", M, "functor selection");
    cmd->add_option("--N", N, "functor selection");
    cmd->add_option("--P", P, "functor selection");
    cmd->add_option("--Y", Y, "functor selection");
    cmd->add_option("--phi", phi, "category functor selection");
    cmd->add_option("--samples", samples, "sampled instances per suite");
    cmd->add_option("--max-size", max_size, "component size bound");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and law-check entity files");
  validate->add_option("files", files, "entity files (JSON)")->required();

  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  check
      ->add_option("suite", suite,
                   "coherence|module|yoneda|density|eval-adjunction|kan|closed")
      ->required();
  add_selection(check);

  CLI::App* compute = app.add_subcommand("compute", "compute a universal object");
  compute->add_option("what", what, "end|coend|map|kan-right|internal-hom")->required();
  add_selection(compute);

  CLI11_PARSE(app, argc, argv);

  std::unique_ptr<catv_engine, EngineDeleter> eng(catv_engine_new());

  auto set = [&](const char* key, const std::string& value) {
    if (value.empty()) return CATV_OK;
    return catv_set_option(eng.get(), key, value.c_str());
  };
  catv_status rc = CATV_OK;
  auto apply = [&](catv_status s) {
    if (rc == CATV_OK) rc = s;
  };
  apply(set("base", base));
  apply(set("p", p));
  apply(set("seed", seed));
  apply(set("max-hom", max_hom));
  apply(set("max-elems", max_elems));
  apply(set("format", format));
  apply(set("legs", legs ? "1" : "0"));
  apply(set("category", category));
  apply(set("object", object));
  apply(set("M", M));
  apply(set("N", N));
  apply(set("P", P));
  apply(set("Y", Y));
  apply(set("phi", phi));
  apply(set("samples", samples));
  apply(set("max-size", max_size));
  if (rc != CATV_OK) return finish(eng.get(), rc);

  for (const auto& f : files) {
    rc = catv_load_file(eng.get(), f.c_str());
    if (rc != CATV_OK) return finish(eng.get(), rc);
  }

  if (validate->parsed()) return finish(eng.get(), catv_validate(eng.get()));
  if (check->parsed()) return finish(eng.get(), catv_check(eng.get(), suite.c_str()));
  return finish(eng.get(), catv_compute(eng.get(), what.c_str()));
}
