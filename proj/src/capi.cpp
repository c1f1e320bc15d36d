#include "catverify.h"

#include <charconv>
#include <string>

#include "suites.hpp"

using namespace catv;

struct catv_engine {
  Workspace ws;
  SuiteOptions opt;
  std::string report;
  std::string error;
};

namespace {

bool parse_int(const char* v, int64_t& out) {
  std::string s(v);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

catv_status guard(catv_engine* eng, const std::function<bool()>& body) {
  eng->error.clear();
  try {
    return body() ? CATV_OK : CATV_CHECK_FAILED;
  } catch (const resource_error& e) {
    eng->error = e.what();
    return CATV_RESOURCE_ERROR;
  } catch (const input_error& e) {
    eng->error = e.what();
    return CATV_INPUT_ERROR;
  } catch (const std::exception& e) {
    eng->error = e.what();
    return CATV_INPUT_ERROR;
  }
}

}  // namespace

extern "C" {

catv_engine* catv_engine_new(void) { return new catv_engine(); }

void catv_engine_free(catv_engine* eng) { delete eng; }

catv_status catv_set_option(catv_engine* eng, const char* key, const char* value) {
  if (!eng || !key || !value) return CATV_INPUT_ERROR;
  return guard(eng, [&] {
    std::string k(key), v(value);
    int64_t n = 0;
    if (k == "base") {
      if (v == "finset")
        eng->ws.base_spec.kind = BaseKind::finset;
      else if (v == "finvect")
        eng->ws.base_spec.kind = BaseKind::finvect;
      else
        throw input_error("base must be finset or finvect");
    } else if (k == "p") {
      if (!parse_int(value, n)) throw input_error("p must be an integer");
      eng->ws.base_spec.p = n;
      make_base(eng->ws.base_spec, eng->ws.caps);  // primality check
    } else if (k == "seed") {
      if (!parse_int(value, n) || n < 0) throw input_error("seed must be a non-negative integer");
      eng->ws.seed = static_cast<uint64_t>(n);
    } else if (k == "max-hom") {
      if (!parse_int(value, n) || n <= 0) throw input_error("max-hom must be positive");
      eng->ws.caps.max_hom = n;
    } else if (k == "max-elems") {
      if (!parse_int(value, n) || n <= 0) throw input_error("max-elems must be positive");
      eng->ws.caps.max_elems = n;
    } else if (k == "format") {
      if (v == "text")
        eng->ws.format = ReportFormat::text;
      else if (v == "records")
        eng->ws.format = ReportFormat::records;
      else
        throw input_error("format must be text or records");
    } else if (k == "legs") {
      eng->ws.show_legs = v == "1" || v == "true";
    } else if (k == "category") {
      eng->opt.category = v;
    } else if (k == "object") {
      eng->opt.object = v;
    } else if (k == "M") {
      eng->opt.M = v;
    } else if (k == "N") {
      eng->opt.N = v;
    } else if (k == "P") {
      eng->opt.P = v;
    } else if (k == "Y") {
      eng->opt.Y = v;
    } else if (k == "phi") {
      eng->opt.phi = v;
    } else if (k == "samples") {
      if (!parse_int(value, n) || n <= 0) throw input_error("samples must be positive");
      eng->opt.samples = static_cast<int>(n);
    } else if (k == "max-size") {
      if (!parse_int(value, n) || n < 0) throw input_error("max-size must be non-negative");
      eng->opt.max_size = n;
    } else {
      throw input_error("unknown option '" + k + "'");
    }
    return true;
  });
}

catv_status catv_load_file(catv_engine* eng, const char* path) {
  if (!eng || !path) return CATV_INPUT_ERROR;
  return guard(eng, [&] {
    eng->ws.load_file(path);
    return true;
  });
}

catv_status catv_load_string(catv_engine* eng, const char* text, const char* origin) {
  if (!eng || !text) return CATV_INPUT_ERROR;
  return guard(eng, [&] {
    eng->ws.load_string(text, origin ? origin : "<string>");
    return true;
  });
}

catv_status catv_validate(catv_engine* eng) {
  if (!eng) return CATV_INPUT_ERROR;
  return guard(eng, [&] {
    Validation v = eng->ws.validate_all();
    std::string out;
    for (const auto& s : v.violations) out += "violation " + s + "\n";
    size_t entities = eng->ws.categories.size() + eng->ws.cat_functors.size() +
                      eng->ws.functors.size() + eng->ws.nat_transes.size();
    out += std::to_string(entities) + " entities, " + std::to_string(v.violations.size()) +
           " violations\n";
    eng->report = out;
    return v.ok();
  });
}

catv_status catv_check(catv_engine* eng, const char* suite) {
  if (!eng || !suite) return CATV_INPUT_ERROR;
  return guard(eng, [&] {
    Report rep = run_check(eng->ws, suite, eng->opt);
    eng->report = rep.render(eng->ws.format);
    return rep.all_pass();
  });
}

catv_status catv_compute(catv_engine* eng, const char* what) {
  if (!eng || !what) return CATV_INPUT_ERROR;
  return guard(eng, [&] {
    eng->report = run_compute(eng->ws, what, eng->opt);
    return true;
  });
}

const char* catv_report(const catv_engine* eng) {
  return eng ? eng->report.c_str() : "";
}

const char* catv_last_error(const catv_engine* eng) {
  return eng ? eng->error.c_str() : "";
}

const char* catv_version(void) { return "0.1.0"; }

}  // extern "C"
