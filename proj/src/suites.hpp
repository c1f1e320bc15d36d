#pragma once

#include "adjoint.hpp"
#include "io.hpp"

namespace catv {

// Selection and sampling knobs shared by check and compute dispatch.
struct SuiteOptions {
  std::string category;
  std::string object;  // index object for yoneda / eval-adjunction
  std::string M, N, P, Y, phi;
  int samples = 6;
  int64_t max_size = 3;
};

// Dispatches one of {coherence, module, yoneda, density, eval-adjunction,
// kan, closed}. Report lines are deterministic for a fixed seed.
Report run_check(Workspace& ws, const std::string& suite, const SuiteOptions& opt);

// Dispatches one of {end, coend, map, kan-right, internal-hom}; returns the
// printed object description.
std::string run_compute(Workspace& ws, const std::string& what, const SuiteOptions& opt);

// Base coherence sweep used by the coherence suite and the acceptance gate.
// Counts every checked identity into *identities when non-null.
void suite_coherence(Report& rep, const BaseCategory& B, int64_t max_size,
                     int64_t closure_max_size, int64_t* identities = nullptr);

}  // namespace catv
