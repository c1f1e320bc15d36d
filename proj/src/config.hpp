#pragma once

#include <cstdint>

namespace catv {

// Size limits shared by everything that enumerates or materializes tables.
// Exhaustive code paths check these before allocating.
struct Caps {
  int64_t max_objects = 64;       // category validation gate (associativity is cubic)
  int64_t max_morphisms = 512;
  int64_t max_elems = 1'000'000;  // largest carrier scanned element-wise
  int64_t max_hom = 1'000'000;    // largest hom-set / candidate family enumerated
};

enum class ReportFormat { text, records };

}  // namespace catv
