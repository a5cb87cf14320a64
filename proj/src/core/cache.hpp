#pragma once

#include <string>

#include "core/cohomology.hpp"
#include "core/group.hpp"

namespace projcoh {

std::string sha256_hex(const std::string& data);

// Cached presentation computations. cache_dir empty disables caching.
// Entries are content-addressed by a hash of (group table, modulus, kind);
// each file carries a self-integrity hash line, and loaded entries are
// re-verified (generators must be cocycles, coordinates must round-trip)
// before being trusted. Any failure falls back to recomputation and the
// entry is rewritten.
FinAbPresentation h2_zm_cached(const FiniteGroup& g, int64_t m,
                               const std::string& cache_dir);
FinAbPresentation schur_multiplier_cached(const FiniteGroup& g,
                                          const std::string& cache_dir);

} // namespace projcoh
