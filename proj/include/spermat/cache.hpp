#pragma once

#include "spermat/counting.hpp"
#include "spermat/graph_classes.hpp"

#include <string>

namespace spermat {

/// $SPERMAT_CACHE_DIR, or ./.spermat-cache when unset.
std::string cache_directory();

std::string class_table_cache_path(int n, const std::string& dir);

/// Loads the cached table for n when present and internally consistent;
/// otherwise enumerates and writes the cache. `force` skips the cache read.
ClassTable load_or_enumerate(int n, const EnumerateOptions& options = {}, bool force = false,
                             const std::string& dir = cache_directory());

/// The whole pipeline for one n: cached table -> q -> xi -> eta -> p.
/// Propagates InfeasibleSize from the enumeration limits.
CountReport cached_full_report(int n, const EnumerateOptions& options = {}, bool force = false,
                               const std::string& dir = cache_directory());

}  // namespace spermat
