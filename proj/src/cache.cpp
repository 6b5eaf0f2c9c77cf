#include "spermat/cache.hpp"

#include "spermat/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>

namespace spermat {

std::string cache_directory() {
    if (const char* env = std::getenv("SPERMAT_CACHE_DIR"); env && *env) return env;
    return ".spermat-cache";
}

std::string class_table_cache_path(int n, const std::string& dir) {
    return dir + "/classes-n" + std::to_string(n) + ".json";
}

ClassTable load_or_enumerate(int n, const EnumerateOptions& options, bool force,
                             const std::string& dir) {
    const std::string path = class_table_cache_path(n, dir);
    if (!force && std::filesystem::exists(path)) {
        try {
            ClassTable table = parse_class_table_json(read_file(path));
            if (table.n == n) return table;
            std::cerr << "warning: cache file " << path << " holds n=" << table.n
                      << "; regenerating\n";
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring unusable cache file " << path << ": " << e.what()
                      << "\n";
        }
    }
    ClassTable table = enumerate_classes(n, options);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) {
        try {
            write_file(path, to_json(table));
        } catch (const Error& e) {
            std::cerr << "warning: could not write cache file " << path << ": " << e.what()
                      << "\n";
        }
    }
    return table;
}

CountReport cached_full_report(int n, const EnumerateOptions& options, bool force,
                               const std::string& dir) {
    return full_report(load_or_enumerate(n, options, force, dir));
}

}  // namespace spermat
