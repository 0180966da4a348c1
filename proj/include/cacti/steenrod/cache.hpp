#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "cacti/steenrod/bockstein.hpp"

namespace cacti::steenrod {

class CacheError : public std::runtime_error {
public:
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic on-disk form of the Bockstein tables, keyed by (p, N) and
// guarded by a checksum. A cache hit deserializes to exactly the bytes a
// recomputation would write.
std::string serialize_tables(const BocksteinTables& tables);
BocksteinTables deserialize_tables(const std::string& text);

void save_tables(const BocksteinTables& tables, const std::string& path);
std::optional<BocksteinTables> load_tables(const std::string& path, int p, int N);

// builds the tables, consulting the cache file when given
BocksteinTables tables_for(int p, int N, const std::string& cache_path = "");

}  // namespace cacti::steenrod
