#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "wfs/archetypes.hpp"

namespace wfs {

/// Payload of a table file, without the hash field.
nlohmann::json tables_payload(const DerivedTables& t);

/// "sha256:<hex>" of the canonical (sorted-key, compact) payload dump.
std::string content_hash(const nlohmann::json& payload);

/// Pretty-printed JSON document with a trailing "hash" field.
std::string format_tables(const DerivedTables& t);

/// Throws TableError ("derived tables missing/stale: ...") on empty input,
/// malformed documents or a hash mismatch.
DerivedTables parse_tables(std::string_view text);

/// The table text compiled into the library from data/tables/<kind>.json.
std::string_view checked_in_tables(SystemKind k);

}  // namespace wfs
