#pragma once

// JSON and CSV serialization.

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "eamod/modrep.hpp"
#include "eamod/symrep.hpp"
#include "eamod/variety.hpp"

namespace eamod {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldCtx& field);
/// FormatError on malformed input; the modulus must be irreducible.
FieldCtx field_from_json(const Json& j);

/// Ascending coefficient array of length m.
Json element_to_json(const FieldCtx& field, Fel a);
Fel element_from_json(const FieldCtx& field, const Json& j);
Json point_to_json(const FieldCtx& field, const Point& a);

/// eamod-v1 module document.
Json module_to_json(const EAModule& m);
/// Parses and validates an eamod-v1 document.
EAModule module_from_json(const Json& j);

/// Compact JSON plus a trailing newline.
std::string dump(const Json& j);

/// ParseFailure for unreadable JSON, FormatError for schema violations.
EAModule read_module_file(const std::string& path);
/// WriteFailure when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

Json report_to_json(const PointSetReport& r);
/// Header line plus one row per point: coords,type,free.
std::string report_to_csv(const PointSetReport& r);

Json rank_lemma_to_json(const SymContext& ctx, const FieldCtx& field, const RankLemmaReport& r);

}  // namespace eamod
