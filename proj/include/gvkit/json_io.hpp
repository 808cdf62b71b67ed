// Bit-exact JSON serialization of the public types.  Rationals always
// travel as strings (normative: no reader's numeric precision may touch
// them); emit/parse round-trip exactly.
#pragma once

#include <string>

#include "json.hpp"

#include "gvkit/elem_series.hpp"
#include "gvkit/gv_transform.hpp"
#include "gvkit/structure_solver.hpp"

namespace gvkit {

// Ordered so that identical data always dumps to identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const QLaurent& p);
Json to_json(const TLaurent& p);
Json to_json(const ElemSeries& s);
Json to_json(const LocalBps& b);
Json to_json(const LocalReport& r);
Json to_json(const FanoSeries& f);
Json to_json(const PipelineReport& r);

// NovikovSeries and BpsTable share the table type; the schema differs only
// in the index key ("genus" vs "h") and its bound ("genus_max" vs "h_max").
Json series_to_json(const NovikovSeries& s);
Json bps_to_json(const BpsTable& t);

Rational rational_from_json(const Json& j);
QLaurent qlaurent_from_json(const Json& j);
TLaurent tlaurent_from_json(const Json& j);
ElemSeries elem_from_json(const Json& j);
LocalBps local_bps_from_json(const Json& j);
NovikovSeries series_from_json(const Json& j);
BpsTable bps_from_json(const Json& j);
FanoSeries fano_from_json(const Json& j);

// Machine-readable error object: {"error": {"kind": …, "message": …}}.
Json error_json(const Error& e);
Json error_json(const std::string& kind, const std::string& message);

// Canonical text form: two-space indent, trailing newline.
std::string dump_json(const Json& j);
// Parses text; malformed JSON raises SchemaError.
Json parse_json(const std::string& text);

}  // namespace gvkit
