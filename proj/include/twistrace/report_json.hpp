#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "twistrace/char_table.hpp"
#include "twistrace/matrix_coeffs.hpp"
#include "twistrace/pgl2_report.hpp"
#include "twistrace/twisted_trace.hpp"

namespace twistrace {

// Insertion-ordered so that the emitted bytes depend only on the data.
using Json = nlohmann::ordered_json;

Json complex_json(Complex z);
Json bigint_json(const BigInt& v);
std::string format_tolerance(double tol);

// {"group", "classes": [{"rep", "size"}], "degrees", "rows": [[{"re", "im"}]]}
Json table_json(const CharacterTable& t);

// Rebuilds a table over `space` from table_json output. Throws Error when the
// document is malformed or its classes differ from `space`; does not verify
// orthogonality.
CharacterTable table_from_json(const Json& doc, std::shared_ptr<const ClassSpace> space);

Json twist_json(const TwistReport& r, const CharacterTable& t);
Json theorem1_json(const Theorem1Report& r, double tol);
Json prop2_json(const Prop2Report& r, double tol);
Json pgl2_json(const Pgl2Report& r, const Pgl2& g);

// Serialized with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace twistrace
