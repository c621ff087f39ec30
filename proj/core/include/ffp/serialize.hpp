#pragma once

// JSON forms of the library's value types. Rationals are "p/q" strings,
// partitions are descending integer arrays, set partitions are arrays of
// sorted 1-based blocks. Every *_from_json throws std::invalid_argument on
// malformed input.

#include "ffp/combinatorics.hpp"
#include "ffp/finfree.hpp"
#include "ffp/matrix.hpp"
#include "ffp/oracle.hpp"
#include "ffp/spectrum.hpp"
#include "ffp/symfunc.hpp"
#include "ffp/symgroup.hpp"
#include "ffp/weingarten.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace ffp {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
/// Accepts a "p/q" string or a JSON integer.
Rational rational_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json set_partition_to_json(const SetPartition& p);
SetPartition set_partition_from_json(const Json& j);

/// Array of rationals.
Json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);

/// {"d": 2, "a": ["1", "0", "-1"]}.
Json poly_to_json(const MonicPoly& p);
/// Ignores any fields other than "d" and "a"; checks that a has d+1 entries.
MonicPoly poly_from_json(const Json& j);

/// {"basis": "monomial", "k": 5, "terms": [{"partition": [...], "coeff": "..."}]}.
Json expansion_to_json(const SymExpansion& e);
SymExpansion expansion_from_json(const Json& j);

/// {"k": 2, "d": 3, "values": [{"cycle_type": [...], "rational": "..."}]}.
Json weingarten_to_json(const ClassFunction& wg, int d);
/// Returns the class function; the "d" field is left to the caller.
ClassFunction class_function_from_json(const Json& j);

/// Row-major array of rows of rational strings.
Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

/// {"k": 3, "values": {"2,1|1,1,1": 2, ...}}.
Json character_table_to_json(const CharacterTable& t);
CharacterTable character_table_from_json(const Json& j);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double x);
double parse_double(const std::string& text);

/// Means and standard errors as decimal strings, plus seed, sample count and chunk size.
Json mc_report_to_json(const McReport& r);
McReport mc_report_from_json(const Json& j);

/// Parses text as JSON, converting parser errors to std::invalid_argument.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace ffp
