#pragma once

#include "ehrhart_lab/constructions.hpp"
#include "ehrhart_lab/ehrhart.hpp"
#include "ehrhart_lab/geometry.hpp"
#include "ehrhart_lab/reflexive.hpp"

#include <json.hpp>

namespace ehrhart_lab {

// Insertion-ordered JSON so emitted documents have a stable key order.
using Json = nlohmann::ordered_json;

// {"vertices": [["x", "y"], ...]} with exact rational strings. Parsing
// accepts unreduced fractions and any vertex order; the result is canonical.
Json polygon_to_json(const RationalPolygon& p);
RationalPolygon polygon_from_json(const Json& j);

// {"period": D, "c0": [...], "c1": [...], "c2": [...]}, one entry per
// residue class, exact rational strings.
Json qp_to_json(const QuasiPolynomial& qp);
QuasiPolynomial qp_from_json(const Json& j);

// {"order": "paper-right-to-left", "letters": [{"a": ..., "b": ...}, ...]}.
// The serialized list puts the rightmost (first applied) letter last; the
// in-memory order is application order, so serialization reverses.
Json word_to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const Json& j);

Json matrix_to_json(const Mat2& m);
Json certificate_to_json(const ConstructionCertificate& c);
Json periods_to_json(const PeriodSequence& s, const IndexSequence& j);
Json indices_to_json(const IndexSequence& j);
Json pip_report_to_json(const PipReport& r);
Json reflexivity_to_json(const ReflexivityReport& r);
Json path_to_json(const PathReconstruction& p);
Json count_to_json(long n, long long count);

// Strict readers that rethrow malformed-document errors as InvalidParameter.
Json parse_json_text(const std::string& text);

} // namespace ehrhart_lab
