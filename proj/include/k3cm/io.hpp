#pragma once

/* JSON and plain-table rendering for the report types, plus strict parsing
   of input documents. Values that may exceed machine range (big integers,
   exact rationals, Witt coordinates) travel as decimal strings; parsing
   rejects unknown keys with their location. Emission always goes through
   dump_json so re-parsing and re-dumping an emitted document is
   byte-identical. */

#include <nlohmann/json.hpp>

#include <string>

#include "k3cm/crystal.hpp"
#include "k3cm/kummer.hpp"
#include "k3cm/predict.hpp"

namespace k3cm {

using Json = nlohmann::ordered_json;

// canonical serialization: two-space indent, trailing newline
std::string dump_json(const Json& j);

Json field_to_json(const CmFieldSpec& f);
Json place_to_json(const PlaceInvariants& v);
Json polygon_to_json(const NewtonPolygon& poly);
Json report_to_json(const ReductionReport& r);
Json validation_to_json(const ValidationRecord& v);
Json frob_report_to_json(const FrobReport& r);
Json crystal_to_json(const FCrystal& c, const FixedModule& fm,
                     const ArtinCokernelReport& artin);
Json finding_to_json(const TensorOrderFinding& f);

std::string render_table(const ReductionReport& r);
std::string render_table(const ValidationRecord& v);
std::string render_table(const FrobReport& r);
std::string render_table(const TensorOrderFinding& f);
std::string render_crystal_table(const FCrystal& c, const FixedModule& fm,
                                 const ArtinCokernelReport& artin);

// input documents; throw invalid_input naming the offending key or value
K3CmInput parse_input_document(const std::string& text);
FrobCharPoly parse_frob_document(const std::string& text);

// "c0, c1, ..." with exact rational entries
RationalPoly parse_poly_text(const std::string& text);

// "a,b,c,..." -> integers
std::vector<Int> parse_int_list(const std::string& text);

}  // namespace k3cm
