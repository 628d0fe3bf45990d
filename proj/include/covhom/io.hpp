#pragma once
#include <string>
#include <utility>

#include "covhom/arrangement.hpp"

namespace covhom {

// Document parsing. All of these throw Error(parse_error) on malformed input
// (with a line number when the JSON itself is broken) and the usual shape
// errors when the content is structurally wrong.

IntMatrix parse_int_matrix(const std::string& text);

// { "ring": "int" | "laurent", "ranks": [...], "boundaries": [...] }
std::string document_ring(const std::string& text);
IntComplex parse_int_complex(const std::string& text);
EquivariantComplex parse_laurent_complex(const std::string& text);

// { "lines": [[a, b, c], ...], "omega": [i, ...] }, entries integers or "p/q"
std::pair<LineArrangement, OmegaSubset> parse_arrangement(const std::string& text);

// Canonical serialized forms; emitting and re-parsing is the identity, and
// emitting a parsed document reproduces it byte for byte.
std::string to_document(const IntComplex& c);
std::string to_document(const EquivariantComplex& c);
std::string to_document(const LineArrangement& arr, const OmegaSubset& omega);

// Group grammar: "Z^r" (omitted when r = 0), torsion as "Z/d" with "(Z/d)^k"
// for repeated factors, all joined by " ⊕ "; "0" for the trivial group.
std::string render_group(const AbelianGroup& g);
std::string render_profile(const HomologyProfile& h);  // degree-ordered, comma separated

std::string render_report_text(const PipelineReport& rep);
std::string render_report_json(const PipelineReport& rep);
std::string render_arrangement_text(const ArrangementReport& rep);
std::string render_arrangement_json(const ArrangementReport& rep);

}  // namespace covhom
