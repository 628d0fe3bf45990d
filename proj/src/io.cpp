#include "covhom/io.hpp"

#include <json.hpp>
#include <sstream>

namespace covhom {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { fail(errc::parse_error, msg); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    parse_fail("JSON error at line " + std::to_string(line) + ": " + e.what());
  }
}

Int int_from(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    Int out;
    if (mpz_set_str(out.get_mpz_t(), v.get<std::string>().c_str(), 10) != 0)
      parse_fail(where + ": '" + v.get<std::string>() + "' is not an integer");
    return out;
  }
  parse_fail(where + ": expected an integer or a decimal string");
}

Rational rational_from(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    Rational out;
    if (mpq_set_str(out.get_mpq_t(), v.get<std::string>().c_str(), 10) != 0)
      parse_fail(where + ": '" + v.get<std::string>() + "' is not a rational");
    if (out.get_den() == 0) parse_fail(where + ": zero denominator");
    out.canonicalize();
    return out;
  }
  parse_fail(where + ": expected an integer or a 'p/q' string");
}

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
  return json(v.get_str());
}

LaurentPoly laurent_from(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where + ": expected a list of [exponent, coefficient] pairs");
  LaurentPoly p;
  long prev_exp = 0;
  bool first = true;
  for (const json& pair : v) {
    if (!pair.is_array() || pair.size() != 2)
      parse_fail(where + ": each term must be an [exponent, coefficient] pair");
    if (!pair[0].is_number_integer()) parse_fail(where + ": exponent must be an integer");
    long exp = static_cast<long>(pair[0].get<long long>());
    if (!first && exp <= prev_exp) parse_fail(where + ": exponents must be strictly increasing");
    Int coeff = int_from(pair[1], where);
    if (coeff == 0) parse_fail(where + ": zero coefficients are not stored");
    p += LaurentPoly::monomial(coeff, exp);
    prev_exp = exp;
    first = false;
  }
  return p;
}

json laurent_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({json(e), int_to_json(c)}));
  return terms;
}

struct DocumentShape {
  std::string ring;
  std::vector<std::size_t> ranks;
  json boundaries;
};

DocumentShape complex_shape(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) parse_fail("complex document must be a JSON object");
  for (const char* key : {"ring", "ranks", "boundaries"})
    if (!doc.contains(key)) parse_fail(std::string("missing key '") + key + "'");
  DocumentShape shape;
  if (!doc["ring"].is_string()) parse_fail("'ring' must be \"int\" or \"laurent\"");
  shape.ring = doc["ring"].get<std::string>();
  if (shape.ring != "int" && shape.ring != "laurent")
    parse_fail("'ring' must be \"int\" or \"laurent\"");
  if (!doc["ranks"].is_array()) parse_fail("'ranks' must be a list");
  for (const json& r : doc["ranks"]) {
    if (!r.is_number_integer() || r.get<long long>() < 0)
      parse_fail("'ranks' entries must be nonnegative integers");
    shape.ranks.push_back(static_cast<std::size_t>(r.get<long long>()));
  }
  if (shape.ranks.empty()) parse_fail("'ranks' must list at least one degree");
  if (!doc["boundaries"].is_array()) parse_fail("'boundaries' must be a list of matrices");
  shape.boundaries = doc["boundaries"];
  return shape;
}

template <typename Matrix, typename EntryParser>
std::vector<Matrix> parse_boundaries(const DocumentShape& shape, EntryParser entry) {
  if (shape.boundaries.size() + 1 != shape.ranks.size())
    fail(errc::shape_mismatch,
         "expected " + std::to_string(shape.ranks.size() - 1) + " boundary maps, found " +
             std::to_string(shape.boundaries.size()));
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < shape.boundaries.size(); ++b) {
    const json& jm = shape.boundaries[b];
    const std::size_t rows = shape.ranks[b], cols = shape.ranks[b + 1];
    const std::string where = "boundary " + std::to_string(b + 1);
    if (!jm.is_array() || jm.size() != rows)
      fail(errc::shape_mismatch, where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!jm[i].is_array() || jm[i].size() != cols)
        fail(errc::shape_mismatch, where + ": row " + std::to_string(i) + " must have " +
                                       std::to_string(cols) + " entries");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(jm[i][j], where);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

IntMatrix parse_int_matrix(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_array()) parse_fail("matrix document must be a JSON array of rows");
  const std::size_t rows = doc.size();
  std::size_t cols = rows ? 0 : 0;
  if (rows && !doc[0].is_array()) parse_fail("matrix rows must be arrays");
  if (rows) cols = doc[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!doc[i].is_array() || doc[i].size() != cols)
      parse_fail("row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = int_from(doc[i][j], "matrix entry");
  }
  return m;
}

std::string document_ring(const std::string& text) { return complex_shape(text).ring; }

IntComplex parse_int_complex(const std::string& text) {
  DocumentShape shape = complex_shape(text);
  if (shape.ring != "int") parse_fail("expected an \"int\" complex document");
  IntComplex c;
  c.ranks = shape.ranks;
  c.boundaries = parse_boundaries<IntMatrix>(
      shape, [](const json& v, const std::string& where) { return int_from(v, where); });
  validate_int(c);
  return c;
}

EquivariantComplex parse_laurent_complex(const std::string& text) {
  DocumentShape shape = complex_shape(text);
  if (shape.ring != "laurent") parse_fail("expected a \"laurent\" complex document");
  EquivariantComplex c;
  c.ranks = shape.ranks;
  c.boundaries = parse_boundaries<LaurentMatrix>(
      shape, [](const json& v, const std::string& where) { return laurent_from(v, where); });
  validate_equivariant(c);
  return c;
}

std::pair<LineArrangement, OmegaSubset> parse_arrangement(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("lines") || !doc.contains("omega"))
    parse_fail("arrangement document needs 'lines' and 'omega'");
  if (!doc["lines"].is_array()) parse_fail("'lines' must be a list of [a, b, c] triples");
  std::vector<std::array<Rational, 3>> raw;
  for (const json& jl : doc["lines"]) {
    if (!jl.is_array() || jl.size() != 3) parse_fail("each line must be an [a, b, c] triple");
    raw.push_back({rational_from(jl[0], "line"), rational_from(jl[1], "line"),
                   rational_from(jl[2], "line")});
  }
  LineArrangement arr = make_arrangement(raw);
  OmegaSubset omega;
  if (!doc["omega"].is_array()) parse_fail("'omega' must be a list of line indices");
  for (const json& ji : doc["omega"]) {
    if (!ji.is_number_integer() || ji.get<long long>() < 0)
      parse_fail("'omega' entries must be nonnegative indices");
    std::size_t idx = static_cast<std::size_t>(ji.get<long long>());
    if (idx >= arr.lines.size())
      parse_fail("omega index " + std::to_string(idx) + " out of range");
    omega.indices.push_back(idx);
  }
  std::sort(omega.indices.begin(), omega.indices.end());
  omega.indices.erase(std::unique(omega.indices.begin(), omega.indices.end()),
                      omega.indices.end());
  return {std::move(arr), std::move(omega)};
}

namespace {

json ranks_json(const std::vector<std::size_t>& ranks) {
  json out = json::array();
  for (std::size_t r : ranks) out.push_back(r);
  return out;
}

template <typename Complex, typename EntryWriter>
std::string complex_document(const Complex& c, const char* ring, EntryWriter entry) {
  json doc;
  doc["ring"] = ring;
  doc["ranks"] = ranks_json(c.ranks);
  json bs = json::array();
  for (const auto& m : c.boundaries) {
    json jm = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry(m.at(i, j)));
      jm.push_back(std::move(row));
    }
    bs.push_back(std::move(jm));
  }
  doc["boundaries"] = std::move(bs);
  return doc.dump();
}

}  // namespace

std::string to_document(const IntComplex& c) {
  return complex_document(c, "int", [](const Int& v) { return int_to_json(v); });
}

std::string to_document(const EquivariantComplex& c) {
  return complex_document(c, "laurent", [](const LaurentPoly& p) { return laurent_to_json(p); });
}

std::string to_document(const LineArrangement& arr, const OmegaSubset& omega) {
  json doc;
  json lines = json::array();
  for (const auto& ln : arr.lines)
    lines.push_back(json::array({int_to_json(ln[0]), int_to_json(ln[1]), int_to_json(ln[2])}));
  doc["lines"] = std::move(lines);
  json om = json::array();
  for (std::size_t i : omega.indices) om.push_back(i);
  doc["omega"] = std::move(om);
  return doc.dump();
}

// ---------------------------------------------------------------------------
// rendering

std::string render_group(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::vector<std::string> parts;
  if (g.rank == 1) parts.push_back("Z");
  if (g.rank >= 2) parts.push_back("Z^" + std::to_string(g.rank));
  for (std::size_t i = 0; i < g.torsion.size();) {
    std::size_t j = i;
    while (j < g.torsion.size() && g.torsion[j] == g.torsion[i]) ++j;
    std::string factor = "Z/" + g.torsion[i].get_str();
    if (j - i > 1) factor = "(" + factor + ")^" + std::to_string(j - i);
    parts.push_back(std::move(factor));
    i = j;
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ⊕ ";
    out += parts[i];
  }
  return out;
}

std::string render_profile(const HomologyProfile& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ", ";
    out += render_group(h[i]);
  }
  return out;
}

namespace {

json group_json(const AbelianGroup& g) {
  json out;
  out["rank"] = g.rank;
  json tor = json::array();
  for (const Int& d : g.torsion) tor.push_back(int_to_json(d));
  out["torsion"] = std::move(tor);
  return out;
}

json profile_json(const HomologyProfile& h) {
  json out = json::array();
  for (const AbelianGroup& g : h) out.push_back(group_json(g));
  return out;
}

json report_json_value(const PipelineReport& rep) {
  json out;
  out["h_base"] = profile_json(rep.h_base);
  out["h_local"] = profile_json(rep.h_local);
  out["h_half"] = profile_json(rep.h_half);
  out["h_cover_formula"] =
      rep.h_cover_formula ? profile_json(*rep.h_cover_formula) : json(nullptr);
  out["h_cover_direct"] = profile_json(rep.h_cover_direct);
  out["non_minimal_residue"] = rep.non_minimal_residue;
  out["theorem_holds"] = rep.theorem_holds;
  out["corollary2_consistent"] = rep.corollary2_consistent;
  out["mod2_consistent"] = rep.mod2_consistent;
  return out;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_report_text(const PipelineReport& rep) {
  std::ostringstream out;
  out << "H_*(X, Z):                 " << render_profile(rep.h_base) << "\n";
  out << "H_*(X, L_omega):           " << render_profile(rep.h_local) << "\n";
  if (!rep.h_half.empty())
    out << "H_*(E, half boundary):     " << render_profile(rep.h_half) << "\n";
  if (rep.h_cover_formula)
    out << "H_*(X^omega, Z) formula:   " << render_profile(*rep.h_cover_formula) << "\n";
  out << "H_*(X^omega, Z) direct:    " << render_profile(rep.h_cover_direct) << "\n";
  if (rep.non_minimal_residue)
    out << "non_minimal_residue:       true (formula side unavailable)\n";
  else
    out << "theorem_holds:             " << yesno(rep.theorem_holds) << "\n";
  out << "corollary2_consistent:     " << yesno(rep.corollary2_consistent) << "\n";
  out << "mod2_consistent:           " << yesno(rep.mod2_consistent) << "\n";
  return out.str();
}

std::string render_report_json(const PipelineReport& rep) {
  return report_json_value(rep).dump(2) + "\n";
}

std::string render_arrangement_text(const ArrangementReport& rep) {
  std::ostringstream out;
  out << "chambers: " << rep.n_chambers << ", edges: " << rep.n_edges
      << ", vertices: " << rep.n_vertices << "\n";
  out << "combinatorial betti:       " << rep.betti[0] << " " << rep.betti[1] << " "
      << rep.betti[2] << "\n";
  out << "salvetti homology check:   " << (rep.betti_match ? "match" : "MISMATCH") << "\n";
  out << "reduced ranks:             ";
  for (std::size_t i = 0; i < rep.reduced_ranks.size(); ++i)
    out << (i ? " " : "") << rep.reduced_ranks[i];
  out << " (minimal: " << yesno(rep.minimal_reached) << ")\n";
  out << render_report_text(rep.report);
  return out.str();
}

std::string render_arrangement_json(const ArrangementReport& rep) {
  json out;
  out["chambers"] = rep.n_chambers;
  out["edges"] = rep.n_edges;
  out["vertices"] = rep.n_vertices;
  out["betti"] = json::array({rep.betti[0], rep.betti[1], rep.betti[2]});
  out["betti_match"] = rep.betti_match;
  out["reduced_ranks"] = ranks_json(rep.reduced_ranks);
  out["minimal_reached"] = rep.minimal_reached;
  out["report"] = report_json_value(rep.report);
  return out.dump(2) + "\n";
}

}  // namespace covhom
