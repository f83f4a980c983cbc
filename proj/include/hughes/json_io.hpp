#ifndef HUGHES_JSON_IO_HPP
#define HUGHES_JSON_IO_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "hughes/du_analysis.hpp"
#include "hughes/modcomb.hpp"
#include "hughes/ptr_verify.hpp"
#include "hughes/trivar_poly.hpp"

namespace hughes {

/// {"p":…, "e":…, "terms":[{"ex":i, "ey":j, "ez":k, "c":index}, …]} with terms in
/// lexicographic (i, j, k) order and c the canonical index of the coefficient.
nlohmann::json poly_to_json(const TriPoly& poly);
/// Inverse of poly_to_json; throws std::invalid_argument on malformed input, on a
/// zero or out-of-range coefficient, or on repeated exponents.
TriPoly poly_from_json(const nlohmann::json& doc, FieldPtr field);

/// {"pass": bool, "witness": [...]} with the witness omitted when absent.
nlohmann::json report_to_json(const PtrReport& report);
/// Object keyed by report label.
nlohmann::json reports_to_json(const std::vector<PtrReport>& reports);

nlohmann::json identity_report_to_json(const IdentityReport& report);
nlohmann::json section_report_to_json(const SectionReport& report);

/// Human-readable sum of monomials, e.g. "2*X^3*Y + Z". Coefficients print as canonical indices.
std::string format_poly(const TriPoly& poly);

}  // namespace hughes

#endif  // HUGHES_JSON_IO_HPP
