#include "hughes/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace hughes {

using nlohmann::json;

json poly_to_json(const TriPoly& poly) {
    json terms = json::array();
    for (const auto& [ex, c] : poly.terms()) {
        terms.push_back({{"ex", ex.x}, {"ey", ex.y}, {"ez", ex.z}, {"c", c.index}});
    }
    return {{"p", poly.ctx().p()}, {"e", poly.ctx().params().e}, {"terms", std::move(terms)}};
}

TriPoly poly_from_json(const json& doc, FieldPtr field) {
    if (!doc.is_object() || !doc.contains("p") || !doc.contains("e") || !doc.contains("terms")) {
        throw std::invalid_argument("polynomial document needs p, e and terms");
    }
    if (doc.at("p").get<std::uint64_t>() != field->p() || doc.at("e").get<std::uint64_t>() != field->params().e) {
        throw std::invalid_argument("polynomial document is over a different field");
    }
    TriPoly out(field);
    for (const auto& term : doc.at("terms")) {
        const Exponents ex{term.at("ex").get<std::uint64_t>(), term.at("ey").get<std::uint64_t>(),
                           term.at("ez").get<std::uint64_t>()};
        const auto c = term.at("c").get<std::uint64_t>();
        if (c == 0 || c >= field->order()) throw std::invalid_argument("coefficient index out of range");
        if (out.coefficient(ex) != FieldCtx::zero()) throw std::invalid_argument("repeated monomial");
        out.add_term(ex, Elem{static_cast<std::uint32_t>(c)});
    }
    return out;
}

json report_to_json(const PtrReport& report) {
    json out = {{"pass", report.pass}};
    if (report.witness) out["witness"] = *report.witness;
    return out;
}

json reports_to_json(const std::vector<PtrReport>& reports) {
    json out = json::object();
    for (const auto& r : reports) out[r.label] = report_to_json(r);
    return out;
}

json identity_report_to_json(const IdentityReport& report) {
    json checks = json::object();
    for (const auto& c : report.checks) {
        json entry = {{"pass", c.pass}, {"instances", c.instances}};
        if (c.failure) entry["failure"] = *c.failure;
        checks[c.label] = std::move(entry);
    }
    return {{"p", report.p}, {"e", report.e}, {"identities", std::move(checks)}, {"pass", report.all_pass()}};
}

json section_report_to_json(const SectionReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"fixing", {e.first.index, e.second.index}}, {"delta", e.delta}, {"expected", e.expected}});
    }
    return {{"family", std::string(to_string(report.family))},
            {"entries", std::move(entries)},
            {"aggregate", {{"min_delta", report.min_delta}, {"max_delta", report.max_delta}, {"pass", report.pass}}}};
}

std::string format_poly(const TriPoly& poly) {
    if (poly.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto power = [&os](const char* var, std::uint64_t n, bool& wrote) {
        if (n == 0) return;
        if (wrote) os << '*';
        os << var;
        if (n > 1) os << '^' << n;
        wrote = true;
    };
    for (const auto& [ex, c] : poly.terms()) {
        if (!first) os << " + ";
        first = false;
        bool wrote = false;
        if (c.index != 1 || (ex.x == 0 && ex.y == 0 && ex.z == 0)) {
            os << c.index;
            wrote = true;
        }
        power("X", ex.x, wrote);
        power("Y", ex.y, wrote);
        power("Z", ex.z, wrote);
    }
    return os.str();
}

}  // namespace hughes
