#include "hughes/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hughes/du_analysis.hpp"
#include "hughes/gf_tower.hpp"
#include "hughes/hughes_core.hpp"
#include "hughes/json_io.hpp"
#include "hughes/modcomb.hpp"
#include "hughes/ptr_verify.hpp"

namespace hughes {

namespace {

constexpr std::uint64_t kDefaultMaxOrder = 6561;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

FieldPtr field_for(const RunConfig& config, std::ostream& err) {
    if (config.p < 3 || !is_prime(config.p)) throw UsageError("p must be an odd prime");
    if (config.e < 1) throw UsageError("e must be a positive integer");
    if (config.max_order > kDefaultMaxOrder) {
        err << "warning: field ceiling raised to " << config.max_order << "; exhaustive checks may take long\n";
    }
    try {
        return make_field(config.p, config.e, config.max_order);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
    if (config.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + config.out_path);
    file << text;
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

// The constructions in factored form: t_q factors kept, inner X-polynomials expanded.
std::string render_text(const HughesPtr& ptr, PtrForm form) {
    const FieldCtx& F = ptr.ctx();
    const std::uint64_t q = F.q();
    const std::uint64_t Q = F.order();
    std::ostringstream os;
    os << "# q = " << q << ", Q = " << Q << ", coefficients are canonical element indices\n";
    os << "M(X,Y) = X*Y - " << F.half().index << "*t_" << (Q + 1) / 2 << "(X)*t_" << q << "(Y)\n";
    switch (form) {
        case PtrForm::reduced:
            os << "T(X,Y,Z) = M(X,Y) + Z - sum_{i=0}^{" << q - 2 << "} g_i(X)*t_" << q << "(Y)^(i+1)*t_" << q
               << "(Z)^(" << q << "-i-1)\n";
            for (std::uint32_t i = 0; i + 2 <= q; ++i) os << "g_" << i << "(X) = " << format_poly(ptr.g_poly(i)) << "\n";
            break;
        case PtrForm::t2:
            os << "T(X,Y,Z) = M(X,Y) + Z + t_" << q << "(X)*t_" << q << "(Y)*t_" << q << "(Z)*sum_{i=0}^{" << q - 2
               << "} h_i(X)*t_" << q << "(Y)^i*t_" << q << "(Z)^(" << q << "-i-2)\n";
            for (std::uint32_t i = 0; i + 2 <= q; ++i) os << "h_" << i << "(X) = " << format_poly(ptr.h_poly(i)) << "\n";
            break;
        case PtrForm::nonreduced:
            os << "T(X,Y,Z) = M(X,Y) + Z - " << F.half().index << "*sum_{m=1}^{" << (Q - 1) / 2
               << "} b_m*X^m*t_" << q << "(Y)^m*t_" << q << "(Z)^(" << Q << "-m)\n";
            for (std::uint64_t m = 1; m <= (Q - 1) / 2; ++m) {
                const Residue b = binom_mod_lucas((Q + 1) / 2, m, F.p());
                if (b.value != 0) os << "b_" << m << " = " << b.value << "\n";
            }
            break;
    }
    return os.str();
}

int run_gen(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const FieldPtr field = field_for(config, err);
    PtrForm form;
    try {
        form = parse_ptr_form(config.form);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    const HughesPtr ptr(field);
    if (config.format == "text") {
        emit(config, render_text(ptr, form), out);
    } else if (config.format == "json") {
        emit(config, dump(poly_to_json(ptr.build(form))), out);
    } else {
        throw UsageError("format must be json or text");
    }
    return kExitPass;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const FieldPtr field = field_for(config, err);
    const HughesPtr ptr(field);
    const TernaryTable oracle = ptr.piecewise_table(config.workers);
    const TernaryTable poly = tabulate(ptr.build_reduced_T(), config.workers);

    std::vector<PtrReport> reports;
    reports.push_back(compare_tables("oracle_equivalence", poly, oracle));
    for (auto& r : check_axioms(poly, config.workers)) reports.push_back(std::move(r));
    for (auto& r : check_pp_classes(poly)) {
        r.label = "pp_" + r.label;
        reports.push_back(std::move(r));
    }
    if (config.with_plane) {
        for (auto& r : check_plane(build_plane(poly))) {
            r.label = "plane_" + r.label;
            reports.push_back(std::move(r));
        }
    }
    const bool ok = all_pass(reports);
    nlohmann::json doc = {{"p", field->p()},
                          {"e", field->params().e},
                          {"Q", field->order()},
                          {"checks", reports_to_json(reports)},
                          {"pass", ok}};
    emit(config, dump(doc), out);
    return ok ? kExitPass : kExitVerificationFailure;
}

int run_du(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const FieldPtr field = field_for(config, err);
    const HughesPtr ptr(field);
    const TernaryTable t = tabulate(ptr.build_reduced_T(), config.workers);

    std::vector<Section> families;
    if (config.section.empty()) {
        families = {Section::x, Section::y, Section::z};
    } else {
        try {
            families = {parse_section(config.section)};
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
    }
    std::optional<SampleSpec> sample;
    if (!config.exhaustive) sample = SampleSpec{config.samples, config.seed};

    nlohmann::json sections = nlohmann::json::array();
    bool ok = true;
    for (Section s : families) {
        const SectionReport report = du_sections(*field, t, s, sample, config.workers);
        ok = ok && report.pass;
        sections.push_back(section_report_to_json(report));
    }
    nlohmann::json doc = {{"p", field->p()},
                          {"e", field->params().e},
                          {"Q", field->order()},
                          {"exhaustive", config.exhaustive},
                          {"sections", std::move(sections)},
                          {"pass", ok}};
    emit(config, dump(doc), out);
    return ok ? kExitPass : kExitVerificationFailure;
}

int run_plane(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const FieldPtr field = field_for(config, err);
    const HughesPtr ptr(field);
    const IncidencePlane plane = build_plane(tabulate(ptr.build_reduced_T(), config.workers));
    const auto reports = check_plane(plane);
    const bool ok = all_pass(reports);
    nlohmann::json doc = {{"p", field->p()},
                          {"e", field->params().e},
                          {"Q", field->order()},
                          {"points", plane.point_count},
                          {"lines", plane.line_count},
                          {"checks", reports_to_json(reports)},
                          {"pass", ok}};
    if (ok && config.desargues_samples > 0) {
        doc["desargues"] = {{"samples", config.desargues_samples},
                            {"seed", config.seed},
                            {"violations", desargues_violations(plane, config.desargues_samples, config.seed)}};
    }
    emit(config, dump(doc), out);
    return ok ? kExitPass : kExitVerificationFailure;
}

int run_identities(const RunConfig& config, std::ostream& out, std::ostream& err) {
    field_for(config, err);
    const IdentityReport report = identity_suite(static_cast<std::uint32_t>(config.p),
                                                 static_cast<std::uint32_t>(config.e), IdentityBounds{config.max_n});
    emit(config, dump(identity_report_to_json(report)), out);
    return report.all_pass() ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.workers == 0) throw UsageError("workers must be at least 1");
        if (config.subcommand == "gen") return run_gen(config, out, err);
        if (config.subcommand == "verify") return run_verify(config, out, err);
        if (config.subcommand == "du") return run_du(config, out, err);
        if (config.subcommand == "plane") return run_plane(config, out, err);
        if (config.subcommand == "identities") return run_identities(config, out, err);
        throw UsageError("unknown subcommand '" + config.subcommand + "'");
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hughes plane PTR polynomials: construction and exhaustive verification", "hughes"};
    app.require_subcommand(1);
    RunConfig config;

    auto field_options = [&config](CLI::App* sub) {
        sub->add_option("--p", config.p, "odd prime characteristic")->required();
        sub->add_option("--e", config.e, "q = p^e, Q = q^2")->required();
        sub->add_option("--max-order", config.max_order, "ceiling on Q = p^(2e)");
        sub->add_option("--workers", config.workers, "worker threads for exhaustive sweeps");
        sub->add_option("--out", config.out_path, "write output to FILE instead of stdout");
    };

    auto* gen = app.add_subcommand("gen", "emit a PTR polynomial");
    field_options(gen);
    gen->add_option("--form", config.form, "reduced | nonreduced | t2");
    gen->add_option("--format", config.format, "json | text");

    auto* verify = app.add_subcommand("verify", "check the PTR axioms, permutation classes and oracle agreement");
    field_options(verify);
    verify->add_flag("--plane", config.with_plane, "also build and check the projective plane");

    auto* du_cmd = app.add_subcommand("du", "differential uniformity of the section families");
    field_options(du_cmd);
    du_cmd->add_option("--section", config.section, "x | y | z (default: all)");
    du_cmd->add_flag("--exhaustive", config.exhaustive, "every fixing instead of a random sample");
    du_cmd->add_option("--samples", config.samples, "number of sampled fixings");
    du_cmd->add_option("--seed", config.seed, "sampling seed");

    auto* plane = app.add_subcommand("plane", "build the projective plane and check incidence axioms");
    field_options(plane);
    plane->add_option("--desargues-samples", config.desargues_samples, "sampled Desargues configurations");
    plane->add_option("--seed", config.seed, "sampling seed");

    auto* identities = app.add_subcommand("identities", "binomial and Catalan congruence suite");
    field_options(identities);
    identities->add_option("--max-n", config.max_n, "bound for the digit-product and exact difference checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }
    config.subcommand = app.get_subcommands().front()->get_name();
    return run(config, out, err);
}

}  // namespace hughes
