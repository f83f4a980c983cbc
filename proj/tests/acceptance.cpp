// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hughes/du_analysis.hpp"
#include "hughes/hughes_core.hpp"
#include "hughes/modcomb.hpp"
#include "hughes/ptr_verify.hpp"

using namespace hughes;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Accumulates sub-results; the first failure is kept as the detail.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && pass_) {
            pass_ = false;
            first_failure_ = what;
        }
    }
    Outcome outcome(const std::string& summary) const {
        return {pass_, pass_ ? summary : "first failure: " + first_failure_};
    }

private:
    bool pass_ = true;
    std::string first_failure_;
};

std::string q_label(std::uint32_t p, std::uint32_t e) {
    std::uint64_t Q = 1;
    for (std::uint32_t i = 0; i < 2 * e; ++i) Q *= p;
    return "Q=" + std::to_string(Q);
}

template <class Fn>
TernaryTable table_of(const FieldCtx& F, Fn fn) {
    return TernaryTable::from(F, fn);
}

Outcome oracle_equivalence() {
    Tally tally;
    for (auto [p, e] : {std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{3u, 2u}}) {
        const HughesPtr H(make_field(p, e));
        const PtrReport r = compare_tables("oracle", tabulate(H.build_reduced_T()), H.piecewise_table());
        tally.expect(r.pass, q_label(p, e));
    }
    return tally.outcome("Q in {9, 25, 49, 81}, every triple");
}

Outcome three_forms() {
    Tally tally;
    for (auto [p, e] : {std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{7u, 1u}}) {
        const HughesPtr H(make_field(p, e));
        const TriPoly reduced = H.build_reduced_T();
        tally.expect(poly_equal_reduced(reduce(H.build_nonreduced_T()), reduced), q_label(p, e) + " nonreduced");
        tally.expect(poly_equal_reduced(reduce(H.build_T2()), reduced), q_label(p, e) + " t2");
    }
    return tally.outcome("Q in {9, 25, 49}, coefficientwise");
}

Outcome axioms() {
    Tally tally;
    for (auto [p, e] : {std::pair{3u, 1u}, std::pair{5u, 1u}}) {
        const HughesPtr H(make_field(p, e));
        for (const auto& r : check_axioms(H.piecewise_table())) tally.expect(r.pass, q_label(p, e) + " axiom " + r.label);
    }
    // Each checker must reject a function built to break its axiom.
    const auto F = make_field(3, 1);
    const Elem two = F->from_int(2);
    const TernaryTable no_a = table_of(*F, [&](Elem x, Elem y, Elem) { return F->mul(x, y); });
    const TernaryTable no_b = table_of(*F, [&](Elem x, Elem y, Elem z) { return F->add(F->mul(two, F->mul(x, y)), z); });
    const TernaryTable no_ce =
        table_of(*F, [&](Elem x, Elem y, Elem z) { return F->add(F->mul(x, F->mul(y, y)), z); });
    const TernaryTable no_d = table_of(*F, [&](Elem x, Elem y, Elem z) { return F->add(F->mul(x, y), F->mul(z, z)); });
    tally.expect(!check_axiom_a(no_a).pass, "control A");
    tally.expect(!check_axiom_b(no_b).pass, "control B");
    tally.expect(!check_axiom_c(no_ce).pass, "control C");
    tally.expect(!check_axiom_d(no_d).pass, "control D");
    tally.expect(!check_axiom_e(no_ce).pass, "control E");
    return tally.outcome("Q in {9, 25}; five controls rejected");
}

Outcome pp_classes() {
    Tally tally;
    for (auto [p, e] : {std::pair{3u, 1u}, std::pair{5u, 1u}}) {
        const HughesPtr H(make_field(p, e));
        for (const auto& r : check_pp_classes(H.build_reduced_T())) tally.expect(r.pass, q_label(p, e) + " family " + r.label);
    }
    return tally.outcome("Q in {9, 25}, all three families");
}

Outcome differential_uniformity() {
    Tally tally;
    std::ostringstream summary;
    auto run = [&](std::uint32_t p, std::uint32_t e, std::optional<SampleSpec> sample, std::vector<Section> families) {
        const HughesPtr H(make_field(p, e));
        const FieldCtx& F = H.ctx();
        const TernaryTable t = tabulate(H.build_reduced_T());
        for (Section s : families) {
            const SectionReport r = du_sections(F, t, s, sample);
            tally.expect(r.pass, q_label(p, e) + " section " + std::string(to_string(s)));
            if (s == Section::x) {
                summary << q_label(p, e) << " x-delta " << r.min_delta << ".." << r.max_delta << "; ";
                // The (Q+3)/4 value must actually occur, not just be expected.
                bool saw = false;
                for (const auto& entry : r.entries) saw = saw || entry.delta == (F.order() + 3) / 4;
                tally.expect(saw, q_label(p, e) + " (Q+3)/4 attained");
            }
        }
    };
    run(3, 1, std::nullopt, {Section::x, Section::y, Section::z});
    run(5, 1, std::nullopt, {Section::x, Section::y, Section::z});
    run(7, 1, SampleSpec{100, 1}, {Section::x});
    summary << "exhaustive at 9, 25; 100 samples at 49";
    return tally.outcome(summary.str());
}

Outcome identities() {
    Tally tally;
    for (auto [p, e] : {std::pair{3u, 1u}, std::pair{3u, 2u}, std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{11u, 1u}}) {
        const IdentityReport report = identity_suite(p, e, IdentityBounds{60});
        for (const auto& c : report.checks) {
            tally.expect(c.pass, "p=" + std::to_string(p) + " e=" + std::to_string(e) + " " + c.label);
        }
    }
    return tally.outcome("5 fields; exact difference identity for n, k <= 60");
}

Outcome plane() {
    Tally tally;
    for (auto [p, e] : {std::pair{3u, 1u}, std::pair{5u, 1u}}) {
        const HughesPtr H(make_field(p, e));
        for (const auto& r : check_plane(build_plane(H.piecewise_table()))) {
            tally.expect(r.pass, q_label(p, e) + " " + r.label);
        }
    }
    return tally.outcome("Q in {9, 25}, incidence axioms exhaustive");
}

Outcome sparsity() {
    Tally tally;
    for (auto [p, e] : {std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{7u, 1u}}) {
        const HughesPtr H(make_field(p, e));
        const std::uint64_t q = H.ctx().q();
        for (Elem k : H.ctx().enumerate_field()) {
            const TriPoly phi = H.phi_poly(k);
            for (const auto& [ex, c] : phi.terms()) {
                const bool ok = ex.y == 0 && ex.z == 0 && ex.x / q <= (q - 1) / 2 && ex.x % q <= (q + 1) / 2;
                tally.expect(ok, q_label(p, e) + " k=" + std::to_string(k.index) + " exponent " + std::to_string(ex.x));
            }
        }
    }
    return tally.outcome("Q in {9, 25, 49}, every k");
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"oracle equivalence", oracle_equivalence},
        {"three-form identity", three_forms},
        {"PTR axioms", axioms},
        {"permutation classes", pp_classes},
        {"differential uniformity", differential_uniformity},
        {"identity suite", identities},
        {"plane construction", plane},
        {"structural sparsity", sparsity},
    };
    bool all = true;
    int n = 0;
    for (const auto& [name, fn] : criteria) {
        ++n;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::printf("[%s] %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", n, name, secs, o.detail.c_str());
    }
    std::printf("%s\n", all ? "all criteria pass" : "some criteria FAILED");
    return all ? 0 : 1;
}
