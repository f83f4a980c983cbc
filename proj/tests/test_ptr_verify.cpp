#include <doctest.h>

#include <set>

#include "hughes/hughes_core.hpp"
#include "hughes/ptr_verify.hpp"

using namespace hughes;

namespace {

template <class Fn>
TernaryTable table_of(const FieldCtx& F, Fn fn) {
    return TernaryTable::from(F, fn);
}

TernaryTable classical(const FieldCtx& F) {
    return table_of(F, [&](Elem x, Elem y, Elem z) { return F.add(F.mul(x, y), z); });
}

const PtrReport& find(const std::vector<PtrReport>& reports, const std::string& label) {
    for (const auto& r : reports) {
        if (r.label == label) return r;
    }
    throw std::runtime_error("missing report " + label);
}

std::uint32_t count_c(const TernaryTable& t, const std::vector<std::uint32_t>& w) {
    std::uint32_t n = 0;
    for (std::uint32_t x = 0; x < t.order(); ++x) n += t.at(Elem{x}, Elem{w[0]}, Elem{w[1]}) == t.at(Elem{x}, Elem{w[2]}, Elem{w[3]});
    return n;
}

std::uint32_t count_d(const TernaryTable& t, const std::vector<std::uint32_t>& w) {
    std::uint32_t n = 0;
    for (std::uint32_t z = 0; z < t.order(); ++z) n += t.at(Elem{w[0]}, Elem{w[1]}, Elem{z}) == Elem{w[2]};
    return n;
}

std::uint32_t count_e(const TernaryTable& t, const std::vector<std::uint32_t>& w) {
    std::uint32_t n = 0;
    for (std::uint32_t y = 0; y < t.order(); ++y) {
        for (std::uint32_t z = 0; z < t.order(); ++z) {
            n += t.at(Elem{w[0]}, Elem{y}, Elem{z}) == Elem{w[1]} && t.at(Elem{w[2]}, Elem{y}, Elem{z}) == Elem{w[3]};
        }
    }
    return n;
}

}  // namespace

TEST_CASE("the Hughes PTR and the classical PTR satisfy the axioms") {
    for (auto [p, e] : {std::pair{3, 1}, std::pair{5, 1}}) {
        const HughesPtr H(make_field(p, e));
        CAPTURE(H.ctx().order());
        const auto hughes_reports = check_axioms(H.piecewise_table());
        const auto classical_reports = check_axioms(classical(H.ctx()));
        REQUIRE(hughes_reports.size() == 5);
        for (const auto& r : hughes_reports) {
            CAPTURE(r.label);
            CHECK(r.pass);
            CHECK_FALSE(r.witness.has_value());
        }
        CHECK(all_pass(classical_reports));
    }
}

TEST_CASE("negative controls fail with the first witness") {
    const auto F = make_field(3, 1);
    const Elem two = F->from_int(2);

    const TernaryTable xy = table_of(*F, [&](Elem x, Elem y, Elem) { return F->mul(x, y); });
    const PtrReport a = check_axiom_a(xy);
    CHECK_FALSE(a.pass);
    CHECK(*a.witness == std::vector<std::uint32_t>{0, 0, 1});

    const TernaryTable doubled = table_of(*F, [&](Elem x, Elem y, Elem z) { return F->add(F->mul(two, F->mul(x, y)), z); });
    CHECK(check_axiom_a(doubled).pass);
    const PtrReport b = check_axiom_b(doubled);
    CHECK_FALSE(b.pass);
    CHECK(*b.witness == std::vector<std::uint32_t>{0, 1});

    const TernaryTable squared_y =
        table_of(*F, [&](Elem x, Elem y, Elem z) { return F->add(F->mul(x, F->mul(y, y)), z); });
    const PtrReport c = check_axiom_c(squared_y);
    const PtrReport e = check_axiom_e(squared_y);
    CHECK_FALSE(c.pass);
    CHECK_FALSE(e.pass);
    CHECK(count_c(squared_y, *c.witness) != 1);
    CHECK(count_e(squared_y, *e.witness) != 1);
    CHECK((*c.witness)[0] != (*c.witness)[2]);
    CHECK(check_axiom_d(squared_y).pass);

    const TernaryTable squared_z = table_of(*F, [&](Elem x, Elem y, Elem z) { return F->add(F->mul(x, y), F->mul(z, z)); });
    const PtrReport d = check_axiom_d(squared_z);
    CHECK_FALSE(d.pass);
    CHECK(*d.witness == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(count_d(squared_z, *d.witness) != 1);
}

TEST_CASE("witnesses are the lexicographically first failures") {
    const auto F = make_field(3, 1);
    const TernaryTable t =
        table_of(*F, [&](Elem x, Elem y, Elem z) { return F->add(F->mul(x, F->mul(y, y)), z); });
    const auto w = *check_axiom_c(t).witness;
    const std::uint32_t Q = t.order();
    for (std::uint32_t a = 0; a < Q; ++a) {
        for (std::uint32_t b = 0; b < Q; ++b) {
            for (std::uint32_t c = 0; c < Q; ++c) {
                if (c == a) continue;
                for (std::uint32_t d = 0; d < Q; ++d) {
                    const std::vector<std::uint32_t> cand{a, b, c, d};
                    if (cand == w) return;
                    REQUIRE(count_c(t, cand) == 1);
                }
            }
        }
    }
    FAIL("witness not reached");
}

TEST_CASE("results do not depend on the worker count") {
    const auto F = make_field(5, 1);
    const TernaryTable t =
        table_of(*F, [&](Elem x, Elem y, Elem z) { return F->add(F->mul(x, F->mul(y, y)), z); });
    const auto one = check_axioms(t, 1);
    const auto four = check_axioms(t, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].label == four[i].label);
        CHECK(one[i].pass == four[i].pass);
        CHECK(one[i].witness == four[i].witness);
    }
}

TEST_CASE("permutation polynomial classes") {
    const HughesPtr H(make_field(3, 1));
    const FieldCtx& F = H.ctx();
    const TernaryTable t = H.piecewise_table();
    CHECK(all_pass(check_pp_classes(t)));
    CHECK(all_pass(check_pp_classes(H.build_reduced_T(), 2)));
    CHECK_THROWS(check_pp_classes(H.build_nonreduced_T(), 1));

    // The excluded X-section y = 0 is constant, the excluded Y-section x = 0 too.
    for (Elem z : F.enumerate_field()) {
        std::set<std::uint32_t> xs, ys;
        for (Elem s : F.enumerate_field()) {
            xs.insert(t.at(s, FieldCtx::zero(), z).index);
            ys.insert(t.at(FieldCtx::zero(), s, z).index);
        }
        CHECK(xs.size() == 1);
        CHECK(ys.size() == 1);
    }

    const TernaryTable squared_y =
        table_of(F, [&](Elem x, Elem y, Elem z) { return F.add(F.mul(x, F.mul(y, y)), z); });
    const auto reports = check_pp_classes(squared_y);
    CHECK(find(reports, "X").pass);
    CHECK_FALSE(find(reports, "Y").pass);
    CHECK(*find(reports, "Y").witness == std::vector<std::uint32_t>{1, 0});
    CHECK(find(reports, "Z").pass);
}

TEST_CASE("table comparison") {
    const HughesPtr H(make_field(3, 1));
    const TernaryTable t = H.piecewise_table();
    CHECK(compare_tables("same", t, t).pass);
    const PtrReport r = compare_tables("vs classical", t, classical(H.ctx()));
    CHECK_FALSE(r.pass);
    const auto& w = *r.witness;
    CHECK(t.at(Elem{w[0]}, Elem{w[1]}, Elem{w[2]}) != classical(H.ctx()).at(Elem{w[0]}, Elem{w[1]}, Elem{w[2]}));
}

TEST_CASE("the projective plane of order 9") {
    const HughesPtr H(make_field(3, 1));
    const IncidencePlane plane = build_plane(H.piecewise_table());
    CHECK(plane.point_count == 91);
    CHECK(plane.line_count == 91);
    for (const auto& pts : plane.line_points) CHECK(pts.size() == 10);
    for (const auto& r : check_plane(plane)) {
        CAPTURE(r.label);
        CHECK(r.pass);
    }
    // (0, 0) lies on [0, 0], [c] for c = 0, and not on the line at infinity.
    CHECK(plane.incident(0, 0));
    CHECK(plane.incident(0, 81));
    CHECK_FALSE(plane.incident(0, 90));
    CHECK(plane.incident(90, 90));

    const IncidencePlane desarguesian = build_plane(classical(H.ctx()));
    CHECK(all_pass(check_plane(desarguesian)));
    CHECK(desargues_violations(desarguesian, 2000, 1) == 0);
    const std::size_t v = desargues_violations(plane, 2000, 1);
    CHECK(v > 0);
    CHECK(desargues_violations(plane, 2000, 1) == v);
}

TEST_CASE("a non-PTR gives a broken plane") {
    const auto F = make_field(3, 1);
    const TernaryTable t =
        table_of(*F, [&](Elem x, Elem y, Elem z) { return F->add(F->mul(x, F->mul(y, y)), z); });
    const auto reports = check_plane(build_plane(t));
    CHECK(find(reports, "counts").pass);
    CHECK(find(reports, "points_on_lines").pass);
    CHECK_FALSE(find(reports, "two_points_one_line").pass);
    CHECK_FALSE(all_pass(reports));
}
