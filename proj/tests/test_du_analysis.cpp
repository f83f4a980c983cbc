#include <doctest.h>

#include <algorithm>

#include "hughes/errors.hpp"
#include "hughes/du_analysis.hpp"
#include "hughes/hughes_core.hpp"

using namespace hughes;

namespace {

template <class Fn>
UnaryTable unary(const FieldCtx& F, Fn fn) {
    UnaryTable out;
    for (Elem x : F.enumerate_field()) out.push_back(fn(x));
    return out;
}

UnaryTable half_power(const FieldCtx& F) {
    return unary(F, [&](Elem x) { return F.pow(x, (static_cast<std::uint64_t>(F.order()) + 1) / 2); });
}

}  // namespace

TEST_CASE("uniformity") {
    const std::vector<Elem> f{Elem{0}, Elem{0}, Elem{1}, Elem{0}};
    CHECK(uniformity(f) == 3);
    const std::vector<Elem> perm{Elem{2}, Elem{0}, Elem{1}};
    CHECK(uniformity(perm) == 1);
    const std::vector<Elem> bad{Elem{5}};
    CHECK_THROWS_AS(uniformity(bad), ContractViolation);
}

TEST_CASE("difference operator") {
    const auto F = make_field(3, 1);
    const UnaryTable sq = unary(*F, [&](Elem x) { return F->mul(x, x); });
    CHECK_THROWS_AS(diff_op(*F, sq, FieldCtx::zero()), ContractViolation);
    const UnaryTable too_short(3);
    CHECK_THROWS_AS(diff_op(*F, too_short, FieldCtx::one()), ContractViolation);
    for (Elem a : F->enumerate_field()) {
        if (a == FieldCtx::zero()) continue;
        const UnaryTable d = diff_op(*F, sq, a);
        for (Elem x : F->enumerate_field()) {
            // (x + a)^2 - x^2 = 2ax + a^2
            REQUIRE(d[x.index] == F->add(F->mul(F->from_int(2), F->mul(a, x)), F->mul(a, a)));
        }
        const UnaryTable lin = diff_op(*F, unary(*F, [&](Elem x) { return F->mul(F->w(), x); }), a);
        for (Elem v : lin) REQUIRE(v == F->mul(F->w(), a));
    }
}

TEST_CASE("differential uniformity of basic functions") {
    for (auto [p, e] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{7, 1}}) {
        const auto F = make_field(p, e);
        const std::uint32_t Q = F->order();
        CAPTURE(Q);
        CHECK(du(*F, half_power(*F)).delta == (Q + 3) / 4);
        CHECK(du(*F, unary(*F, [&](Elem x) { return F->add(x, F->w()); })).delta == Q);
        CHECK(du(*F, unary(*F, [&](Elem x) { return F->mul(x, x); })).delta == 1);
        const DuProfile prof = du(*F, unary(*F, [&](Elem x) { return F->mul(x, x); }));
        CHECK(prof.row_max.size() == Q);
        CHECK(prof.row_max[0] == 0);
        CHECK(prof.max_direction == FieldCtx::one());
    }
    const auto F9 = make_field(3, 1);
    CHECK(du(*F9, half_power(*F9)).delta == 3);
    const auto F25 = make_field(5, 1);
    CHECK(du(*F25, half_power(*F25)).delta == 7);
}

TEST_CASE("differential uniformity is invariant under simple changes") {
    for (auto [p, e] : {std::pair{3, 1}, std::pair{5, 1}}) {
        const auto F = make_field(p, e);
        const FieldCtx& K = *F;
        const UnaryTable f = half_power(K);
        const std::uint32_t delta = du(K, f).delta;
        const Elem alpha = K.w(), beta = K.from_int(2), c = K.add(K.w(), K.one());
        // L(x) = alpha x^p + beta x is additive.
        const auto L = [&](Elem x) { return K.add(K.mul(alpha, K.pow(x, K.p())), K.mul(beta, x)); };
        CHECK(du(K, unary(K, [&](Elem x) { return K.add(f[x.index], L(x)); })).delta == delta);
        CHECK(du(K, unary(K, [&](Elem x) { return f[K.add(x, c).index]; })).delta == delta);
        CHECK(du(K, unary(K, [&](Elem x) { return K.mul(c, f[x.index]); })).delta == delta);
        CHECK(du(K, unary(K, [&](Elem x) { return K.add(f[x.index], c); })).delta == delta);
    }
}

TEST_CASE("difference of x^{(Q+1)/2} by square classes") {
    for (auto [p, e] : {std::pair{3, 1}, std::pair{5, 1}}) {
        const auto F = make_field(p, e);
        const FieldCtx& K = *F;
        const UnaryTable f = half_power(K);
        std::uint32_t best = 0;
        for (Elem a : K.enumerate_field()) {
            if (a == FieldCtx::zero()) continue;
            const UnaryTable d = diff_op(K, f, a);
            for (Elem x : K.enumerate_field()) {
                const bool x_sq = !K.is_nonsquare(x), xa_sq = !K.is_nonsquare(K.add(x, a));
                const Elem two_x = K.add(x, x);
                Elem expected;
                if (x_sq && xa_sq) expected = a;
                else if (!x_sq && xa_sq) expected = K.add(two_x, a);
                else if (x_sq) expected = K.neg(K.add(two_x, a));
                else expected = K.neg(a);
                REQUIRE(d[x.index] == expected);
            }
            const KSetCounts k = k_sets(K, a);
            best = std::max({best, k.k1, k.k4});
        }
        CHECK(best == du(K, f).delta);
        CHECK(best == (K.order() + 3) / 4);
    }
}

TEST_CASE("square-class partition counts") {
    const auto F = make_field(3, 2);
    CHECK_THROWS_AS(k_sets(*F, FieldCtx::zero()), ContractViolation);
    for (Elem a : F->enumerate_field()) {
        if (a == FieldCtx::zero()) continue;
        const KSetCounts k = k_sets(*F, a);
        CHECK(k.k1 + k.k2 + k.k3 + k.k4 == F->order());
        CHECK(k.strict_k1 + k.strict_k2 + k.strict_k3 + k.strict_k4 + k.boundary == F->order());
        CHECK(k.boundary == 2);
        // Each marginal counts the (Q + 1) / 2 squares, zero included.
        CHECK(k.k1 + k.k3 == (F->order() + 1) / 2);
        CHECK(k.k1 + k.k2 == (F->order() + 1) / 2);
    }
}

TEST_CASE("sections of the Hughes PTR") {
    const HughesPtr H(make_field(3, 1));
    const FieldCtx& F = H.ctx();
    const TernaryTable t = H.piecewise_table();

    const UnaryTable s = section(t, Section::x, F.w(), FieldCtx::one());
    for (Elem x : F.enumerate_field()) CHECK(s[x.index] == t.at(x, F.w(), FieldCtx::one()));
    CHECK(expected_section_delta(F, Section::x, F.w(), FieldCtx::zero()) == 3);
    CHECK(expected_section_delta(F, Section::x, FieldCtx::one(), FieldCtx::zero()) == 9);
    CHECK(expected_section_delta(F, Section::z, F.w(), FieldCtx::zero()) == 9);

    for (Section family : {Section::x, Section::y, Section::z}) {
        CAPTURE(to_string(family));
        const SectionReport r = du_sections(F, t, family);
        CHECK(r.entries.size() == 81);
        CHECK(r.pass);
        CHECK(r.max_delta == 9);
        CHECK(r.min_delta == (family == Section::x ? 3u : 9u));
        const SectionReport parallel = du_sections(F, t, family, std::nullopt, 3);
        for (std::size_t i = 0; i < r.entries.size(); ++i) CHECK(parallel.entries[i].delta == r.entries[i].delta);
    }
}

TEST_CASE("sampled sections are reproducible") {
    const HughesPtr H(make_field(5, 1));
    const TernaryTable t = H.piecewise_table();
    const SectionReport a = du_sections(H.ctx(), t, Section::x, SampleSpec{40, 7});
    const SectionReport b = du_sections(H.ctx(), t, Section::x, SampleSpec{40, 7}, 2);
    const SectionReport c = du_sections(H.ctx(), t, Section::x, SampleSpec{40, 8});
    REQUIRE(a.entries.size() == 40);
    CHECK(a.pass);
    bool same_as_other_seed = true;
    for (std::size_t i = 0; i < 40; ++i) {
        CHECK(a.entries[i].first == b.entries[i].first);
        CHECK(a.entries[i].second == b.entries[i].second);
        CHECK(a.entries[i].delta == b.entries[i].delta);
        same_as_other_seed = same_as_other_seed && a.entries[i].first == c.entries[i].first &&
                             a.entries[i].second == c.entries[i].second;
    }
    CHECK_FALSE(same_as_other_seed);
}

TEST_CASE("section names") {
    CHECK(parse_section("y") == Section::y);
    CHECK(to_string(Section::z) == "z");
    CHECK_THROWS_AS(parse_section("w"), std::invalid_argument);
}
