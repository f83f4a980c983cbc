#include "hughes/du_analysis.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "hughes/errors.hpp"
#include "hughes/parallel.hpp"

namespace hughes {

std::uint32_t uniformity(std::span<const Elem> f) {
    std::vector<std::uint32_t> fibre(f.size(), 0);
    std::uint32_t best = 0;
    for (Elem v : f) {
        if (v.index >= fibre.size()) throw ContractViolation("function value outside its domain size");
        best = std::max(best, ++fibre[v.index]);
    }
    return best;
}

UnaryTable diff_op(const FieldCtx& field, std::span<const Elem> f, Elem a) {
    if (a == FieldCtx::zero()) throw ContractViolation("difference operator needs a non-zero direction");
    if (f.size() != field.order()) throw ContractViolation("function table has the wrong length");
    UnaryTable out(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        out[x] = field.sub(f[field.add(Elem{x}, a).index], f[x]);
    }
    return out;
}

DuProfile du(const FieldCtx& field, std::span<const Elem> f) {
    const std::uint32_t Q = field.order();
    DuProfile profile;
    profile.row_max.assign(Q, 0);
    for (std::uint32_t a = 1; a < Q; ++a) {
        const std::uint32_t u = uniformity(diff_op(field, f, Elem{a}));
        profile.row_max[a] = u;
        if (u > profile.delta) {
            profile.delta = u;
            profile.max_direction = Elem{a};
        }
    }
    return profile;
}

Section parse_section(std::string_view name) {
    if (name == "x") return Section::x;
    if (name == "y") return Section::y;
    if (name == "z") return Section::z;
    throw std::invalid_argument("unknown section '" + std::string(name) + "'");
}

std::string_view to_string(Section s) {
    switch (s) {
        case Section::x: return "x";
        case Section::y: return "y";
        case Section::z: return "z";
    }
    return "?";
}

UnaryTable section(const TernaryTable& t, Section s, Elem first, Elem second) {
    const std::uint32_t Q = t.order();
    UnaryTable out(Q);
    for (std::uint32_t v = 0; v < Q; ++v) {
        switch (s) {
            case Section::x: out[v] = t.at(Elem{v}, first, second); break;
            case Section::y: out[v] = t.at(first, Elem{v}, second); break;
            case Section::z: out[v] = t.at(first, second, Elem{v}); break;
        }
    }
    return out;
}

std::uint32_t expected_section_delta(const FieldCtx& field, Section s, Elem first, Elem /*second*/) {
    if (s == Section::x && !field.in_subfield(first)) return (field.order() + 3) / 4;
    return field.order();
}

SectionReport du_sections(const FieldCtx& field, const TernaryTable& t, Section family,
                          std::optional<SampleSpec> sample, unsigned workers) {
    const std::uint32_t Q = field.order();
    SectionReport report;
    report.family = family;

    if (sample) {
        std::mt19937_64 rng(sample->seed);
        for (std::size_t i = 0; i < sample->count; ++i) {
            const auto u = static_cast<std::uint32_t>(rng() % Q);
            const auto v = static_cast<std::uint32_t>(rng() % Q);
            report.entries.push_back({Elem{u}, Elem{v}, 0, 0});
        }
    } else {
        report.entries.reserve(static_cast<std::size_t>(Q) * Q);
        for (std::uint32_t u = 0; u < Q; ++u) {
            for (std::uint32_t v = 0; v < Q; ++v) report.entries.push_back({Elem{u}, Elem{v}, 0, 0});
        }
    }

    parallel_for(report.entries.size(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto& entry = report.entries[i];
            entry.delta = du(field, section(t, family, entry.first, entry.second)).delta;
            entry.expected = expected_section_delta(field, family, entry.first, entry.second);
        }
    });

    if (!report.entries.empty()) report.min_delta = report.entries.front().delta;
    for (const auto& entry : report.entries) {
        report.min_delta = std::min(report.min_delta, entry.delta);
        report.max_delta = std::max(report.max_delta, entry.delta);
        if (entry.delta != entry.expected) report.pass = false;
    }
    return report;
}

KSetCounts k_sets(const FieldCtx& field, Elem a) {
    if (a == FieldCtx::zero()) throw ContractViolation("k_sets needs a non-zero shift");
    KSetCounts k;
    const Elem minus_a = field.neg(a);
    for (Elem x : field.enumerate_field()) {
        const bool x_sq = !field.is_nonsquare(x);
        const bool xa_sq = !field.is_nonsquare(field.add(x, a));
        std::uint32_t* loose = x_sq ? (xa_sq ? &k.k1 : &k.k3) : (xa_sq ? &k.k2 : &k.k4);
        ++*loose;
        if (x == FieldCtx::zero() || x == minus_a) {
            ++k.boundary;
            continue;
        }
        std::uint32_t* strict = x_sq ? (xa_sq ? &k.strict_k1 : &k.strict_k3) : (xa_sq ? &k.strict_k2 : &k.strict_k4);
        ++*strict;
    }
    return k;
}

}  // namespace hughes
