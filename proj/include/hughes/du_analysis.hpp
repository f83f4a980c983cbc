#ifndef HUGHES_DU_ANALYSIS_HPP
#define HUGHES_DU_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hughes/function_table.hpp"
#include "hughes/gf_tower.hpp"

namespace hughes {

/// Largest fibre of f.
std::uint32_t uniformity(std::span<const Elem> f);

/// x -> f(x + a) - f(x). Throws ContractViolation for a = 0.
UnaryTable diff_op(const FieldCtx& field, std::span<const Elem> f, Elem a);

struct DuProfile {
    /// max over a != 0 of uniformity(diff_op(f, a)).
    std::uint32_t delta = 0;
    /// Least direction attaining delta.
    Elem max_direction;
    /// row_max[a] = uniformity(diff_op(f, a)) for a != 0; row_max[0] is unused and zero.
    std::vector<std::uint32_t> row_max;
};

/// Differential uniformity by exhaustive O(Q^2) enumeration.
DuProfile du(const FieldCtx& field, std::span<const Elem> f);

enum class Section { x, y, z };

Section parse_section(std::string_view name);
std::string_view to_string(Section s);

/// The univariate function obtained by freezing the two coordinates other than `s`.
/// For Section::x the frozen pair is (y, z), for y it is (x, z), for z it is (x, y).
UnaryTable section(const TernaryTable& t, Section s, Elem first, Elem second);

struct SectionDelta {
    Elem first;
    Elem second;
    std::uint32_t delta = 0;
    std::uint32_t expected = 0;
};

struct SectionReport {
    Section family = Section::x;
    std::vector<SectionDelta> entries;
    std::uint32_t min_delta = 0;
    std::uint32_t max_delta = 0;
    /// Every entry matched its expected value.
    bool pass = true;
};

/// Expected differential uniformity of a section of the Hughes PTR: (Q+3)/4 for an
/// X-section with y outside GF(q), Q for every other section.
std::uint32_t expected_section_delta(const FieldCtx& field, Section s, Elem first, Elem second);

struct SampleSpec {
    std::size_t count = 100;
    std::uint64_t seed = 1;
};

/// Differential uniformity of every section in a family (or of `sample->count` fixings
/// drawn with a fixed seed), each compared with expected_section_delta. Fixings are
/// split across workers and reported in canonical order.
SectionReport du_sections(const FieldCtx& field, const TernaryTable& t, Section family,
                          std::optional<SampleSpec> sample = std::nullopt, unsigned workers = 1);

/// Partition of GF(Q) by the square classes of x and x + a, for a != 0.
/// Here "square" includes zero, which is the class x^{(Q+1)/2} = x selects.
struct KSetCounts {
    std::uint32_t k1 = 0;  // x, x + a both squares
    std::uint32_t k2 = 0;  // x non-square, x + a square
    std::uint32_t k3 = 0;  // x square, x + a non-square
    std::uint32_t k4 = 0;  // x, x + a both non-squares
    /// The same classes restricted to x not in {0, -a}; strict_k1 + strict_k2 +
    /// strict_k3 + strict_k4 + boundary = Q.
    std::uint32_t strict_k1 = 0;
    std::uint32_t strict_k2 = 0;
    std::uint32_t strict_k3 = 0;
    std::uint32_t strict_k4 = 0;
    std::uint32_t boundary = 0;
};

KSetCounts k_sets(const FieldCtx& field, Elem a);

}  // namespace hughes

#endif  // HUGHES_DU_ANALYSIS_HPP
