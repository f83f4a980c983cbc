#ifndef HUGHES_PTR_VERIFY_HPP
#define HUGHES_PTR_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hughes/function_table.hpp"
#include "hughes/trivar_poly.hpp"

namespace hughes {

/// Outcome of one exhaustive check. A failing report always carries the
/// lexicographically first counterexample (canonical indices).
struct PtrReport {
    std::string label;
    bool pass = true;
    std::optional<std::vector<std::uint32_t>> witness;
};

bool all_pass(const std::vector<PtrReport>& reports);

/// Axioms of a planar ternary ring, labelled "A".."E":
///   A  T(a,0,z) = T(0,b,z) = z                     witness (0|1, a or b, z)
///   B  T(x,1,0) = x and T(1,y,0) = y               witness (0|1, x or y)
///   C  a != c: unique x with T(x,a,b) = T(x,c,d)   witness (a, b, c, d)
///   D  unique z with T(a,b,z) = c                  witness (a, b, c)
///   E  a != c: (y,z) -> (T(a,y,z), T(c,y,z)) bijective   witness (a, b, c, d)
/// C and E cost O(Q^4); the outer index a is split across workers.
std::vector<PtrReport> check_axioms(const TernaryTable& t, unsigned workers = 1);

PtrReport check_axiom_a(const TernaryTable& t);
PtrReport check_axiom_b(const TernaryTable& t);
PtrReport check_axiom_c(const TernaryTable& t, unsigned workers = 1);
PtrReport check_axiom_d(const TernaryTable& t);
PtrReport check_axiom_e(const TernaryTable& t, unsigned workers = 1);

/// Bijectivity of the three section families, labelled "X", "Y", "Z":
///   X  T(., y, z) for y != 0      witness (y, z)
///   Y  T(x, ., z) for x != 0      witness (x, z)
///   Z  T(x, y, .) for all (x, y)  witness (x, y)
std::vector<PtrReport> check_pp_classes(const TernaryTable& t);
/// Same, on the function induced by a reduced polynomial.
std::vector<PtrReport> check_pp_classes(const TriPoly& reduced_t, unsigned workers = 1);

/// Pointwise comparison; witness is the first (x, y, z) that differs.
PtrReport compare_tables(const std::string& label, const TernaryTable& lhs, const TernaryTable& rhs);

/// Projective plane coordinatized by a PTR.
///
/// Points: affine (x, y) with id x*Q + y, slope points (m) with id Q^2 + m, and the
/// point at infinity with id Q^2 + Q. Lines: [m, k] = {(x, T(x, m, k))} u {(m)} with
/// id m*Q + k, verticals [c] = {(c, y)} u {(inf)} with id Q^2 + c, and the line at
/// infinity with id Q^2 + Q.
struct IncidencePlane {
    std::uint32_t order = 0;
    std::uint32_t point_count = 0;
    std::uint32_t line_count = 0;
    /// Point ids on each line, sorted.
    std::vector<std::vector<std::uint32_t>> line_points;
    /// Line ids through each point, sorted.
    std::vector<std::vector<std::uint32_t>> point_lines;

    bool incident(std::uint32_t point, std::uint32_t line) const;
};

IncidencePlane build_plane(const TernaryTable& t);

/// Labels "counts", "points_on_lines", "lines_on_points", "two_points_one_line",
/// "two_lines_one_point". Witnesses are point or line id pairs.
std::vector<PtrReport> check_plane(const IncidencePlane& plane);

/// Number of sampled Desargues configurations (two triangles in perspective from a
/// point) whose three side intersections are not collinear. Zero on a Desarguesian
/// plane; deterministic for a fixed seed. Requires a plane that passed check_plane.
std::size_t desargues_violations(const IncidencePlane& plane, std::size_t samples, std::uint64_t seed);

}  // namespace hughes

#endif  // HUGHES_PTR_VERIFY_HPP
