#include "hughes/ptr_verify.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <random>

#include "hughes/errors.hpp"
#include "hughes/parallel.hpp"

namespace hughes {

namespace {

using Witness = std::vector<std::uint32_t>;

PtrReport pass(std::string label) { return PtrReport{std::move(label), true, std::nullopt}; }
PtrReport fail(std::string label, Witness w) { return PtrReport{std::move(label), false, std::move(w)}; }

// Per-a searches run in parallel; the lowest a with a witness wins.
template <class Search>
std::optional<Witness> first_over_a(std::uint32_t Q, unsigned workers, Search&& search) {
    std::vector<std::optional<Witness>> found(Q);
    parallel_for(Q, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t a = begin; a < end; ++a) {
            found[a] = search(static_cast<std::uint32_t>(a));
            if (found[a]) break;  // later a in this chunk cannot beat it
        }
    });
    for (auto& w : found) {
        if (w) return w;
    }
    return std::nullopt;
}

// First (b, c, d) in lexicographic order whose count differs from one; c == a is skipped.
std::optional<Witness> scan_counts(const std::vector<std::uint8_t>& counts, std::uint32_t Q, std::uint32_t a) {
    for (std::uint32_t b = 0; b < Q; ++b) {
        for (std::uint32_t c = 0; c < Q; ++c) {
            if (c == a) continue;
            for (std::uint32_t d = 0; d < Q; ++d) {
                if (counts[(static_cast<std::size_t>(c) * Q + b) * Q + d] != 1) return Witness{a, b, c, d};
            }
        }
    }
    return std::nullopt;
}

void bump(std::uint8_t& cell) {
    if (cell < 2) ++cell;
}

// First v in [0, Q) hit a number of times other than one by fn over [0, Q).
template <class Fn>
std::optional<std::uint32_t> first_non_bijective(std::uint32_t Q, Fn&& fn, std::vector<std::uint32_t>& scratch) {
    scratch.assign(Q, 0);
    for (std::uint32_t i = 0; i < Q; ++i) ++scratch[fn(i)];
    for (std::uint32_t v = 0; v < Q; ++v) {
        if (scratch[v] != 1) return v;
    }
    return std::nullopt;
}

}  // namespace

bool all_pass(const std::vector<PtrReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const PtrReport& r) { return r.pass; });
}

PtrReport check_axiom_a(const TernaryTable& t) {
    const std::uint32_t Q = t.order();
    for (std::uint32_t a = 0; a < Q; ++a) {
        for (std::uint32_t z = 0; z < Q; ++z) {
            if (t.at(Elem{a}, Elem{0}, Elem{z}) != Elem{z}) return fail("A", {0, a, z});
        }
    }
    for (std::uint32_t b = 0; b < Q; ++b) {
        for (std::uint32_t z = 0; z < Q; ++z) {
            if (t.at(Elem{0}, Elem{b}, Elem{z}) != Elem{z}) return fail("A", {1, b, z});
        }
    }
    return pass("A");
}

PtrReport check_axiom_b(const TernaryTable& t) {
    const std::uint32_t Q = t.order();
    for (std::uint32_t x = 0; x < Q; ++x) {
        if (t.at(Elem{x}, Elem{1}, Elem{0}) != Elem{x}) return fail("B", {0, x});
    }
    for (std::uint32_t y = 0; y < Q; ++y) {
        if (t.at(Elem{1}, Elem{y}, Elem{0}) != Elem{y}) return fail("B", {1, y});
    }
    return pass("B");
}

PtrReport check_axiom_c(const TernaryTable& t, unsigned workers) {
    const std::uint32_t Q = t.order();
    auto witness = first_over_a(Q, workers, [&](std::uint32_t a) -> std::optional<Witness> {
        std::vector<std::uint8_t> counts(static_cast<std::size_t>(Q) * Q * Q, 0);
        std::vector<std::int64_t> head(Q), next(Q);
        for (std::uint32_t c = 0; c < Q; ++c) {
            if (c == a) continue;
            for (std::uint32_t x = 0; x < Q; ++x) {
                // Bucket d by the value T(x, c, d).
                std::fill(head.begin(), head.end(), -1);
                for (std::uint32_t d = Q; d-- > 0;) {
                    const std::uint32_t v = t.at(Elem{x}, Elem{c}, Elem{d}).index;
                    next[d] = head[v];
                    head[v] = d;
                }
                for (std::uint32_t b = 0; b < Q; ++b) {
                    const std::uint32_t v = t.at(Elem{x}, Elem{a}, Elem{b}).index;
                    for (std::int64_t d = head[v]; d >= 0; d = next[d]) {
                        bump(counts[(static_cast<std::size_t>(c) * Q + b) * Q + static_cast<std::size_t>(d)]);
                    }
                }
            }
        }
        return scan_counts(counts, Q, a);
    });
    return witness ? fail("C", *witness) : pass("C");
}

PtrReport check_axiom_d(const TernaryTable& t) {
    const std::uint32_t Q = t.order();
    std::vector<std::uint32_t> scratch;
    for (std::uint32_t a = 0; a < Q; ++a) {
        for (std::uint32_t b = 0; b < Q; ++b) {
            const auto bad = first_non_bijective(
                Q, [&](std::uint32_t z) { return t.at(Elem{a}, Elem{b}, Elem{z}).index; }, scratch);
            if (bad) return fail("D", {a, b, *bad});
        }
    }
    return pass("D");
}

PtrReport check_axiom_e(const TernaryTable& t, unsigned workers) {
    const std::uint32_t Q = t.order();
    auto witness = first_over_a(Q, workers, [&](std::uint32_t a) -> std::optional<Witness> {
        std::vector<std::uint8_t> counts(static_cast<std::size_t>(Q) * Q * Q, 0);
        for (std::uint32_t c = 0; c < Q; ++c) {
            if (c == a) continue;
            for (std::uint32_t y = 0; y < Q; ++y) {
                for (std::uint32_t z = 0; z < Q; ++z) {
                    const std::uint32_t b = t.at(Elem{a}, Elem{y}, Elem{z}).index;
                    const std::uint32_t d = t.at(Elem{c}, Elem{y}, Elem{z}).index;
                    bump(counts[(static_cast<std::size_t>(c) * Q + b) * Q + d]);
                }
            }
        }
        return scan_counts(counts, Q, a);
    });
    return witness ? fail("E", *witness) : pass("E");
}

std::vector<PtrReport> check_axioms(const TernaryTable& t, unsigned workers) {
    return {check_axiom_a(t), check_axiom_b(t), check_axiom_c(t, workers), check_axiom_d(t),
            check_axiom_e(t, workers)};
}

std::vector<PtrReport> check_pp_classes(const TernaryTable& t) {
    const std::uint32_t Q = t.order();
    std::vector<std::uint32_t> scratch;
    std::vector<PtrReport> out;

    auto family = [&](const char* label, std::uint32_t first_start, auto&& value) {
        for (std::uint32_t u = first_start; u < Q; ++u) {
            for (std::uint32_t v = 0; v < Q; ++v) {
                if (first_non_bijective(Q, [&](std::uint32_t s) { return value(u, v, s); }, scratch)) {
                    out.push_back(fail(label, {u, v}));
                    return;
                }
            }
        }
        out.push_back(pass(label));
    };
    family("X", 1, [&](std::uint32_t y, std::uint32_t z, std::uint32_t x) { return t.at(Elem{x}, Elem{y}, Elem{z}).index; });
    family("Y", 1, [&](std::uint32_t x, std::uint32_t z, std::uint32_t y) { return t.at(Elem{x}, Elem{y}, Elem{z}).index; });
    family("Z", 0, [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) { return t.at(Elem{x}, Elem{y}, Elem{z}).index; });
    return out;
}

std::vector<PtrReport> check_pp_classes(const TriPoly& reduced_t, unsigned workers) {
    if (!reduced_t.is_reduced()) throw ContractViolation("check_pp_classes requires a reduced polynomial");
    return check_pp_classes(tabulate(reduced_t, workers));
}

PtrReport compare_tables(const std::string& label, const TernaryTable& lhs, const TernaryTable& rhs) {
    if (lhs.order() != rhs.order()) throw ContractViolation("tables over different fields");
    const std::uint32_t Q = lhs.order();
    for (std::uint32_t x = 0; x < Q; ++x) {
        for (std::uint32_t y = 0; y < Q; ++y) {
            for (std::uint32_t z = 0; z < Q; ++z) {
                if (lhs.at(Elem{x}, Elem{y}, Elem{z}) != rhs.at(Elem{x}, Elem{y}, Elem{z})) {
                    return fail(label, {x, y, z});
                }
            }
        }
    }
    return pass(label);
}

bool IncidencePlane::incident(std::uint32_t point, std::uint32_t line) const {
    const auto& pts = line_points.at(line);
    return std::binary_search(pts.begin(), pts.end(), point);
}

IncidencePlane build_plane(const TernaryTable& t) {
    const std::uint32_t Q = t.order();
    const std::uint32_t affine = Q * Q;
    const std::uint32_t infinity = affine + Q;

    IncidencePlane plane;
    plane.order = Q;
    plane.point_count = affine + Q + 1;
    plane.line_count = affine + Q + 1;
    plane.line_points.resize(plane.line_count);
    plane.point_lines.resize(plane.point_count);

    for (std::uint32_t m = 0; m < Q; ++m) {
        for (std::uint32_t k = 0; k < Q; ++k) {
            auto& pts = plane.line_points[m * Q + k];
            for (std::uint32_t x = 0; x < Q; ++x) pts.push_back(x * Q + t.at(Elem{x}, Elem{m}, Elem{k}).index);
            pts.push_back(affine + m);
        }
    }
    for (std::uint32_t c = 0; c < Q; ++c) {
        auto& pts = plane.line_points[affine + c];
        for (std::uint32_t y = 0; y < Q; ++y) pts.push_back(c * Q + y);
        pts.push_back(infinity);
    }
    auto& at_infinity = plane.line_points[infinity];
    for (std::uint32_t m = 0; m < Q; ++m) at_infinity.push_back(affine + m);
    at_infinity.push_back(infinity);

    for (std::uint32_t l = 0; l < plane.line_count; ++l) {
        auto& pts = plane.line_points[l];
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        for (auto pt : pts) plane.point_lines[pt].push_back(l);
    }
    return plane;
}

namespace {

// Every pair of distinct members must share exactly one block.
PtrReport check_pairs(const std::string& label, std::uint32_t members,
                      const std::vector<std::vector<std::uint32_t>>& blocks) {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(members) * members, 0);
    for (const auto& block : blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                bump(seen[static_cast<std::size_t>(block[i]) * members + block[j]]);
            }
        }
    }
    for (std::uint32_t i = 0; i < members; ++i) {
        for (std::uint32_t j = i + 1; j < members; ++j) {
            if (seen[static_cast<std::size_t>(i) * members + j] != 1) return fail(label, {i, j});
        }
    }
    return pass(label);
}

PtrReport check_sizes(const std::string& label, const std::vector<std::vector<std::uint32_t>>& blocks,
                      std::size_t expected) {
    for (std::uint32_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() != expected) return fail(label, {i, static_cast<std::uint32_t>(blocks[i].size())});
    }
    return pass(label);
}

}  // namespace

std::vector<PtrReport> check_plane(const IncidencePlane& plane) {
    const std::uint32_t Q = plane.order;
    const std::uint32_t n = Q * Q + Q + 1;
    std::vector<PtrReport> out;
    if (plane.point_count != n || plane.line_count != n || plane.line_points.size() != n ||
        plane.point_lines.size() != n) {
        out.push_back(fail("counts", {plane.point_count, plane.line_count}));
    } else {
        out.push_back(pass("counts"));
    }
    out.push_back(check_sizes("points_on_lines", plane.line_points, Q + 1));
    out.push_back(check_sizes("lines_on_points", plane.point_lines, Q + 1));
    out.push_back(check_pairs("two_points_one_line", plane.point_count, plane.line_points));
    out.push_back(check_pairs("two_lines_one_point", plane.line_count, plane.point_lines));
    return out;
}

namespace {

std::uint32_t common(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    if (out.size() != 1) throw ContractViolation("incidence structure is not a projective plane");
    return out.front();
}

}  // namespace

std::size_t desargues_violations(const IncidencePlane& plane, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    auto join = [&](std::uint32_t p, std::uint32_t r) { return common(plane.point_lines[p], plane.point_lines[r]); };
    auto meet = [&](std::uint32_t l, std::uint32_t m) { return common(plane.line_points[l], plane.line_points[m]); };

    std::size_t violations = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const auto centre = static_cast<std::uint32_t>(pick(plane.point_count));
        const auto& through = plane.point_lines[centre];
        std::array<std::uint32_t, 3> rays{};
        do {
            for (auto& r : rays) r = through[pick(through.size())];
        } while (rays[0] == rays[1] || rays[1] == rays[2] || rays[0] == rays[2]);

        std::array<std::uint32_t, 3> first{}, second{};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& pts = plane.line_points[rays[i]];
            do {
                first[i] = pts[pick(pts.size())];
                second[i] = pts[pick(pts.size())];
            } while (first[i] == centre || second[i] == centre || first[i] == second[i]);
        }
        const std::uint32_t p01 = meet(join(first[0], first[1]), join(second[0], second[1]));
        const std::uint32_t p12 = meet(join(first[1], first[2]), join(second[1], second[2]));
        const std::uint32_t p02 = meet(join(first[0], first[2]), join(second[0], second[2]));
        if (p01 != p12 && !plane.incident(p02, join(p01, p12))) ++violations;
    }
    return violations;
}

}  // namespace hughes
