#ifndef HUGHES_TRIVAR_POLY_HPP
#define HUGHES_TRIVAR_POLY_HPP

#include <compare>
#include <cstdint>
#include <map>

#include "hughes/function_table.hpp"
#include "hughes/gf_tower.hpp"

namespace hughes {

/// Exponents of X, Y and Z in one monomial; ordered lexicographically by (x, y, z).
struct Exponents {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t z = 0;

    auto operator<=>(const Exponents&) const = default;
};

/// Sparse polynomial in X, Y, Z over GF(Q). Never stores a zero coefficient.
class TriPoly {
public:
    using Terms = std::map<Exponents, Elem>;

    explicit TriPoly(FieldPtr field);

    static TriPoly constant(FieldPtr field, Elem c);
    static TriPoly monomial(FieldPtr field, Exponents ex, Elem c);
    static TriPoly var_x(FieldPtr field) { return monomial(std::move(field), {1, 0, 0}, FieldCtx::one()); }
    static TriPoly var_y(FieldPtr field) { return monomial(std::move(field), {0, 1, 0}, FieldCtx::one()); }
    static TriPoly var_z(FieldPtr field) { return monomial(std::move(field), {0, 0, 1}, FieldCtx::one()); }

    const FieldPtr& field() const noexcept { return field_; }
    const FieldCtx& ctx() const noexcept { return *field_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// All exponents below Q.
    bool is_reduced() const noexcept;

    Elem coefficient(Exponents ex) const;
    /// Adds c to the coefficient of X^ex.x Y^ex.y Z^ex.z, dropping the term if it cancels.
    void add_term(Exponents ex, Elem c);

    TriPoly& operator+=(const TriPoly& rhs);
    TriPoly& operator-=(const TriPoly& rhs);

    friend TriPoly operator+(TriPoly lhs, const TriPoly& rhs) { return lhs += rhs; }
    friend TriPoly operator-(TriPoly lhs, const TriPoly& rhs) { return lhs -= rhs; }
    friend TriPoly operator*(const TriPoly& lhs, const TriPoly& rhs);
    TriPoly operator-() const;

    /// Structural equality: same field and identical term maps.
    friend bool operator==(const TriPoly& lhs, const TriPoly& rhs);

private:
    void require_same_field(const TriPoly& rhs) const;

    FieldPtr field_;
    Terms terms_;
};

TriPoly p_add(const TriPoly& a, const TriPoly& b);
TriPoly p_sub(const TriPoly& a, const TriPoly& b);
TriPoly p_mul(const TriPoly& a, const TriPoly& b);
TriPoly p_scale(const TriPoly& a, Elem c);
/// Repeated squaring; p_pow(P, 0) = 1.
TriPoly p_pow(const TriPoly& a, std::uint64_t n);

/// Folds each exponent n >= Q to ((n - 1) mod (Q - 1)) + 1 and merges colliding terms.
/// The result induces the same function on GF(Q)^3.
TriPoly reduce(const TriPoly& a);
std::uint64_t reduce_exponent(std::uint64_t n, std::uint32_t Q) noexcept;

Elem evaluate(const TriPoly& a, Elem x, Elem y, Elem z);

/// Term-by-term equality of reduced polynomials; throws ContractViolation on unreduced input.
bool poly_equal_reduced(const TriPoly& a, const TriPoly& b);

struct DegreeProfile {
    std::uint64_t deg_x = 0;
    std::uint64_t deg_y = 0;
    std::uint64_t deg_z = 0;
    std::size_t term_count = 0;

    bool operator==(const DegreeProfile&) const = default;
};

/// Maximum exponent per variable; all zero for the zero polynomial.
DegreeProfile degree_profile(const TriPoly& a);

/// Evaluates on every point of GF(Q)^3. Collapses each (y, z) fibre to a univariate
/// polynomial in X first, so the cost is about Q^2 * terms + Q^3 * distinct X-degrees.
TernaryTable tabulate(const TriPoly& a, unsigned workers = 1);

}  // namespace hughes

#endif  // HUGHES_TRIVAR_POLY_HPP
