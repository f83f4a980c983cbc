#ifndef HUGHES_GF_TOWER_HPP
#define HUGHES_GF_TOWER_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hughes {

/// Sizes of the tower GF(p) < GF(q) < GF(Q) with q = p^e and Q = q^2.
struct FieldParams {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    std::uint32_t Q = 0;

    /// Validates p (odd prime) and e (>= 1); throws std::invalid_argument otherwise.
    /// `max_order` bounds Q to keep the lookup tables in memory.
    static FieldParams make(std::uint64_t p, std::uint64_t e, std::uint64_t max_order = 1u << 24);

    auto operator<=>(const FieldParams&) const = default;
};

bool is_prime(std::uint64_t n);

/// An element of GF(Q), stored by its canonical index sum_i c_i p^i, where
/// c_0..c_{e-1} are the GF(p)-coordinates of a and c_e..c_{2e-1} those of b in a + b*w.
/// Index 0 is zero and index 1 is one; the subfield GF(q) is exactly the indices below q.
struct Elem {
    std::uint32_t index = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t i) : index(i) {}

    auto operator<=>(const Elem&) const = default;
};

/// Immutable arithmetic context for GF(Q) = GF(q)[w]/(w^2 - n) over GF(q) = GF(p)[t]/(f(t)).
///
/// f is the lexicographically least monic irreducible of degree e (coefficients read
/// low-degree first as base-p digits) and n is the least non-square of GF(q) in index
/// order, so w^q = -w. Multiplication is the schoolbook product on (a, b) pairs; a
/// discrete-log table is built as well and used on the hot paths (tests pin the two
/// routes to each other).
class FieldCtx {
public:
    explicit FieldCtx(FieldParams params);

    const FieldParams& params() const noexcept { return params_; }
    std::uint32_t p() const noexcept { return params_.p; }
    std::uint32_t q() const noexcept { return params_.q; }
    std::uint32_t order() const noexcept { return params_.Q; }

    /// Coefficients of f, low degree first, length e + 1, leading 1.
    const std::vector<std::uint32_t>& base_modulus() const noexcept { return base_modulus_; }
    /// The non-square n of GF(q) with w^2 = n.
    Elem ext_nonresidue() const noexcept { return ext_nonresidue_; }
    /// A generator of GF(Q)^* (least index), the base of the log table.
    Elem primitive() const noexcept { return primitive_; }

    static constexpr Elem zero() noexcept { return Elem{0}; }
    static constexpr Elem one() noexcept { return Elem{1}; }
    /// The adjoined square root w of the non-residue.
    Elem w() const noexcept { return Elem{params_.q}; }
    /// Image of an integer in the prime field.
    Elem from_int(std::int64_t n) const noexcept;
    /// 2^{-1}, computed as inv(1 + 1).
    Elem half() const noexcept { return half_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// a^(Q-2); throws DivisionByZero for a = 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// a^n with 0^0 = 1.
    Elem pow(Elem a, std::uint64_t n) const;

    /// Reference routes the fast paths are tested against.
    Elem mul_schoolbook(Elem a, Elem b) const;
    Elem pow_by_squaring(Elem a, std::uint64_t n) const;

    /// x^q, i.e. a + b*w -> a - b*w.
    Elem frobenius_q(Elem x) const;
    /// x^q + x, which lies in GF(q).
    Elem trace_sub(Elem x) const;
    /// x^n - x.
    Elem t_n(Elem x, std::uint64_t n) const;
    /// x^q - x; zero exactly on GF(q).
    Elem t_q(Elem x) const { return sub(frobenius_q(x), x); }
    /// Quadratic character of GF(Q): +1 on non-zero squares, -1 on non-squares, 0 at zero.
    int quad_char(Elem x) const;
    bool is_square(Elem x) const { return quad_char(x) == 1; }
    bool is_nonsquare(Elem x) const { return quad_char(x) == -1; }
    bool in_subfield(Elem x) const noexcept { return x.index < params_.q; }

    /// All Q elements in canonical index order.
    std::vector<Elem> enumerate_field() const;
    /// All q elements of the subfield in canonical order.
    std::vector<Elem> enumerate_subfield() const;
    /// Throws ContractViolation if i >= Q.
    Elem element_from_index(std::uint64_t i) const;
    std::uint32_t index_of(Elem x) const noexcept { return x.index; }

    /// The 2e base-p digits of x.
    std::vector<std::uint32_t> coefficients(Elem x) const;
    Elem from_coefficients(std::span<const std::uint32_t> digits) const;

    /// Throws ContractViolation if x is not an element of this field.
    void check(Elem x) const;

private:
    // GF(q) arithmetic on subfield indices.
    std::uint32_t sub_add(std::uint32_t a, std::uint32_t b) const { return sub_add_[a * params_.q + b]; }
    std::uint32_t sub_mul(std::uint32_t a, std::uint32_t b) const { return sub_mul_[a * params_.q + b]; }

    void build_subfield_tables();
    void build_log_tables();

    FieldParams params_;
    std::vector<std::uint32_t> base_modulus_;
    Elem ext_nonresidue_;
    Elem primitive_;
    Elem half_;

    std::vector<std::uint32_t> sub_add_;
    std::vector<std::uint32_t> sub_mul_;
    std::vector<std::uint32_t> sub_neg_;
    std::vector<std::uint32_t> neg_;
    // exp_ has length 2(Q-1) so a product of two logs needs no reduction.
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

FieldPtr make_field(std::uint64_t p, std::uint64_t e, std::uint64_t max_order = 1u << 24);

/// Least monic irreducible polynomial of degree e over GF(p), low degree first.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t e);

}  // namespace hughes

#endif  // HUGHES_GF_TOWER_HPP
