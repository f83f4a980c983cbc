#ifndef HUGHES_HUGHES_CORE_HPP
#define HUGHES_HUGHES_CORE_HPP

#include <cstdint>
#include <string_view>

#include "hughes/function_table.hpp"
#include "hughes/gf_tower.hpp"
#include "hughes/trivar_poly.hpp"

namespace hughes {

/// The unique (k, k') in GF(q) x GF(q) with z = k*y + k'.
struct KPair {
    Elem k;
    Elem k_prime;

    bool operator==(const KPair&) const = default;
};

enum class PtrForm { reduced, nonreduced, t2 };

PtrForm parse_ptr_form(std::string_view name);
std::string_view to_string(PtrForm form);

/// The planar ternary ring of the Hughes plane of order Q = q^2 over the regular
/// nearfield, in its piecewise form and as polynomials.
///
/// Coordinates follow the convention x*y with the Frobenius acting on the right
/// factor, i.e. x and y are swapped relative to the usual textbook description.
class HughesPtr {
public:
    explicit HughesPtr(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    const FieldCtx& ctx() const noexcept { return *field_; }

    /// x * y if x is a square (zero included), x * y^q otherwise.
    Elem nearfield_mul(Elem x, Elem y) const;

    /// k = t_q(z) / t_q(y), k' = z - k y. Throws NotUnique when y lies in GF(q).
    KPair solve_kkprime(Elem y, Elem z) const;

    /// xy + z if y in GF(q) or x + k is a square (or zero); xy^q + z^q otherwise.
    Elem ptr_piecewise(Elem x, Elem y, Elem z) const;
    /// x (*) y + z if y in GF(q), (x + k) (*) y + k' otherwise.
    Elem ptr_nearfield_form(Elem x, Elem y, Elem z) const;
    /// z + 2^{-1} (x Tr(y) - t_q(y) sigma(x, y, z)).
    Elem ptr_trace_form(Elem x, Elem y, Elem z) const;

    /// (x + k)^{(Q+1)/2} - k evaluated as the involution: x if x + k is a square, -x - 2k otherwise.
    Elem phi_eval(Elem k, Elem x) const;
    /// (X + k)^{(Q+1)/2} - k expanded with digit-product binomials; only X appears.
    TriPoly phi_poly(Elem k) const;

    /// 0 if y in GF(q), phi_k(x) with k = t_q(z)/t_q(y) otherwise.
    Elem sigma_eval(Elem x, Elem y, Elem z) const;
    /// Reduced polynomial inducing sigma_eval.
    TriPoly sigma_poly() const;

    /// XY - 2^{-1} t_{(Q+1)/2}(X) t_q(Y).
    TriPoly build_M() const;
    /// M + Z - 2^{-1} sum_{m=1}^{(Q-1)/2} binom((Q+1)/2, m) X^m t_q(Y)^m t_q(Z)^{Q-m}; not reduced.
    TriPoly build_nonreduced_T() const;
    /// M + Z - sum_{i=0}^{q-2} g_i(X) t_q(Y)^{i+1} t_q(Z)^{q-i-1}; already reduced.
    TriPoly build_reduced_T() const;
    /// M + Z + t_q(X) t_q(Y) t_q(Z) sum_{i=0}^{q-2} h_i(X) t_q(Y)^i t_q(Z)^{q-i-2}; not reduced.
    /// The Z exponent makes each summand match g_i(X) t_q(Y)^{i+1} t_q(Z)^{q-i-1} once
    /// g_i = -t_q(X) h_i is applied; exponent q - i there would differ by t_q(Z)^2.
    TriPoly build_T2() const;
    /// The form requested, reduced unless `form` is nonreduced.
    TriPoly build(PtrForm form) const;

    /// g_i(X) = (-4)^{-(i+1)} sum_{j=0}^{i+1} C[j(q-1)+i] X^{j(q-1)+i+1}.
    TriPoly g_poly(std::uint32_t i) const;
    /// h_i(X) = (-4)^{-(i+1)} sum_{j=0}^{i} T[i-j, j] X^{j(q-1)+i}.
    TriPoly h_poly(std::uint32_t i) const;

    /// X^q - X in the chosen variable (0 = X, 1 = Y, 2 = Z).
    TriPoly t_q_poly(int var) const;

    TernaryTable piecewise_table(unsigned workers = 1) const;

private:
    /// (-4)^{-(n)} in the prime field.
    Elem minus_four_inv_pow(std::uint64_t n) const;

    FieldPtr field_;
};

}  // namespace hughes

#endif  // HUGHES_HUGHES_CORE_HPP
