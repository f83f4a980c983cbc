#ifndef HUGHES_MODCOMB_HPP
#define HUGHES_MODCOMB_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hughes {

using BigInt = boost::multiprecision::cpp_int;

/// A residue class modulo a prime, value in [0, modulus).
struct Residue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 0;

    bool operator==(const Residue&) const = default;
};

Residue reduce_mod(const BigInt& n, std::uint32_t p);
/// base^n mod p for a possibly negative base.
std::uint32_t pow_mod(std::int64_t base, std::uint64_t n, std::uint32_t p);

/// Binomial coefficient, zero when k < 0 or k > n.
BigInt binom_exact(std::int64_t n, std::int64_t k);
/// binom(alpha, beta) mod p as the product of digit binomials in base p.
Residue binom_mod_lucas(std::uint64_t alpha, std::uint64_t beta, std::uint32_t p);

BigInt catalan_exact(std::uint64_t n);
/// C[n] mod p via binom(2n, n) - binom(2n, n+1), which needs no division by n + 1.
Residue catalan_mod(std::uint64_t n, std::uint32_t p);

/// binom(2n,n) binom(2k,k) (2k+1) / (n+k+1); zero when n < 0 or k < 0.
BigInt gen_catalan_exact(std::int64_t n, std::int64_t k);
Residue gen_catalan_mod(std::int64_t n, std::int64_t k, std::uint32_t p);

struct IdentityBounds {
    /// Upper bound for alpha in the digit-product check and for n, k in the
    /// exact generalized Catalan difference identity.
    std::uint32_t max_n = 60;
};

struct IdentityCheck {
    std::string label;
    bool pass = true;
    std::uint64_t instances = 0;
    /// First violating instance as (name, value) pairs rendered into one line.
    std::optional<std::string> failure;
};

struct IdentityReport {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::vector<IdentityCheck> checks;

    bool all_pass() const;
};

/// Every congruence and identity the Catalan coefficients of the PTR polynomial rely on,
/// checked by exact big-integer arithmetic over its full hypothesis range for q = p^e:
///
///   lucas                      binom(a, b) = prod binom(a_i, b_i) mod p, a <= max_n
///   half_binomial_split        binom((Q+1)/2, aq+b) = binom((q-1)/2, a) binom((q+1)/2, b) mod p,
///                              and a nonzero left side forces a <= (q-1)/2, b <= (q+1)/2
///   odd_central_binomial       2 binom(2n-1, n) = (-4)^n binom((p^t-1)/2, n) mod p, 1 <= n < p^t
///   catalan_half_binomial      C[n] = 2 (-4)^n binom((p^t+1)/2, n+1) mod p, 0 <= n < p^t - 1
///   gen_catalan_difference     T[n,k] - T[n+1,k-1] = 2 binom(2k-1, k) C[n] over the integers
///   catalan_gen_catalan        C[kq+n] = T[n,k] - T[n+1,k-1] mod p, n < q-1, k < q
///   catalan_vanishing          C[j(q-1)+i] = 0 mod p for 0 <= i < i+1 < j <= (q-1)/2
///
/// t ranges over 1..2e.
IdentityReport identity_suite(std::uint32_t p, std::uint32_t e, IdentityBounds bounds = {});

}  // namespace hughes

#endif  // HUGHES_MODCOMB_HPP
