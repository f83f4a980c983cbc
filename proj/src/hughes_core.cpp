#include "hughes/hughes_core.hpp"

#include <stdexcept>
#include <string>

#include "hughes/errors.hpp"
#include "hughes/modcomb.hpp"

namespace hughes {

PtrForm parse_ptr_form(std::string_view name) {
    if (name == "reduced") return PtrForm::reduced;
    if (name == "nonreduced") return PtrForm::nonreduced;
    if (name == "t2") return PtrForm::t2;
    throw std::invalid_argument("unknown form '" + std::string(name) + "'");
}

std::string_view to_string(PtrForm form) {
    switch (form) {
        case PtrForm::reduced: return "reduced";
        case PtrForm::nonreduced: return "nonreduced";
        case PtrForm::t2: return "t2";
    }
    return "?";
}

HughesPtr::HughesPtr(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw ContractViolation("HughesPtr requires a field");
}

Elem HughesPtr::nearfield_mul(Elem x, Elem y) const {
    const FieldCtx& F = ctx();
    return F.is_nonsquare(x) ? F.mul(x, F.frobenius_q(y)) : F.mul(x, y);
}

KPair HughesPtr::solve_kkprime(Elem y, Elem z) const {
    const FieldCtx& F = ctx();
    if (F.in_subfield(y)) {
        throw NotUnique("z = k*y + k' has no unique solution when y lies in GF(q)");
    }
    const Elem k = F.div(F.t_q(z), F.t_q(y));
    return KPair{k, F.sub(z, F.mul(k, y))};
}

Elem HughesPtr::ptr_piecewise(Elem x, Elem y, Elem z) const {
    const FieldCtx& F = ctx();
    if (F.in_subfield(y)) return F.add(F.mul(x, y), z);
    const KPair kk = solve_kkprime(y, z);
    if (F.is_nonsquare(F.add(x, kk.k))) {
        return F.add(F.mul(x, F.frobenius_q(y)), F.frobenius_q(z));
    }
    return F.add(F.mul(x, y), z);
}

Elem HughesPtr::ptr_nearfield_form(Elem x, Elem y, Elem z) const {
    const FieldCtx& F = ctx();
    if (F.in_subfield(y)) return F.add(nearfield_mul(x, y), z);
    const KPair kk = solve_kkprime(y, z);
    return F.add(nearfield_mul(F.add(x, kk.k), y), kk.k_prime);
}

Elem HughesPtr::ptr_trace_form(Elem x, Elem y, Elem z) const {
    const FieldCtx& F = ctx();
    const Elem inner = F.sub(F.mul(x, F.trace_sub(y)), F.mul(F.t_q(y), sigma_eval(x, y, z)));
    return F.add(z, F.mul(F.half(), inner));
}

Elem HughesPtr::phi_eval(Elem k, Elem x) const {
    const FieldCtx& F = ctx();
    if (F.is_nonsquare(F.add(x, k))) {
        return F.sub(F.neg(x), F.add(k, k));
    }
    return x;
}

TriPoly HughesPtr::phi_poly(Elem k) const {
    const FieldCtx& F = ctx();
    const std::uint64_t half_up = (static_cast<std::uint64_t>(F.order()) + 1) / 2;
    TriPoly out(field_);
    for (std::uint64_t m = 0; m <= half_up; ++m) {
        const Residue b = binom_mod_lucas(half_up, m, F.p());
        if (b.value == 0) continue;
        out.add_term({m, 0, 0}, F.mul(F.from_int(b.value), F.pow(k, half_up - m)));
    }
    out.add_term({}, F.neg(k));
    return out;
}

Elem HughesPtr::sigma_eval(Elem x, Elem y, Elem z) const {
    const FieldCtx& F = ctx();
    if (F.in_subfield(y)) return FieldCtx::zero();
    return phi_eval(solve_kkprime(y, z).k, x);
}

TriPoly HughesPtr::t_q_poly(int var) const {
    const std::uint64_t q = ctx().q();
    Exponents hi, lo;
    switch (var) {
        case 0: hi.x = q; lo.x = 1; break;
        case 1: hi.y = q; lo.y = 1; break;
        case 2: hi.z = q; lo.z = 1; break;
        default: throw ContractViolation("variable selector must be 0, 1 or 2");
    }
    TriPoly out(field_);
    out.add_term(hi, FieldCtx::one());
    out.add_term(lo, ctx().neg(FieldCtx::one()));
    return out;
}

TriPoly HughesPtr::sigma_poly() const {
    const FieldCtx& F = ctx();
    const std::uint64_t Q = F.order();
    const TriPoly ty = t_q_poly(1);
    const TriPoly tz = t_q_poly(2);

    TriPoly inner = TriPoly::monomial(field_, {(Q + 1) / 2, 0, 0}, FieldCtx::one());
    for (std::uint64_t m = 1; m <= (Q - 1) / 2; ++m) {
        const Residue b = binom_mod_lucas((Q + 1) / 2, m, F.p());
        if (b.value == 0) continue;
        const TriPoly xm = TriPoly::monomial(field_, {m, 0, 0}, F.from_int(b.value));
        inner += reduce(xm * p_pow(ty, m - 1) * p_pow(tz, Q - m));
    }
    return reduce(reduce(p_pow(ty, Q - 1)) * inner);
}

TriPoly HughesPtr::build_M() const {
    const FieldCtx& F = ctx();
    const std::uint64_t half_up = (static_cast<std::uint64_t>(F.order()) + 1) / 2;
    TriPoly t_half(field_);
    t_half.add_term({half_up, 0, 0}, FieldCtx::one());
    t_half.add_term({1, 0, 0}, F.neg(FieldCtx::one()));
    const TriPoly xy = TriPoly::monomial(field_, {1, 1, 0}, FieldCtx::one());
    return xy - p_scale(t_half * t_q_poly(1), F.half());
}

TriPoly HughesPtr::build_nonreduced_T() const {
    const FieldCtx& F = ctx();
    const std::uint64_t Q = F.order();
    const TriPoly ty = t_q_poly(1);
    const TriPoly tz = t_q_poly(2);

    TriPoly sum(field_);
    for (std::uint64_t m = 1; m <= (Q - 1) / 2; ++m) {
        const Residue b = binom_mod_lucas((Q + 1) / 2, m, F.p());
        if (b.value == 0) continue;
        const TriPoly xm = TriPoly::monomial(field_, {m, 0, 0}, F.from_int(b.value));
        sum += xm * p_pow(ty, m) * p_pow(tz, Q - m);
    }
    return build_M() + TriPoly::var_z(field_) - p_scale(sum, F.half());
}

Elem HughesPtr::minus_four_inv_pow(std::uint64_t n) const {
    const FieldCtx& F = ctx();
    return F.inv(F.pow(F.from_int(-4), n));
}

TriPoly HughesPtr::g_poly(std::uint32_t i) const {
    const FieldCtx& F = ctx();
    const std::uint64_t q = F.q();
    const Elem scale = minus_four_inv_pow(i + 1);
    TriPoly out(field_);
    for (std::uint64_t j = 0; j <= i + 1; ++j) {
        const std::uint64_t n = j * (q - 1) + i;
        out.add_term({n + 1, 0, 0}, F.mul(scale, F.from_int(catalan_mod(n, F.p()).value)));
    }
    return out;
}

TriPoly HughesPtr::h_poly(std::uint32_t i) const {
    const FieldCtx& F = ctx();
    const std::uint64_t q = F.q();
    const Elem scale = minus_four_inv_pow(i + 1);
    TriPoly out(field_);
    for (std::uint64_t j = 0; j <= i; ++j) {
        const Residue t = gen_catalan_mod(static_cast<std::int64_t>(i - j), static_cast<std::int64_t>(j), F.p());
        out.add_term({j * (q - 1) + i, 0, 0}, F.mul(scale, F.from_int(t.value)));
    }
    return out;
}

TriPoly HughesPtr::build_reduced_T() const {
    const std::uint32_t q = ctx().q();
    const TriPoly ty = t_q_poly(1);
    const TriPoly tz = t_q_poly(2);
    TriPoly sum(field_);
    for (std::uint32_t i = 0; i + 2 <= q; ++i) {
        sum += g_poly(i) * p_pow(ty, i + 1) * p_pow(tz, q - (i + 1));
    }
    return build_M() + TriPoly::var_z(field_) - sum;
}

TriPoly HughesPtr::build_T2() const {
    const std::uint32_t q = ctx().q();
    const TriPoly tx = t_q_poly(0);
    const TriPoly ty = t_q_poly(1);
    const TriPoly tz = t_q_poly(2);
    TriPoly sum(field_);
    for (std::uint32_t i = 0; i + 2 <= q; ++i) {
        sum += h_poly(i) * p_pow(ty, i) * p_pow(tz, q - i - 2);
    }
    return build_M() + TriPoly::var_z(field_) + tx * ty * tz * sum;
}

TriPoly HughesPtr::build(PtrForm form) const {
    switch (form) {
        case PtrForm::reduced: return build_reduced_T();
        case PtrForm::nonreduced: return build_nonreduced_T();
        case PtrForm::t2: return reduce(build_T2());
    }
    throw ContractViolation("unknown PtrForm");
}

TernaryTable HughesPtr::piecewise_table(unsigned workers) const {
    return TernaryTable::from(
        ctx(), [this](Elem x, Elem y, Elem z) { return ptr_piecewise(x, y, z); }, workers);
}

}  // namespace hughes
