#include "hughes/trivar_poly.hpp"

#include <algorithm>

#include "hughes/errors.hpp"

namespace hughes {

TriPoly::TriPoly(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw ContractViolation("TriPoly requires a field");
}

TriPoly TriPoly::constant(FieldPtr field, Elem c) { return monomial(std::move(field), {}, c); }

TriPoly TriPoly::monomial(FieldPtr field, Exponents ex, Elem c) {
    TriPoly out(std::move(field));
    out.add_term(ex, c);
    return out;
}

bool TriPoly::is_reduced() const noexcept {
    const std::uint64_t Q = field_->order();
    return std::all_of(terms_.begin(), terms_.end(), [Q](const auto& t) {
        return t.first.x < Q && t.first.y < Q && t.first.z < Q;
    });
}

Elem TriPoly::coefficient(Exponents ex) const {
    const auto it = terms_.find(ex);
    return it == terms_.end() ? FieldCtx::zero() : it->second;
}

void TriPoly::add_term(Exponents ex, Elem c) {
    field_->check(c);
    if (c == FieldCtx::zero()) return;
    auto [it, inserted] = terms_.try_emplace(ex, c);
    if (inserted) return;
    it->second = field_->add(it->second, c);
    if (it->second == FieldCtx::zero()) terms_.erase(it);
}

void TriPoly::require_same_field(const TriPoly& rhs) const {
    if (field_ != rhs.field_ && field_->params() != rhs.field_->params()) {
        throw ContractViolation("polynomials over different fields");
    }
}

TriPoly& TriPoly::operator+=(const TriPoly& rhs) {
    require_same_field(rhs);
    for (const auto& [ex, c] : rhs.terms_) add_term(ex, c);
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& rhs) {
    require_same_field(rhs);
    for (const auto& [ex, c] : rhs.terms_) add_term(ex, field_->neg(c));
    return *this;
}

TriPoly TriPoly::operator-() const {
    TriPoly out(field_);
    for (const auto& [ex, c] : terms_) out.terms_.emplace(ex, field_->neg(c));
    return out;
}

TriPoly operator*(const TriPoly& lhs, const TriPoly& rhs) {
    lhs.require_same_field(rhs);
    const FieldCtx& F = lhs.ctx();
    TriPoly out(lhs.field_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            out.add_term({ea.x + eb.x, ea.y + eb.y, ea.z + eb.z}, F.mul(ca, cb));
        }
    }
    return out;
}

bool operator==(const TriPoly& lhs, const TriPoly& rhs) {
    return lhs.field_->params() == rhs.field_->params() && lhs.terms_ == rhs.terms_;
}

TriPoly p_add(const TriPoly& a, const TriPoly& b) { return a + b; }
TriPoly p_sub(const TriPoly& a, const TriPoly& b) { return a - b; }
TriPoly p_mul(const TriPoly& a, const TriPoly& b) { return a * b; }

TriPoly p_scale(const TriPoly& a, Elem c) {
    TriPoly out(a.field());
    for (const auto& [ex, coeff] : a.terms()) out.add_term(ex, a.ctx().mul(coeff, c));
    return out;
}

TriPoly p_pow(const TriPoly& a, std::uint64_t n) {
    TriPoly result = TriPoly::constant(a.field(), FieldCtx::one());
    TriPoly base = a;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

std::uint64_t reduce_exponent(std::uint64_t n, std::uint32_t Q) noexcept {
    if (n < Q) return n;
    return (n - 1) % (Q - 1) + 1;
}

TriPoly reduce(const TriPoly& a) {
    const std::uint32_t Q = a.ctx().order();
    TriPoly out(a.field());
    for (const auto& [ex, c] : a.terms()) {
        out.add_term({reduce_exponent(ex.x, Q), reduce_exponent(ex.y, Q), reduce_exponent(ex.z, Q)}, c);
    }
    return out;
}

Elem evaluate(const TriPoly& a, Elem x, Elem y, Elem z) {
    const FieldCtx& F = a.ctx();
    F.check(x);
    F.check(y);
    F.check(z);
    Elem acc = FieldCtx::zero();
    for (const auto& [ex, c] : a.terms()) {
        const Elem m = F.mul(F.mul(F.pow(x, ex.x), F.pow(y, ex.y)), F.pow(z, ex.z));
        acc = F.add(acc, F.mul(c, m));
    }
    return acc;
}

bool poly_equal_reduced(const TriPoly& a, const TriPoly& b) {
    if (!a.is_reduced() || !b.is_reduced()) {
        throw ContractViolation("poly_equal_reduced requires reduced polynomials");
    }
    return a == b;
}

DegreeProfile degree_profile(const TriPoly& a) {
    DegreeProfile d;
    d.term_count = a.term_count();
    for (const auto& [ex, c] : a.terms()) {
        d.deg_x = std::max(d.deg_x, ex.x);
        d.deg_y = std::max(d.deg_y, ex.y);
        d.deg_z = std::max(d.deg_z, ex.z);
    }
    return d;
}

TernaryTable tabulate(const TriPoly& a, unsigned workers) {
    const FieldCtx& F = a.ctx();
    const std::uint32_t Q = F.order();

    std::vector<std::uint64_t> x_degrees;
    for (const auto& [ex, c] : a.terms()) x_degrees.push_back(ex.x);
    std::sort(x_degrees.begin(), x_degrees.end());
    x_degrees.erase(std::unique(x_degrees.begin(), x_degrees.end()), x_degrees.end());

    struct Term {
        std::size_t slot;
        std::uint64_t ey, ez;
        Elem c;
    };
    std::vector<Term> terms;
    terms.reserve(a.term_count());
    for (const auto& [ex, c] : a.terms()) {
        const auto slot = static_cast<std::size_t>(
            std::lower_bound(x_degrees.begin(), x_degrees.end(), ex.x) - x_degrees.begin());
        terms.push_back({slot, ex.y, ex.z, c});
    }

    TernaryTable table(Q);
    parallel_for(Q, workers, [&](std::size_t begin, std::size_t end) {
        std::vector<Elem> coeff(x_degrees.size());
        for (std::size_t yi = begin; yi < end; ++yi) {
            const Elem y{static_cast<std::uint32_t>(yi)};
            for (std::uint32_t zi = 0; zi < Q; ++zi) {
                const Elem z{zi};
                std::fill(coeff.begin(), coeff.end(), FieldCtx::zero());
                for (const Term& t : terms) {
                    coeff[t.slot] = F.add(coeff[t.slot], F.mul(t.c, F.mul(F.pow(y, t.ey), F.pow(z, t.ez))));
                }
                for (std::uint32_t xi = 0; xi < Q; ++xi) {
                    const Elem x{xi};
                    Elem acc = FieldCtx::zero();
                    for (std::size_t s = 0; s < coeff.size(); ++s) {
                        if (coeff[s] != FieldCtx::zero()) acc = F.add(acc, F.mul(coeff[s], F.pow(x, x_degrees[s])));
                    }
                    table.set(x, y, z, acc);
                }
            }
        }
    });
    return table;
}

}  // namespace hughes
