#include "hughes/gf_tower.hpp"

#include <stdexcept>
#include <string>

#include "hughes/errors.hpp"

namespace hughes {

namespace {

using Poly = std::vector<std::uint32_t>;  // GF(p) coefficients, low degree first

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
        }
        trim(f);
    }
    return f;
}

Poly digits_of(std::uint64_t index, std::uint32_t p, std::uint32_t n) {
    Poly d(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        d[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return d;
}

std::uint32_t index_from_digits(std::span<const std::uint32_t> d, std::uint32_t p) {
    std::uint64_t idx = 0;
    for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
    return static_cast<std::uint32_t>(idx);
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t n) {
    std::uint64_t r = 1;
    while (n-- > 0) r *= b;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldParams FieldParams::make(std::uint64_t p, std::uint64_t e, std::uint64_t max_order) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (e < 1) throw std::invalid_argument("e must be a positive integer");
    std::uint64_t Q = 1;
    for (std::uint64_t i = 0; i < 2 * e; ++i) {
        Q *= p;
        if (Q > max_order) {
            throw std::invalid_argument("field order p^(2e) exceeds the ceiling " + std::to_string(max_order));
        }
    }
    FieldParams fp;
    fp.p = static_cast<std::uint32_t>(p);
    fp.e = static_cast<std::uint32_t>(e);
    fp.q = static_cast<std::uint32_t>(ipow(p, fp.e));
    fp.Q = static_cast<std::uint32_t>(Q);
    return fp;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t e) {
    const std::uint64_t candidates = ipow(p, e);
    for (std::uint64_t c = 0; c < candidates; ++c) {
        Poly f = digits_of(c, p, e);
        f.push_back(1);
        bool irreducible = true;
        for (std::uint32_t d = 1; irreducible && 2 * d <= e; ++d) {
            const std::uint64_t divisors = ipow(p, d);
            for (std::uint64_t g_idx = 0; g_idx < divisors; ++g_idx) {
                Poly g = digits_of(g_idx, p, d);
                g.push_back(1);
                if (poly_mod(f, g, p).empty()) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

FieldCtx::FieldCtx(FieldParams params) : params_(params) {
    if (params_.p < 3 || !is_prime(params_.p) || params_.e < 1 || params_.q != ipow(params_.p, params_.e) ||
        static_cast<std::uint64_t>(params_.q) * params_.q != params_.Q) {
        throw std::invalid_argument("inconsistent field parameters");
    }
    base_modulus_ = least_irreducible(params_.p, params_.e);
    build_subfield_tables();

    // Least non-square of GF(q): n^((q-1)/2) = -1.
    const std::uint32_t q = params_.q;
    const std::uint32_t minus_one = params_.p - 1;
    bool found = false;
    for (std::uint32_t n = 1; n < q && !found; ++n) {
        std::uint32_t acc = 1;
        for (std::uint32_t k = 0; k < (q - 1) / 2; ++k) acc = sub_mul(acc, n);
        if (acc == minus_one) {
            ext_nonresidue_ = Elem{n};
            found = true;
        }
    }
    if (!found) throw std::logic_error("GF(q) has no non-square");

    neg_.resize(params_.Q);
    for (std::uint32_t i = 0; i < params_.Q; ++i) {
        neg_[i] = sub_neg_[i % q] + q * sub_neg_[i / q];
    }
    build_log_tables();
    half_ = inv(from_int(2));
}

void FieldCtx::build_subfield_tables() {
    const std::uint32_t p = params_.p;
    const std::uint32_t q = params_.q;
    const std::uint32_t e = params_.e;
    sub_add_.resize(static_cast<std::size_t>(q) * q);
    sub_mul_.resize(static_cast<std::size_t>(q) * q);
    sub_neg_.resize(q);
    std::vector<Poly> digits(q);
    for (std::uint32_t a = 0; a < q; ++a) digits[a] = digits_of(a, p, e);

    for (std::uint32_t a = 0; a < q; ++a) {
        Poly n(e);
        for (std::uint32_t i = 0; i < e; ++i) n[i] = (p - digits[a][i]) % p;
        sub_neg_[a] = index_from_digits(n, p);
        for (std::uint32_t b = 0; b < q; ++b) {
            Poly s(e);
            for (std::uint32_t i = 0; i < e; ++i) s[i] = (digits[a][i] + digits[b][i]) % p;
            sub_add_[a * q + b] = index_from_digits(s, p);

            Poly prod(2 * e - 1, 0);
            for (std::uint32_t i = 0; i < e; ++i) {
                for (std::uint32_t j = 0; j < e; ++j) {
                    prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
                }
            }
            Poly r = poly_mod(prod, base_modulus_, p);
            r.resize(e, 0);
            sub_mul_[a * q + b] = index_from_digits(r, p);
        }
    }
}

void FieldCtx::build_log_tables() {
    const std::uint32_t Q = params_.Q;
    const std::uint32_t n = Q - 1;
    for (std::uint32_t g = 2; g < Q; ++g) {
        std::uint32_t acc = 1;
        std::uint32_t ord = 0;
        do {
            acc = mul_schoolbook(Elem{acc}, Elem{g}).index;
            ++ord;
        } while (acc != 1 && ord <= n);
        if (ord == n) {
            primitive_ = Elem{g};
            break;
        }
    }
    exp_.resize(2 * static_cast<std::size_t>(n));
    log_.assign(Q, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        exp_[k] = acc;
        exp_[k + n] = acc;
        log_[acc] = k;
        acc = mul_schoolbook(Elem{acc}, primitive_).index;
    }
}

FieldPtr make_field(std::uint64_t p, std::uint64_t e, std::uint64_t max_order) {
    return std::make_shared<const FieldCtx>(FieldParams::make(p, e, max_order));
}

void FieldCtx::check(Elem x) const {
    if (x.index >= params_.Q) {
        throw ContractViolation("element index " + std::to_string(x.index) + " outside GF(" +
                                std::to_string(params_.Q) + ")");
    }
}

Elem FieldCtx::from_int(std::int64_t n) const noexcept {
    const std::int64_t p = params_.p;
    return Elem{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Elem FieldCtx::add(Elem a, Elem b) const {
    const std::uint32_t q = params_.q;
    return Elem{sub_add(a.index % q, b.index % q) + q * sub_add(a.index / q, b.index / q)};
}

Elem FieldCtx::neg(Elem a) const { return Elem{neg_[a.index]}; }

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::mul(Elem a, Elem b) const {
    if (a.index == 0 || b.index == 0) return zero();
    return Elem{exp_[log_[a.index] + log_[b.index]]};
}

Elem FieldCtx::mul_schoolbook(Elem a, Elem b) const {
    const std::uint32_t q = params_.q;
    const std::uint32_t a0 = a.index % q, a1 = a.index / q;
    const std::uint32_t b0 = b.index % q, b1 = b.index / q;
    const std::uint32_t n = ext_nonresidue_.index;
    // (a0 + a1 w)(b0 + b1 w) = (a0 b0 + n a1 b1) + (a0 b1 + a1 b0) w
    const std::uint32_t r0 = sub_add(sub_mul(a0, b0), sub_mul(n, sub_mul(a1, b1)));
    const std::uint32_t r1 = sub_add(sub_mul(a0, b1), sub_mul(a1, b0));
    return Elem{r0 + q * r1};
}

Elem FieldCtx::pow(Elem a, std::uint64_t n) const {
    if (n == 0) return one();
    if (a.index == 0) return zero();
    const std::uint64_t order = params_.Q - 1;
    const std::uint64_t k = (static_cast<std::uint64_t>(log_[a.index]) * (n % order)) % order;
    return Elem{exp_[k]};
}

Elem FieldCtx::pow_by_squaring(Elem a, std::uint64_t n) const {
    Elem result = one();
    Elem base = a;
    while (n > 0) {
        if (n & 1u) result = mul_schoolbook(result, base);
        base = mul_schoolbook(base, base);
        n >>= 1;
    }
    return result;
}

Elem FieldCtx::inv(Elem a) const {
    if (a.index == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(params_.Q) + ")");
    return pow(a, params_.Q - 2);
}

Elem FieldCtx::frobenius_q(Elem x) const {
    const std::uint32_t q = params_.q;
    return Elem{x.index % q + q * sub_neg_[x.index / q]};
}

Elem FieldCtx::trace_sub(Elem x) const { return add(frobenius_q(x), x); }

Elem FieldCtx::t_n(Elem x, std::uint64_t n) const { return sub(pow(x, n), x); }

int FieldCtx::quad_char(Elem x) const {
    if (x.index == 0) return 0;
    return (log_[x.index] % 2 == 0) ? 1 : -1;
}

std::vector<Elem> FieldCtx::enumerate_field() const {
    std::vector<Elem> out(params_.Q);
    for (std::uint32_t i = 0; i < params_.Q; ++i) out[i] = Elem{i};
    return out;
}

std::vector<Elem> FieldCtx::enumerate_subfield() const {
    std::vector<Elem> out(params_.q);
    for (std::uint32_t i = 0; i < params_.q; ++i) out[i] = Elem{i};
    return out;
}

Elem FieldCtx::element_from_index(std::uint64_t i) const {
    if (i >= params_.Q) {
        throw ContractViolation("index " + std::to_string(i) + " out of range for GF(" +
                                std::to_string(params_.Q) + ")");
    }
    return Elem{static_cast<std::uint32_t>(i)};
}

std::vector<std::uint32_t> FieldCtx::coefficients(Elem x) const { return digits_of(x.index, params_.p, 2 * params_.e); }

Elem FieldCtx::from_coefficients(std::span<const std::uint32_t> digits) const {
    if (digits.size() != 2 * params_.e) throw ContractViolation("expected 2e coefficients");
    for (auto d : digits) {
        if (d >= params_.p) throw ContractViolation("coefficient outside [0, p-1]");
    }
    return Elem{index_from_digits(digits, params_.p)};
}

}  // namespace hughes
