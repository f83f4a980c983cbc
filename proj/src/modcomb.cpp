#include "hughes/modcomb.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace hughes {

namespace {

std::uint64_t upow(std::uint64_t b, std::uint32_t n) {
    std::uint64_t r = 1;
    while (n-- > 0) r *= b;
    return r;
}

// binom(a, b) mod p for 0 <= a, b < p; the denominator is a unit.
std::uint32_t small_binom_mod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    if (b > a) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    return static_cast<std::uint32_t>(num * pow_mod(static_cast<std::int64_t>(den), p - 2, p) % p);
}

class Checker {
public:
    explicit Checker(std::string label) { check_.label = std::move(label); }

    template <class Describe>
    void expect(bool ok, Describe&& describe) {
        ++check_.instances;
        if (!ok && check_.pass) {
            check_.pass = false;
            check_.failure = describe();
        }
    }

    IdentityCheck take() { return std::move(check_); }

private:
    IdentityCheck check_;
};

std::string describe(std::initializer_list<std::pair<const char*, std::int64_t>> fields) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : fields) {
        if (!first) os << ' ';
        os << name << '=' << value;
        first = false;
    }
    return os.str();
}

}  // namespace

Residue reduce_mod(const BigInt& n, std::uint32_t p) {
    BigInt r = n % p;
    if (r < 0) r += p;
    return Residue{static_cast<std::uint32_t>(r), p};
}

std::uint32_t pow_mod(std::int64_t base, std::uint64_t n, std::uint32_t p) {
    std::uint64_t b = static_cast<std::uint64_t>(((base % static_cast<std::int64_t>(p)) + p) % p);
    std::uint64_t r = 1 % p;
    while (n > 0) {
        if (n & 1u) r = r * b % p;
        b = b * b % p;
        n >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

BigInt binom_exact(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Residue binom_mod_lucas(std::uint64_t alpha, std::uint64_t beta, std::uint32_t p) {
    std::uint64_t r = 1 % p;
    while ((alpha > 0 || beta > 0) && r != 0) {
        r = r * small_binom_mod(alpha % p, beta % p, p) % p;
        alpha /= p;
        beta /= p;
    }
    return Residue{static_cast<std::uint32_t>(r), p};
}

BigInt catalan_exact(std::uint64_t n) {
    const auto m = static_cast<std::int64_t>(n);
    return binom_exact(2 * m, m) / (m + 1);
}

Residue catalan_mod(std::uint64_t n, std::uint32_t p) {
    const std::uint32_t a = binom_mod_lucas(2 * n, n, p).value;
    const std::uint32_t b = binom_mod_lucas(2 * n, n + 1, p).value;
    return Residue{(a + p - b) % p, p};
}

BigInt gen_catalan_exact(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) return 0;
    const BigInt numerator = binom_exact(2 * n, n) * binom_exact(2 * k, k) * (2 * k + 1);
    const BigInt denominator = n + k + 1;
    if (numerator % denominator != 0) {
        throw std::logic_error("generalized Catalan number is not integral");
    }
    return numerator / denominator;
}

Residue gen_catalan_mod(std::int64_t n, std::int64_t k, std::uint32_t p) {
    return reduce_mod(gen_catalan_exact(n, k), p);
}

bool IdentityReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

IdentityReport identity_suite(std::uint32_t p, std::uint32_t e, IdentityBounds bounds) {
    IdentityReport report;
    report.p = p;
    report.e = e;
    const auto q = static_cast<std::int64_t>(upow(p, e));
    const std::int64_t Q = q * q;
    const auto mod = [p](const BigInt& v) { return reduce_mod(v, p).value; };

    {
        Checker c("lucas");
        for (std::uint64_t a = 0; a <= bounds.max_n; ++a) {
            for (std::uint64_t b = 0; b <= a; ++b) {
                const auto exact = static_cast<std::int64_t>(a);
                c.expect(binom_mod_lucas(a, b, p).value == mod(binom_exact(exact, static_cast<std::int64_t>(b))),
                         [&] { return describe({{"alpha", exact}, {"beta", static_cast<std::int64_t>(b)}}); });
            }
        }
        report.checks.push_back(c.take());
    }
    {
        Checker c("half_binomial_split");
        for (std::int64_t a = 0; a < q; ++a) {
            for (std::int64_t b = 0; b < q; ++b) {
                const std::uint32_t lhs = mod(binom_exact((Q + 1) / 2, a * q + b));
                const std::uint32_t rhs = mod(binom_exact((q - 1) / 2, a) * binom_exact((q + 1) / 2, b));
                const bool support_ok = lhs == 0 || (a <= (q - 1) / 2 && b <= (q + 1) / 2);
                c.expect(lhs == rhs && support_ok, [&] { return describe({{"a", a}, {"b", b}}); });
            }
        }
        report.checks.push_back(c.take());
    }
    {
        Checker c("odd_central_binomial");
        for (std::uint32_t t = 1; t <= 2 * e; ++t) {
            const auto pt = static_cast<std::int64_t>(upow(p, t));
            for (std::int64_t n = 1; n < pt; ++n) {
                const std::uint32_t lhs = mod(2 * binom_exact(2 * n - 1, n));
                const std::uint32_t rhs =
                    static_cast<std::uint32_t>(std::uint64_t{pow_mod(-4, n, p)} * mod(binom_exact((pt - 1) / 2, n)) % p);
                c.expect(lhs == rhs, [&] { return describe({{"t", t}, {"n", n}}); });
            }
        }
        report.checks.push_back(c.take());
    }
    {
        Checker c("catalan_half_binomial");
        for (std::uint32_t t = 1; t <= 2 * e; ++t) {
            const auto pt = static_cast<std::int64_t>(upow(p, t));
            for (std::int64_t n = 0; n < pt - 1; ++n) {
                const std::uint32_t lhs = mod(catalan_exact(static_cast<std::uint64_t>(n)));
                const std::uint32_t rhs = static_cast<std::uint32_t>(
                    2 * std::uint64_t{pow_mod(-4, n, p)} * mod(binom_exact((pt + 1) / 2, n + 1)) % p);
                c.expect(lhs == rhs, [&] { return describe({{"t", t}, {"n", n}}); });
            }
        }
        report.checks.push_back(c.take());
    }
    {
        Checker c("gen_catalan_difference");
        const auto bound = static_cast<std::int64_t>(bounds.max_n);
        for (std::int64_t n = 0; n <= bound; ++n) {
            for (std::int64_t k = 1; k <= bound; ++k) {
                const BigInt lhs = gen_catalan_exact(n, k) - gen_catalan_exact(n + 1, k - 1);
                const BigInt rhs = 2 * binom_exact(2 * k - 1, k) * catalan_exact(static_cast<std::uint64_t>(n));
                c.expect(lhs == rhs, [&] { return describe({{"n", n}, {"k", k}}); });
            }
        }
        report.checks.push_back(c.take());
    }
    {
        Checker c("catalan_gen_catalan");
        for (std::int64_t n = 0; n < q - 1; ++n) {
            for (std::int64_t k = 0; k < q; ++k) {
                const std::uint32_t lhs = mod(catalan_exact(static_cast<std::uint64_t>(k * q + n)));
                const std::uint32_t rhs = mod(gen_catalan_exact(n, k) - gen_catalan_exact(n + 1, k - 1));
                c.expect(lhs == rhs, [&] { return describe({{"n", n}, {"k", k}}); });
            }
        }
        report.checks.push_back(c.take());
    }
    {
        Checker c("catalan_vanishing");
        for (std::int64_t j = 0; j <= (q - 1) / 2; ++j) {
            for (std::int64_t i = 0; i + 1 < j; ++i) {
                const std::uint32_t v = mod(catalan_exact(static_cast<std::uint64_t>(j * (q - 1) + i)));
                c.expect(v == 0, [&] { return describe({{"i", i}, {"j", j}}); });
            }
        }
        report.checks.push_back(c.take());
    }
    return report;
}

}  // namespace hughes
