#ifndef HUGHES_FUNCTION_TABLE_HPP
#define HUGHES_FUNCTION_TABLE_HPP

#include <cstdint>
#include <vector>

#include "hughes/gf_tower.hpp"
#include "hughes/parallel.hpp"

namespace hughes {

/// A function GF(Q) -> GF(Q) stored by canonical index of its argument.
using UnaryTable = std::vector<Elem>;

/// A function GF(Q)^3 -> GF(Q), value of (x, y, z) at ((x * Q) + y) * Q + z.
class TernaryTable {
public:
    TernaryTable() = default;
    explicit TernaryTable(std::uint32_t order)
        : order_(order), values_(static_cast<std::size_t>(order) * order * order) {}

    /// Tabulates any callable Elem(Elem, Elem, Elem); x-slabs are split across workers.
    template <class Fn>
    static TernaryTable from(const FieldCtx& field, Fn&& fn, unsigned workers = 1) {
        const std::uint32_t Q = field.order();
        TernaryTable t(Q);
        parallel_for(Q, workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t x = begin; x < end; ++x) {
                for (std::uint32_t y = 0; y < Q; ++y) {
                    for (std::uint32_t z = 0; z < Q; ++z) {
                        t.set(Elem{static_cast<std::uint32_t>(x)}, Elem{y}, Elem{z},
                              fn(Elem{static_cast<std::uint32_t>(x)}, Elem{y}, Elem{z}));
                    }
                }
            }
        });
        return t;
    }

    std::uint32_t order() const noexcept { return order_; }
    std::size_t slot(Elem x, Elem y, Elem z) const noexcept {
        return (static_cast<std::size_t>(x.index) * order_ + y.index) * order_ + z.index;
    }
    Elem at(Elem x, Elem y, Elem z) const noexcept { return values_[slot(x, y, z)]; }
    void set(Elem x, Elem y, Elem z, Elem v) noexcept { values_[slot(x, y, z)] = v; }
    Elem operator()(Elem x, Elem y, Elem z) const noexcept { return at(x, y, z); }

    const std::vector<Elem>& values() const noexcept { return values_; }

    bool operator==(const TernaryTable&) const = default;

private:
    std::uint32_t order_ = 0;
    std::vector<Elem> values_;
};

}  // namespace hughes

#endif  // HUGHES_FUNCTION_TABLE_HPP
