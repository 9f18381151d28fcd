#include "opchar/stable_table.hpp"

#include <stdexcept>

namespace opchar {

void StableCharTable::set(int g, int n, const VirtualCharacter& chi) {
    if (!stable(g, n))
        throw std::invalid_argument("unstable (g,n) slot: 2(g-1)+n must be positive");
    if (chi.n() != n)
        throw std::invalid_argument("character degree does not match the slot's n");
    if (chi.values().empty())
        entries_.erase({g, n});
    else
        entries_.insert_or_assign({g, n}, chi);
}

HLaurent cch(const StableCharTable& table, TruncationSpec trunc) {
    HLaurent r(trunc);
    for (const auto& [key, chi] : table.entries()) {
        auto [g, n] = key;
        SymFunc ch = characteristic(chi, trunc.max_weight + 2 * std::abs(g - 1) + 2);
        for (const auto& [p, c] : ch.terms())
            r.add_term(HTerm{2 * (g - 1), p, {}}, c);
    }
    return r;
}

}  // namespace opchar
