#pragma once

#include <map>
#include <utility>

#include "opchar/hlaurent.hpp"
#include "opchar/virtual_character.hpp"

namespace opchar {

// A stable S-module at character level: finitely many (g, n) slots, each a
// virtual character of S_n, subject to 2(g-1)+n > 0.
class StableCharTable {
public:
    using Key = std::pair<int, int>;  // (g, n)

    StableCharTable() = default;

    void set(int g, int n, const VirtualCharacter& chi);
    const std::map<Key, VirtualCharacter>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    static bool stable(int g, int n) { return g >= 0 && n >= 0 && 2 * (g - 1) + n > 0; }

private:
    std::map<Key, VirtualCharacter> entries_;
};

// CCh(V) = sum over slots of hbar^{g-1} ch_n(V(g,n)); lies in F^1.
HLaurent cch(const StableCharTable& table, TruncationSpec trunc);

}  // namespace opchar
