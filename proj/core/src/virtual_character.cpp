#include "opchar/virtual_character.hpp"

#include <stdexcept>

#include "opchar/numtheory.hpp"

namespace opchar {

VirtualCharacter::VirtualCharacter(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("character degree must be non-negative");
}

Rational VirtualCharacter::value(const Partition& cycle_type) const {
    auto it = values_.find(cycle_type);
    return it == values_.end() ? Rational(0) : it->second;
}

void VirtualCharacter::set_value(const Partition& cycle_type, const Rational& v) {
    check_partition(cycle_type);
    if (weight(cycle_type) != n_)
        throw std::invalid_argument("cycle type must be a partition of n");
    if (is_zero(v))
        values_.erase(cycle_type);
    else
        values_[cycle_type] = v;
}

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("adding characters of different degree");
    VirtualCharacter r = a;
    for (const auto& [t, v] : b.values_) r.set_value(t, r.value(t) + v);
    return r;
}

VirtualCharacter operator*(const Rational& c, const VirtualCharacter& a) {
    VirtualCharacter r(a.n_);
    if (is_zero(c)) return r;
    for (const auto& [t, v] : a.values_) r.values_[t] = c * v;
    return r;
}

bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
}

VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("tensoring characters of different degree");
    VirtualCharacter r(a.n_);
    for (const auto& [t, v] : a.values_) {
        Rational w = b.value(t);
        if (!is_zero(w)) r.values_[t] = v * w;
    }
    return r;
}

SymFunc characteristic(const VirtualCharacter& chi, int max_weight) {
    SymFunc f(max_weight);
    for (const auto& [tau, v] : chi.values()) f.add_term(tau, v / Rational(z_factor(tau)));
    return f;
}

VirtualCharacter character_of(const SymFunc& f, int n) {
    VirtualCharacter chi(n);
    for (const auto& [p, c] : f.terms()) {
        if (weight(p) != n) continue;
        chi.set_value(p, c * Rational(z_factor(p)));
    }
    return chi;
}

VirtualCharacter trivial_character(int n) {
    VirtualCharacter chi(n);
    for (const auto& tau : partitions_of(n)) chi.set_value(tau, Rational(1));
    return chi;
}

VirtualCharacter sign_character(int n) {
    VirtualCharacter chi(n);
    for (const auto& tau : partitions_of(n)) {
        int sign = (n - length(tau)) % 2 == 0 ? 1 : -1;
        chi.set_value(tau, Rational(sign));
    }
    return chi;
}

VirtualCharacter regular_character(int n) {
    VirtualCharacter chi(n);
    Partition ones(static_cast<size_t>(n), 1);
    chi.set_value(ones, Rational(factorial(static_cast<unsigned>(n))));
    return chi;
}

VirtualCharacter cyclic_induced_character(int n) {
    if (n <= 0) throw std::invalid_argument("cyclic_induced_character requires n >= 1");
    // ch_n = sum_{d|n} (phi(d)/n) p_d^{n/d}
    SymFunc f(n);
    for (long d : divisors(n)) {
        Partition p(static_cast<size_t>(n / d), static_cast<int>(d));
        f.add_term(p, rat(euler_phi(d), n));
    }
    return character_of(f, n);
}

}  // namespace opchar
