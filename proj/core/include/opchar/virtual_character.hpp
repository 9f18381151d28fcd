#pragma once

#include <map>

#include "opchar/partition.hpp"
#include "opchar/symfunc.hpp"

namespace opchar {

// A virtual character of S_n stored per cycle type.
class VirtualCharacter {
public:
    using ValueMap = std::map<Partition, Rational, PartitionLess>;

    explicit VirtualCharacter(int n);

    int n() const { return n_; }
    const ValueMap& values() const { return values_; }
    Rational value(const Partition& cycle_type) const;
    void set_value(const Partition& cycle_type, const Rational& v);

    friend VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b);
    friend VirtualCharacter operator*(const Rational& c, const VirtualCharacter& a);
    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b);

    // Pointwise product (character of the tensor product).
    friend VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b);

private:
    int n_;
    ValueMap values_;
};

// Frobenius characteristic: ch_n(chi) = sum over cycle types of
// chi(tau) p_tau / z_tau; homogeneous of weight n.
SymFunc characteristic(const VirtualCharacter& chi, int max_weight);

// Inverse of `characteristic` on the weight-n part: chi(tau) = z_tau * coeff(p_tau).
VirtualCharacter character_of(const SymFunc& f, int n);

VirtualCharacter trivial_character(int n);
VirtualCharacter sign_character(int n);
VirtualCharacter regular_character(int n);
// Character of Ind from the cyclic subgroup Z_n to S_n of the trivial module.
VirtualCharacter cyclic_induced_character(int n);

}  // namespace opchar
