#ifndef SGPD_EXAMPLES_HPP
#define SGPD_EXAMPLES_HPP

#include "sgpd/unary.hpp"

namespace sgpd {

// Semigroup of all binary relations on an x_size-point set under relation
// composition, with R+ / R* the diagonal restrictions to the domain / range
// of R.  Element id m encodes the relation {(i,j) : bit i*x_size+j of m}.
// x_size must be 1 or 2 (2^(x_size^2) elements); larger sets are refused.
UnaryStructure relation_semigroup(int x_size);

// Meet-semilattice chain e0 < e1 < ... < e_{n-1} with s+ = s* = s.
UnaryStructure chain_semilattice(int n);

// Two-element group {1, g}, g*g = 1, with s+ = s* = 1 (ids: 0 = 1, 1 = g).
UnaryStructure cyclic_group_z2();

}  // namespace sgpd

#endif
