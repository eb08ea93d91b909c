#pragma once

#include "hopfkit/group.hpp"
#include "hopfkit/hopf.hpp"

namespace hopfkit {

/// kG: basis g, Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
HopfData group_algebra(const GroupTable& g);

/// k^G: basis delta_g, pointwise product, Delta(delta_g) = sum_{ab=g} delta_a (x) delta_b.
HopfData function_algebra(const GroupTable& g);

/// D(G) on the basis delta_g (x) h, indexed g * |G| + h:
///   (delta_g h)(delta_g' h') = [g = h g' h^-1] delta_g hh'
///   Delta(delta_g h) = sum_{ab=g} (delta_a h) (x) (delta_b h)
///   eps(delta_g h) = [g = e],  S(delta_g h) = delta_{h^-1 g^-1 h} h^-1
HopfData drinfeld_double(const GroupTable& g);

/// H1 (x) H2 on the basis (i1, i2) indexed i1 * dim H2 + i2.
HopfData tensor_product(const HopfData& a, const HopfData& b);

}  // namespace hopfkit
