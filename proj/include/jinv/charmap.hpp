#pragma once

#include "jinv/cocenter.hpp"
#include "jinv/fp.hpp"
#include "jinv/rootsystem.hpp"

namespace jinv {

/// Image of the degree-1 characteristic map mod p for the group given by
/// the lattice choice: the F_p-span, inside the space with basis
/// {h_1..h_n}, of the first Chern classes of the characters of That.
/// Generators: every simple root (the columns of the Cartan matrix, read
/// in h-coordinates) plus the designated fundamental weights of the
/// choice (unit vectors).
Subspace charmap_image(const RootSystem& rs, LatticeChoice choice, Int p);

/// s = n - dim(charmap_image): the number of degree-1 generators of the
/// mod-p Chow ring of the group, equal to the F_p-dimension of
/// (Lambda_omega/That) tensor F_p.
int degree_one_generator_count(const RootSystem& rs, LatticeChoice choice, Int p);

} // namespace jinv
