#pragma once

#include <vector>

#include "glc/rational.hpp"

namespace glc {

using IntRow = std::vector<BigInt>;

/// Sublattice of Z^n given by independent rows in Hermite normal form:
/// upper triangular, positive pivots, entries above each pivot reduced into [0, pivot).
struct IntegerLattice {
    int dimension = 0;
    std::vector<IntRow> basis;

    int rank() const { return static_cast<int>(basis.size()); }
    bool contains(const IntRow& v) const;
    /// Index [Z^n : L] for a full-rank lattice.
    BigInt index() const;
    /// Coset representative of v with each pivot coordinate reduced into [0, pivot).
    IntRow reduce(const IntRow& v) const;
};

/// HNF of the lattice spanned by the given rows (zero rows dropped).
IntegerLattice hermite_normal_form(std::vector<IntRow> rows, int dimension);

/// Kernel of c -> (sum_i c_i a_ij mod n_j)_j, i.e. of a map Z^r -> prod_j Z/n_j
/// given by the images a_i of the standard basis. Always full rank.
IntegerLattice lattice_kernel(const std::vector<std::vector<long long>>& images, const std::vector<long long>& moduli);

}  // namespace glc
