#pragma once

#include <optional>
#include <vector>

#include "glc/padic.hpp"

namespace glc {

using ModVector = std::vector<PadicResidue>;
/// Row-major matrix over Z/p^M.
using ModMatrix = std::vector<ModVector>;

/// Matrix whose columns are the given vectors (all of equal length).
ModMatrix from_columns(const std::vector<ModVector>& cols, std::size_t rows, const PadicResidue& proto);

/// Rank over F_p (entries are reduced mod p first).
int rank_mod_p(const ModMatrix& A);

/// Basis of the right nullspace {x : A x = 0} over F_p.
std::vector<ModVector> nullspace_mod_p(const ModMatrix& A, std::size_t cols, u64 p);

/// Indices of a maximal independent subset of the columns over F_p, greedy left to right.
std::vector<std::size_t> independent_columns_mod_p(const std::vector<ModVector>& cols);

struct SpanTest {
    bool member = false;
    /// Coordinates of the reduced vector that could not be cleared (empty on success).
    ModVector residual;
    /// Some solution x with sum x_i col_i = v when member.
    ModVector solution;
};

/// Membership of v in the Z/p^M-span of the columns (Smith-style elimination,
/// valid over the local ring Z/p^M).
SpanTest span_membership(const std::vector<ModVector>& cols, const ModVector& v);

}  // namespace glc
