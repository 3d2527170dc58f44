#pragma once
// Exact restriction of equivariant Schubert classes to fixed points via the
// subword formula, and the projection to one circle parameter.

#include "springer/nilmatrix.hpp"
#include "springer/permutation.hpp"
#include "springer/polynomial.hpp"

namespace springer {

// sigma_v(w): fix a reduced word I for w; sum over position subsets J of
// size length(v) whose subword is reduced with product v; each position j
// contributes the root obtained by applying the full prefix of I before j
// to the simple root of the letter at j. Homogeneous of degree length(v),
// independent of the choice of I, and zero exactly when v is not below w
// in Bruhat order.
MultiPoly schubert_restrict(const Permutation& v, const Permutation& w);

// Same restriction over a caller-chosen reduced word of w (validated).
// The result never depends on the word; this entry point exists so that
// independence is testable.
MultiPoly schubert_restrict(const Permutation& v, const Permutation& w,
                            const std::vector<int>& word);

// Substitute t_i -> c_i * t; homogeneous degree-d input becomes a multiple
// of t^d.
UniPoly project_s1(const MultiPoly& P, const WeightAssignment& wts);

// p_v(w) = project_s1(schubert_restrict(v, w), wts).
UniPoly springer_schubert(const Permutation& v, const Permutation& w,
                          const WeightAssignment& wts);

}  // namespace springer
