#pragma once
// Hessenberg functions, the matrix-space membership test, permissible
// fillings, and the two routes to torus-fixed points: brute force over the
// symmetric group and the filling bijection.

#include <vector>

#include "springer/filling.hpp"
#include "springer/nilmatrix.hpp"
#include "springer/partition.hpp"
#include "springer/permutation.hpp"

namespace springer {

class HessenbergFunction {
public:
  // Requires h(i) >= i, h nondecreasing, h(n) = n.
  explicit HessenbergFunction(std::vector<int> values);

  int n() const { return (int)values_.size(); }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }
  bool is_identity() const;

  friend bool operator==(const HessenbergFunction& a,
                         const HessenbergFunction& b) = default;

private:
  std::vector<int> values_;
};

HessenbergFunction identity_h(int n);

// True iff every 1 of X sits at (i, j) with i <= h(j).
bool in_hessenberg_space(const NilMatrix& X, const HessenbergFunction& h);
// Same test on a dense matrix: every nonzero entry needs i <= h(j).
bool in_hessenberg_space_dense(const std::vector<std::vector<int>>& X,
                               const HessenbergFunction& h);

// Every horizontal adjacency (k directly left of j) satisfies k <= h(j).
// For h = identity this is row-strictness.
bool is_permissible(const Filling& T, const HessenbergFunction& h);

// All permissible fillings, sorted by rows. For h = identity the fillings
// are built directly (distribute values over rows, sort each row); general
// h filters all n! fillings.
std::vector<Filling> permissible_fillings(const Partition& shape,
                                          const HessenbergFunction& h);

// All w with w^{-1} N w in the Hessenberg space, sorted by one-line word.
// Parallel over candidates; fixed_points_bruteforce_serial is the reference
// implementation the parallel kernel is tested against.
std::vector<Permutation> fixed_points_bruteforce(const NilMatrix& N,
                                                 const HessenbergFunction& h);
std::vector<Permutation> fixed_points_bruteforce_serial(
    const NilMatrix& N, const HessenbergFunction& h);

// The fixed point attached to a permissible filling: w = sigma_read(T,
// sigma)^{-1}. Permissibility is the caller's contract and is not rechecked.
Permutation fixed_point_of_filling(const Filling& T, const Permutation& sigma);

// Image of permissible_fillings under fixed_point_of_filling, sorted by
// one-line word. Equals fixed_points_bruteforce(conjugate(jordan_matrix,
// sigma), h).
std::vector<Permutation> fixed_points(const Partition& shape,
                                      const HessenbergFunction& h,
                                      const Permutation& sigma);

}  // namespace springer
