#pragma once

#include <vector>

#include "dowker/simplicial.hpp"
#include "dowker/smith.hpp"

namespace dowker {

// Bounded complex of free Z-modules.  Degrees run min_degree .. top_degree;
// min_degree is -1 for augmented (reduced) complexes, where C_{-1} = Z.
// boundary[i] maps degree min_degree+i to min_degree+i-1; boundary[0] has
// zero rows by convention.
struct ChainComplex {
  int min_degree = 0;
  std::vector<std::size_t> ranks;
  std::vector<SparseIntMatrix> boundary;
  std::vector<std::vector<Simplex>> bases;  // empty vectors for abstract degrees

  int top_degree() const { return min_degree + static_cast<int>(ranks.size()) - 1; }

  std::size_t rank_at(int d) const {
    int i = d - min_degree;
    if (i < 0 || i >= static_cast<int>(ranks.size())) return 0;
    return ranks[static_cast<std::size_t>(i)];
  }

  // boundary leaving degree d, or nullptr when C_d = 0
  const SparseIntMatrix* boundary_at(int d) const {
    int i = d - min_degree;
    if (i < 0 || i >= static_cast<int>(boundary.size())) return nullptr;
    return &boundary[static_cast<std::size_t>(i)];
  }

  // dd = 0 in every degree, including the augmentation when present
  bool boundaries_compose_to_zero() const;
};

// Degreewise map of chain complexes; mats[i] maps source degree
// min_degree+i into the same target degree.
struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  int min_degree = 0;
  std::vector<SparseIntMatrix> mats;

  const SparseIntMatrix* matrix_at(int d) const {
    int i = d - min_degree;
    if (i < 0 || i >= static_cast<int>(mats.size())) return nullptr;
    return &mats[static_cast<std::size_t>(i)];
  }

  // target boundary after f equals f after source boundary, degreewise
  bool satisfies_chain_square() const;
};

// Simplicial chain complex with canonical sorted bases; boundary signs are
// (-1)^i for dropping the i-th vertex in sorted order.  reduced adds the
// augmentation C_{-1} = Z with the all-ones row out of degree 0.
// DimensionGuard when a facet exceeds max_dimension + 1 vertices.
ChainComplex chain_complex(const SimplicialComplex& K, bool reduced, int max_dimension = 25);

// Linearization of a simplicial map: a basis simplex goes to its image with
// the sign of the sorting permutation, or to zero when vertices collide.
ChainMap induced_chain_map(const SimplicialMap& F, bool reduced, int max_dimension = 25);

// Cone(f)_k = A_{k-1} (+) B_k with boundary (a,b) -> (-da, db - f(a));
// acyclic exactly when f is a quasi-isomorphism.
ChainComplex mapping_cone(const ChainMap& f);

}  // namespace dowker
