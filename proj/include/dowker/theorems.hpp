#pragma once

#include <cstddef>

#include "dowker/constructions.hpp"
#include "dowker/homology.hpp"
#include "dowker/relation.hpp"

namespace dowker {

// Homology-level realization of the duality equivalence |D(R)| -> |D(R^T)|:
// H_k(second projection) . H_k(first projection)^{-1}.  The first projection
// induces an isomorphism, so the inverse exists; NotInvertible otherwise
// (which would expose a bug, not bad input).  By functoriality this equals
// the three-step composition through the swap isomorphism; the tests pin
// that equality down explicitly.
template <class F>
FieldMatrix<F> psi_star(const F& f, const Relation& r, int k,
                        int max_dimension = kDefaultMaxDimension) {
  FieldMatrix<F> a = homology_map_matrix(f, pi(r, max_dimension), k, max_dimension);
  FieldMatrix<F> c = homology_map_matrix(f, pi_hat(r, max_dimension), k, max_dimension);
  if (a.rows != a.cols)
    fail(errc::not_invertible, "first projection is not a homology isomorphism");
  return field_mul(f, c, field_inverse(f, a));
}

// Does H_k(D(f^T)) . psi(R0) equal psi(R1) . H_k(D(f)) over the field?
template <class F>
bool check_functorial_dowker(const F& f, const RelationMorphism& m, int k,
                             int max_dimension = kDefaultMaxDimension) {
  FieldMatrix<F> psi0 = psi_star(f, m.source(), k, max_dimension);
  FieldMatrix<F> psi1 = psi_star(f, m.target(), k, max_dimension);
  FieldMatrix<F> df = homology_map_matrix(f, dowker_map(m), k, max_dimension);
  FieldMatrix<F> dft = homology_map_matrix(f, dowker_map(m.transpose()), k, max_dimension);
  return field_mul(f, dft, psi0) == field_mul(f, psi1, df);
}

// Everything the contractible-fiber argument needs, checked mechanically for
// one simplex s of D(R): the fiber of the first projection over s is
// acyclic, the inverse image of s is the single simplex s x Y(s), and the
// nerve of the cover of the fiber by inverse images of the faces of s has
// the s-member as a cone point.
struct FiberReport {
  SimplicialComplex fiber;
  HomologyResult fiber_homology;  // reduced
  bool homology_zero = false;
  bool preimage_is_simplex = false;
  SimplicialComplex nerve_complex;
  std::size_t sigma_index = 0;  // cover position of the full face s
  bool sigma_is_cone_point = false;

  bool ok() const { return homology_zero && preimage_is_simplex && sigma_is_cone_point; }
};

FiberReport check_fiber_hypothesis(const Relation& r, const Simplex& sigma,
                                   int max_dimension = kDefaultMaxDimension);

}  // namespace dowker
