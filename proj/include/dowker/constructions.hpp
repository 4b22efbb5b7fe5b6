#pragma once

#include <string>
#include <vector>

#include "dowker/relation.hpp"
#include "dowker/simplicial.hpp"

namespace dowker {

inline constexpr int kDefaultMaxDimension = 25;

// Vertex label for a pair of the relation, rendered "(x,y)".  Rendering is
// checked for injectivity over the pairs actually present (labels containing
// commas could otherwise alias).
std::string pair_label(const Label& x, const Label& y);

// Complex on X whose facets are the maximal witness columns X_y.
SimplicialComplex dowker_complex(const Relation& r);

// Complex on the pairs of R whose facets are the maximal non-empty
// rectangles (the formal concepts with both sides non-empty).
// DimensionGuard if some rectangle has more than max_dimension + 1 cells.
SimplicialComplex rectangle_complex(const Relation& r, int max_dimension = kDefaultMaxDimension);

// First projection (x,y) -> x, a simplicial map E(R) -> D(R).
SimplicialMap pi(const Relation& r, int max_dimension = kDefaultMaxDimension);
// Second projection (x,y) -> y, E(R) -> D(R^T).
SimplicialMap pi_hat(const Relation& r, int max_dimension = kDefaultMaxDimension);
// Coordinate swap (x,y) -> (y,x), an isomorphism E(R) -> E(R^T).
SimplicialMap swap_iso(const Relation& r, int max_dimension = kDefaultMaxDimension);

// Functor actions on a relation morphism.
SimplicialMap dowker_map(const RelationMorphism& f);  // D(R0) -> D(R1), vertex map f1
SimplicialMap rectangle_map(const RelationMorphism& f,
                            int max_dimension = kDefaultMaxDimension);  // E(R0) -> E(R1)

// Every y witnessing the whole of s, i.e. the largest B with s x B inside R.
// NotASimplex when s is not a simplex of D(R).
std::vector<Label> witness_Y(const Relation& r, const Simplex& s);

// The top simplex s x witness_Y(R, s) of the inverse image of s under pi.
Simplex inverse_image_simplex(const Relation& r, const Simplex& s);

// Strict commutativity of the two projection squares for a morphism,
// compared pointwise on the vertices of E(R0).
struct NaturalityReport {
  bool ok = true;
  std::vector<std::string> mismatches;
};

NaturalityReport check_naturality(const RelationMorphism& f,
                                  int max_dimension = kDefaultMaxDimension);

}  // namespace dowker
