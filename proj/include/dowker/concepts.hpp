#pragma once

#include <vector>

#include "dowker/relation.hpp"

namespace dowker {

// Maximal rectangle U x V inside a relation; U determines V and vice versa
// through the derivation operators.
struct FormalConcept {
  std::vector<Label> extent;  // sorted
  std::vector<Label> intent;  // sorted

  bool operator==(const FormalConcept&) const = default;
};

// {y | every x in U relates to y}; all of Y when U is empty.
std::vector<Label> derive_up(const Relation& r, const std::vector<Label>& U);
// {x | x relates to every y in V}; all of X when V is empty.
std::vector<Label> derive_down(const Relation& r, const std::vector<Label>& V);

// All formal concepts via NextClosure (lectic-order iteration over closed
// extents), including the boundary concepts with an empty side when they are
// closed.  Sorted canonically by extent.
std::vector<FormalConcept> enumerate_concepts(const Relation& r);

// Oracle: close every subset of X and deduplicate.  TooLarge when |X| > 20.
std::vector<FormalConcept> brute_force_concepts(const Relation& r);

// Concept-lattice order: extent inclusion.
bool lattice_leq(const FormalConcept& a, const FormalConcept& b);

}  // namespace dowker
