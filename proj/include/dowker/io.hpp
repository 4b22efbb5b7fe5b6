#pragma once

#include <string>
#include <vector>

#include "dowker/concepts.hpp"
#include "dowker/homology.hpp"
#include "dowker/relation.hpp"
#include "dowker/simplicial.hpp"

namespace dowker {

// Canonical JSON: {"x":[...], "y":[...], "pairs":[["a","1"],...]}, pairs
// sorted.  Parse failures throw ParseError with a position diagnostic.
std::string relation_to_json(const Relation& r);
Relation relation_from_json(const std::string& text);

// CSV: required header "x,y", one pair per line, universes in first-appearance
// order.  Isolated labels cannot ride along in this format.
std::string relation_to_csv(const Relation& r);
Relation relation_from_csv(const std::string& text);

// {"vertices":[...], "facets":[[...],...]} with everything sorted.
std::string complex_to_json(const SimplicialComplex& K);

// Undirected 1-skeleton, canonical vertex/edge order, labels verbatim.
std::string complex_to_dot(const SimplicialComplex& K);

// [{"extent":[...], "intent":[...]}, ...] in the enumeration's canonical order.
std::string concepts_to_json(const std::vector<FormalConcept>& cs);

// {"reduced":bool, "groups":[{"dim":k,"betti":b,"torsion":[...]},...]}
std::string homology_to_json(const HomologyResult& h);

}  // namespace dowker
