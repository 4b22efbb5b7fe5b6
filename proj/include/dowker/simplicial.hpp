#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dowker {

using Vertex = std::string;

// Non-empty set of vertex labels, stored sorted by the global (lexicographic)
// label order.  Duplicates in the input collapse silently.
class Simplex {
public:
  Simplex() = default;
  static Simplex make(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  int dim() const { return static_cast<int>(v_.size()) - 1; }
  bool subset_of(const Simplex& other) const;
  bool contains_vertex(const Vertex& v) const;

  auto operator<=>(const Simplex&) const = default;

private:
  std::vector<Vertex> v_;
};

// Facet-based complex: stores only the inclusion-maximal simplices, plus a
// declared vertex set that may carry isolated labels (they belong to no
// simplex and contribute nothing downstream).
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  // Downward closure of the candidates; non-maximal and duplicate candidates
  // are absorbed, empty ones skipped.  UnknownVertex if a candidate strays
  // outside vertex_set.
  static SimplicialComplex from_facets(std::vector<Vertex> vertex_set,
                                       const std::vector<Simplex>& candidates);

  const std::vector<Vertex>& vertex_set() const { return vertices_; }
  const std::vector<Simplex>& facets() const { return facets_; }  // sorted, incomparable

  bool is_empty() const { return facets_.empty(); }  // no simplices at all
  int dimension() const;                             // -1 when empty

  bool contains(const Simplex& s) const;
  std::vector<Simplex> k_simplices(int k) const;
  long long euler_characteristic() const;

  // Vertices that occur in at least one facet, sorted.
  std::vector<Vertex> support() const;

  bool operator==(const SimplicialComplex&) const = default;

private:
  std::vector<Vertex> vertices_;
  std::vector<Simplex> facets_;
};

class SimplicialMap {
public:
  SimplicialMap() = default;

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  const std::map<Vertex, Vertex>& vertex_map() const { return map_; }

  const Vertex& apply(const Vertex& v) const;
  Simplex apply(const Simplex& s) const;  // image set (may drop dimension)

  friend SimplicialMap make_simplicial_map(SimplicialComplex source, SimplicialComplex target,
                                           std::map<Vertex, Vertex> vertex_map);

private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::map<Vertex, Vertex> map_;
};

// Validates that every facet image is a simplex of the target (faces follow);
// NotSimplicial names a witness facet otherwise.  The map must cover every
// vertex occurring in a source facet.
SimplicialMap make_simplicial_map(SimplicialComplex source, SimplicialComplex target,
                                  std::map<Vertex, Vertex> vertex_map);

SimplicialMap identity_map(const SimplicialComplex& K);

// g after f; SourceTargetMismatch unless f.target == g.source.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// Subcomplex of F.source on the simplices mapping into s.  NotASimplex when
// s is not a simplex of the target.
SimplicialComplex fiber(const SimplicialMap& F, const Simplex& s);

// Nerve of a cover by subcomplexes of one vertex universe; vertex j of the
// nerve is the decimal label of cover index j.  A subset J spans a simplex
// iff the members over J share a common simplex; because members are
// downward closed this happens exactly when they share a vertex, so the
// nerve's facets are the sets {j : v in support(cover[j])} over vertices v.
// EmptyCover if the list is empty or some member has no simplices.
SimplicialComplex nerve(const std::vector<SimplicialComplex>& cover);

// A vertex lying in every facet (joinable to every simplex); certifies
// contractibility.  Ties resolve to the lexicographically least; none for
// the empty complex.
std::optional<Vertex> cone_point(const SimplicialComplex& K);
bool is_cone_point(const SimplicialComplex& K, const Vertex& v);

// Strong collapse: repeatedly delete a dominated vertex (one whose containing
// facets share another vertex).  The core has the homotopy type of K; the
// inclusion and retraction are simplicial and retraction ∘ inclusion = id.
struct CollapseResult {
  SimplicialComplex core;
  SimplicialMap inclusion;   // core -> K
  SimplicialMap retraction;  // K -> core
};

CollapseResult strong_collapse(const SimplicialComplex& K);

}  // namespace dowker
