#include "dowker/theorems.hpp"

#include "dowker/errors.hpp"

namespace dowker {

FiberReport check_fiber_hypothesis(const Relation& r, const Simplex& sigma, int max_dimension) {
  if (sigma.size() == 0) fail(errc::not_a_simplex, "empty vertex list");
  SimplicialMap p = pi(r, max_dimension);

  FiberReport rep;
  rep.fiber = fiber(p, sigma);  // NotASimplex if sigma is not in D(R)
  rep.fiber_homology = homology(rep.fiber, true, max_dimension);
  rep.homology_zero = rep.fiber_homology.is_zero();
  rep.preimage_is_simplex = p.source().contains(inverse_image_simplex(r, sigma));

  // cover of the fiber by the inverse-image simplices of the faces of sigma,
  // in bitmask order over sigma's sorted vertices; the full face comes last
  const auto& vs = sigma.vertices();
  const std::size_t m = vs.size();
  std::vector<SimplicialComplex> cover;
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
    std::vector<Vertex> face;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) face.push_back(vs[i]);
    Simplex top = inverse_image_simplex(r, Simplex::make(std::move(face)));
    cover.push_back(SimplicialComplex::from_facets(top.vertices(), {top}));
  }
  rep.sigma_index = cover.size() - 1;
  rep.nerve_complex = nerve(cover);
  rep.sigma_is_cone_point = is_cone_point(rep.nerve_complex, std::to_string(rep.sigma_index));
  return rep;
}

}  // namespace dowker
