#include "dowker/homology.hpp"

#include <algorithm>
#include <map>

#include "dowker/errors.hpp"

namespace dowker {

namespace detail {

void guard_complex(const SimplicialComplex& K, int max_dimension) {
  if (K.dimension() > max_dimension)
    fail(errc::dimension_guard, "complex of dimension " + std::to_string(K.dimension()) +
                                    " exceeds max dimension " + std::to_string(max_dimension));
}

SimplicialMap collapse_transport(const SimplicialMap& M) {
  CollapseResult cs = strong_collapse(M.source());
  CollapseResult ct = strong_collapse(M.target());
  return compose(ct.retraction, compose(M, cs.inclusion));
}

}  // namespace detail

bool HomologyResult::is_zero() const {
  for (const auto& g : groups)
    if (g.betti != 0 || !g.torsion.empty()) return false;
  return true;
}

const HomologyGroup* HomologyResult::group_at(int dim) const {
  for (const auto& g : groups)
    if (g.dim == dim) return &g;
  return nullptr;
}

bool same_homology(const HomologyResult& a, const HomologyResult& b) {
  int lo = 0, hi = -1;
  for (const auto& g : a.groups) {
    lo = std::min(lo, g.dim);
    hi = std::max(hi, g.dim);
  }
  for (const auto& g : b.groups) {
    lo = std::min(lo, g.dim);
    hi = std::max(hi, g.dim);
  }
  for (int d = lo; d <= hi; ++d) {
    const HomologyGroup* ga = a.group_at(d);
    const HomologyGroup* gb = b.group_at(d);
    long long ba = ga ? ga->betti : 0;
    long long bb = gb ? gb->betti : 0;
    if (ba != bb) return false;
    std::vector<mpz_class> ta = ga ? ga->torsion : std::vector<mpz_class>{};
    std::vector<mpz_class> tb = gb ? gb->torsion : std::vector<mpz_class>{};
    if (ta != tb) return false;
  }
  return true;
}

HomologyResult homology_of_chain(const ChainComplex& C, bool reduced) {
  HomologyResult out;
  out.reduced = reduced;
  if (C.ranks.empty()) return out;

  // invariant factors of every boundary, indexed like C.boundary
  std::vector<InvariantFactors> inv(C.boundary.size());
  for (std::size_t i = 0; i < C.boundary.size(); ++i) inv[i] = invariant_factors(C.boundary[i]);

  for (int d = C.min_degree; d <= C.top_degree(); ++d) {
    std::size_t i = static_cast<std::size_t>(d - C.min_degree);
    HomologyGroup g;
    g.dim = d;
    std::size_t r_out = inv[i].rank;  // rank of boundary leaving degree d
    std::size_t r_in = i + 1 < inv.size() ? inv[i + 1].rank : 0;
    g.betti = static_cast<long long>(C.ranks[i]) - static_cast<long long>(r_out) -
              static_cast<long long>(r_in);
    if (i + 1 < inv.size())
      for (const auto& fct : inv[i + 1].factors)
        if (fct > 1) g.torsion.push_back(fct);
    out.groups.push_back(std::move(g));
  }
  return out;
}

HomologyResult homology(const SimplicialComplex& K, bool reduced, int max_dimension) {
  detail::guard_complex(K, max_dimension);
  SimplicialComplex core = strong_collapse(K).core;
  HomologyResult res = homology_of_chain(chain_complex(core, reduced, core.dimension()), reduced);
  // pad the degrees the collapse removed; they are zero
  for (int d = core.dimension() + 1; d <= K.dimension(); ++d)
    res.groups.push_back(HomologyGroup{d, 0, {}});
  return res;
}

bool is_quasi_isomorphism(const SimplicialMap& F, int max_dimension) {
  detail::guard_complex(F.source(), max_dimension);
  detail::guard_complex(F.target(), max_dimension);
  SimplicialMap g = detail::collapse_transport(F);
  int wide = std::max(g.source().dimension(), g.target().dimension());
  ChainMap cm = induced_chain_map(g, true, wide);
  return homology_of_chain(mapping_cone(cm), true).is_zero();
}

}  // namespace dowker
