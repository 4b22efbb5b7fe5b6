#pragma once

#include <gmpxx.h>

#include <vector>

#include "dowker/chain.hpp"
#include "dowker/field.hpp"
#include "dowker/simplicial.hpp"

namespace dowker {

struct HomologyGroup {
  int dim = 0;
  long long betti = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1, each dividing the next

  bool operator==(const HomologyGroup&) const = default;
};

struct HomologyResult {
  bool reduced = false;
  std::vector<HomologyGroup> groups;  // ascending dim

  bool is_zero() const;
  const HomologyGroup* group_at(int dim) const;
};

// Equal as functions of the degree (missing groups count as zero).
bool same_homology(const HomologyResult& a, const HomologyResult& b);

// Betti/torsion of an explicit chain complex via Smith normal forms.
HomologyResult homology_of_chain(const ChainComplex& C, bool reduced);

// Homology of a complex.  Strong-collapses to the core first (an exact,
// homotopy-type-preserving reduction), so dense rectangle complexes stay
// tractable; the dimension guard applies to the complex as given.
HomologyResult homology(const SimplicialComplex& K, bool reduced, int max_dimension = 25);

// True iff the mapping cone of the induced (augmented) chain map is acyclic
// over Z.  Computed on the strong-collapse cores: with i and r the collapse
// inclusion/retraction, F is a quasi-isomorphism iff r_target . F . i_source
// is, because collapses are homotopy equivalences.
bool is_quasi_isomorphism(const SimplicialMap& F, int max_dimension = 25);

// ----- field-level homology -------------------------------------------------

// Chosen cycle representatives for H_k over a field: reps spans the quotient
// (deterministic: kernel columns kept greedily against the boundary image),
// bnd is the image basis of the next boundary.
template <class F>
struct HomologyBasis {
  FieldMatrix<F> reps;
  FieldMatrix<F> bnd;
};

template <class F>
HomologyBasis<F> homology_basis(const F& f, const ChainComplex& C, int k) {
  std::size_t n = C.rank_at(k);
  HomologyBasis<F> out;
  out.reps = FieldMatrix<F>(f, n, 0);
  out.bnd = FieldMatrix<F>(f, n, 0);
  if (n == 0) return out;

  FieldMatrix<F> down = to_field(f, *C.boundary_at(k));
  FieldMatrix<F> kernel = kernel_basis(f, down);

  Eliminator<F> against(f, n);
  if (const SparseIntMatrix* up = C.boundary_at(k + 1)) {
    FieldMatrix<F> upf = to_field(f, *up);
    for (std::size_t j = 0; j < upf.cols; ++j)
      if (against.add(upf.col[j])) out.bnd.push_col(upf.col[j]);
  }
  for (std::size_t j = 0; j < kernel.cols; ++j)
    if (against.add(kernel.col[j])) out.reps.push_col(kernel.col[j]);
  return out;
}

// Matrix of H_k(g) with respect to the homology_basis representatives.
template <class F>
FieldMatrix<F> homology_map_on_chain(const F& f, const ChainMap& g, int k) {
  HomologyBasis<F> src = homology_basis(f, g.source, k);
  HomologyBasis<F> dst = homology_basis(f, g.target, k);
  std::size_t hs = src.reps.cols, ht = dst.reps.cols;
  std::size_t nt = g.target.rank_at(k);

  FieldMatrix<F> span(f, nt, 0);
  for (std::size_t j = 0; j < dst.reps.cols; ++j) span.push_col(dst.reps.col[j]);
  for (std::size_t j = 0; j < dst.bnd.cols; ++j) span.push_col(dst.bnd.col[j]);
  Solver<F> solver(f, span);

  const SparseIntMatrix* gk = g.matrix_at(k);
  FieldMatrix<F> out(f, ht, hs);
  for (std::size_t j = 0; j < hs; ++j) {
    std::vector<typename F::elem> w(nt, f.zero());
    if (gk)
      for (const auto& [ij, v] : gk->entries()) {
        const auto& zj = src.reps.at(ij.second, j);
        if (!f.is_zero(zj)) w[ij.first] = f.add(w[ij.first], f.mul(f.from_int(v), zj));
      }
    std::vector<typename F::elem> x = solver.solve(w);
    for (std::size_t i = 0; i < ht; ++i) out.at(i, j) = x[i];
  }
  return out;
}

// H_k of a simplicial map over a field, computed on the strong-collapse
// cores (the collapse maps induce mutually inverse isomorphisms, so this is
// the same linear map written in the cores' canonical bases).
template <class F>
FieldMatrix<F> homology_map_matrix(const F& f, const SimplicialMap& M, int k,
                                   int max_dimension = 25);

namespace detail {
void guard_complex(const SimplicialComplex& K, int max_dimension);
SimplicialMap collapse_transport(const SimplicialMap& M);  // r_target . M . i_source
}  // namespace detail

// Betti numbers over a field (rank-nullity on the boundary matrices); the
// torsion lists stay empty.  Same collapse preprocessing as homology().
template <class F>
HomologyResult field_homology(const F& f, const SimplicialComplex& K, bool reduced,
                              int max_dimension = 25) {
  detail::guard_complex(K, max_dimension);
  SimplicialComplex core = strong_collapse(K).core;
  ChainComplex C = chain_complex(core, reduced, core.dimension());
  HomologyResult out;
  out.reduced = reduced;
  std::vector<std::size_t> rk(C.boundary.size(), 0);
  for (std::size_t i = 0; i < C.boundary.size(); ++i)
    rk[i] = field_rank(f, to_field(f, C.boundary[i]));
  for (int d = C.min_degree; d <= C.top_degree(); ++d) {
    std::size_t i = static_cast<std::size_t>(d - C.min_degree);
    std::size_t r_in = i + 1 < rk.size() ? rk[i + 1] : 0;
    out.groups.push_back(HomologyGroup{
        d,
        static_cast<long long>(C.ranks[i]) - static_cast<long long>(rk[i]) -
            static_cast<long long>(r_in),
        {}});
  }
  for (int d = core.dimension() + 1; d <= K.dimension(); ++d)
    out.groups.push_back(HomologyGroup{d, 0, {}});
  return out;
}

template <class F>
FieldMatrix<F> homology_map_matrix(const F& f, const SimplicialMap& M, int k,
                                   int max_dimension) {
  detail::guard_complex(M.source(), max_dimension);
  detail::guard_complex(M.target(), max_dimension);
  SimplicialMap g = detail::collapse_transport(M);
  int wide = std::max(g.source().dimension(), g.target().dimension());
  ChainMap cm = induced_chain_map(g, false, wide);
  return homology_map_on_chain(f, cm, k);
}

}  // namespace dowker
