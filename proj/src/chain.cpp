#include "dowker/chain.hpp"

#include <algorithm>

#include "dowker/errors.hpp"

namespace dowker {

namespace {

void guard_dimension(const SimplicialComplex& K, int max_dimension) {
  if (K.dimension() > max_dimension)
    fail(errc::dimension_guard, "complex of dimension " + std::to_string(K.dimension()) +
                                    " exceeds max dimension " + std::to_string(max_dimension));
}

std::size_t basis_index(const std::vector<Simplex>& basis, const Simplex& s) {
  auto it = std::lower_bound(basis.begin(), basis.end(), s);
  if (it == basis.end() || !(*it == s)) fail(errc::not_a_simplex, "face missing from basis");
  return static_cast<std::size_t>(it - basis.begin());
}

// parity of the permutation sorting vs (all entries distinct)
int sort_sign(const std::vector<Vertex>& vs) {
  int inversions = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[j] < vs[i]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

bool ChainComplex::boundaries_compose_to_zero() const {
  for (int d = min_degree + 1; d <= top_degree(); ++d) {
    const SparseIntMatrix* hi = boundary_at(d);
    const SparseIntMatrix* lo = boundary_at(d - 1);
    if (!hi || !lo) continue;
    if (!lo->mul(*hi).is_zero()) return false;
  }
  return true;
}

bool ChainMap::satisfies_chain_square() const {
  int lo = std::min(source.min_degree, target.min_degree);
  int hi = std::max(source.top_degree(), target.top_degree());
  for (int d = lo; d <= hi; ++d) {
    std::size_t sc = source.rank_at(d);
    std::size_t tr = target.rank_at(d - 1);
    const SparseIntMatrix* fd = matrix_at(d);
    const SparseIntMatrix* fdm1 = matrix_at(d - 1);
    const SparseIntMatrix* ds = source.boundary_at(d);
    const SparseIntMatrix* dt = target.boundary_at(d);
    if (sc == 0) continue;
    // target_boundary . f_d
    SparseIntMatrix left(tr, sc);
    if (dt && fd) left = dt->mul(*fd);
    SparseIntMatrix right(tr, sc);
    if (fdm1 && ds) right = fdm1->mul(*ds);
    if (!(left == right)) return false;
  }
  return true;
}

ChainComplex chain_complex(const SimplicialComplex& K, bool reduced, int max_dimension) {
  guard_dimension(K, max_dimension);
  ChainComplex C;
  const int dim = K.dimension();

  if (!reduced) {
    C.min_degree = 0;
    if (dim < 0) return C;  // no chain groups at all
  } else {
    C.min_degree = -1;
    C.ranks.push_back(1);
    C.boundary.emplace_back(0, 1);
    C.bases.emplace_back();
    if (dim < 0) return C;  // only the augmentation copy of Z
  }

  std::vector<std::vector<Simplex>> bases(static_cast<std::size_t>(dim) + 1);
  for (int k = 0; k <= dim; ++k) bases[static_cast<std::size_t>(k)] = K.k_simplices(k);

  for (int k = 0; k <= dim; ++k) {
    const auto& basis = bases[static_cast<std::size_t>(k)];
    std::size_t n = basis.size();
    std::size_t prev = k == 0 ? 0 : bases[static_cast<std::size_t>(k - 1)].size();

    SparseIntMatrix d(k == 0 ? (reduced ? 1 : 0) : prev, n);
    if (k == 0 && reduced) {
      for (std::size_t j = 0; j < n; ++j) d.add_entry(0, j, 1);  // augmentation
    } else if (k > 0) {
      const auto& faces = bases[static_cast<std::size_t>(k - 1)];
      for (std::size_t j = 0; j < n; ++j) {
        const auto& vs = basis[j].vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
          std::vector<Vertex> face;
          face.reserve(vs.size() - 1);
          for (std::size_t t = 0; t < vs.size(); ++t)
            if (t != i) face.push_back(vs[t]);
          d.add_entry(basis_index(faces, Simplex::make(std::move(face))), j,
                      i % 2 == 0 ? 1 : -1);
        }
      }
    }
    C.ranks.push_back(n);
    C.boundary.push_back(std::move(d));
    C.bases.push_back(basis);
  }
  return C;
}

ChainMap induced_chain_map(const SimplicialMap& F, bool reduced, int max_dimension) {
  ChainMap f;
  f.source = chain_complex(F.source(), reduced, max_dimension);
  f.target = chain_complex(F.target(), reduced, max_dimension);
  f.min_degree = std::min(f.source.min_degree, f.target.min_degree);

  int hi = std::max(f.source.top_degree(), f.target.top_degree());
  for (int d = f.min_degree; d <= hi; ++d) {
    SparseIntMatrix m(f.target.rank_at(d), f.source.rank_at(d));
    if (d == -1) {
      if (f.source.rank_at(-1) && f.target.rank_at(-1)) m.add_entry(0, 0, 1);
    } else if (f.source.rank_at(d) && f.target.rank_at(d)) {
      const auto& src = f.source.bases[static_cast<std::size_t>(d - f.source.min_degree)];
      const auto& dst = f.target.bases[static_cast<std::size_t>(d - f.target.min_degree)];
      for (std::size_t j = 0; j < src.size(); ++j) {
        std::vector<Vertex> image;
        image.reserve(src[j].size());
        for (const auto& v : src[j].vertices()) image.push_back(F.apply(v));
        Simplex s = Simplex::make(image);
        if (s.size() != src[j].size()) continue;  // degenerate, maps to zero
        m.add_entry(basis_index(dst, s), j, sort_sign(image));
      }
    }
    f.mats.push_back(std::move(m));
  }
  return f;
}

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& A = f.source;
  const ChainComplex& B = f.target;
  ChainComplex C;
  C.min_degree = std::min(A.min_degree + 1, B.min_degree);
  int top = std::max(A.top_degree() + 1, B.top_degree());

  for (int d = C.min_degree; d <= top; ++d) {
    std::size_t na = A.rank_at(d - 1), nb = B.rank_at(d);
    std::size_t ma = A.rank_at(d - 2), mb = B.rank_at(d - 1);
    SparseIntMatrix m(ma + mb, na + nb);
    if (const SparseIntMatrix* dA = A.boundary_at(d - 1); dA && na)
      for (const auto& [ij, v] : dA->entries()) m.add_entry(ij.first, ij.second, -v);
    if (const SparseIntMatrix* fd = f.matrix_at(d - 1); fd && na && mb)
      for (const auto& [ij, v] : fd->entries()) m.add_entry(ma + ij.first, ij.second, -v);
    if (const SparseIntMatrix* dB = B.boundary_at(d); dB && nb)
      for (const auto& [ij, v] : dB->entries()) m.add_entry(ma + ij.first, na + ij.second, v);
    C.ranks.push_back(na + nb);
    C.boundary.push_back(std::move(m));
    C.bases.emplace_back();
  }
  return C;
}

}  // namespace dowker
