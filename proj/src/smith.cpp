#include "dowker/smith.hpp"

#include <algorithm>
#include <set>

#include "dowker/errors.hpp"

namespace dowker {

namespace {

// ----- dense SNF ------------------------------------------------------------

struct Corner {
  std::size_t i = 0, j = 0;
  bool found = false;
};

Corner find_pivot(const IntMatrix& M, std::size_t t) {
  Corner best;
  mpz_class best_abs;
  for (std::size_t i = t; i < M.rows(); ++i)
    for (std::size_t j = t; j < M.cols(); ++j) {
      const mpz_class& v = M.at(i, j);
      if (v == 0) continue;
      mpz_class a = abs(v);
      if (!best.found || a < best_abs) {
        best = {i, j, true};
        best_abs = a;
        if (best_abs == 1) return best;  // cannot beat a unit
      }
    }
  return best;
}

void swap_rows(IntMatrix& M, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
}

void swap_cols(IntMatrix& M, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
}

// rop -= q * src, using mpz primitives to avoid temporaries
inline void submul(mpz_class& rop, const mpz_class& q, const mpz_class& src) {
  mpz_submul(rop.get_mpz_t(), q.get_mpz_t(), src.get_mpz_t());
}

SmithResult snf_impl(const IntMatrix& input, bool par) {
  const std::size_t R = input.rows(), C = input.cols();
  SmithResult res{IntMatrix::identity(R), input, IntMatrix::identity(C)};
  IntMatrix& M = res.D;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;
  (void)par;

  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    Corner c = find_pivot(M, t);
    if (!c.found) break;  // rest of the matrix is zero
    swap_rows(M, t, c.i);
    swap_rows(U, t, c.i);
    swap_cols(M, t, c.j);
    swap_cols(V, t, c.j);

    for (;;) {
      // clear column t with row operations
      bool col_dirty = false;
#pragma omp parallel for if (par) schedule(static)
      for (long long ii = static_cast<long long>(t) + 1; ii < static_cast<long long>(R); ++ii) {
        std::size_t i = static_cast<std::size_t>(ii);
        if (M.at(i, t) == 0) continue;
        mpz_class q = M.at(i, t) / M.at(t, t);  // truncated
        if (q != 0) {
          for (std::size_t j = t; j < C; ++j) submul(M.at(i, j), q, M.at(t, j));
          for (std::size_t j = 0; j < R; ++j) submul(U.at(i, j), q, U.at(t, j));
        }
      }
      for (std::size_t i = t + 1; i < R && !col_dirty; ++i)
        if (M.at(i, t) != 0) col_dirty = true;
      if (col_dirty) {  // a remainder beat the pivot; re-pivot
        Corner c2 = find_pivot(M, t);
        swap_rows(M, t, c2.i);
        swap_rows(U, t, c2.i);
        swap_cols(M, t, c2.j);
        swap_cols(V, t, c2.j);
        continue;
      }

      // clear row t with column operations (column t is e_t now, so these
      // touch row t only)
      bool row_dirty = false;
#pragma omp parallel for if (par) schedule(static)
      for (long long jj = static_cast<long long>(t) + 1; jj < static_cast<long long>(C); ++jj) {
        std::size_t j = static_cast<std::size_t>(jj);
        if (M.at(t, j) == 0) continue;
        mpz_class q = M.at(t, j) / M.at(t, t);
        if (q != 0) {
          for (std::size_t i = t; i < R; ++i) submul(M.at(i, j), q, M.at(i, t));
          for (std::size_t i = 0; i < C; ++i) submul(V.at(i, j), q, V.at(i, t));
        }
      }
      for (std::size_t j = t + 1; j < C && !row_dirty; ++j)
        if (M.at(t, j) != 0) row_dirty = true;
      if (row_dirty) {
        Corner c2 = find_pivot(M, t);
        swap_rows(M, t, c2.i);
        swap_rows(U, t, c2.i);
        swap_cols(M, t, c2.j);
        swap_cols(V, t, c2.j);
        continue;
      }

      // pivot is alone in its row and column; enforce divisibility
      bool fixed = true;
      for (std::size_t i = t + 1; i < R && fixed; ++i)
        for (std::size_t j = t + 1; j < C && fixed; ++j)
          if (M.at(i, j) % M.at(t, t) != 0) {
            // fold the offending row into row t; the next reduction pass
            // produces a strictly smaller pivot
            for (std::size_t jj2 = t; jj2 < C; ++jj2) M.at(t, jj2) += M.at(i, jj2);
            for (std::size_t jj2 = 0; jj2 < R; ++jj2) U.at(t, jj2) += U.at(i, jj2);
            fixed = false;
          }
      if (fixed) break;
    }

    if (M.at(t, t) < 0) {
      for (std::size_t j = t; j < C; ++j) M.at(t, j) = -M.at(t, j);
      for (std::size_t j = 0; j < R; ++j) U.at(t, j) = -U.at(t, j);
    }
  }
  return res;
}

}  // namespace

SmithResult smith_normal_form_serial(const IntMatrix& M) { return snf_impl(M, false); }
SmithResult smith_normal_form_parallel(const IntMatrix& M) { return snf_impl(M, true); }

SmithResult smith_normal_form(const IntMatrix& M) {
  // the parallel sweeps only pay off once rows/cols are long
  bool big = std::min(M.rows(), M.cols()) >= 64;
#ifdef _OPENMP
  return big ? smith_normal_form_parallel(M) : smith_normal_form_serial(M);
#else
  (void)big;
  return smith_normal_form_serial(M);
#endif
}

// ----- sparse ---------------------------------------------------------------

void SparseIntMatrix::add_entry(std::size_t i, std::size_t j, mpz_class v) {
  if (i >= rows_ || j >= cols_) fail(errc::too_large, "sparse entry out of bounds");
  if (v == 0) return;
  auto key = std::make_pair(i, j);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, std::move(v));
  } else {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix out(rows_, cols_);
  for (const auto& [ij, v] : entries_) out.at(ij.first, ij.second) = v;
  return out;
}

SparseIntMatrix SparseIntMatrix::mul(const SparseIntMatrix& other) const {
  if (cols_ != other.rows_) fail(errc::too_large, "sparse product shape mismatch");
  // group our entries by column once
  std::vector<std::vector<std::pair<std::size_t, const mpz_class*>>> by_col(cols_);
  for (const auto& [ij, v] : entries_) by_col[ij.second].emplace_back(ij.first, &v);
  SparseIntMatrix out(rows_, other.cols_);
  for (const auto& [kj, v] : other.entries_)
    for (const auto& [i, a] : by_col[kj.first]) out.add_entry(i, kj.second, (*a) * v);
  return out;
}

SparseIntMatrix SparseIntMatrix::negated() const {
  SparseIntMatrix out(rows_, cols_);
  for (const auto& [ij, v] : entries_) out.add_entry(ij.first, ij.second, -v);
  return out;
}

bool SparseIntMatrix::is_zero() const { return entries_.empty(); }

InvariantFactors invariant_factors(const SparseIntMatrix& M) {
  // working form: rows as (col -> value) maps plus column occupancy
  std::vector<std::map<std::size_t, mpz_class>> row(M.rows());
  std::vector<std::set<std::size_t>> col_rows(M.cols());
  std::vector<std::size_t> units_in_col(M.cols(), 0);
  for (const auto& [ij, v] : M.entries()) {
    row[ij.first][ij.second] = v;
    col_rows[ij.second].insert(ij.first);
    if (v == 1 || v == -1) ++units_in_col[ij.second];
  }

  auto is_unit = [](const mpz_class& v) { return v == 1 || v == -1; };

  // columns that still hold a unit entry, keyed by (nnz, col) for a cheap
  // sparsest-first pivot rule
  std::set<std::pair<std::size_t, std::size_t>> unit_cols;
  for (std::size_t j = 0; j < M.cols(); ++j)
    if (units_in_col[j] > 0) unit_cols.insert({col_rows[j].size(), j});

  auto write_entry = [&](std::size_t i, std::size_t j, const mpz_class& nv) {
    auto it = row[i].find(j);
    bool old_unit = it != row[i].end() && is_unit(it->second);
    bool had = it != row[i].end();
    bool has = nv != 0;
    bool new_unit = has && is_unit(nv);
    if (had && !has) {
      unit_cols.erase({col_rows[j].size(), j});
      row[i].erase(it);
      col_rows[j].erase(i);
      if (old_unit) --units_in_col[j];
      if (units_in_col[j] > 0) unit_cols.insert({col_rows[j].size(), j});
    } else if (!had && has) {
      unit_cols.erase({col_rows[j].size(), j});
      row[i][j] = nv;
      col_rows[j].insert(i);
      if (new_unit) ++units_in_col[j];
      if (units_in_col[j] > 0) unit_cols.insert({col_rows[j].size(), j});
    } else if (had) {
      it->second = nv;
      if (old_unit != new_unit) {
        unit_cols.erase({col_rows[j].size(), j});
        units_in_col[j] += new_unit ? 1 : 0;
        units_in_col[j] -= old_unit ? 1 : 0;
        if (units_in_col[j] > 0) unit_cols.insert({col_rows[j].size(), j});
      }
    }
  };

  std::vector<bool> row_dead(M.rows(), false), col_dead(M.cols(), false);
  std::size_t unit_rank = 0;

  while (!unit_cols.empty()) {
    std::size_t j = unit_cols.begin()->second;
    // best unit row in column j: fewest entries, then lowest index
    std::size_t pi = M.rows();
    std::size_t best_nnz = 0;
    for (std::size_t i : col_rows[j]) {
      if (!is_unit(row[i][j])) continue;
      if (pi == M.rows() || row[i].size() < best_nnz) {
        pi = i;
        best_nnz = row[i].size();
      }
    }
    mpz_class pivot = row[pi][j];

    // eliminate every other entry of column j with row operations
    std::vector<std::size_t> victims(col_rows[j].begin(), col_rows[j].end());
    for (std::size_t i : victims) {
      if (i == pi) continue;
      mpz_class q = row[i][j] * pivot;  // == row[i][j] / pivot since |pivot| = 1
      // row_i -= q * row_pi
      for (const auto& [jj, pv] : row[pi]) {
        mpz_class nv = 0;
        auto it = row[i].find(jj);
        if (it != row[i].end()) nv = it->second;
        nv -= q * pv;
        write_entry(i, jj, nv);
      }
    }

    // retire pivot row and column; clearing the pivot row would only touch
    // dead entries, so the residual is untouched by skipping it
    row_dead[pi] = true;
    col_dead[j] = true;
    for (const auto& [jj, v] : row[pi]) {
      unit_cols.erase({col_rows[jj].size(), jj});
      col_rows[jj].erase(pi);
      if (is_unit(v)) --units_in_col[jj];
      if (units_in_col[jj] > 0 && !col_dead[jj]) unit_cols.insert({col_rows[jj].size(), jj});
    }
    row[pi].clear();
    ++unit_rank;
  }

  // dense residue
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t i = 0; i < M.rows(); ++i)
    if (!row_dead[i] && !row[i].empty()) live_rows.push_back(i);
  std::vector<std::size_t> col_pos(M.cols(), SIZE_MAX);
  for (std::size_t j = 0; j < M.cols(); ++j)
    if (!col_dead[j] && !col_rows[j].empty()) {
      col_pos[j] = live_cols.size();
      live_cols.push_back(j);
    }

  InvariantFactors out;
  out.factors.assign(unit_rank, mpz_class(1));
  out.rank = unit_rank;
  if (live_rows.empty() || live_cols.empty()) return out;

  IntMatrix residue(live_rows.size(), live_cols.size());
  for (std::size_t a = 0; a < live_rows.size(); ++a)
    for (const auto& [j, v] : row[live_rows[a]]) residue.at(a, col_pos[j]) = v;

  SmithResult snf = smith_normal_form_serial(residue);
  for (std::size_t t = 0; t < std::min(residue.rows(), residue.cols()); ++t) {
    if (snf.D.at(t, t) == 0) break;
    out.factors.push_back(snf.D.at(t, t));
    ++out.rank;
  }
  return out;
}

}  // namespace dowker
