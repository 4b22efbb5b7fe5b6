#include "dowker/concepts.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "dowker/errors.hpp"

namespace dowker {

namespace {

// little fixed-width bitset over 64-bit blocks; n stays small here but the
// block form keeps enumerate_concepts free of artificial universe limits
struct Bits {
  std::size_t n = 0;
  std::vector<std::uint64_t> w;

  explicit Bits(std::size_t n_ = 0) : n(n_), w((n_ + 63) / 64, 0) {}

  void set(std::size_t i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
  void reset(std::size_t i) { w[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }
  bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }

  void fill() {
    for (auto& x : w) x = ~std::uint64_t(0);
    trim();
  }
  void trim() {
    if (n % 64 && !w.empty()) w.back() &= (std::uint64_t(1) << (n % 64)) - 1;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    return *this;
  }
  bool contains(const Bits& o) const {  // o subset of this
    for (std::size_t i = 0; i < w.size(); ++i)
      if ((o.w[i] & ~w[i]) != 0) return false;
    return true;
  }
  bool operator==(const Bits&) const = default;
  bool operator<(const Bits& o) const { return w < o.w; }
};

struct Context {
  const Relation* r;
  std::size_t nx, ny;
  std::vector<Bits> row;  // per x: its set of y's

  explicit Context(const Relation& rel) : r(&rel) {
    nx = rel.x_labels().size();
    ny = rel.y_labels().size();
    std::map<Label, std::size_t> yi;
    for (std::size_t j = 0; j < ny; ++j) yi[rel.y_labels()[j]] = j;
    std::map<Label, std::size_t> xi;
    for (std::size_t i = 0; i < nx; ++i) xi[rel.x_labels()[i]] = i;
    row.assign(nx, Bits(ny));
    for (const auto& [x, y] : rel.pairs()) row[xi[x]].set(yi[y]);
  }

  Bits up(const Bits& U) const {
    Bits V(ny);
    V.fill();
    for (std::size_t i = 0; i < nx; ++i)
      if (U.test(i)) V &= row[i];
    return V;
  }

  Bits down(const Bits& V) const {
    Bits U(nx);
    for (std::size_t i = 0; i < nx; ++i)
      if (row[i].contains(V)) U.set(i);
    return U;
  }

  Bits close(const Bits& U) const { return down(up(U)); }

  FormalConcept concept_of(const Bits& U) const {
    FormalConcept c;
    for (std::size_t i = 0; i < nx; ++i)
      if (U.test(i)) c.extent.push_back(r->x_labels()[i]);
    Bits V = up(U);
    for (std::size_t j = 0; j < ny; ++j)
      if (V.test(j)) c.intent.push_back(r->y_labels()[j]);
    std::sort(c.extent.begin(), c.extent.end());
    std::sort(c.intent.begin(), c.intent.end());
    return c;
  }
};

std::vector<std::size_t> indices_of(const std::vector<Label>& universe,
                                    const std::vector<Label>& subset, const char* side) {
  std::map<Label, std::size_t> pos;
  for (std::size_t i = 0; i < universe.size(); ++i) pos[universe[i]] = i;
  std::set<std::size_t> out;
  for (const auto& l : subset) {
    auto it = pos.find(l);
    if (it == pos.end())
      fail(errc::unknown_label, std::string("label '") + l + "' not in " + side + " universe");
    out.insert(it->second);
  }
  return {out.begin(), out.end()};
}

void sort_concepts(std::vector<FormalConcept>& cs) {
  std::sort(cs.begin(), cs.end(), [](const FormalConcept& a, const FormalConcept& b) {
    if (a.extent != b.extent) return a.extent < b.extent;
    return a.intent < b.intent;
  });
}

}  // namespace

std::vector<Label> derive_up(const Relation& r, const std::vector<Label>& U) {
  Context ctx(r);
  Bits u(ctx.nx);
  for (auto i : indices_of(r.x_labels(), U, "x")) u.set(i);
  Bits v = ctx.up(u);
  std::vector<Label> out;
  for (std::size_t j = 0; j < ctx.ny; ++j)
    if (v.test(j)) out.push_back(r.y_labels()[j]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> derive_down(const Relation& r, const std::vector<Label>& V) {
  Context ctx(r);
  Bits v(ctx.ny);
  for (auto j : indices_of(r.y_labels(), V, "y")) v.set(j);
  Bits u = ctx.down(v);
  std::vector<Label> out;
  for (std::size_t i = 0; i < ctx.nx; ++i)
    if (u.test(i)) out.push_back(r.x_labels()[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FormalConcept> enumerate_concepts(const Relation& r) {
  Context ctx(r);
  const std::size_t n = ctx.nx;
  std::vector<FormalConcept> out;

  Bits A = ctx.close(Bits(n));
  out.push_back(ctx.concept_of(A));

  // NextClosure: repeatedly find the lectically next closed extent
  while (true) {
    bool advanced = false;
    for (std::size_t ii = n; ii-- > 0;) {
      if (A.test(ii)) {
        A.reset(ii);
        continue;
      }
      Bits probe = A;
      probe.set(ii);
      Bits B = ctx.close(probe);
      // accept iff B adds nothing below ii beyond A
      bool ok = true;
      for (std::size_t k = 0; k < ii && ok; ++k)
        if (B.test(k) && !A.test(k)) ok = false;
      if (ok) {
        A = B;
        out.push_back(ctx.concept_of(A));
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  sort_concepts(out);
  return out;
}

std::vector<FormalConcept> brute_force_concepts(const Relation& r) {
  if (r.x_labels().size() > 20)
    fail(errc::too_large, "brute-force concept scan is capped at 20 x-labels");
  Context ctx(r);
  const std::size_t n = ctx.nx;
  std::set<Bits> seen;
  std::vector<FormalConcept> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    Bits u(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) u.set(i);
    Bits c = ctx.close(u);
    if (seen.insert(c).second) out.push_back(ctx.concept_of(c));
  }
  sort_concepts(out);
  return out;
}

bool lattice_leq(const FormalConcept& a, const FormalConcept& b) {
  return std::includes(b.extent.begin(), b.extent.end(), a.extent.begin(), a.extent.end());
}

}  // namespace dowker
