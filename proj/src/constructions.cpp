#include "dowker/constructions.hpp"

#include <algorithm>
#include <map>

#include "dowker/concepts.hpp"
#include "dowker/errors.hpp"

namespace dowker {

std::string pair_label(const Label& x, const Label& y) { return "(" + x + "," + y + ")"; }

namespace {

// rendered pair labels for all pairs of r, with an aliasing check
std::vector<Vertex> pair_vertices(const Relation& r) {
  std::vector<Vertex> out;
  std::map<std::string, LabelPair> rendered;
  out.reserve(r.pairs().size());
  for (const auto& [x, y] : r.pairs()) {
    std::string l = pair_label(x, y);
    auto [it, fresh] = rendered.emplace(l, LabelPair(x, y));
    if (!fresh)
      fail(errc::duplicate_label, "pair labels collide: '" + l + "' renders two distinct pairs");
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace

SimplicialComplex dowker_complex(const Relation& r) {
  // facets are the maximal witness columns X_y
  std::vector<Simplex> columns;
  for (const auto& y : r.y_labels()) {
    std::vector<Vertex> col;
    for (const auto& [x, yy] : r.pairs())
      if (yy == y) col.push_back(x);
    if (!col.empty()) columns.push_back(Simplex::make(std::move(col)));
  }
  return SimplicialComplex::from_facets(r.x_labels(), columns);
}

SimplicialComplex rectangle_complex(const Relation& r, int max_dimension) {
  std::vector<Simplex> rects;
  for (const auto& c : enumerate_concepts(r)) {
    if (c.extent.empty() || c.intent.empty()) continue;
    std::size_t cells = c.extent.size() * c.intent.size();
    if (cells > static_cast<std::size_t>(max_dimension) + 1)
      fail(errc::dimension_guard, "rectangle with " + std::to_string(cells) +
                                      " cells exceeds max dimension " +
                                      std::to_string(max_dimension));
    std::vector<Vertex> vs;
    vs.reserve(cells);
    for (const auto& x : c.extent)
      for (const auto& y : c.intent) vs.push_back(pair_label(x, y));
    rects.push_back(Simplex::make(std::move(vs)));
  }
  return SimplicialComplex::from_facets(pair_vertices(r), rects);
}

SimplicialMap pi(const Relation& r, int max_dimension) {
  std::map<Vertex, Vertex> m;
  for (const auto& [x, y] : r.pairs()) m[pair_label(x, y)] = x;
  return make_simplicial_map(rectangle_complex(r, max_dimension), dowker_complex(r), std::move(m));
}

SimplicialMap pi_hat(const Relation& r, int max_dimension) {
  std::map<Vertex, Vertex> m;
  for (const auto& [x, y] : r.pairs()) m[pair_label(x, y)] = y;
  return make_simplicial_map(rectangle_complex(r, max_dimension),
                             dowker_complex(r.transpose()), std::move(m));
}

SimplicialMap swap_iso(const Relation& r, int max_dimension) {
  std::map<Vertex, Vertex> m;
  for (const auto& [x, y] : r.pairs()) m[pair_label(x, y)] = pair_label(y, x);
  return make_simplicial_map(rectangle_complex(r, max_dimension),
                             rectangle_complex(r.transpose(), max_dimension), std::move(m));
}

SimplicialMap dowker_map(const RelationMorphism& f) {
  SimplicialComplex src = dowker_complex(f.source());
  SimplicialComplex dst = dowker_complex(f.target());
  std::map<Vertex, Vertex> m;
  for (const auto& v : src.support()) m[v] = f.apply_x(v);
  return make_simplicial_map(std::move(src), std::move(dst), std::move(m));
}

SimplicialMap rectangle_map(const RelationMorphism& f, int max_dimension) {
  std::map<Vertex, Vertex> m;
  for (const auto& [x, y] : f.source().pairs())
    m[pair_label(x, y)] = pair_label(f.apply_x(x), f.apply_y(y));
  return make_simplicial_map(rectangle_complex(f.source(), max_dimension),
                             rectangle_complex(f.target(), max_dimension), std::move(m));
}

std::vector<Label> witness_Y(const Relation& r, const Simplex& s) {
  for (const auto& v : s.vertices())
    if (std::find(r.x_labels().begin(), r.x_labels().end(), v) == r.x_labels().end())
      fail(errc::not_a_simplex, "'" + v + "' is not an x-label of the relation");
  std::vector<Label> out;
  for (const auto& y : r.y_labels()) {
    bool all = true;
    for (const auto& x : s.vertices())
      if (!r.contains(x, y)) {
        all = false;
        break;
      }
    if (all) out.push_back(y);
  }
  if (s.size() > 0 && out.empty())
    fail(errc::not_a_simplex, "no witness: the given vertices are not a Dowker simplex");
  std::sort(out.begin(), out.end());
  return out;
}

Simplex inverse_image_simplex(const Relation& r, const Simplex& s) {
  std::vector<Label> ys = witness_Y(r, s);
  std::vector<Vertex> vs;
  vs.reserve(s.size() * ys.size());
  for (const auto& x : s.vertices())
    for (const auto& y : ys) vs.push_back(pair_label(x, y));
  return Simplex::make(std::move(vs));
}

NaturalityReport check_naturality(const RelationMorphism& f, int max_dimension) {
  NaturalityReport report;
  const Relation& r0 = f.source();
  const Relation& r1 = f.target();

  SimplicialMap ef = rectangle_map(f, max_dimension);
  SimplicialMap df = dowker_map(f);
  SimplicialMap dft = dowker_map(f.transpose());
  SimplicialMap pi0 = pi(r0, max_dimension);
  SimplicialMap pi1 = pi(r1, max_dimension);
  SimplicialMap pihat0 = pi_hat(r0, max_dimension);
  SimplicialMap pihat1 = pi_hat(r1, max_dimension);

  for (const auto& [x, y] : r0.pairs()) {
    Vertex v = pair_label(x, y);
    Vertex left1 = df.apply(pi0.apply(v));
    Vertex right1 = pi1.apply(ef.apply(v));
    if (left1 != right1) {
      report.ok = false;
      report.mismatches.push_back("first-projection square breaks at " + v + ": " + left1 +
                                  " vs " + right1);
    }
    Vertex left2 = dft.apply(pihat0.apply(v));
    Vertex right2 = pihat1.apply(ef.apply(v));
    if (left2 != right2) {
      report.ok = false;
      report.mismatches.push_back("second-projection square breaks at " + v + ": " + left2 +
                                  " vs " + right2);
    }
  }
  return report;
}

}  // namespace dowker
