#include "dowker/simplicial.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "dowker/errors.hpp"

namespace dowker {

namespace {

std::vector<Vertex> intersect_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string render(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    if (i) out += ",";
    out += s.vertices()[i];
  }
  return out + "}";
}

}  // namespace

Simplex Simplex::make(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  Simplex s;
  s.v_ = std::move(vertices);
  return s;
}

bool Simplex::subset_of(const Simplex& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

bool Simplex::contains_vertex(const Vertex& v) const {
  return std::binary_search(v_.begin(), v_.end(), v);
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Vertex> vertex_set,
                                                 const std::vector<Simplex>& candidates) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vertex_set)
    if (!seen.insert(v).second) fail(errc::duplicate_label, "vertex '" + v + "' repeats");
  for (const auto& c : candidates)
    for (const auto& v : c.vertices())
      if (!seen.count(v)) fail(errc::unknown_vertex, "facet vertex '" + v + "' not declared");

  // absorption: keep only inclusion-maximal candidates
  std::vector<Simplex> pool;
  for (const auto& c : candidates)
    if (c.size() > 0) pool.push_back(c);
  std::sort(pool.begin(), pool.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<Simplex> kept;
  for (const auto& c : pool) {
    bool absorbed = false;
    for (const auto& f : kept)
      if (c.subset_of(f)) {
        absorbed = true;
        break;
      }
    if (!absorbed) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end());

  SimplicialComplex K;
  K.vertices_ = std::move(vertex_set);
  K.facets_ = std::move(kept);
  return K;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dim());
  return d;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.size() == 0) return false;
  for (const auto& f : facets_)
    if (s.subset_of(f)) return true;
  return false;
}

std::vector<Simplex> SimplicialComplex::k_simplices(int k) const {
  std::vector<Simplex> out;
  if (k < 0) return out;
  const std::size_t m = static_cast<std::size_t>(k) + 1;
  for (const auto& f : facets_) {
    const auto& vs = f.vertices();
    if (vs.size() < m) continue;
    // index combinations in lexicographic order
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    while (true) {
      Simplex s;
      {
        std::vector<Vertex> sub(m);
        for (std::size_t i = 0; i < m; ++i) sub[i] = vs[idx[i]];
        s = Simplex::make(std::move(sub));
      }
      out.push_back(std::move(s));
      // advance
      std::size_t i = m;
      while (i > 0 && idx[i - 1] == vs.size() - m + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int k = 0; k <= dimension(); ++k) {
    long long n = static_cast<long long>(k_simplices(k).size());
    chi += (k % 2 == 0) ? n : -n;
  }
  return chi;
}

std::vector<Vertex> SimplicialComplex::support() const {
  std::vector<Vertex> out;
  for (const auto& f : facets_) out.insert(out.end(), f.vertices().begin(), f.vertices().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const Vertex& SimplicialMap::apply(const Vertex& v) const {
  auto it = map_.find(v);
  if (it == map_.end()) fail(errc::unknown_vertex, "vertex '" + v + "' not in map domain");
  return it->second;
}

Simplex SimplicialMap::apply(const Simplex& s) const {
  std::vector<Vertex> image;
  image.reserve(s.size());
  for (const auto& v : s.vertices()) image.push_back(apply(v));
  return Simplex::make(std::move(image));
}

SimplicialMap make_simplicial_map(SimplicialComplex source, SimplicialComplex target,
                                  std::map<Vertex, Vertex> vertex_map) {
  SimplicialMap F;
  F.source_ = std::move(source);
  F.target_ = std::move(target);
  F.map_ = std::move(vertex_map);
  for (const auto& v : F.source_.support())
    if (!F.map_.count(v)) fail(errc::not_simplicial, "vertex '" + v + "' has no image");
  for (const auto& f : F.source_.facets()) {
    Simplex image = F.apply(f);
    if (!F.target_.contains(image))
      fail(errc::not_simplicial,
           "facet " + render(f) + " maps to " + render(image) + " which is not a target simplex");
  }
  return F;
}

SimplicialMap identity_map(const SimplicialComplex& K) {
  std::map<Vertex, Vertex> m;
  for (const auto& v : K.support()) m[v] = v;
  return make_simplicial_map(K, K, std::move(m));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source()))
    fail(errc::source_target_mismatch, "composition needs matching middle complex");
  std::map<Vertex, Vertex> m;
  for (const auto& [v, w] : f.vertex_map()) m[v] = g.apply(w);
  return make_simplicial_map(f.source(), g.target(), std::move(m));
}

SimplicialComplex fiber(const SimplicialMap& F, const Simplex& s) {
  if (!F.target().contains(s))
    fail(errc::not_a_simplex, render(s) + " is not a simplex of the target");
  std::vector<Simplex> candidates;
  for (const auto& f : F.source().facets()) {
    std::vector<Vertex> part;
    for (const auto& v : f.vertices())
      if (s.contains_vertex(F.apply(v))) part.push_back(v);
    if (!part.empty()) candidates.push_back(Simplex::make(std::move(part)));
  }
  std::vector<Vertex> verts;
  for (const auto& c : candidates)
    verts.insert(verts.end(), c.vertices().begin(), c.vertices().end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return SimplicialComplex::from_facets(std::move(verts), candidates);
}

SimplicialComplex nerve(const std::vector<SimplicialComplex>& cover) {
  if (cover.empty()) fail(errc::empty_cover, "cover has no members");
  for (const auto& K : cover)
    if (K.is_empty()) fail(errc::empty_cover, "cover member has no simplices");

  std::map<Vertex, std::vector<Vertex>> shared_by;  // vertex -> nerve indices
  std::vector<Vertex> labels(cover.size());
  for (std::size_t j = 0; j < cover.size(); ++j) {
    labels[j] = std::to_string(j);
    for (const auto& v : cover[j].support()) shared_by[v].push_back(labels[j]);
  }
  std::vector<Simplex> candidates;
  candidates.reserve(shared_by.size());
  for (auto& [v, js] : shared_by) candidates.push_back(Simplex::make(std::move(js)));
  std::vector<Vertex> vertex_set = labels;
  std::sort(vertex_set.begin(), vertex_set.end());
  return SimplicialComplex::from_facets(std::move(vertex_set), candidates);
}

std::optional<Vertex> cone_point(const SimplicialComplex& K) {
  if (K.is_empty()) return std::nullopt;
  std::vector<Vertex> common = K.facets()[0].vertices();
  for (std::size_t i = 1; i < K.facets().size() && !common.empty(); ++i)
    common = intersect_sorted(common, K.facets()[i].vertices());
  if (common.empty()) return std::nullopt;
  return common.front();
}

bool is_cone_point(const SimplicialComplex& K, const Vertex& v) {
  if (K.is_empty()) return false;
  for (const auto& f : K.facets())
    if (!f.contains_vertex(v)) return false;
  return true;
}

CollapseResult strong_collapse(const SimplicialComplex& K) {
  std::vector<Simplex> facets = K.facets();
  std::vector<Vertex> vertex_set = K.vertex_set();
  std::vector<std::pair<Vertex, Vertex>> deletions;  // (gone, dominator)

  while (true) {
    // collect vertex -> incident facets, in canonical vertex order
    std::map<Vertex, std::vector<const Simplex*>> incident;
    for (const auto& f : facets)
      for (const auto& v : f.vertices()) incident[v].push_back(&f);

    Vertex victim, dominator;
    bool found = false;
    for (const auto& [v, fs] : incident) {
      std::vector<Vertex> common = fs[0]->vertices();
      for (std::size_t i = 1; i < fs.size() && common.size() > 1; ++i)
        common = intersect_sorted(common, fs[i]->vertices());
      for (const auto& u : common)
        if (u != v) {
          victim = v;
          dominator = u;
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) break;

    deletions.emplace_back(victim, dominator);
    std::vector<Simplex> next;
    next.reserve(facets.size());
    for (const auto& f : facets) {
      if (!f.contains_vertex(victim)) {
        next.push_back(f);
        continue;
      }
      std::vector<Vertex> rest;
      for (const auto& v : f.vertices())
        if (v != victim) rest.push_back(v);
      if (!rest.empty()) next.push_back(Simplex::make(std::move(rest)));
    }
    vertex_set.erase(std::remove(vertex_set.begin(), vertex_set.end(), victim), vertex_set.end());
    facets = SimplicialComplex::from_facets(vertex_set, next).facets();
  }

  SimplicialComplex core = SimplicialComplex::from_facets(vertex_set, facets);

  // resolve each deleted vertex through later deletions to a core vertex
  std::map<Vertex, Vertex> to_core;
  for (const auto& v : core.support()) to_core[v] = v;
  for (auto it = deletions.rbegin(); it != deletions.rend(); ++it) {
    auto hop = to_core.find(it->second);
    to_core[it->first] = (hop != to_core.end()) ? hop->second : it->second;
  }

  std::map<Vertex, Vertex> include;
  for (const auto& v : core.support()) include[v] = v;

  CollapseResult out;
  out.core = core;
  out.inclusion = make_simplicial_map(core, K, std::move(include));
  out.retraction = make_simplicial_map(K, core, std::move(to_core));
  return out;
}

}  // namespace dowker
