#include <doctest.h>

#include <functional>
#include <map>
#include <optional>

#include "dowker/errors.hpp"
#include "dowker/simplicial.hpp"

using namespace dowker;

namespace {

Simplex sx(std::vector<Vertex> v) { return Simplex::make(std::move(v)); }

SimplicialComplex cx(std::vector<Vertex> verts, std::vector<std::vector<Vertex>> facets) {
  std::vector<Simplex> fs;
  for (auto& f : facets) fs.push_back(sx(f));
  return SimplicialComplex::from_facets(std::move(verts), fs);
}

bool raises(errc code, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("simplex normalization") {
  Simplex s = sx({"c", "a", "b", "a"});
  CHECK(s.vertices() == std::vector<Vertex>{"a", "b", "c"});
  CHECK(s.dim() == 2);
  CHECK(sx({}).dim() == -1);
  CHECK(sx({"a"}).subset_of(s));
  CHECK(!s.subset_of(sx({"a", "b"})));
  CHECK(s.contains_vertex("b"));
  CHECK(!s.contains_vertex("z"));
}

TEST_CASE("from_facets absorbs non-maximal candidates") {
  SimplicialComplex K = cx({"a", "b", "c", "d"}, {{"a", "b"}, {"b"}, {"a", "b"}, {"c"}});
  REQUIRE(K.facets().size() == 2);
  CHECK(K.facets()[0].vertices() == std::vector<Vertex>{"a", "b"});
  CHECK(K.facets()[1].vertices() == std::vector<Vertex>{"c"});
  CHECK(K.dimension() == 1);

  // d is declared but isolated
  CHECK(K.vertex_set().size() == 4);
  CHECK(K.support() == std::vector<Vertex>{"a", "b", "c"});

  CHECK(raises(errc::unknown_vertex, [] { cx({"a"}, {{"a", "b"}}); }));
  CHECK(raises(errc::duplicate_label,
               [] { SimplicialComplex::from_facets({"a", "a"}, {}); }));

  SimplicialComplex empty = cx({"a"}, {});
  CHECK(empty.is_empty());
  CHECK(empty.dimension() == -1);
  CHECK(empty.euler_characteristic() == 0);
}

TEST_CASE("containment and skeleta") {
  SimplicialComplex K = cx({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"c", "d"}});
  CHECK(K.contains(sx({"a", "c"})));
  CHECK(K.contains(sx({"c", "d"})));
  CHECK(!K.contains(sx({"a", "d"})));
  CHECK(!K.contains(sx({})));  // the empty simplex is not tracked as a member

  auto edges = K.k_simplices(1);
  REQUIRE(edges.size() == 4);  // ab ac bc cd
  CHECK(edges[0].vertices() == std::vector<Vertex>{"a", "b"});
  CHECK(K.k_simplices(0).size() == 4);
  CHECK(K.k_simplices(2).size() == 1);
  CHECK(K.k_simplices(3).empty());

  // chi = 4 - 4 + 1
  CHECK(K.euler_characteristic() == 1);
}

TEST_CASE("simplicial map validation") {
  SimplicialComplex K = cx({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  SimplicialComplex L = cx({"u", "v"}, {{"u", "v"}});

  SimplicialMap f = make_simplicial_map(K, L, {{"a", "u"}, {"b", "v"}, {"c", "u"}});
  CHECK(f.apply("a") == "u");
  CHECK(f.apply(sx({"a", "b"})).vertices() == std::vector<Vertex>{"u", "v"});
  // collapse of an edge to a vertex is fine
  SimplicialMap g = make_simplicial_map(K, L, {{"a", "u"}, {"b", "u"}, {"c", "u"}});
  CHECK(g.apply(sx({"a", "b"})).dim() == 0);

  // image of facet {a,b} would be {u,w} which is not a simplex of the target
  SimplicialComplex L2 = cx({"u", "w"}, {{"u"}, {"w"}});
  CHECK(raises(errc::not_simplicial, [&] {
    make_simplicial_map(K, L2, {{"a", "u"}, {"b", "w"}, {"c", "u"}});
  }));

  // missing vertex image
  CHECK(raises(errc::not_simplicial,
               [&] { make_simplicial_map(K, L, {{"a", "u"}, {"b", "v"}}); }));

  // isolated vertices need no image
  SimplicialComplex K2 = cx({"a", "b", "iso"}, {{"a", "b"}});
  SimplicialMap h = make_simplicial_map(K2, L, {{"a", "u"}, {"b", "v"}});
  CHECK(h.vertex_map().size() == 2);
}

TEST_CASE("map composition and fibers") {
  SimplicialComplex K = cx({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  SimplicialComplex L = cx({"u", "v"}, {{"u", "v"}});
  SimplicialMap f = make_simplicial_map(K, L, {{"a", "u"}, {"b", "v"}, {"c", "u"}});
  SimplicialMap id = identity_map(L);
  SimplicialMap idf = compose(id, f);
  CHECK(idf.vertex_map() == f.vertex_map());

  // fiber over {u}: simplices whose image lies in {u}
  SimplicialComplex fib = fiber(f, sx({"u"}));
  REQUIRE(fib.facets().size() == 2);
  CHECK(fib.facets()[0].vertices() == std::vector<Vertex>{"a"});
  CHECK(fib.facets()[1].vertices() == std::vector<Vertex>{"c"});

  // fiber over the whole edge is everything
  SimplicialComplex fib2 = fiber(f, sx({"u", "v"}));
  CHECK(fib2.facets().size() == K.facets().size());

  CHECK(raises(errc::not_a_simplex, [&] { fiber(f, sx({"u", "zz"})); }));
}

TEST_CASE("nerve of a cover") {
  // Cover of a path a-b-c by its two edges: nerve = one edge (they share b).
  SimplicialComplex e1 = cx({"a", "b", "c"}, {{"a", "b"}});
  SimplicialComplex e2 = cx({"a", "b", "c"}, {{"b", "c"}});
  SimplicialComplex n = nerve({e1, e2});
  REQUIRE(n.facets().size() == 1);
  CHECK(n.facets()[0].vertices() == std::vector<Vertex>{"0", "1"});

  // Disjoint members: nerve is two points.
  SimplicialComplex p1 = cx({"a", "b"}, {{"a"}});
  SimplicialComplex p2 = cx({"a", "b"}, {{"b"}});
  SimplicialComplex n2 = nerve({p1, p2});
  CHECK(n2.facets().size() == 2);
  CHECK(n2.dimension() == 0);

  // Three intervals with a common vertex: nerve is a solid triangle.
  SimplicialComplex t1 = cx({"o", "p", "q", "r"}, {{"o", "p"}});
  SimplicialComplex t2 = cx({"o", "p", "q", "r"}, {{"o", "q"}});
  SimplicialComplex t3 = cx({"o", "p", "q", "r"}, {{"o", "r"}});
  SimplicialComplex n3 = nerve({t1, t2, t3});
  REQUIRE(n3.facets().size() == 1);
  CHECK(n3.facets()[0].dim() == 2);

  CHECK(raises(errc::empty_cover, [] { nerve({}); }));
  CHECK(raises(errc::empty_cover, [&] { nerve({e1, cx({"a"}, {})}); }));
}

TEST_CASE("cone points") {
  SimplicialComplex K = cx({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  REQUIRE(cone_point(K).has_value());
  CHECK(*cone_point(K) == "b");
  CHECK(is_cone_point(K, "b"));
  CHECK(!is_cone_point(K, "a"));

  // every vertex of a full simplex is one; ties resolve to the least
  SimplicialComplex full = cx({"x", "y", "z"}, {{"x", "y", "z"}});
  CHECK(*cone_point(full) == "x");

  SimplicialComplex two = cx({"a", "b"}, {{"a"}, {"b"}});
  CHECK(!cone_point(two).has_value());
  CHECK(!cone_point(cx({"a"}, {})).has_value());
}

TEST_CASE("strong collapse of a cone leaves a point") {
  // Star of o: everything is dominated by o.
  SimplicialComplex K =
      cx({"o", "p", "q", "r"}, {{"o", "p", "q"}, {"o", "q", "r"}});
  CollapseResult cr = strong_collapse(K);
  CHECK(cr.core.support().size() == 1);
  CHECK(cr.core.dimension() == 0);

  // retraction then inclusion is the identity on the core
  for (const Vertex& v : cr.core.support())
    CHECK(cr.retraction.apply(cr.inclusion.apply(v)) == v);
  // inclusion then retraction lands every vertex on the core
  for (const Vertex& v : K.support()) CHECK(cr.core.support()[0] == cr.retraction.apply(v));
}

TEST_CASE("strong collapse fixes a rigid complex") {
  // The hollow triangle has no dominated vertex.
  SimplicialComplex circle = cx({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  CollapseResult cr = strong_collapse(circle);
  CHECK(cr.core == circle);
  CHECK(cr.inclusion.vertex_map() == identity_map(circle).vertex_map());
}

TEST_CASE("strong collapse respects the retraction equations") {
  // A complex with a partial collapse: square with one diagonal plus a tail.
  SimplicialComplex K = cx({"a", "b", "c", "d", "t"},
                           {{"a", "b", "c"}, {"a", "c", "d"}, {"d", "t"}});
  CollapseResult cr = strong_collapse(K);
  // contractible: collapses all the way to a point
  CHECK(cr.core.support().size() == 1);
  for (const Vertex& v : cr.core.support())
    CHECK(cr.retraction.apply(cr.inclusion.apply(v)) == v);
}
