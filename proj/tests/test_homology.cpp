#include <doctest.h>

#include <cstdint>

#include "dowker/constructions.hpp"
#include "dowker/errors.hpp"
#include "dowker/homology.hpp"

using namespace dowker;

namespace {

Simplex sx(std::vector<Vertex> v) { return Simplex::make(std::move(v)); }

SimplicialComplex cx(std::vector<Vertex> verts, std::vector<std::vector<Vertex>> facets) {
  std::vector<Simplex> fs;
  for (auto& f : facets) fs.push_back(sx(f));
  return SimplicialComplex::from_facets(std::move(verts), fs);
}

HomologyGroup grp(int dim, long long betti, std::vector<long> torsion = {}) {
  HomologyGroup g;
  g.dim = dim;
  g.betti = betti;
  for (long t : torsion) g.torsion.emplace_back(t);
  return g;
}

// 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
SimplicialComplex torus() {
  std::vector<Vertex> vs;
  for (int i = 0; i < 7; ++i) vs.push_back("t" + std::to_string(i));
  std::vector<std::vector<Vertex>> fs;
  for (int i = 0; i < 7; ++i) {
    fs.push_back({vs[i], vs[(i + 1) % 7], vs[(i + 3) % 7]});
    fs.push_back({vs[i], vs[(i + 2) % 7], vs[(i + 3) % 7]});
  }
  return cx(vs, fs);
}

// 6-vertex projective plane: every edge of K6 lies in exactly two of these.
SimplicialComplex proj_plane() {
  return cx({"1", "2", "3", "4", "5", "6"},
            {{"1", "2", "3"},
             {"1", "2", "4"},
             {"1", "3", "5"},
             {"1", "4", "6"},
             {"1", "5", "6"},
             {"2", "3", "6"},
             {"2", "4", "5"},
             {"2", "5", "6"},
             {"3", "4", "5"},
             {"3", "4", "6"}});
}

SimplicialComplex sphere() {
  return cx({"p", "q", "r", "s"},
            {{"p", "q", "r"}, {"p", "q", "s"}, {"p", "r", "s"}, {"q", "r", "s"}});
}

Relation sample() {
  return Relation::make({"a", "b", "c", "d"}, {"1", "2", "3", "4"},
                        {{"a", "2"},
                         {"a", "4"},
                         {"b", "1"},
                         {"b", "2"},
                         {"c", "1"},
                         {"c", "4"},
                         {"d", "1"},
                         {"d", "3"}});
}

}  // namespace

TEST_CASE("homology of small spaces") {
  SimplicialComplex circle = cx({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}, {"y", "z"}});
  HomologyResult h = homology(circle, false);
  CHECK(h.groups == std::vector<HomologyGroup>{grp(0, 1), grp(1, 1)});

  HomologyResult point = homology(cx({"a"}, {{"a"}}), false);
  CHECK(point.groups == std::vector<HomologyGroup>{grp(0, 1)});

  // two components
  HomologyResult two = homology(cx({"a", "b"}, {{"a"}, {"b"}}), false);
  CHECK(two.groups == std::vector<HomologyGroup>{grp(0, 2)});

  HomologyResult empty = homology(cx({"a"}, {}), false);
  CHECK(empty.groups.empty());

  HomologyResult s2 = homology(sphere(), false);
  CHECK(s2.groups == std::vector<HomologyGroup>{grp(0, 1), grp(1, 0), grp(2, 1)});
}

TEST_CASE("reduced homology") {
  SimplicialComplex circle = cx({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}, {"y", "z"}});
  HomologyResult h = homology(circle, true);
  CHECK(h.group_at(-1)->betti == 0);
  CHECK(h.group_at(0)->betti == 0);
  CHECK(h.group_at(1)->betti == 1);

  // a point is reduced-acyclic
  CHECK(homology(cx({"a"}, {{"a"}}), true).is_zero());

  // the empty complex has reduced homology Z in degree -1
  HomologyResult e = homology(cx({"a"}, {}), true);
  REQUIRE(e.group_at(-1) != nullptr);
  CHECK(e.group_at(-1)->betti == 1);
  CHECK(!e.is_zero());
}

TEST_CASE("torus homology") {
  HomologyResult h = homology(torus(), false);
  CHECK(h.groups == std::vector<HomologyGroup>{grp(0, 1), grp(1, 2), grp(2, 1)});
}

TEST_CASE("projective plane torsion") {
  HomologyResult h = homology(proj_plane(), false);
  CHECK(h.groups ==
        std::vector<HomologyGroup>{grp(0, 1), grp(1, 0, {2}), grp(2, 0)});

  // over the rationals the torsion disappears
  HomologyResult q = field_homology(Rationals{}, proj_plane(), false);
  CHECK(q.groups == std::vector<HomologyGroup>{grp(0, 1), grp(1, 0), grp(2, 0)});
  // over Z/2 it spreads into degrees 1 and 2
  HomologyResult z2 = field_homology(PrimeField(2), proj_plane(), false);
  CHECK(z2.groups == std::vector<HomologyGroup>{grp(0, 1), grp(1, 1), grp(2, 1)});
  // over Z/3 nothing is left
  HomologyResult z3 = field_homology(PrimeField(3), proj_plane(), false);
  CHECK(z3.groups == std::vector<HomologyGroup>{grp(0, 1), grp(1, 0), grp(2, 0)});
}

TEST_CASE("worked example has one loop everywhere") {
  Relation r = sample();
  std::vector<HomologyGroup> expect01 = {grp(0, 1), grp(1, 1)};
  HomologyResult hd = homology(dowker_complex(r), false);
  HomologyResult hdt = homology(dowker_complex(r.transpose()), false);
  HomologyResult he = homology(rectangle_complex(r), false);
  CHECK(same_homology(hd, hdt));
  CHECK(same_homology(hd, he));
  REQUIRE(hd.group_at(0) != nullptr);
  CHECK(hd.group_at(0)->betti == 1);
  CHECK(hd.group_at(1)->betti == 1);
  CHECK(hd.group_at(1)->torsion.empty());
  CHECK(hdt.groups == expect01);
}

TEST_CASE("same_homology treats missing degrees as zero") {
  HomologyResult a, b;
  a.groups = {grp(0, 1), grp(1, 0)};
  b.groups = {grp(0, 1)};
  CHECK(same_homology(a, b));
  b.groups = {grp(0, 1), grp(1, 1)};
  CHECK(!same_homology(a, b));
  b.groups = {grp(0, 1), grp(1, 0, {2})};
  CHECK(!same_homology(a, b));
  CHECK(same_homology(HomologyResult{}, HomologyResult{}));
}

TEST_CASE("collapse-assisted homology equals the direct computation") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Relation r = random_relation(1 + seed % 4, 1 + (seed / 2) % 4, 0.3 + 0.15 * (seed % 4),
                                 3000 + seed);
    const int guard = 16;
    for (const SimplicialComplex& K :
         {dowker_complex(r), rectangle_complex(r, guard)}) {
      CAPTURE(seed);
      HomologyResult fast = homology(K, false, guard);
      HomologyResult direct = homology_of_chain(chain_complex(K, false, guard), false);
      CHECK(same_homology(fast, direct));
    }
  }
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
  for (const SimplicialComplex& K :
       {torus(), proj_plane(), sphere(),
        cx({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}, {"y", "z"}})}) {
    HomologyResult q = field_homology(Rationals{}, K, false);
    long long chi = 0;
    for (const auto& g : q.groups) chi += (g.dim % 2 == 0 ? 1 : -1) * g.betti;
    CHECK(chi == K.euler_characteristic());
  }
}

TEST_CASE("field homology rejects bad moduli") {
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(0), Error);
  CHECK_NOTHROW(PrimeField(2147483647));          // 2^31 - 1 is prime
  CHECK_THROWS_AS(PrimeField(2147483659ull), Error);  // prime but over the cap
}
