#include <doctest.h>

#include <algorithm>

#include "dowker/concepts.hpp"
#include "dowker/errors.hpp"

using namespace dowker;

namespace {

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

TEST_CASE("derivation operators") {
  Relation r = sample();
  CHECK(derive_up(r, {"a"}) == std::vector<Label>{"2", "4"});
  CHECK(derive_up(r, {"a", "b"}) == std::vector<Label>{"2"});
  CHECK(derive_up(r, {"a", "d"}).empty());
  CHECK(derive_up(r, {}) == std::vector<Label>{"1", "2", "3", "4"});
  CHECK(derive_down(r, {"1"}) == std::vector<Label>{"b", "c", "d"});
  CHECK(derive_down(r, {"1", "3"}) == std::vector<Label>{"d"});
  CHECK(derive_down(r, {}) == std::vector<Label>{"a", "b", "c", "d"});

  CHECK_THROWS_AS((void)derive_up(r, {"zz"}), Error);
  CHECK_THROWS_AS((void)derive_down(r, {"zz"}), Error);

  // Galois: U subset of V implies V' subset of U'; U'' contains U; U''' = U'.
  auto up_abd = derive_up(r, {"a", "b", "d"});
  auto up_ab = derive_up(r, {"a", "b"});
  CHECK(std::includes(up_ab.begin(), up_ab.end(), up_abd.begin(), up_abd.end()));
  auto closure_b = derive_down(r, derive_up(r, {"b"}));
  const std::vector<Label> just_b{"b"};
  CHECK(std::includes(closure_b.begin(), closure_b.end(), just_b.begin(), just_b.end()));
  CHECK(derive_up(r, derive_down(r, derive_up(r, {"b"}))) == derive_up(r, {"b"}));
}

TEST_CASE("concepts of the worked example") {
  // Hand-derived: close every column plus the order-theoretic closures.
  std::vector<FormalConcept> expected = {
      {{}, {"1", "2", "3", "4"}},
      {{"a"}, {"2", "4"}},
      {{"a", "b"}, {"2"}},
      {{"a", "b", "c", "d"}, {}},
      {{"a", "c"}, {"4"}},
      {{"b"}, {"1", "2"}},
      {{"b", "c", "d"}, {"1"}},
      {{"c"}, {"1", "4"}},
      {{"d"}, {"1", "3"}},
  };
  std::sort(expected.begin(), expected.end(), [](const auto& p, const auto& q) {
    return p.extent != q.extent ? p.extent < q.extent : p.intent < q.intent;
  });

  CHECK(enumerate_concepts(sample()) == expected);
  CHECK(brute_force_concepts(sample()) == expected);
}

TEST_CASE("degenerate relations") {
  // Empty relation on labels: two boundary concepts (X,0) and (0,Y).
  Relation e = Relation::make({"a", "b"}, {"1", "2"}, {});
  auto cs = enumerate_concepts(e);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == FormalConcept{{}, {"1", "2"}});
  CHECK(cs[1] == FormalConcept{{"a", "b"}, {}});

  // Full relation: one concept (X,Y).
  Relation f = Relation::make({"a", "b"}, {"1", "2"},
                              {{"a", "1"}, {"a", "2"}, {"b", "1"}, {"b", "2"}});
  auto cf = enumerate_concepts(f);
  REQUIRE(cf.size() == 1);
  CHECK(cf[0] == FormalConcept{{"a", "b"}, {"1", "2"}});

  // Relations over empty universes still have the one trivial concept.
  Relation z = Relation::make({}, {}, {});
  CHECK(enumerate_concepts(z).size() == 1);
  CHECK(enumerate_concepts(z)[0] == FormalConcept{{}, {}});

  // Only an empty X side: concept (0, Y).
  Relation zx = Relation::make({}, {"1"}, {});
  REQUIRE(enumerate_concepts(zx).size() == 1);
  CHECK(enumerate_concepts(zx)[0] == FormalConcept{{}, {"1"}});
}

TEST_CASE("enumeration agrees with the oracle on random relations") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::size_t nx = 1 + seed % 7, ny = 1 + (seed / 2) % 6;
    double density = 0.15 + 0.1 * (seed % 8);
    Relation r = random_relation(nx, ny, density, 1000 + seed);
    CAPTURE(seed);
    CHECK(enumerate_concepts(r) == brute_force_concepts(r));
  }
}

TEST_CASE("lattice order in the worked example") {
  Relation r = sample();
  auto cs = enumerate_concepts(r);
  auto find = [&](const std::vector<Label>& extent) {
    for (const auto& c : cs)
      if (c.extent == extent) return c;
    REQUIRE(false);
    return FormalConcept{};
  };
  FormalConcept bottom = find({});
  FormalConcept top = find({"a", "b", "c", "d"});
  FormalConcept b = find({"b"});
  FormalConcept bcd = find({"b", "c", "d"});

  for (const auto& c : cs) {
    CHECK(lattice_leq(bottom, c));
    CHECK(lattice_leq(c, top));
    CHECK(lattice_leq(c, c));
  }
  CHECK(lattice_leq(b, bcd));
  CHECK(!lattice_leq(bcd, b));
  // incomparable pair
  CHECK(!lattice_leq(find({"a"}), find({"b"})));
  CHECK(!lattice_leq(find({"b"}), find({"a"})));
}

TEST_CASE("brute force cap") {
  std::vector<Label> xs, ys{"y"};
  for (int i = 0; i < 21; ++i) xs.push_back("x" + std::to_string(i));
  Relation wide = Relation::make(xs, ys, {});
  try {
    (void)brute_force_concepts(wide);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_large);
  }
  // enumerate_concepts has no such cap
  CHECK(enumerate_concepts(wide).size() == 2);
}
