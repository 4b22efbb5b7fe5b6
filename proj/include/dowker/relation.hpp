#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dowker {

using Label = std::string;
using LabelPair = std::pair<Label, Label>;

// A finite binary relation between two ordered label universes.  Universe
// order is preserved as given (it drives deterministic output everywhere);
// the pair list is kept sorted and duplicate-free.
class Relation {
public:
  Relation() = default;

  // Validates: no duplicate labels inside either universe, every pair drawn
  // from the universes.  Duplicate pairs are silently collapsed.
  static Relation make(std::vector<Label> x_labels, std::vector<Label> y_labels,
                       std::vector<LabelPair> pairs);

  const std::vector<Label>& x_labels() const { return x_; }
  const std::vector<Label>& y_labels() const { return y_; }
  const std::vector<LabelPair>& pairs() const { return pairs_; }

  bool contains(const Label& x, const Label& y) const;
  std::size_t index_of_x(const Label& x) const;  // UnknownLabel if absent
  std::size_t index_of_y(const Label& y) const;

  Relation transpose() const;

  bool operator==(const Relation&) const = default;

private:
  std::vector<Label> x_;
  std::vector<Label> y_;
  std::vector<LabelPair> pairs_;
};

// A morphism of relations: label maps f1 on X and f2 on Y, total on the
// source universes, landing in the target universes, and carrying every
// related pair to a related pair.
class RelationMorphism {
public:
  RelationMorphism() = default;

  // Validates totality, codomain membership, and pair preservation.
  static RelationMorphism make(Relation source, Relation target,
                               std::map<Label, Label> x_map, std::map<Label, Label> y_map);

  static RelationMorphism identity(Relation r);

  const Relation& source() const { return source_; }
  const Relation& target() const { return target_; }
  const std::map<Label, Label>& x_map() const { return x_map_; }
  const std::map<Label, Label>& y_map() const { return y_map_; }

  const Label& apply_x(const Label& x) const;
  const Label& apply_y(const Label& y) const;

  // Same data read as a morphism of the transposed relations.
  RelationMorphism transpose() const;

  bool operator==(const RelationMorphism&) const = default;

private:
  Relation source_;
  Relation target_;
  std::map<Label, Label> x_map_;
  std::map<Label, Label> y_map_;
};

// g after f; SourceTargetMismatch unless f.target == g.source.
RelationMorphism compose(const RelationMorphism& g, const RelationMorphism& f);

// Deterministic random relation on labels x0..x{nx-1} / y0..y{ny-1}; each
// pair kept independently with the given probability.  Identical output for
// identical arguments on every platform (no distribution objects involved).
Relation random_relation(std::size_t nx, std::size_t ny, double density, std::uint64_t seed);

}  // namespace dowker
