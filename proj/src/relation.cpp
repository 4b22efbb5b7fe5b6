#include "dowker/relation.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "dowker/errors.hpp"

namespace dowker {

namespace {

void check_universe(const std::vector<Label>& labels, const char* side) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second)
      fail(errc::duplicate_label, std::string("label '") + l + "' repeats in " + side + " universe");
  }
}

}  // namespace

Relation Relation::make(std::vector<Label> x_labels, std::vector<Label> y_labels,
                        std::vector<LabelPair> pairs) {
  check_universe(x_labels, "x");
  check_universe(y_labels, "y");
  std::unordered_set<std::string> xs(x_labels.begin(), x_labels.end());
  std::unordered_set<std::string> ys(y_labels.begin(), y_labels.end());
  for (const auto& [x, y] : pairs) {
    if (!xs.count(x)) fail(errc::unknown_label, "pair references x label '" + x + "' outside the universe");
    if (!ys.count(y)) fail(errc::unknown_label, "pair references y label '" + y + "' outside the universe");
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  Relation r;
  r.x_ = std::move(x_labels);
  r.y_ = std::move(y_labels);
  r.pairs_ = std::move(pairs);
  return r;
}

bool Relation::contains(const Label& x, const Label& y) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), LabelPair(x, y));
}

std::size_t Relation::index_of_x(const Label& x) const {
  auto it = std::find(x_.begin(), x_.end(), x);
  if (it == x_.end()) fail(errc::unknown_label, "x label '" + x + "' not in universe");
  return static_cast<std::size_t>(it - x_.begin());
}

std::size_t Relation::index_of_y(const Label& y) const {
  auto it = std::find(y_.begin(), y_.end(), y);
  if (it == y_.end()) fail(errc::unknown_label, "y label '" + y + "' not in universe");
  return static_cast<std::size_t>(it - y_.begin());
}

Relation Relation::transpose() const {
  std::vector<LabelPair> flipped;
  flipped.reserve(pairs_.size());
  for (const auto& [x, y] : pairs_) flipped.emplace_back(y, x);
  return Relation::make(y_, x_, std::move(flipped));
}

RelationMorphism RelationMorphism::make(Relation source, Relation target,
                                        std::map<Label, Label> x_map,
                                        std::map<Label, Label> y_map) {
  std::unordered_set<std::string> tx(target.x_labels().begin(), target.x_labels().end());
  std::unordered_set<std::string> ty(target.y_labels().begin(), target.y_labels().end());
  for (const auto& x : source.x_labels()) {
    auto it = x_map.find(x);
    if (it == x_map.end()) fail(errc::not_a_morphism, "x label '" + x + "' has no image");
    if (!tx.count(it->second))
      fail(errc::not_a_morphism, "image '" + it->second + "' of x label '" + x + "' not in target universe");
  }
  for (const auto& y : source.y_labels()) {
    auto it = y_map.find(y);
    if (it == y_map.end()) fail(errc::not_a_morphism, "y label '" + y + "' has no image");
    if (!ty.count(it->second))
      fail(errc::not_a_morphism, "image '" + it->second + "' of y label '" + y + "' not in target universe");
  }
  for (const auto& [k, v] : x_map)
    if (std::find(source.x_labels().begin(), source.x_labels().end(), k) == source.x_labels().end())
      fail(errc::not_a_morphism, "x map mentions '" + k + "' outside the source universe");
  for (const auto& [k, v] : y_map)
    if (std::find(source.y_labels().begin(), source.y_labels().end(), k) == source.y_labels().end())
      fail(errc::not_a_morphism, "y map mentions '" + k + "' outside the source universe");
  for (const auto& [x, y] : source.pairs()) {
    if (!target.contains(x_map.at(x), y_map.at(y)))
      fail(errc::not_a_morphism,
           "pair (" + x + ", " + y + ") maps to (" + x_map.at(x) + ", " + y_map.at(y) +
               ") which the target does not relate");
  }
  RelationMorphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.x_map_ = std::move(x_map);
  m.y_map_ = std::move(y_map);
  return m;
}

RelationMorphism RelationMorphism::identity(Relation r) {
  std::map<Label, Label> xm, ym;
  for (const auto& x : r.x_labels()) xm[x] = x;
  for (const auto& y : r.y_labels()) ym[y] = y;
  return make(r, r, std::move(xm), std::move(ym));
}

const Label& RelationMorphism::apply_x(const Label& x) const {
  auto it = x_map_.find(x);
  if (it == x_map_.end()) fail(errc::unknown_label, "x label '" + x + "' not in morphism domain");
  return it->second;
}

const Label& RelationMorphism::apply_y(const Label& y) const {
  auto it = y_map_.find(y);
  if (it == y_map_.end()) fail(errc::unknown_label, "y label '" + y + "' not in morphism domain");
  return it->second;
}

RelationMorphism RelationMorphism::transpose() const {
  return make(source_.transpose(), target_.transpose(), y_map_, x_map_);
}

RelationMorphism compose(const RelationMorphism& g, const RelationMorphism& f) {
  if (!(f.target() == g.source()))
    fail(errc::source_target_mismatch, "composition needs matching middle relation");
  std::map<Label, Label> xm, ym;
  for (const auto& x : f.source().x_labels()) xm[x] = g.apply_x(f.apply_x(x));
  for (const auto& y : f.source().y_labels()) ym[y] = g.apply_y(f.apply_y(y));
  return RelationMorphism::make(f.source(), g.target(), std::move(xm), std::move(ym));
}

Relation random_relation(std::size_t nx, std::size_t ny, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Label> xs, ys;
  xs.reserve(nx);
  ys.reserve(ny);
  for (std::size_t i = 0; i < nx; ++i) xs.push_back("x" + std::to_string(i));
  for (std::size_t j = 0; j < ny; ++j) ys.push_back("y" + std::to_string(j));
  std::vector<LabelPair> pairs;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      // top 53 bits -> uniform double in [0,1); bit-for-bit reproducible,
      // unlike std::uniform_real_distribution which varies across libraries
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) pairs.emplace_back(xs[i], ys[j]);
    }
  }
  return Relation::make(std::move(xs), std::move(ys), std::move(pairs));
}

}  // namespace dowker
