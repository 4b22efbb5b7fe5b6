#include "dowker/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "dowker/constructions.hpp"
#include "dowker/errors.hpp"
#include "dowker/homology.hpp"
#include "dowker/io.hpp"
#include "dowker/theorems.hpp"

namespace dowker {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr Check kAllChecks[] = {Check::betti,      Check::quasi_iso,  Check::fiber,
                                Check::naturality, Check::functorial, Check::functor_laws};

std::string brief(const HomologyResult& h) {
  std::string s;
  for (const auto& g : h.groups) {
    if (!s.empty()) s += " ";
    s += "H" + std::to_string(g.dim) + "=Z^" + std::to_string(g.betti);
    for (const auto& t : g.torsion) s += "+Z/" + t.get_str();
  }
  return s.empty() ? "trivial" : s;
}

std::string simplex_text(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    if (i) out += ",";
    out += s.vertices()[i];
  }
  return out + "}";
}

double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Random morphism out of a given source: draw target shape and label maps,
// seed the target with the image of the source (so preservation holds by
// construction), then sprinkle noise pairs at the same density.
RelationMorphism extend_morphism(std::mt19937_64& rng, const Relation& src, std::size_t max_x,
                                 std::size_t max_y, double density) {
  const std::size_t nx = 1 + rng() % max_x;
  const std::size_t ny = 1 + rng() % max_y;
  std::vector<Label> xs, ys;
  for (std::size_t i = 0; i < nx; ++i) xs.push_back("x" + std::to_string(i));
  for (std::size_t j = 0; j < ny; ++j) ys.push_back("y" + std::to_string(j));

  std::map<Label, Label> f1, f2;
  for (const Label& x : src.x_labels()) f1[x] = xs[rng() % nx];
  for (const Label& y : src.y_labels()) f2[y] = ys[rng() % ny];

  std::set<LabelPair> pairs;
  for (const auto& [x, y] : src.pairs()) pairs.insert({f1.at(x), f2.at(y)});
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      if (unit_interval(rng()) < density) pairs.insert({xs[i], ys[j]});

  Relation tgt = Relation::make(xs, ys, {pairs.begin(), pairs.end()});
  return RelationMorphism::make(src, std::move(tgt), std::move(f1), std::move(f2));
}

int cells_guard(const Relation& r) {
  return static_cast<int>(r.x_labels().size() * r.y_labels().size());
}

struct TrialOutcome {
  std::vector<CheckFailure> failures;
  std::size_t checks_run = 0;
};

TrialOutcome run_trial(const CampaignConfig& cfg, std::size_t t) {
  TrialOutcome out;
  const std::uint64_t trial_seed = splitmix64(cfg.seed + t);
  std::mt19937_64 rng(trial_seed);

  const std::size_t nx = 1 + rng() % cfg.max_x;
  const std::size_t ny = 1 + rng() % cfg.max_y;
  const double density = cfg.density_grid[rng() % cfg.density_grid.size()];
  const std::uint64_t rel_seed = rng();
  const Relation r = random_relation(nx, ny, density, rel_seed);
  const int guard = cells_guard(r);
  const std::string rjson = relation_to_json(r);

  const bool want_morphism =
      std::any_of(cfg.checks.begin(), cfg.checks.end(), [](Check c) {
        return c == Check::naturality || c == Check::functorial || c == Check::functor_laws;
      });
  const bool want_second =
      std::find(cfg.checks.begin(), cfg.checks.end(), Check::functor_laws) != cfg.checks.end();

  std::optional<RelationMorphism> f, g;
  if (want_morphism) f = extend_morphism(rng, r, cfg.max_x, cfg.max_y, density);
  if (want_second) g = extend_morphism(rng, f->target(), cfg.max_x, cfg.max_y, density);

  // Guard covering every relation in play: no rectangle can outgrow its grid.
  int wide = guard;
  if (f) wide = std::max(wide, cells_guard(f->target()));
  if (g) wide = std::max(wide, cells_guard(g->target()));

  auto record = [&](Check c, std::string detail, bool with_morphism) {
    CheckFailure cf;
    cf.trial = t;
    cf.check = check_name(c);
    cf.trial_seed = trial_seed;
    cf.detail = std::move(detail);
    cf.relation_json = rjson;
    if (with_morphism && f) cf.morphism_json = morphism_to_json(*f);
    out.failures.push_back(std::move(cf));
  };

  for (Check c : cfg.checks) {
    switch (c) {
      case Check::betti: {
        ++out.checks_run;
        HomologyResult hd = homology(dowker_complex(r), false, guard);
        HomologyResult hdt = homology(dowker_complex(r.transpose()), false, guard);
        HomologyResult he = homology(rectangle_complex(r, guard), false, guard);
        if (!same_homology(hd, hdt) || !same_homology(hd, he))
          record(c,
                 "homology disagrees: D(R): " + brief(hd) + " | D(R^T): " + brief(hdt) +
                     " | E(R): " + brief(he),
                 false);
        break;
      }
      case Check::quasi_iso: {
        ++out.checks_run;
        const bool a = is_quasi_isomorphism(pi(r, guard), guard);
        const bool b = is_quasi_isomorphism(pi_hat(r, guard), guard);
        if (!a || !b) {
          std::string what = "not a quasi-isomorphism:";
          if (!a) what += " first projection";
          if (!b) what += " second projection";
          record(c, what, false);
        }
        break;
      }
      case Check::fiber: {
        SimplicialComplex D = dowker_complex(r);
        const int top = std::min(D.dimension(), cfg.fiber_dim_cap);
        for (int k = 0; k <= top; ++k)
          for (const Simplex& s : D.k_simplices(k)) {
            ++out.checks_run;
            FiberReport rep = check_fiber_hypothesis(r, s, guard);
            if (!rep.ok()) {
              std::string what = "fiber certificate fails over " + simplex_text(s) + ":";
              if (!rep.homology_zero) what += " fiber not acyclic (" + brief(rep.fiber_homology) + ")";
              if (!rep.preimage_is_simplex) what += " inverse image not a simplex";
              if (!rep.sigma_is_cone_point) what += " full face not a nerve cone point";
              record(c, what, false);
            }
          }
        break;
      }
      case Check::naturality: {
        ++out.checks_run;
        NaturalityReport nr = check_naturality(*f, wide);
        if (!nr.ok) {
          std::string what = "projection squares disagree";
          if (!nr.mismatches.empty()) what += ": " + nr.mismatches.front();
          record(c, what, true);
        }
        break;
      }
      case Check::functorial: {
        const Rationals q;
        const PrimeField z2(2);
        for (int k = 0; k <= 2; ++k) {
          ++out.checks_run;
          const bool okq = check_functorial_dowker(q, *f, k, wide);
          const bool ok2 = check_functorial_dowker(z2, *f, k, wide);
          if (!okq || !ok2) {
            std::string what = "homology square fails at k=" + std::to_string(k) + " over";
            if (!okq) what += " Q";
            if (!ok2) what += " Z/2";
            record(c, what, true);
          }
        }
        break;
      }
      case Check::functor_laws: {
        ++out.checks_run;
        std::string what;
        const RelationMorphism idm = RelationMorphism::identity(r);
        const SimplicialMap d_id = dowker_map(idm);
        for (const auto& [v, w] : d_id.vertex_map())
          if (v != w) what += " D(id) moves " + v + ";";
        const SimplicialMap e_id = rectangle_map(idm, guard);
        for (const auto& [v, w] : e_id.vertex_map())
          if (v != w) what += " E(id) moves " + v + ";";

        const RelationMorphism gf = compose(*g, *f);
        const SimplicialMap d_gf = dowker_map(gf);
        const SimplicialMap d_then = compose(dowker_map(*g), dowker_map(*f));
        if (d_gf.vertex_map() != d_then.vertex_map()) what += " D breaks composition;";
        const SimplicialMap e_gf = rectangle_map(gf, wide);
        const SimplicialMap e_then = compose(rectangle_map(*g, wide), rectangle_map(*f, wide));
        if (e_gf.vertex_map() != e_then.vertex_map()) what += " E breaks composition;";

        if (!what.empty()) record(c, "functor laws fail:" + what, true);
        break;
      }
    }
  }
  return out;
}

void validate(const CampaignConfig& cfg) {
  if (cfg.max_x == 0 || cfg.max_y == 0)
    fail(errc::parse_error, "campaign sizes must be positive");
  if (cfg.density_grid.empty()) fail(errc::parse_error, "campaign density grid is empty");
  for (double d : cfg.density_grid)
    if (!(d >= 0.0 && d <= 1.0)) fail(errc::parse_error, "densities must lie in [0,1]");
  if (cfg.fiber_dim_cap < 0) fail(errc::parse_error, "fiber dimension cap must be non-negative");
}

VerificationReport assemble(const CampaignConfig& cfg, std::vector<TrialOutcome> slots,
                            std::chrono::steady_clock::time_point t0) {
  VerificationReport rep;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  for (Check c : cfg.checks) rep.checks.push_back(check_name(c));
  for (TrialOutcome& slot : slots) {
    rep.checks_run += slot.checks_run;
    for (CheckFailure& cf : slot.failures) rep.failures.push_back(std::move(cf));
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

const char* check_name(Check c) {
  switch (c) {
    case Check::betti: return "betti";
    case Check::quasi_iso: return "quasi-iso";
    case Check::fiber: return "fiber";
    case Check::naturality: return "naturality";
    case Check::functorial: return "functorial";
    case Check::functor_laws: return "functor-laws";
  }
  return "?";
}

std::vector<Check> all_checks() {
  return {kAllChecks, kAllChecks + std::size(kAllChecks)};
}

std::vector<Check> parse_checks(const std::string& csv) {
  std::vector<Check> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    bool found = false;
    for (Check c : kAllChecks)
      if (item == check_name(c)) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        found = true;
        break;
      }
    if (item == "all") {
      out = all_checks();
      found = true;
    }
    if (!found) fail(errc::parse_error, "unknown check '" + item + "'");
  }
  if (out.empty()) fail(errc::parse_error, "no checks selected");
  return out;
}

RelationMorphism random_morphism(std::uint64_t seed, std::size_t max_x, std::size_t max_y,
                                 double density) {
  if (max_x == 0 || max_y == 0) fail(errc::parse_error, "sizes must be positive");
  std::mt19937_64 rng(seed);
  const std::size_t nx = 1 + rng() % max_x;
  const std::size_t ny = 1 + rng() % max_y;
  Relation src = random_relation(nx, ny, density, rng());
  return extend_morphism(rng, src, max_x, max_y, density);
}

std::string morphism_to_json(const RelationMorphism& m) {
  ordered_json j;
  j["source"] = ordered_json::parse(relation_to_json(m.source()));
  j["target"] = ordered_json::parse(relation_to_json(m.target()));
  j["x_map"] = m.x_map();
  j["y_map"] = m.y_map();
  return j.dump(2) + "\n";
}

VerificationReport run_campaign_serial(const CampaignConfig& cfg) {
  validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> slots(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) slots[t] = run_trial(cfg, t);
  return assemble(cfg, std::move(slots), t0);
}

VerificationReport run_campaign_parallel(const CampaignConfig& cfg) {
#ifndef _OPENMP
  return run_campaign_serial(cfg);
#else
  validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> slots(cfg.trials);
  const int nthreads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (long long t = 0; t < static_cast<long long>(cfg.trials); ++t) {
    try {
      slots[t] = run_trial(cfg, static_cast<std::size_t>(t));
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return assemble(cfg, std::move(slots), t0);
#endif
}

VerificationReport run_campaign(const CampaignConfig& cfg) {
  if (cfg.threads == 1) return run_campaign_serial(cfg);
  return run_campaign_parallel(cfg);
}

std::string report_to_json(const VerificationReport& rep) {
  ordered_json j;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["checks"] = rep.checks;
  j["checks_run"] = rep.checks_run;
  j["ok"] = rep.ok();
  j["failures"] = ordered_json::array();
  for (const CheckFailure& cf : rep.failures) {
    ordered_json jf;
    jf["trial"] = cf.trial;
    jf["check"] = cf.check;
    jf["trial_seed"] = cf.trial_seed;
    jf["detail"] = cf.detail;
    jf["relation"] = ordered_json::parse(cf.relation_json);
    jf["morphism"] =
        cf.morphism_json.empty() ? ordered_json(nullptr) : ordered_json::parse(cf.morphism_json);
    j["failures"].push_back(std::move(jf));
  }
  return j.dump(2) + "\n";
}

}  // namespace dowker
