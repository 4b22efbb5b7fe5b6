// Command-line front end: build complexes from relations, compute homology
// and concepts, inspect projection fibers, export 1-skeletons, and run
// randomized verification campaigns.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
// guard tripped.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dowker/concepts.hpp"
#include "dowker/constructions.hpp"
#include "dowker/errors.hpp"
#include "dowker/homology.hpp"
#include "dowker/io.hpp"
#include "dowker/theorems.hpp"
#include "dowker/verify.hpp"

namespace {

using dowker::errc;
using ordered_json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) dowker::fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dowker::Relation load_relation(const std::string& path, const std::string& format) {
  std::string fmt = format;
  if (fmt.empty()) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
      fmt = "csv";
    else if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
      fmt = "json";
    else
      dowker::fail(errc::parse_error,
                   "cannot infer format of '" + path + "'; pass --format json|csv");
  }
  const std::string text = slurp(path);
  return fmt == "csv" ? dowker::relation_from_csv(text) : dowker::relation_from_json(text);
}

dowker::SimplicialComplex build_kind(const dowker::Relation& r, const std::string& kind,
                                     int max_dimension) {
  if (kind == "dowker") return dowker::dowker_complex(r);
  if (kind == "dowker-transpose") return dowker::dowker_complex(r.transpose());
  return dowker::rectangle_complex(r, max_dimension);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) dowker::fail(errc::parse_error, "cannot open '" + output + "' for writing");
  out << text;
}

std::vector<double> parse_density_grid(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      dowker::fail(errc::parse_error, "bad density '" + item + "'");
    }
  }
  if (out.empty()) dowker::fail(errc::parse_error, "density grid is empty");
  return out;
}

struct CommonOpts {
  std::string input;
  std::string format;
  std::string kind = "dowker";
  std::string output;
  int max_dimension = dowker::kDefaultMaxDimension;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_kind = true) {
  cmd->add_option("input", o.input, "relation file (JSON or CSV)")->required();
  cmd->add_option("--format", o.format, "input format: json or csv (default: by extension)")
      ->check(CLI::IsMember({"json", "csv"}));
  if (with_kind)
    cmd->add_option("--complex", o.kind, "which complex: dowker, dowker-transpose, rectangle")
        ->check(CLI::IsMember({"dowker", "dowker-transpose", "rectangle"}));
  cmd->add_option("--max-dimension", o.max_dimension, "dimension guard");
}

int run(int argc, char** argv) {
  CLI::App app{"Dowker/rectangle complexes of finite relations: construction, homology, "
               "formal concepts, and randomized verification of their duality theorems"};
  app.require_subcommand(1);

  CommonOpts build_o, hom_o, con_o, fib_o, dot_o;
  bool reduced = false;
  std::string coeff = "z";
  std::string simplex_csv;

  CLI::App* c_build = app.add_subcommand("build", "construct a complex and print its JSON");
  add_common(c_build, build_o);
  c_build->add_option("--output,-o", build_o.output, "write JSON here instead of stdout");

  CLI::App* c_hom = app.add_subcommand("homology", "homology of a complex of the relation");
  add_common(c_hom, hom_o);
  c_hom->add_flag("--reduced", reduced, "reduced (augmented) homology");
  c_hom->add_option("--coeff", coeff, "coefficients: z, q, z2, or zp:<prime>");

  CLI::App* c_con = app.add_subcommand("concepts", "enumerate the formal concepts");
  add_common(c_con, con_o, false);

  CLI::App* c_fib = app.add_subcommand("fiber", "fiber of the first projection over a simplex");
  add_common(c_fib, fib_o, false);
  c_fib->add_option("--simplex", simplex_csv, "comma-separated vertex labels")->required();

  CLI::App* c_dot = app.add_subcommand("export-dot", "1-skeleton as an undirected DOT graph");
  add_common(c_dot, dot_o);
  c_dot->add_option("--output,-o", dot_o.output, "write DOT here instead of stdout");

  dowker::CampaignConfig cfg;
  std::string checks_csv, grid_csv;
  CLI::App* c_ver = app.add_subcommand("verify", "randomized verification campaign");
  c_ver->add_option("--trials", cfg.trials, "number of random relations");
  c_ver->add_option("--seed", cfg.seed, "campaign seed");
  c_ver->add_option("--max-x", cfg.max_x, "largest row-label count");
  c_ver->add_option("--max-y", cfg.max_y, "largest column-label count");
  c_ver->add_option("--density-grid", grid_csv, "comma-separated densities to sample from");
  c_ver->add_option("--checks", checks_csv,
                    "comma-separated subset of: betti, quasi-iso, fiber, naturality, "
                    "functorial, functor-laws (default all)");
  c_ver->add_option("--threads", cfg.threads, "worker threads (0 = all, 1 = serial)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(c_build)) {
    dowker::Relation r = load_relation(build_o.input, build_o.format);
    dowker::SimplicialComplex K = build_kind(r, build_o.kind, build_o.max_dimension);
    emit(dowker::complex_to_json(K), build_o.output);
    std::cerr << "facets=" << K.facets().size() << " vertices=" << K.vertex_set().size()
              << " dimension=" << K.dimension() << "\n";
    return 0;
  }

  if (app.got_subcommand(c_hom)) {
    dowker::Relation r = load_relation(hom_o.input, hom_o.format);
    dowker::SimplicialComplex K = build_kind(r, hom_o.kind, hom_o.max_dimension);
    dowker::HomologyResult h;
    if (coeff == "z")
      h = dowker::homology(K, reduced, hom_o.max_dimension);
    else if (coeff == "q")
      h = dowker::field_homology(dowker::Rationals{}, K, reduced, hom_o.max_dimension);
    else if (coeff == "z2")
      h = dowker::field_homology(dowker::PrimeField(2), K, reduced, hom_o.max_dimension);
    else if (coeff.size() > 3 && coeff.substr(0, 3) == "zp:") {
      std::uint64_t p = 0;
      try {
        p = std::stoull(coeff.substr(3));
      } catch (const std::exception&) {
        dowker::fail(errc::parse_error, "bad prime in '" + coeff + "'");
      }
      h = dowker::field_homology(dowker::PrimeField(p), K, reduced, hom_o.max_dimension);
    } else {
      dowker::fail(errc::parse_error, "unknown coefficient system '" + coeff + "'");
    }
    std::cout << dowker::homology_to_json(h);
    return 0;
  }

  if (app.got_subcommand(c_con)) {
    dowker::Relation r = load_relation(con_o.input, con_o.format);
    std::vector<dowker::FormalConcept> cs = dowker::enumerate_concepts(r);
    std::cout << dowker::concepts_to_json(cs);
    std::cerr << "concepts=" << cs.size() << "\n";
    return 0;
  }

  if (app.got_subcommand(c_fib)) {
    dowker::Relation r = load_relation(fib_o.input, fib_o.format);
    std::vector<std::string> vs;
    std::stringstream ss(simplex_csv);
    std::string item;
    while (std::getline(ss, item, ',')) vs.push_back(item);
    dowker::Simplex sigma = dowker::Simplex::make(vs);
    dowker::FiberReport rep = dowker::check_fiber_hypothesis(r, sigma, fib_o.max_dimension);
    ordered_json j;
    j["simplex"] = sigma.vertices();
    j["witnesses"] = dowker::witness_Y(r, sigma);
    j["inverse_image"] = dowker::inverse_image_simplex(r, sigma).vertices();
    j["fiber"] = ordered_json::parse(dowker::complex_to_json(rep.fiber));
    j["fiber_homology"] = ordered_json::parse(dowker::homology_to_json(rep.fiber_homology));
    j["preimage_is_simplex"] = rep.preimage_is_simplex;
    j["cone_point"] = rep.sigma_is_cone_point;
    j["ok"] = rep.ok();
    std::cout << j.dump(2) << "\n";
    return rep.ok() ? 0 : 1;
  }

  if (app.got_subcommand(c_dot)) {
    dowker::Relation r = load_relation(dot_o.input, dot_o.format);
    dowker::SimplicialComplex K = build_kind(r, dot_o.kind, dot_o.max_dimension);
    emit(dowker::complex_to_dot(K), dot_o.output);
    return 0;
  }

  // verify
  if (!grid_csv.empty()) cfg.density_grid = parse_density_grid(grid_csv);
  if (!checks_csv.empty()) cfg.checks = dowker::parse_checks(checks_csv);
  dowker::VerificationReport rep = dowker::run_campaign(cfg);
  std::cout << dowker::report_to_json(rep);
  std::cerr << "trials=" << rep.trials << " checks_run=" << rep.checks_run
            << " failures=" << rep.failures.size() << " elapsed=" << rep.elapsed_seconds << "s\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const dowker::Error& e) {
    std::cerr << "error [" << dowker::errc_name(e.code()) << "]: " << e.what() << "\n";
    return (e.code() == errc::dimension_guard || e.code() == errc::too_large) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
