// Command-line front end: dims | orbits | search | verify | eval.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or schema
// error, 3 I/O error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcj/casson_morita.hpp"
#include "bcj/errors.hpp"
#include "bcj/orbits.hpp"
#include "bcj/search.hpp"
#include "bcj/serialize.hpp"
#include "bcj/suites.hpp"
#include "bcj/wedge.hpp"

namespace {

using bcj::io::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error while writing '" + path + "'");
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw bcj::SchemaError(what + " is not valid JSON: " + e.what());
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json manifest(const std::string& command, json config) {
  return {{"tool", bcj::io::kToolName},
          {"version", bcj::io::kToolVersion},
          {"schema_version", bcj::io::kSchemaVersion},
          {"command", command},
          {"config", std::move(config)}};
}

// "3" or "1..4".
std::pair<int, int> parse_genus_range(const std::string& text, int lo, int hi) {
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw UsageError("bad genus range '" + text + "'");
    }
    if (used != s.size()) throw UsageError("bad genus range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  int first = 0;
  int last = 0;
  if (dots == std::string::npos) {
    first = last = parse_int(text);
  } else {
    first = parse_int(text.substr(0, dots));
    last = parse_int(text.substr(dots + 2));
  }
  if (first > last || first < lo || last > hi) {
    throw UsageError("genus range '" + text + "' must lie within " + std::to_string(lo) + ".." +
                     std::to_string(hi));
  }
  return {first, last};
}

void require_range(int value, int lo, int hi, const char* name) {
  if (value < lo || value > hi) {
    throw UsageError(std::string(name) + " must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got " + std::to_string(value));
  }
}

int resolve_workers(int flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("BCJ_WORKERS"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("BCJ_WORKERS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

// ---- dims ----

struct DimsOptions {
  std::string genus = "1..6";
  std::string format = "md";
  std::string out;
};

int run_dims(const DimsOptions& o) {
  const auto [first, last] = parse_genus_range(o.genus, 1, bcj::kMaxGenus);
  std::vector<bcj::Dims> rows;
  for (int g = first; g <= last; ++g) rows.push_back(bcj::dims(g));
  std::ostringstream text;
  if (o.format == "json") {
    json j = {{"manifest", manifest("dims", {{"genus", o.genus}})}, {"rows", json::array()}};
    for (const auto& d : rows) j["rows"].push_back(bcj::io::to_json(d));
    text << bcj::io::dump(j);
  } else if (o.format == "csv") {
    text << "genus,d,dim_wedge,dim_w,dim_im,cubic_type\n";
    for (const auto& d : rows) {
      text << d.genus << ',' << d.d << ',' << d.dim_wedge << ',' << d.dim_w << ',' << d.dim_im << ','
           << d.cubic_type << '\n';
    }
  } else {
    text << "| g | d | dim_wedge | dim_w | dim_im | cubic_type |\n";
    text << "|---|---|---|---|---|---|\n";
    for (const auto& d : rows) {
      text << "| " << d.genus << " | " << d.d << " | " << d.dim_wedge << " | " << d.dim_w << " | "
           << d.dim_im << " | " << d.cubic_type << " |\n";
    }
  }
  write_output(o.out, text.str());
  return kExitOk;
}

// ---- orbits ----

struct OrbitsOptions {
  int genus = 4;
  std::string format = "md";
  std::string out;
};

int run_orbits(const OrbitsOptions& o) {
  require_range(o.genus, 2, 12, "--g");
  const bcj::OrbitReport r = bcj::orbit_classes(o.genus);
  std::ostringstream text;
  if (o.format == "json") {
    text << bcj::io::dump({{"manifest", manifest("orbits", {{"genus", o.genus}})},
                           {"report", bcj::io::to_json(r)}});
  } else if (o.format == "csv") {
    text << "label,size,representative\n";
    for (const auto& c : r.classes) {
      text << c.label << ',' << c.members.size() << ",\"" << c.representative << "\"\n";
    }
  } else {
    text << "genus " << r.genus << ": " << r.classes.size() << " classes, " << r.member_count()
         << " non-index-matched basis elements\n\n";
    text << "| class | size | representative |\n|---|---|---|\n";
    for (const auto& c : r.classes) {
      text << "| " << c.label << " | " << c.members.size() << " | " << c.representative << " |\n";
    }
    for (const auto& e : r.errors) text << "\nclassification error: " << e << '\n';
  }
  write_output(o.out, text.str());
  return r.errors.empty() ? kExitOk : kExitCheckFailed;
}

// ---- search ----

struct SearchOptions {
  int genus = 4;
  int max_support = 3;
  bool families = false;
  bool bp = false;
  std::string disjointness = "orthogonal";
  int workers = 1;
  bool workers_given = false;
  std::uint64_t seed = 0;
  std::string format = "md";
  std::string out;
};

int run_search(const SearchOptions& o) {
  require_range(o.genus, 2, 8, "--g");
  require_range(o.max_support, 1, 4, "--max-support");
  bcj::SearchParams p;
  p.genus = o.genus;
  p.max_support = o.max_support;
  p.include_families = o.families;
  p.include_bp = o.bp;
  p.disjointness = bcj::parse_disjointness(o.disjointness);
  p.workers = resolve_workers(o.workers, o.workers_given);
  require_range(p.workers, 1, 256, "--workers");

  const bcj::ImageReport r = bcj::image_rank_report(p);
  json report = bcj::io::to_json(r);
  report.erase("timing");
  const json doc = {
      {"manifest", manifest("search", {{"genus", p.genus},
                                       {"max_support", p.max_support},
                                       {"families", p.include_families},
                                       {"bp", p.include_bp},
                                       {"disjointness", bcj::to_string(p.disjointness)},
                                       {"workers", p.workers},
                                       {"seed", o.seed}})},
      {"report", report},
      {"timing", {{"elapsed_seconds", r.elapsed_seconds}, {"timestamp", utc_timestamp()}}},
  };

  std::ostringstream summary;
  summary << "search g=" << p.genus << " max_support=" << p.max_support
          << " disjointness=" << bcj::to_string(p.disjointness)
          << (p.include_families ? " +families" : "") << (p.include_bp ? " +bp" : "") << "\n";
  summary << "rank " << r.rank << " of dim_wedge " << r.dims.dim_wedge << " (codim " << r.codim
          << "); dim_w " << r.dims.dim_w << ", dim_im " << r.dims.dim_im << "\n";
  summary << "W covered: " << (r.w_covered() ? "yes" : "no") << " (" << r.missing.size()
          << " missing)\n\n";
  summary << "| orbit | first witnessing cycle |\n|---|---|\n";
  for (const auto& [label, cycle] : r.orbit_hits) {
    std::string cell;
    for (char ch : cycle) cell += ch == '|' ? std::string("\\|") : std::string(1, ch);
    summary << "| " << label << " | " << cell << " |\n";
  }
  if (!r.missing.empty()) {
    summary << "\nmissing (first 20):\n";
    for (std::size_t i = 0; i < r.missing.size() && i < 20; ++i) summary << "  " << r.missing[i] << "\n";
  }

  if (!o.out.empty()) write_output(o.out, bcj::io::dump(doc));
  if (o.format == "json") {
    if (o.out.empty()) write_output("", bcj::io::dump(doc));
  } else if (o.format == "csv") {
    std::ostringstream csv;
    csv << "genus,max_support,rank,dim_wedge,dim_w,dim_im,codim,missing\n";
    csv << p.genus << ',' << p.max_support << ',' << r.rank << ',' << r.dims.dim_wedge << ','
        << r.dims.dim_w << ',' << r.dims.dim_im << ',' << r.codim << ',' << r.missing.size() << '\n';
    write_output("", csv.str());
  } else {
    write_output("", summary.str());
  }
  return r.w_covered() ? kExitOk : kExitCheckFailed;
}

// ---- verify ----

struct VerifyOptions {
  int genus = 2;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool exhaustive_mu = false;
  std::string linking_matrix;
  std::string format = "md";
  std::string out;
};

int run_verify(const VerifyOptions& o) {
  require_range(o.genus, 1, 8, "--g");
  if (o.exhaustive_mu && o.genus > 6) throw UsageError("--exhaustive-mu supports --g <= 6");

  std::optional<bcj::LinkingMatrix> supplied;
  std::string lm_hash;
  if (!o.linking_matrix.empty()) {
    const std::string text = read_file(o.linking_matrix);
    lm_hash = bcj::io::hex64(bcj::io::fnv1a64(text));
    try {
      supplied = bcj::io::linking_matrix_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw IoError("linking matrix '" + o.linking_matrix + "' is not valid JSON: " + e.what());
    } catch (const bcj::Error& e) {
      throw IoError("invalid linking matrix '" + o.linking_matrix + "': " + e.what());
    }
    if (supplied->genus() != o.genus) {
      throw IoError("linking matrix '" + o.linking_matrix + "' has genus " +
                    std::to_string(supplied->genus()) + ", expected " + std::to_string(o.genus));
    }
  }

  std::vector<bcj::DiagramCheck> checks;
  const bcj::DiagramReport diagrams =
      bcj::verify_diagrams(o.genus, o.trials, o.seed, o.exhaustive_mu);
  for (const auto& c : diagrams.checks) checks.push_back(c);
  for (int h = 1; h <= std::min(o.genus, 3); ++h) {
    checks.push_back(bcj::basis_independence_suite(o.genus, h, o.trials, bcj::derive_seed(o.seed, 100 + h)));
  }
  if (o.genus == 2) checks.push_back(bcj::equivariance_exhaustive_g2());
  checks.push_back(bcj::equivariance_random_words(o.genus, o.trials, bcj::derive_seed(o.seed, 200)));
  checks.push_back(bcj::composition_law_suite(o.genus, o.trials, bcj::derive_seed(o.seed, 300)));
  if (supplied) checks.push_back(bcj::right_square_check(*supplied, o.trials, bcj::derive_seed(o.seed, 400)));

  bool all_pass = true;
  for (const auto& c : checks) all_pass = all_pass && c.passed();

  std::ostringstream text;
  if (o.format == "json") {
    json config = {{"genus", o.genus},
                   {"trials", o.trials},
                   {"seed", o.seed},
                   {"exhaustive_mu", o.exhaustive_mu}};
    if (supplied) config["linking_matrix"] = {{"path", o.linking_matrix}, {"fnv1a64", lm_hash}};
    json list = json::array();
    for (const auto& c : checks) list.push_back(bcj::io::to_json(c));
    text << bcj::io::dump({{"manifest", manifest("verify", config)},
                           {"passed", all_pass},
                           {"checks", list}});
  } else if (o.format == "csv") {
    text << "check,trials,failures,passed\n";
    for (const auto& c : checks) {
      text << c.name << ',' << c.trials << ',' << c.failures << ',' << (c.passed() ? 1 : 0) << '\n';
    }
  } else {
    text << "verify g=" << o.genus << " trials=" << o.trials << " seed=" << o.seed << "\n\n";
    text << "| check | cases | failures | status |\n|---|---|---|---|\n";
    for (const auto& c : checks) {
      text << "| " << c.name << " | " << c.trials << " | " << c.failures << " | "
           << (c.passed() ? "pass" : "FAIL") << " |\n";
    }
    for (const auto& c : checks) {
      for (const auto& w : c.witnesses) text << "\nwitness [" << c.name << "]: " << w << '\n';
    }
  }
  write_output(o.out, text.str());
  return all_pass ? kExitOk : kExitCheckFailed;
}

// ---- eval ----

struct EvalOptions {
  std::string catalog;
  std::string format = "md";
  std::string out;
};

int run_eval(const EvalOptions& o) {
  const std::string text = read_file(o.catalog);
  const bcj::io::Catalog cat = bcj::io::catalog_from_json(parse_json_text(text, "catalog"));
  std::vector<bcj::io::EvalResult> results;
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    results.push_back(bcj::io::eval_entry(cat.entries[i], cat.genus, i));
  }
  std::ostringstream out;
  if (o.format == "json") {
    json list = json::array();
    for (const auto& r : results) list.push_back(bcj::io::to_json(r));
    out << bcj::io::dump(
        {{"manifest", manifest("eval", {{"catalog", o.catalog},
                                        {"fnv1a64", bcj::io::hex64(bcj::io::fnv1a64(text))}})},
         {"genus", cat.genus},
         {"results", list}});
  } else if (o.format == "csv") {
    if (!results.empty()) out << "label,type,sigma,rho,mu_rho\n";
    for (const auto& r : results) {
      out << '"' << r.label << "\"," << r.type << ",\"" << bcj::to_string(r.sigma) << "\",\""
          << (r.rho ? bcj::to_string(*r.rho) : "") << "\",\""
          << (r.mu_rho ? bcj::to_string(*r.mu_rho) : "") << "\"\n";
    }
  } else {
    for (const auto& r : results) {
      out << r.label << ": sigma = " << bcj::to_string(r.sigma) << '\n';
      if (r.rho) {
        out << "  rho = " << bcj::to_string(*r.rho) << '\n';
        out << "  mu(rho) = " << bcj::to_string(*r.mu_rho) << '\n';
      }
    }
  }
  write_output(o.out, out.str());
  return kExitOk;
}

void add_format(CLI::App* cmd, std::string& format, std::string& out) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  cmd->add_option("--out", out, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birman-Craggs-Johnson homomorphism computations", "bcj"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(bcj::io::kToolVersion));

  DimsOptions dims_opts;
  auto* dims_cmd = app.add_subcommand("dims", "Dimension table for B_2 and wedge^2 B_2");
  dims_cmd->add_option("--g", dims_opts.genus, "Genus or range, e.g. 4 or 1..6")->capture_default_str();
  add_format(dims_cmd, dims_opts.format, dims_opts.out);

  OrbitsOptions orbit_opts;
  auto* orbits_cmd = app.add_subcommand("orbits", "Partial Sp-orbits of non-index-matched basis elements");
  orbits_cmd->add_option("--g", orbit_opts.genus, "Genus (2..12)")->capture_default_str();
  add_format(orbits_cmd, orbit_opts.format, orbit_opts.out);

  SearchOptions search_opts;
  auto* search_cmd = app.add_subcommand("search", "Span of abelian-cycle images in wedge^2 B_2");
  search_cmd->add_option("--g", search_opts.genus, "Genus (2..8)")->capture_default_str();
  search_cmd->add_option("--max-support", search_opts.max_support, "Handles per spine (1..4)")
      ->capture_default_str();
  search_cmd->add_flag("--families", search_opts.families, "Add the asserted cokernel families");
  search_cmd->add_flag("--bp", search_opts.bp, "Add bounding pair maps with sigma in B_2");
  search_cmd->add_option("--disjointness", search_opts.disjointness, "support|orthogonal")
      ->check(CLI::IsMember({"support", "orthogonal"}))
      ->capture_default_str();
  auto* workers_opt = search_cmd->add_option("--workers", search_opts.workers,
                                             "Worker threads (default: BCJ_WORKERS or 1)");
  search_cmd->add_option("--seed", search_opts.seed, "Recorded in the manifest; the search is deterministic");
  search_cmd->add_option("--format", search_opts.format, "Stdout format")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  search_cmd->add_option("--out", search_opts.out, "Write the JSON report to this file");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Diagram, equivariance and basis-independence suites");
  verify_cmd->add_option("--g", verify_opts.genus, "Genus (1..8)")->capture_default_str();
  verify_cmd->add_option("--trials", verify_opts.trials, "Random cases per suite")->capture_default_str();
  verify_cmd->add_option("--seed", verify_opts.seed, "Run seed")->capture_default_str();
  verify_cmd->add_flag("--exhaustive-mu", verify_opts.exhaustive_mu,
                       "Check mu(l(u,u)) = bar(u) on all 2^{2g} classes");
  verify_cmd->add_option("--linking-matrix", verify_opts.linking_matrix,
                         "JSON linking matrix to check the right square with");
  add_format(verify_cmd, verify_opts.format, verify_opts.out);

  EvalOptions eval_opts;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate sigma, rho and mu(rho) on a curve catalog");
  eval_cmd->add_option("catalog", eval_opts.catalog, "Catalog JSON file")->required();
  add_format(eval_cmd, eval_opts.format, eval_opts.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  search_opts.workers_given = workers_opt->count() > 0;

  try {
    if (*dims_cmd) return run_dims(dims_opts);
    if (*orbits_cmd) return run_orbits(orbit_opts);
    if (*search_cmd) return run_search(search_opts);
    if (*verify_cmd) return run_verify(verify_opts);
    if (*eval_cmd) return run_eval(eval_opts);
  } catch (const IoError& e) {
    std::cerr << "bcj: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "bcj: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bcj::SchemaError& e) {
    std::cerr << "bcj: schema error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bcj::ArgumentError& e) {
    std::cerr << "bcj: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bcj::GenusError& e) {
    std::cerr << "bcj: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bcj::Error& e) {
    std::cerr << "bcj: check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
