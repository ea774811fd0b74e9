#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "friendship.h"

namespace {

using njson = nlohmann::ordered_json;

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { fh_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

struct OwnedHg {
  fh_hypergraph* h = nullptr;
  ~OwnedHg() { fh_hypergraph_free(h); }
};

struct OwnedOutcome {
  fh_search_outcome* s = nullptr;
  ~OwnedOutcome() { fh_search_outcome_free(s); }
};

int exit_code(fh_status rc) {
  if (rc == FH_OK) return 0;
  if (rc == FH_VERIFY_FAIL) return 1;
  return 2;
}

void report_failure(fh_status rc) {
  if (rc != FH_OK && rc != FH_VERIFY_FAIL) std::cerr << "error: " << fh_last_error() << "\n";
}

int resolve_jobs(int cli_jobs) {
  if (cli_jobs > 0) return cli_jobs;
  if (const char* env = std::getenv("FRIENDSHIP_HG_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (...) {
    }
    std::cerr << "error: FRIENDSHIP_HG_JOBS must be a positive integer\n";
    std::exit(2);
  }
  return 1;
}

OwnedHg load_or_exit(const std::string& path) {
  OwnedHg hg;
  const fh_status rc = fh_hypergraph_read_file(path.c_str(), &hg.h);
  if (rc != FH_OK) {
    std::cerr << "error: " << fh_last_error() << "\n";
    std::exit(2);
  }
  return hg;
}

// One-level human rendering of a certificate document.
void print_certificate_text(const njson& cert) {
  std::cout << "check: " << cert.value("check", std::string("?")) << "\n";
  std::cout << "verdict: " << cert.value("verdict", std::string("?")) << "\n";
  if (cert.contains("witness") && !cert["witness"].is_null())
    std::cout << "witness: " << cert["witness"].dump() << "\n";
  if (cert.contains("stats") && !cert["stats"].is_null())
    std::cout << "stats: " << cert["stats"].dump() << "\n";
  if (cert.contains("input_sha256"))
    std::cout << "input_sha256: " << cert["input_sha256"].get<std::string>() << "\n";
}

// Emits a certificate (or certificate-shaped) JSON string per the format.
int emit_certificate(fh_status rc, const OwnedString& json, const std::string& format) {
  if (json.s) {
    if (format == "json") {
      std::cout << json.str() << "\n";
    } else {
      print_certificate_text(njson::parse(json.str()));
    }
  }
  report_failure(rc);
  return exit_code(rc);
}

// Construction output: .hg text (file or stdout) plus a provenance record.
int emit_construction(fh_hypergraph* h, const std::string& out, int steiner_t, njson recipe,
                      const std::string& format) {
  if (!out.empty()) {
    const fh_status rc = fh_hypergraph_write_file(h, out.c_str(), steiner_t);
    if (rc != FH_OK) {
      report_failure(rc);
      return exit_code(rc);
    }
  }
  OwnedString sha;
  if (fh_hypergraph_sha256(h, &sha.s) != FH_OK) {
    report_failure(FH_ERR_INTERNAL);
    return 2;
  }
  if (format == "json") {
    njson record;
    record["report"] = "construction";
    record["recipe"] = std::move(recipe);
    record["n"] = fh_hypergraph_n(h);
    record["r"] = fh_hypergraph_r(h);
    record["edges"] = fh_hypergraph_edge_count(h);
    record["sha256"] = sha.str();
    record["path"] = out.empty() ? njson(nullptr) : njson(out);
    if (out.empty()) {
      OwnedString text;
      if (fh_hypergraph_to_text(h, steiner_t, &text.s) != FH_OK) {
        report_failure(FH_ERR_INTERNAL);
        return 2;
      }
      record["hg"] = text.str();
    }
    std::cout << record.dump(2) << "\n";
    return 0;
  }
  if (out.empty()) {
    OwnedString text;
    if (fh_hypergraph_to_text(h, steiner_t, &text.s) != FH_OK) {
      report_failure(FH_ERR_INTERNAL);
      return 2;
    }
    std::cout << text.str();
  } else {
    std::cout << "wrote " << out << " (n=" << fh_hypergraph_n(h) << " r=" << fh_hypergraph_r(h)
              << " edges=" << fh_hypergraph_edge_count(h) << ")\n";
  }
  return 0;
}

void print_audit_text(const njson& a) {
  std::cout << "audit of " << a.value("input_sha256", std::string("?")) << "\n";
  std::cout << "n=" << a["n"].get<int>() << " r=" << a["r"].get<int>()
            << " edges=" << a["edges"].get<std::uint64_t>() << "\n";
  std::cout << "friendship: " << a["friendship"]["verdict"].get<std::string>() << "\n";
  if (a.value("status", std::string()) != "ok") {
    std::cout << "status: refused (not a friendship hypergraph)\n";
    return;
  }
  std::cout << "decomposition: " << a["decomposition"]["cliques"].get<std::uint64_t>()
            << " cliques\n";
  const njson& u = a["universal"];
  if (u["universal_vertex"].is_null())
    std::cout << "universal: " << u["certificate"]["verdict"].get<std::string>() << "\n";
  else
    std::cout << "universal: PASS (vertex " << u["universal_vertex"].get<int>() << ")\n";
  const njson& b = a["bounds"];
  std::cout << "min_edges: " << b["min_edges"].get<std::string>()
            << (b["min_is_attained"].get<bool>() ? " (attained)" : " (not attained)") << "\n";
  if (!b["max_edges"].is_null())
    std::cout << "max_edges: " << b["max_edges"].get<std::string>() << " (respected: "
              << (b["max_edges_respected"].get<bool>() ? "yes" : "no") << ")\n";
  const njson& soc = a["sociable"];
  std::cout << "sociable/unsociable/uncovered: " << soc["sociable_count"].get<std::uint64_t>()
            << "/" << soc["unsociable_count"].get<std::uint64_t>() << "/"
            << soc["uncovered_count"].get<std::uint64_t>() << "\n";
  if (!a["shadow"].is_null())
    std::cout << "shadow: " << a["shadow"]["verdict"].get<std::string>() << "\n";
}

void print_bounds_text(const njson& t) {
  std::cout << "bounds for r=" << t["r"].get<int>() << "\n";
  std::cout << "n\tmin_edges\tmax_cliques\tmax_edges\tlrss\n";
  for (const njson& row : t["rows"]) {
    std::cout << row["n"].get<int>() << "\t" << row["min_edges"].get<std::string>() << "\t"
              << row["max_cliques"].get<std::string>() << " (floor "
              << row["max_cliques_floor"].get<std::string>() << ")\t"
              << row["max_edges"].get<std::string>() << "\t";
    if (row["lrss"].is_null())
      std::cout << "-";
    else
      std::cout << row["lrss"].get<std::string>()
                << (row["improves_on_lrss"].get<bool>() ? " (improved)" : "");
    std::cout << "\n";
  }
}

void print_search_text(const njson& o) {
  std::cout << "search n=" << o["n"].get<int>() << " r=" << o["r"].get<int>() << "\n";
  std::cout << "solutions: " << o["solutions_found"].get<std::uint64_t>() << "\n";
  std::cout << "nodes_visited: " << o["nodes_visited"].get<std::uint64_t>() << "\n";
  std::cout << "exhausted: " << (o["exhausted"].get<bool>() ? "yes" : "no") << "\n";
  std::size_t i = 0;
  for (const njson& s : o["solutions"]) {
    std::cout << "solution " << i++ << ": " << s["cliques"].size() << " cliques, "
              << s["edges"].get<std::uint64_t>() << " edges\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"friendship hypergraph toolkit: construct, verify, analyze, bound, search"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  const auto format_validator = CLI::IsMember({"text", "json"});

  // construct
  auto* construct = app.add_subcommand("construct", "build a named hypergraph family");
  construct->require_subcommand(1);
  std::string c_out, c_format = "text";
  int c_t = 0, c_k = 0, c_n = 0, c_r = 0, c_l = 0;
  int c_a = -1, c_b = -1, c_c = -1;

  const auto add_construct_common = [&](CLI::App* sub) {
    sub->add_option("-o,--out", c_out, "output .hg path (default stdout)");
    sub->add_option("-f,--format", c_format, "output format: text | json")
        ->check(format_validator);
  };

  auto* c_uni = construct->add_subcommand(
      "universal", "minimum friendship hypergraph over a Steiner system S(t,k,n)");
  c_uni->add_option("--t", c_t, "Steiner strength t")->required();
  c_uni->add_option("--k", c_k, "block size k (the uniformity of the result)")->required();
  c_uni->add_option("--n", c_n, "Steiner point count (result has n+1 vertices)")->required();
  add_construct_common(c_uni);

  auto* c_complete = construct->add_subcommand("complete", "the (r+1)-vertex complete r-graph");
  c_complete->add_option("--r", c_r, "uniformity")->required();
  add_construct_common(c_complete);

  auto* c_trunc = construct->add_subcommand(
      "truncated", "friendship hypergraph without a universal friend (r = 2 or 4)");
  c_trunc->add_option("--r", c_r, "uniformity")->required();
  c_trunc->add_option("--a", c_a, "removed block-anchor point (default: highest)");
  c_trunc->add_option("--b", c_b, "first avoided point (default: third-highest)");
  c_trunc->add_option("--c", c_c, "second avoided point (default: second-highest)");
  add_construct_common(c_trunc);

  auto* c_cube = construct->add_subcommand("cube", "3-uniform friendship hypergraph on {0,1}^k");
  c_cube->add_option("--k", c_k, "cube dimension (3..6)")->required();
  add_construct_common(c_cube);

  auto* c_m = construct->add_subcommand("m", "the k-sets meeting {0..l-1} (saturation extremal)");
  c_m->add_option("--n", c_n, "vertex count")->required();
  c_m->add_option("--k", c_k, "uniformity")->required();
  c_m->add_option("--l", c_l, "core size")->required();
  add_construct_common(c_m);

  // steiner
  auto* steiner = app.add_subcommand("steiner", "generate a Steiner system");
  steiner->require_subcommand(1);
  int s_n = 0;
  std::string s_out, s_format = "text";
  const auto add_steiner_common = [&](CLI::App* sub) {
    sub->add_option("-o,--out", s_out, "output .hg path (default stdout)");
    sub->add_option("-f,--format", s_format, "output format: text | json")
        ->check(format_validator);
  };
  auto* s_sts = steiner->add_subcommand("sts", "Steiner triple system S(2,3,n)");
  s_sts->add_option("--n", s_n, "points (1 or 3 mod 6)")->required();
  add_steiner_common(s_sts);
  auto* s_sqs = steiner->add_subcommand("sqs8", "the Steiner quadruple system S(3,4,8)");
  add_steiner_common(s_sqs);
  auto* s_golay = steiner->add_subcommand("s5612", "the Steiner system S(5,6,12)");
  add_steiner_common(s_golay);

  // verify
  auto* verify = app.add_subcommand("verify", "run one verification, print its certificate");
  verify->require_subcommand(1);
  std::string v_file, v_format = "text";
  int v_jobs = 0, v_t = 0, v_l = 0;

  const auto add_verify_common = [&](CLI::App* sub) {
    sub->add_option("file", v_file, "input .hg")->required();
    sub->add_option("-f,--format", v_format, "output format: text | json")
        ->check(format_validator);
  };

  auto* v_friend = verify->add_subcommand("friendship", "unique-friend property for every r-set");
  add_verify_common(v_friend);
  v_friend->add_option("--jobs", v_jobs, "worker threads (or FRIENDSHIP_HG_JOBS)");

  auto* v_steiner = verify->add_subcommand("steiner", "every t-set lies in exactly one block");
  add_verify_common(v_steiner);
  v_steiner->add_option("--t", v_t, "strength (default: the file's annotation)");

  auto* v_sat = verify->add_subcommand("saturated", "clique-free but one edge short everywhere");
  add_verify_common(v_sat);
  v_sat->add_option("--l", v_l, "clique excess over uniformity")->required();

  auto* v_uni = verify->add_subcommand("universal", "some vertex extends every (r-1)-set");
  add_verify_common(v_uni);

  auto* v_shadow = verify->add_subcommand("shadow", "outside-vertex cap on the clique cover");
  add_verify_common(v_shadow);

  // decompose
  auto* decompose = app.add_subcommand("decompose", "unique clique cover of an .hg input");
  std::string d_file, d_format = "text";
  decompose->add_option("file", d_file, "input .hg")->required();
  decompose->add_option("-f,--format", d_format, "output format: text | json")
      ->check(format_validator);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full structural audit of an .hg input");
  std::string a_file, a_format = "text";
  int a_jobs = 0;
  analyze->add_option("file", a_file, "input .hg")->required();
  analyze->add_option("--jobs", a_jobs, "worker threads (or FRIENDSHIP_HG_JOBS)");
  analyze->add_option("-f,--format", a_format, "output format: text | json")
      ->check(format_validator);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "exact bound table for a uniformity");
  int b_r = 0, b_from = 0, b_to = 0;
  std::string b_format = "text";
  bounds->add_option("--r", b_r, "uniformity (>= 3)")->required();
  bounds->add_option("--n-from", b_from, "first n (default r+1)");
  bounds->add_option("--n-to", b_to, "last n (default n-from+12)");
  bounds->add_option("-f,--format", b_format, "output format: text | json")
      ->check(format_validator);

  // search
  auto* search = app.add_subcommand("search", "exhaustive search for friendship hypergraphs");
  int se_n = 0, se_r = 3, se_jobs = 0;
  std::uint64_t se_max = 0, se_budget = 100000000ull;
  bool se_nosym = false, se_census = false;
  std::string se_outdir, se_format = "text";
  search->add_option("--n", se_n, "vertex count (<= 10)")->required();
  search->add_option("--r", se_r, "uniformity (default 3)");
  search->add_option("--max-solutions", se_max, "stop after this many solutions");
  search->add_option("--node-budget", se_budget, "search tree node cap (default 1e8)");
  search->add_flag("--no-symmetry", se_nosym, "do not force the least candidate clique");
  search->add_option("--jobs", se_jobs, "worker threads (or FRIENDSHIP_HG_JOBS)");
  search->add_option("--out-dir", se_outdir, "write each solution as an .hg file here");
  search->add_flag("--census", se_census, "cross-check the outcome against known small cases");
  search->add_option("-f,--format", se_format, "output format: text | json")
      ->check(format_validator);

  // lemma-lab
  auto* lab = app.add_subcommand("lemma-lab", "exhaustive small-case lemma checks");
  lab->require_subcommand(1);
  int lab_n = 7, lab_r = 5;
  std::string lab_format = "text";
  auto* lab_path = lab->add_subcommand("path", "minimum edges under the degree-1 separation rule");
  lab_path->add_option("--max-n", lab_n, "largest vertex count (3..8, default 7)");
  lab_path->add_option("-f,--format", lab_format, "output format: text | json")
      ->check(format_validator);
  auto* lab_comp =
      lab->add_subcommand("complement", "extremal edge count of capped-degree graphs");
  lab_comp->add_option("--max-r", lab_r, "largest uniformity (3..7, default 5)");
  lab_comp->add_option("-f,--format", lab_format, "output format: text | json")
      ->check(format_validator);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; every malformed invocation exits 2.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (construct->parsed()) {
    OwnedHg hg;
    fh_status rc = FH_ERR_INTERNAL;
    njson recipe;
    if (c_uni->parsed()) {
      rc = fh_construct_universal(c_t, c_k, c_n, &hg.h);
      recipe = {{"kind", "universal"}, {"parameters", {{"t", c_t}, {"k", c_k}, {"n", c_n}}}};
    } else if (c_complete->parsed()) {
      rc = fh_construct_complete(c_r, &hg.h);
      recipe = {{"kind", "complete"}, {"parameters", {{"r", c_r}}}};
    } else if (c_trunc->parsed()) {
      rc = fh_construct_truncated(c_r, c_a, c_b, c_c, &hg.h);
      njson params = {{"r", c_r}};
      params["removed"] = (c_a < 0 && c_b < 0 && c_c < 0)
                              ? njson({2 * c_r + 3, 2 * c_r + 1, 2 * c_r + 2})
                              : njson({c_a, c_b, c_c});
      recipe = {{"kind", "truncated"}, {"parameters", std::move(params)}};
    } else if (c_cube->parsed()) {
      rc = fh_construct_cube(c_k, &hg.h);
      recipe = {{"kind", "cube"}, {"parameters", {{"k", c_k}}}};
    } else if (c_m->parsed()) {
      rc = fh_construct_m(c_n, c_k, c_l, &hg.h);
      recipe = {{"kind", "m"}, {"parameters", {{"n", c_n}, {"k", c_k}, {"l", c_l}}}};
    }
    if (rc != FH_OK) {
      report_failure(rc);
      return exit_code(rc);
    }
    return emit_construction(hg.h, c_out, 0, std::move(recipe), c_format);
  }

  if (steiner->parsed()) {
    OwnedHg hg;
    fh_status rc = FH_ERR_INTERNAL;
    njson recipe;
    if (s_sts->parsed()) {
      rc = fh_make_steiner(2, 3, s_n, &hg.h);
      recipe = {{"kind", "steiner"}, {"parameters", {{"t", 2}, {"k", 3}, {"n", s_n}}}};
    } else if (s_sqs->parsed()) {
      rc = fh_make_steiner(3, 4, 8, &hg.h);
      recipe = {{"kind", "steiner"}, {"parameters", {{"t", 3}, {"k", 4}, {"n", 8}}}};
    } else if (s_golay->parsed()) {
      rc = fh_make_steiner(5, 6, 12, &hg.h);
      recipe = {{"kind", "steiner"}, {"parameters", {{"t", 5}, {"k", 6}, {"n", 12}}}};
    }
    if (rc != FH_OK) {
      report_failure(rc);
      return exit_code(rc);
    }
    return emit_construction(hg.h, s_out, fh_hypergraph_steiner_t(hg.h), std::move(recipe),
                             s_format);
  }

  if (verify->parsed()) {
    OwnedHg hg = load_or_exit(v_file);
    OwnedString json;
    fh_status rc = FH_ERR_INTERNAL;
    if (v_friend->parsed()) rc = fh_verify_friendship(hg.h, resolve_jobs(v_jobs), &json.s);
    if (v_steiner->parsed()) {
      int t = v_t > 0 ? v_t : fh_hypergraph_steiner_t(hg.h);
      if (t <= 0) {
        std::cerr << "error: no --t given and the file carries no steiner annotation\n";
        return 2;
      }
      rc = fh_verify_steiner_property(hg.h, t, &json.s);
    }
    if (v_sat->parsed()) rc = fh_verify_saturated(hg.h, v_l, &json.s);
    if (v_uni->parsed()) rc = fh_is_universal(hg.h, &json.s);
    if (v_shadow->parsed()) rc = fh_shadow_check(hg.h, &json.s);
    if (v_uni->parsed() && json.s && v_format == "text") {
      // The universality document wraps its certificate; unwrap for text mode.
      const njson doc = njson::parse(json.str());
      print_certificate_text(doc["certificate"]);
      if (!doc["universal_vertex"].is_null())
        std::cout << "universal_vertex: " << doc["universal_vertex"].get<int>() << "\n";
      report_failure(rc);
      return exit_code(rc);
    }
    return emit_certificate(rc, json, v_format);
  }

  if (decompose->parsed()) {
    OwnedHg hg = load_or_exit(d_file);
    OwnedString json;
    const fh_status rc = fh_decompose(hg.h, &json.s);
    if (json.s && d_format == "text") {
      const njson doc = njson::parse(json.str());
      print_certificate_text(doc["certificate"]);
      if (!doc["decomposition"].is_null())
        std::cout << "cliques: " << doc["decomposition"]["cliques"].size() << "\n";
      report_failure(rc);
      return exit_code(rc);
    }
    return emit_certificate(rc, json, d_format);
  }

  if (analyze->parsed()) {
    OwnedHg hg = load_or_exit(a_file);
    OwnedString json;
    const fh_status rc = fh_audit(hg.h, resolve_jobs(a_jobs), &json.s);
    if (json.s) {
      if (a_format == "json")
        std::cout << json.str() << "\n";
      else
        print_audit_text(njson::parse(json.str()));
    }
    report_failure(rc);
    return exit_code(rc);
  }

  if (bounds->parsed()) {
    const int from = b_from > 0 ? b_from : b_r + 1;
    const int to = b_to > 0 ? b_to : from + 12;
    OwnedString json;
    const fh_status rc = fh_bounds_table(b_r, from, to, &json.s);
    if (json.s) {
      if (b_format == "json")
        std::cout << json.str() << "\n";
      else
        print_bounds_text(njson::parse(json.str()));
    }
    report_failure(rc);
    return exit_code(rc);
  }

  if (search->parsed()) {
    OwnedOutcome outcome;
    const fh_status rc = fh_search(se_n, se_r, se_budget, se_max, se_nosym ? 0 : 1,
                                   resolve_jobs(se_jobs), &outcome.s);
    if (rc != FH_OK) {
      report_failure(rc);
      return exit_code(rc);
    }
    OwnedString outcome_json;
    if (fh_search_outcome_json(outcome.s, &outcome_json.s) != FH_OK) {
      report_failure(FH_ERR_INTERNAL);
      return 2;
    }

    if (!se_outdir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(se_outdir, ec);
      if (ec) {
        std::cerr << "error: cannot create " << se_outdir << ": " << ec.message() << "\n";
        return 2;
      }
      const std::uint64_t count = fh_search_solution_count(outcome.s);
      for (std::uint64_t i = 0; i < count; ++i) {
        OwnedHg sol;
        if (fh_search_solution(outcome.s, i, &sol.h) != FH_OK) {
          report_failure(FH_ERR_INTERNAL);
          return 2;
        }
        char name[32];
        std::snprintf(name, sizeof(name), "solution_%04llu.hg",
                      static_cast<unsigned long long>(i));
        const std::string path = (std::filesystem::path(se_outdir) / name).string();
        if (fh_hypergraph_write_file(sol.h, path.c_str(), 0) != FH_OK) {
          std::cerr << "error: " << fh_last_error() << "\n";
          return 2;
        }
      }
    }

    if (!se_census) {
      if (se_format == "json")
        std::cout << outcome_json.str() << "\n";
      else
        print_search_text(njson::parse(outcome_json.str()));
      return 0;
    }
    OwnedString census_json;
    const fh_status crc = fh_search_census(outcome.s, &census_json.s);
    const njson census = census_json.s ? njson::parse(census_json.str()) : njson(nullptr);
    if (se_format == "json") {
      njson doc;
      doc["outcome"] = njson::parse(outcome_json.str());
      doc["census"] = census;
      std::cout << doc.dump(2) << "\n";
    } else {
      print_search_text(njson::parse(outcome_json.str()));
      if (census.is_null())
        std::cout << "census: unavailable\n";
      else
        std::cout << "census: " << census["verdict"].get<std::string>() << "\n";
    }
    report_failure(crc);
    return exit_code(crc);
  }

  if (lab->parsed()) {
    OwnedString json;
    fh_status rc = FH_ERR_INTERNAL;
    if (lab_path->parsed()) rc = fh_check_path_components(lab_n, &json.s);
    if (lab_comp->parsed()) rc = fh_check_clique_complement(lab_r, &json.s);
    return emit_certificate(rc, json, lab_format);
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}
