#include "friendship.h"

#include <cstdlib>
#include <cstring>

#include "friendship/bounds.hpp"
#include "friendship/constructions.hpp"
#include "friendship/hg_io.hpp"
#include "friendship/hypergraph.hpp"
#include "friendship/search.hpp"
#include "friendship/steiner.hpp"
#include "friendship/verify.hpp"

struct fh_hypergraph {
  friendship::Hypergraph h;
  std::optional<int> steiner_t;
};

struct fh_search_outcome {
  friendship::SearchOutcome out;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) return nullptr;
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
fh_status guarded(F&& f) {
  try {
    return f();
  } catch (const friendship::InputError& e) {
    g_last_error = e.what();
    return FH_ERR_INVALID;
  } catch (const friendship::ParseError& e) {
    g_last_error = e.what();
    return FH_ERR_PARSE;
  } catch (const friendship::UnavailableError& e) {
    g_last_error = e.what();
    return FH_ERR_UNAVAILABLE;
  } catch (const friendship::IoError& e) {
    g_last_error = e.what();
    return FH_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FH_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return FH_ERR_INTERNAL;
  }
}

fh_status require(bool cond, const char* msg) {
  if (cond) return FH_OK;
  g_last_error = msg;
  return FH_ERR_INVALID;
}

fh_status emit_string(const std::string& s, char** out) {
  char* p = dup_string(s);
  if (!p) {
    g_last_error = "allocation failure";
    return FH_ERR_INTERNAL;
  }
  *out = p;
  return FH_OK;
}

// Certificates map to status by verdict: PASS -> FH_OK, FAIL ->
// FH_VERIFY_FAIL, ERROR -> FH_ERR_INVALID; the JSON is emitted in all
// three cases.
fh_status emit_certificate(const friendship::Certificate& c, char** out) {
  const fh_status rc = emit_string(c.to_json().dump(2), out);
  if (rc != FH_OK) return rc;
  switch (c.verdict) {
    case friendship::Verdict::Pass: return FH_OK;
    case friendship::Verdict::Fail: return FH_VERIFY_FAIL;
    case friendship::Verdict::Error:
      g_last_error = "check not applicable; see certificate";
      return FH_ERR_INVALID;
  }
  return FH_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* fh_last_error(void) { return g_last_error.c_str(); }

void fh_string_free(char* s) { std::free(s); }
void fh_hypergraph_free(fh_hypergraph* h) { delete h; }
void fh_search_outcome_free(fh_search_outcome* s) { delete s; }

fh_status fh_hypergraph_make(int n, int r, const int* edge_vertices, size_t edge_count,
                             fh_hypergraph** out) {
  if (fh_status rc = require(out && (edge_vertices || edge_count == 0), "null argument"); rc != FH_OK)
    return rc;
  return guarded([&] {
    std::vector<friendship::VertexSet> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      friendship::VertexSet e;
      for (int j = 0; j < r; ++j) e = e.with(edge_vertices[i * static_cast<size_t>(r) + static_cast<size_t>(j)]);
      edges.push_back(e);
    }
    *out = new fh_hypergraph{friendship::Hypergraph::make(n, r, std::move(edges)), std::nullopt};
    return FH_OK;
  });
}

fh_status fh_hypergraph_parse(const char* text, fh_hypergraph** out) {
  if (fh_status rc = require(text && out, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    friendship::HgDocument doc = friendship::parse_hg(text);
    *out = new fh_hypergraph{std::move(doc.hypergraph), doc.steiner_t};
    return FH_OK;
  });
}

fh_status fh_hypergraph_read_file(const char* path, fh_hypergraph** out) {
  if (fh_status rc = require(path && out, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    friendship::HgDocument doc = friendship::read_hg_file(path);
    *out = new fh_hypergraph{std::move(doc.hypergraph), doc.steiner_t};
    return FH_OK;
  });
}

fh_status fh_hypergraph_to_text(const fh_hypergraph* h, int steiner_t, char** out) {
  if (fh_status rc = require(h && out, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    return emit_string(
        friendship::to_hg(h->h, steiner_t > 0 ? std::optional<int>(steiner_t) : std::nullopt), out);
  });
}

fh_status fh_hypergraph_write_file(const fh_hypergraph* h, const char* path, int steiner_t) {
  if (fh_status rc = require(h && path, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    friendship::write_hg_file(path, h->h,
                              steiner_t > 0 ? std::optional<int>(steiner_t) : std::nullopt);
    return FH_OK;
  });
}

int fh_hypergraph_n(const fh_hypergraph* h) { return h ? h->h.n() : 0; }
int fh_hypergraph_r(const fh_hypergraph* h) { return h ? h->h.r() : 0; }
uint64_t fh_hypergraph_edge_count(const fh_hypergraph* h) { return h ? h->h.edge_count() : 0; }
int fh_hypergraph_steiner_t(const fh_hypergraph* h) {
  return (h && h->steiner_t) ? *h->steiner_t : 0;
}

fh_status fh_hypergraph_sha256(const fh_hypergraph* h, char** out) {
  if (fh_status rc = require(h && out, "null argument"); rc != FH_OK) return rc;
  return guarded([&] { return emit_string(friendship::hypergraph_sha256(h->h), out); });
}

fh_status fh_hypergraph_link(const fh_hypergraph* h, int vertex, fh_hypergraph** out) {
  if (fh_status rc = require(h && out, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    *out = new fh_hypergraph{h->h.link(vertex), std::nullopt};
    return FH_OK;
  });
}

fh_status fh_degree_profile(const fh_hypergraph* h, int k, char** json) {
  if (fh_status rc = require(h && json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    const friendship::DegreeProfile p = friendship::DegreeProfile::of(h->h, k);
    friendship::ordered_json j;
    j["k"] = p.k();
    friendship::ordered_json sets = friendship::ordered_json::array();
    for (friendship::VertexSet s : p.sets()) sets.push_back(friendship::set_to_json(s));
    j["sets"] = std::move(sets);
    j["degrees"] = p.degrees();
    j["min"] = p.min_degree();
    j["max"] = p.max_degree();
    j["total"] = p.total();
    return emit_string(j.dump(2), json);
  });
}

fh_status fh_friends_of(const fh_hypergraph* h, const int* r_set, size_t len, char** json) {
  if (fh_status rc = require(h && r_set && json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    friendship::VertexSet rs;
    for (size_t i = 0; i < len; ++i) rs = rs.with(r_set[i]);
    if (rs.count() != static_cast<int>(len))
      throw friendship::InputError("repeated vertex in r-set");
    const std::vector<int> friends = friendship::friends_of(h->h, rs);
    friendship::ordered_json j;
    j["r_set"] = friendship::set_to_json(rs);
    j["friends"] = friends;
    return emit_string(j.dump(2), json);
  });
}

fh_status fh_make_steiner(int t, int k, int n, fh_hypergraph** out) {
  if (fh_status rc = require(out != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    friendship::SteinerSystem s = friendship::make_steiner(t, k, n);
    *out = new fh_hypergraph{std::move(s.blocks), s.t};
    return FH_OK;
  });
}

fh_status fh_construct_universal(int t, int k, int n, fh_hypergraph** out) {
  if (fh_status rc = require(out != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    *out = new fh_hypergraph{friendship::universal(friendship::make_steiner(t, k, n)), std::nullopt};
    return FH_OK;
  });
}

fh_status fh_construct_complete(int r, fh_hypergraph** out) {
  if (fh_status rc = require(out != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    *out = new fh_hypergraph{friendship::complete(r), std::nullopt};
    return FH_OK;
  });
}

fh_status fh_construct_truncated(int r, int a, int b, int c, fh_hypergraph** out) {
  if (fh_status rc = require(out != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    *out = new fh_hypergraph{friendship::truncated(r, a, b, c), std::nullopt};
    return FH_OK;
  });
}

fh_status fh_construct_cube(int k, fh_hypergraph** out) {
  if (fh_status rc = require(out != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    *out = new fh_hypergraph{friendship::cube(k), std::nullopt};
    return FH_OK;
  });
}

fh_status fh_construct_m(int n, int k, int l, fh_hypergraph** out) {
  if (fh_status rc = require(out != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    *out = new fh_hypergraph{friendship::build_m(n, k, l), std::nullopt};
    return FH_OK;
  });
}

fh_status fh_verify_friendship(const fh_hypergraph* h, int jobs, char** cert_json) {
  if (fh_status rc = require(h && cert_json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] { return emit_certificate(friendship::verify_friendship(h->h, jobs), cert_json); });
}

fh_status fh_verify_steiner_property(const fh_hypergraph* blocks, int t, char** cert_json) {
  if (fh_status rc = require(blocks && cert_json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    return emit_certificate(
        friendship::verify_steiner(t, blocks->h.r(), blocks->h.n(), blocks->h), cert_json);
  });
}

fh_status fh_decompose(const fh_hypergraph* h, char** json) {
  if (fh_status rc = require(h && json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    friendship::DecomposeResult res = friendship::decompose(h->h);
    friendship::ordered_json j;
    j["certificate"] = res.certificate.to_json();
    j["decomposition"] =
        res.decomposition ? res.decomposition->to_json() : friendship::ordered_json(nullptr);
    const fh_status rc = emit_string(j.dump(2), json);
    if (rc != FH_OK) return rc;
    if (res.certificate.pass()) return FH_OK;
    return res.certificate.verdict == friendship::Verdict::Fail ? FH_VERIFY_FAIL : FH_ERR_INVALID;
  });
}

fh_status fh_is_universal(const fh_hypergraph* h, char** json) {
  if (fh_status rc = require(h && json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    friendship::UniversalResult res = friendship::is_universal(h->h);
    friendship::ordered_json j;
    j["certificate"] = res.certificate.to_json();
    j["universal_vertex"] = res.universal_vertex ? friendship::ordered_json(*res.universal_vertex)
                                                 : friendship::ordered_json(nullptr);
    j["steiner_blocks"] = res.extracted ? friendship::ordered_json(friendship::to_hg(
                                              res.extracted->blocks, res.extracted->t))
                                        : friendship::ordered_json(nullptr);
    const fh_status rc = emit_string(j.dump(2), json);
    if (rc != FH_OK) return rc;
    if (res.certificate.pass()) return FH_OK;
    return res.certificate.verdict == friendship::Verdict::Fail ? FH_VERIFY_FAIL : FH_ERR_INVALID;
  });
}

fh_status fh_verify_saturated(const fh_hypergraph* g, int l, char** cert_json) {
  if (fh_status rc = require(g && cert_json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] { return emit_certificate(friendship::verify_saturated(g->h, l), cert_json); });
}

fh_status fh_shadow_check(const fh_hypergraph* h, char** cert_json) {
  if (fh_status rc = require(h && cert_json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    friendship::DecomposeResult res = friendship::decompose(h->h);
    if (!res.decomposition) {
      friendship::Certificate c = friendship::Certificate::make_error(
          "shadow_degree",
          friendship::ordered_json{{"reason", "input has no clique cover"},
                                   {"decomposition", res.certificate.to_json()}},
          friendship::ordered_json(), res.certificate.input_sha256);
      return emit_certificate(c, cert_json);
    }
    return emit_certificate(friendship::shadow_check(*res.decomposition), cert_json);
  });
}

fh_status fh_sociable_report(const fh_hypergraph* h, char** json) {
  if (fh_status rc = require(h && json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    friendship::DecomposeResult res = friendship::decompose(h->h);
    if (!res.decomposition) {
      const fh_status rc = emit_string(res.certificate.to_json().dump(2), json);
      if (rc != FH_OK) return rc;
      return res.certificate.verdict == friendship::Verdict::Fail ? FH_VERIFY_FAIL : FH_ERR_INVALID;
    }
    return emit_string(friendship::sociable_report(*res.decomposition).to_json().dump(2), json);
  });
}

fh_status fh_audit(const fh_hypergraph* h, int jobs, char** json) {
  if (fh_status rc = require(h && json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    friendship::ordered_json j = friendship::audit(h->h, jobs);
    const bool ok = j.at("status") == "ok";
    const fh_status rc = emit_string(j.dump(2), json);
    if (rc != FH_OK) return rc;
    return ok ? FH_OK : FH_VERIFY_FAIL;
  });
}

fh_status fh_check_path_components(int max_n, char** cert_json) {
  if (fh_status rc = require(cert_json != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] { return emit_certificate(friendship::check_path_components(max_n), cert_json); });
}

fh_status fh_check_clique_complement(int max_r, char** cert_json) {
  if (fh_status rc = require(cert_json != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded(
      [&] { return emit_certificate(friendship::check_clique_complement(max_r), cert_json); });
}

fh_status fh_bounds_table(int r, int n_from, int n_to, char** json) {
  if (fh_status rc = require(json != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] { return emit_string(friendship::bounds_table(r, n_from, n_to).dump(2), json); });
}

fh_status fh_min_edges_bound(int n, int r, char** value) {
  if (fh_status rc = require(value != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded(
      [&] { return emit_string(friendship::rat_to_string(friendship::min_edges_bound(n, r)), value); });
}

fh_status fh_max_cliques_bound(int n, int r, char** value) {
  if (fh_status rc = require(value != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    return emit_string(friendship::rat_to_string(friendship::max_cliques_bound(n, r)), value);
  });
}

fh_status fh_max_edges_bound(int n, int r, char** value) {
  if (fh_status rc = require(value != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] { return emit_string(friendship::max_edges_bound(n, r).str(), value); });
}

fh_status fh_lrss_bound(int n, char** value) {
  if (fh_status rc = require(value != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] { return emit_string(friendship::rat_to_string(friendship::lrss_bound(n)), value); });
}

fh_status fh_truncated_clique_count(int r, char** value) {
  if (fh_status rc = require(value != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    return emit_string(friendship::rat_to_string(friendship::truncated_clique_count(r)), value);
  });
}

fh_status fh_search(int n, int r, uint64_t node_budget, uint64_t max_solutions, int symmetry,
                    int jobs, fh_search_outcome** out) {
  if (fh_status rc = require(out != nullptr, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    friendship::SearchOptions o;
    o.n = n;
    o.r = r;
    o.node_budget = node_budget;
    if (max_solutions > 0) o.max_solutions = max_solutions;
    o.symmetry_breaking = symmetry != 0;
    o.jobs = jobs;
    *out = new fh_search_outcome{friendship::search_friendship(o)};
    return FH_OK;
  });
}

fh_status fh_search_outcome_json(const fh_search_outcome* s, char** json) {
  if (fh_status rc = require(s && json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] { return emit_string(s->out.to_json().dump(2), json); });
}

uint64_t fh_search_solution_count(const fh_search_outcome* s) {
  return s ? s->out.solutions.size() : 0;
}

int fh_search_exhausted(const fh_search_outcome* s) { return (s && s->out.exhausted) ? 1 : 0; }

fh_status fh_search_solution(const fh_search_outcome* s, uint64_t index, fh_hypergraph** out) {
  if (fh_status rc = require(s && out, "null argument"); rc != FH_OK) return rc;
  return guarded([&] {
    *out = new fh_hypergraph{s->out.solution_hypergraph(static_cast<std::size_t>(index)),
                             std::nullopt};
    return FH_OK;
  });
}

fh_status fh_search_census(const fh_search_outcome* s, char** cert_json) {
  if (fh_status rc = require(s && cert_json, "null argument"); rc != FH_OK) return rc;
  return guarded([&] { return emit_certificate(friendship::verify_solution_census(s->out), cert_json); });
}

}  // extern "C"
