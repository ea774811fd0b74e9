#include "friendship/hg_io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace friendship {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, int line_no) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

std::string to_hg(const Hypergraph& h, std::optional<int> steiner_t) {
  std::string out = std::to_string(h.n()) + " " + std::to_string(h.r()) + " " +
                    std::to_string(h.edge_count()) + "\n";
  if (steiner_t) out += "# steiner t=" + std::to_string(*steiner_t) + "\n";
  for (VertexSet e : h.edges()) {
    bool first = true;
    for (int v : e.to_indices()) {
      if (!first) out += " ";
      out += std::to_string(v);
      first = false;
    }
    out += "\n";
  }
  return out;
}

HgDocument parse_hg(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line =
        (nl == std::string_view::npos) ? text.substr(start) : text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  std::optional<int> steiner_t;
  bool have_header = false;
  long long n = 0, r = 0, m = 0;
  std::vector<VertexSet> edges;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string_view line = lines[li];
    const int line_no = static_cast<int>(li) + 1;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].starts_with("#")) {
      // Only "# steiner t=<t>" means anything; other comments pass through.
      if (toks.size() == 3 && toks[0] == "#" && toks[1] == "steiner" && toks[2].starts_with("t=")) {
        long long t = parse_int(toks[2].substr(2), line_no);
        if (t < 1 || t > 64) throw ParseError("line " + std::to_string(line_no) + ": steiner t out of range");
        steiner_t = static_cast<int>(t);
      }
      continue;
    }
    if (!have_header) {
      if (toks.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": header must be 'n r m'");
      n = parse_int(toks[0], line_no);
      r = parse_int(toks[1], line_no);
      m = parse_int(toks[2], line_no);
      if (n < 1 || n > 64) throw ParseError("header: n out of [1,64]");
      if (r < 1 || r > n) throw ParseError("header: r out of [1,n]");
      if (m < 0) throw ParseError("header: m negative");
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) >= m)
      throw ParseError("line " + std::to_string(line_no) + ": more than m edge lines");
    if (static_cast<long long>(toks.size()) != r)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(r) + " vertex indices");
    VertexSet e;
    long long prev = -1;
    for (auto tok : toks) {
      long long v = parse_int(tok, line_no);
      if (v < 0 || v >= n) throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range");
      if (v <= prev) throw ParseError("line " + std::to_string(line_no) + ": vertex indices must be strictly increasing");
      prev = v;
      e = e.with(static_cast<int>(v));
    }
    edges.push_back(e);
  }

  if (!have_header) throw ParseError("missing 'n r m' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

  try {
    return HgDocument{Hypergraph::make(static_cast<int>(n), static_cast<int>(r), std::move(edges)),
                      steiner_t};
  } catch (const InputError& e) {
    throw ParseError(std::string("invalid edge list: ") + e.what());
  }
}

HgDocument read_hg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return parse_hg(ss.str());
}

void write_hg_file(const std::string& path, const Hypergraph& h, std::optional<int> steiner_t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << to_hg(h, steiner_t);
  if (!out) throw IoError("write failure on '" + path + "'");
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("EVP_Digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

std::string hypergraph_sha256(const Hypergraph& h) { return sha256_hex(to_hg(h)); }

}  // namespace friendship
