#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "friendship/hypergraph.hpp"

namespace friendship {

struct HgDocument {
  Hypergraph hypergraph;
  // Set when the document carries a "# steiner t=<t>" annotation.
  std::optional<int> steiner_t;
};

// Canonical text form: "n r m" header, optional steiner comment, then one
// edge per line as strictly increasing vertex indices, lines in canonical
// edge order, "\n" endings.
std::string to_hg(const Hypergraph& h, std::optional<int> steiner_t = std::nullopt);

HgDocument parse_hg(std::string_view text);

HgDocument read_hg_file(const std::string& path);
void write_hg_file(const std::string& path, const Hypergraph& h,
                   std::optional<int> steiner_t = std::nullopt);

// Lowercase hex SHA-256 of the given bytes.
std::string sha256_hex(std::string_view bytes);

// SHA-256 of the canonical serialization (steiner annotation excluded), the
// fingerprint certificates carry.
std::string hypergraph_sha256(const Hypergraph& h);

}  // namespace friendship
