#pragma once

#include <string>

#include <json.hpp>

#include "friendship/vertex_set.hpp"

namespace friendship {

using ordered_json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Error };

std::string verdict_name(Verdict v);

// Machine-checkable outcome of one verification: what was checked, the
// verdict, a minimal witness when the check failed, counters that prove the
// scan was exhaustive, and a fingerprint of the exact input examined.
struct Certificate {
  std::string check;
  Verdict verdict = Verdict::Error;
  ordered_json witness;  // null unless verdict == Fail (or Error with context)
  ordered_json stats;
  std::string input_sha256;

  bool pass() const { return verdict == Verdict::Pass; }

  ordered_json to_json() const;

  static Certificate make_pass(std::string check, ordered_json stats, std::string input_sha256);
  static Certificate make_fail(std::string check, ordered_json witness, ordered_json stats,
                               std::string input_sha256);
  static Certificate make_error(std::string check, ordered_json witness, ordered_json stats,
                                std::string input_sha256);
};

// JSON array of ascending vertex indices.
ordered_json set_to_json(VertexSet s);

}  // namespace friendship
