#include "friendship/certificate.hpp"

#include "friendship/errors.hpp"

namespace friendship {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Error: return "ERROR";
  }
  throw InternalError("unknown verdict");
}

ordered_json Certificate::to_json() const {
  ordered_json j;
  j["check"] = check;
  j["verdict"] = verdict_name(verdict);
  j["witness"] = witness;
  j["stats"] = stats;
  j["input_sha256"] = input_sha256;
  return j;
}

Certificate Certificate::make_pass(std::string check, ordered_json stats, std::string input_sha256) {
  Certificate c;
  c.check = std::move(check);
  c.verdict = Verdict::Pass;
  c.witness = nullptr;
  c.stats = std::move(stats);
  c.input_sha256 = std::move(input_sha256);
  return c;
}

Certificate Certificate::make_fail(std::string check, ordered_json witness, ordered_json stats,
                                   std::string input_sha256) {
  Certificate c;
  c.check = std::move(check);
  c.verdict = Verdict::Fail;
  c.witness = std::move(witness);
  c.stats = std::move(stats);
  c.input_sha256 = std::move(input_sha256);
  return c;
}

Certificate Certificate::make_error(std::string check, ordered_json witness, ordered_json stats,
                                    std::string input_sha256) {
  Certificate c;
  c.check = std::move(check);
  c.verdict = Verdict::Error;
  c.witness = std::move(witness);
  c.stats = std::move(stats);
  c.input_sha256 = std::move(input_sha256);
  return c;
}

ordered_json set_to_json(VertexSet s) {
  ordered_json arr = ordered_json::array();
  for (int v : s.to_indices()) arr.push_back(v);
  return arr;
}

}  // namespace friendship
