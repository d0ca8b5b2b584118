#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "torlab/report.hpp"
#include "torlab/rings/element.hpp"

namespace torlab::corpus {

using json = nlohmann::json;

struct Options {
  std::uint32_t bound = 12;
  std::int64_t window = 8;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> p;  // unset: 2.50 runs p = 2 and 3, others p = 2
  std::uint32_t levels = 2;
};

struct ReferenceEntry {
  std::string check_id;
  std::string paper_ref;
  std::string summary;
};

/// Every check id with its reference string, ordered by id.
const std::vector<ReferenceEntry>& reference_index();
std::vector<std::string> check_ids();
bool known_check(const std::string& id);

struct VerdictReport {
  std::string check_id;
  Status status = Status::Pass;
  std::string paper_ref;
  json bounds = json::object();
  json witnesses = json::array();
  json assertions = json::array();
  std::int64_t runtime_ms = 0;

  json to_json(bool timing = true) const;
};

VerdictReport verify(const std::string& check_id, const Options& options);
/// Runs the checks in parallel; the result is ordered as `ids`.
std::vector<VerdictReport> verify_all(const std::vector<std::string>& ids, const Options& options);

json suite_json(const std::vector<VerdictReport>& reports, bool timing = true);
/// 0 all pass, 1 some fail, 2 unknown present (fail wins).
int exit_code(const std::vector<VerdictReport>& reports);

/// K[x, y_1..y_V]/({x^i y_i} ∪ {y_i y_j}) in the rings descriptor format.
json nonwpr_descriptor(std::uint32_t V = 8);

/// K[Y_1..Y_bound]/({Y_i Y_j : i != j} ∪ {Y_i^{i+1}}).
rings::RingPtr functional_ring(std::uint32_t bound);

}  // namespace torlab::corpus
