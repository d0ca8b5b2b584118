#include <fstream>
#include <set>

#include "doctest.h"
#include "torlab/corpus.hpp"

using namespace torlab;
using json = nlohmann::json;

namespace {

corpus::Options small() {
  corpus::Options o;
  o.bound = 8;
  o.window = 6;
  o.samples = 30;
  return o;
}

}  // namespace

TEST_CASE("reference index covers every check") {
  auto ids = corpus::check_ids();
  CHECK(ids.size() == corpus::reference_index().size());
  std::set<std::string> seen(ids.begin(), ids.end());
  CHECK(seen.size() == ids.size());
  for (const auto& e : corpus::reference_index()) {
    CHECK(!e.paper_ref.empty());
    CHECK(corpus::known_check(e.check_id));
  }
  CHECK_FALSE(corpus::known_check("9.99"));
}

TEST_CASE("every check passes at small bounds") {
  auto reports = corpus::verify_all(corpus::check_ids(), small());
  REQUIRE(reports.size() == corpus::check_ids().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    CAPTURE(r.check_id);
    CHECK(r.check_id == corpus::check_ids()[i]);
    CHECK(r.status == Status::Pass);
    CHECK(!r.assertions.empty());
    const auto& idx = corpus::reference_index();
    auto it = std::find_if(idx.begin(), idx.end(), [&](const auto& e) { return e.check_id == r.check_id; });
    REQUIRE(it != idx.end());
    CHECK(r.paper_ref == it->paper_ref);
  }
  CHECK(corpus::exit_code(reports) == 0);
}

TEST_CASE("suite json is deterministic without timing") {
  auto ids = corpus::check_ids();
  auto a = corpus::suite_json(corpus::verify_all(ids, small()), false).dump();
  auto b = corpus::suite_json(corpus::verify_all(ids, small()), false).dump();
  CHECK(a == b);
  auto doc = json::parse(a);
  CHECK(doc["version"] == 1);
  for (const auto& c : doc["checks"]) {
    CHECK(c["runtime_ms"] == 0);
    for (auto key : {"check_id", "status", "paper_ref", "bounds", "witnesses", "assertions"}) CHECK(c.contains(key));
  }
}

TEST_CASE("larger bounds keep passing checks passing") {
  auto lo = small();
  auto hi = small();
  hi.bound = 12;
  hi.window = 8;
  for (const auto& id : {"2.20", "2.90", "2.100"}) {
    CAPTURE(id);
    auto a = corpus::verify(id, lo);
    auto b = corpus::verify(id, hi);
    if (a.status == Status::Pass) CHECK(b.status != Status::Fail);
  }
}

TEST_CASE("exit code precedence") {
  corpus::VerdictReport pass, fail, unknown;
  fail.status = Status::Fail;
  unknown.status = Status::Unknown;
  CHECK(corpus::exit_code({pass}) == 0);
  CHECK(corpus::exit_code({pass, unknown}) == 2);
  CHECK(corpus::exit_code({unknown, fail}) == 1);
}

TEST_CASE("fixture file matches the generated descriptor") {
  std::ifstream in(TORLAB_FIXTURES "/nonwpr.json");
  REQUIRE(in);
  auto fixture = json::parse(in);
  CHECK(fixture == corpus::nonwpr_descriptor(8));
}
