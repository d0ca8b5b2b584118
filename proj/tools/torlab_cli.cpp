#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "torlab/corpus.hpp"
#include "torlab/homology.hpp"

using namespace torlab;
using json = nlohmann::json;

namespace {

constexpr int kUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_descriptor(const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || arg.front() != '{') {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot read ring descriptor '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed ring descriptor: ") + e.what());
  }
}

std::vector<rings::RingElement> parse_sequence(const rings::RingPtr& ring, const std::string& spec) {
  std::vector<rings::RingElement> out;
  if (!spec.empty() && spec.front() == '[') {
    for (const auto& lit : json::parse(spec)) out.push_back(ring->element(lit));
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(ring->element(json(item)));
  }
  if (out.empty()) throw UsageError("empty sequence");
  return out;
}

/// "N": total degree <= N in the positive orthant; "box:LO:HI": LO <= d_j <= HI.
graded::Window parse_window(const std::string& spec, std::size_t n) {
  try {
    if (spec.rfind("box:", 0) == 0) {
      auto rest = spec.substr(4);
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw UsageError("window box needs LO:HI");
      return graded::Window::box(n, std::stoll(rest.substr(0, colon)), std::stoll(rest.substr(colon + 1)));
    }
    return graded::Window::nonnegative(n, std::stoll(spec));
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed window '" + spec + "'");
  }
}

struct GradedInput {
  std::shared_ptr<graded::MonomialModule> module;
  graded::Sequence seq;
};

GradedInput graded_input(const rings::RingPtr& ring, const std::vector<rings::RingElement>& elems) {
  if (ring->family() != rings::Family::MonomialQuotient && ring->family() != rings::Family::Polynomial) {
    throw UsageError("graded computations need a polynomial or monomial-quotient ring");
  }
  const auto& mr = *ring->monomial_ring();
  if (!mr.num_variables) throw UsageError("graded computations need finitely many variables");
  GradedInput in{std::make_shared<graded::MonomialModule>(graded::MonomialModule::from_ring(mr)), {}};
  for (const auto& e : elems) in.seq.push_back(graded::term_from_poly(std::get<rings::Poly>(e), *mr.num_variables));
  return in;
}

void print_pieces(const std::string& title, const json& pieces) {
  std::cout << title << "\n";
  for (const auto& p : pieces) {
    std::cout << "  " << p["degree"].dump() << "  dim " << p["dim"];
    if (p.contains("stabilized_at")) {
      std::cout << "  " << (p["stabilized_at"].is_null() ? "bound-exhausted" : "u=" + p["stabilized_at"].dump());
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion, Koszul and Cech computations for the corpus of examples"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a single JSON document");

  corpus::Options opts;
  bool no_timing = false;
  std::string check = "all";
  std::uint32_t p = 0;
  auto* verify = app.add_subcommand("verify", "Run corpus checks");
  verify->add_option("check", check, "Check id or 'all'");
  verify->add_option("--bound", opts.bound, "Element/variable bound N");
  verify->add_option("--window", opts.window, "Degree window size");
  verify->add_option("--seed", opts.seed, "Sampling seed");
  verify->add_option("--samples", opts.samples, "Sample count");
  verify->add_option("--levels", opts.levels, "Tensor levels for 2.50");
  verify->add_option("--p", p, "Prime");
  verify->add_flag("--no-timing", no_timing, "Report runtime_ms as 0");
  verify->add_flag("--json", as_json, "Emit a single JSON document");

  std::string ring_arg, seq_arg, window_arg = "8";
  std::uint32_t power = 1;
  std::size_t index = 0;
  auto add_graded = [&](CLI::App* sub) {
    sub->add_option("--ring", ring_arg, "Ring descriptor (file or inline JSON)")->required();
    sub->add_option("--seq", seq_arg, "Comma-separated sequence, e.g. x,y")->required();
    sub->add_option("--window", window_arg, "N (total degree <= N) or box:LO:HI");
    sub->add_flag("--json", as_json, "Emit a single JSON document");
  };
  auto* koszul = app.add_subcommand("koszul", "Koszul homology H_i(a^u, R) per degree");
  add_graded(koszul);
  koszul->add_option("--power", power, "Power u");
  koszul->add_option("--degree", index, "Homological degree i");
  auto* cohom = app.add_subcommand("cohomology", "Cech cohomology of R per degree");
  add_graded(cohom);
  cohom->add_option("--degree", index, "Cohomological degree i");
  std::vector<std::uint32_t> wpr_bounds = {3, 8};
  auto* wpr = app.add_subcommand("wpr", "Weak proregularity test");
  add_graded(wpr);
  wpr->add_option("--bounds", wpr_bounds, "U V")->expected(2);
  auto* list = app.add_subcommand("list", "List check ids with references");
  list->add_flag("--json", as_json, "Emit a single JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*list) {
      json out = json::array();
      for (const auto& e : corpus::reference_index()) {
        out.push_back({{"check_id", e.check_id}, {"paper_ref", e.paper_ref}, {"summary", e.summary}});
        if (!as_json) std::cout << e.check_id << "\t" << e.paper_ref << "\n";
      }
      if (as_json) std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*verify) {
      if (p) opts.p = p;
      std::vector<std::string> ids = check == "all" ? corpus::check_ids() : std::vector<std::string>{check};
      for (const auto& id : ids) {
        if (!corpus::known_check(id)) throw UsageError("unknown check id '" + id + "'");
      }
      auto reports = corpus::verify_all(ids, opts);
      if (as_json) {
        std::cout << corpus::suite_json(reports, !no_timing).dump(2) << "\n";
      } else {
        for (const auto& r : reports) {
          std::cout << r.check_id << "\t" << to_string(r.status) << "\t" << (no_timing ? 0 : r.runtime_ms) << " ms\n";
          for (const auto& a : r.assertions) {
            if (a["status"] != "pass") std::cout << "    " << a["status"].get<std::string>() << ": " << a["name"].get<std::string>() << "\n";
          }
        }
      }
      return corpus::exit_code(reports);
    }

    auto ring = rings::Ring::from_json(load_descriptor(ring_arg));
    auto elems = parse_sequence(ring, seq_arg);

    if (*wpr) {
      const std::uint32_t U = wpr_bounds.at(0), V = wpr_bounds.at(1);
      homology::WprVerdict v;
      json window = nullptr;
      if (elems.size() == 1) {
        v = homology::wpr_test_principal(elems[0], U, V);
      } else {
        auto in = graded_input(ring, elems);
        auto w = parse_window(window_arg, in.module->num_variables());
        window = w.to_json();
        v = homology::wpr_test(*in.module, in.seq, U, V, w);
      }
      json out = {{"op", "wpr"}, {"window", window}, {"verdict", v.to_json()}};
      if (as_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << v.to_json()["verdict"].get<std::string>() << " (path " << v.path << ")\n";
        if (!v.witness.is_null()) std::cout << "  witness " << v.witness.dump() << "\n";
      }
      return v.kind == homology::WprKind::Unknown ? 2 : 0;
    }

    auto in = graded_input(ring, elems);
    auto w = parse_window(window_arg, in.module->num_variables());
    json pieces = json::array();
    std::string op;
    int code = 0;
    if (*koszul) {
      op = "koszul";
      for (const auto& piece : homology::koszul_homology(*in.module, in.seq, power, index, w)) {
        pieces.push_back(piece.to_json());
      }
    } else {
      op = "cohomology";
      auto result = homology::cech_cohomology(in.module, in.seq, index, w);
      for (const auto& piece : result) {
        if (!piece.stabilized_at) code = 2;
      }
      pieces = homology::pieces_to_json(result);
    }
    json out = {{"op", op}, {"window", w.to_json()}, {"pieces", pieces}, {"verdict", code == 0 ? "pass" : "unknown"}};
    if (as_json) {
      std::cout << out.dump(2) << "\n";
    } else {
      print_pieces(op + " i=" + std::to_string(index), pieces);
    }
    return code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::InvalidArgument ? kUsage : 1;
  } catch (const json::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}
