// surfmc: verify surface-group automorphism identities and query the word engine.

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfmc/autos.h"
#include "surfmc/catalog.h"
#include "surfmc/dehn.h"
#include "surfmc/report.h"

using namespace surfmc;

namespace {

/// "2..6", "1,2,3" or a mix such as "1,3..5".
std::vector<int> parse_genus_list(std::string const &text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t const comma = text.find(',', pos);
    std::string const item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (auto dots = item.find(".."); dots != std::string::npos) {
      int const lo = std::stoi(item.substr(0, dots));
      int const hi = std::stoi(item.substr(dots + 2));
      if (lo > hi) throw std::invalid_argument("empty genus range " + item);
      for (int g = lo; g <= hi; ++g) out.push_back(g);
    } else {
      out.push_back(std::stoi(item));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void add_caps(CLI::App *cmd, SearchCaps &caps) {
  cmd->add_option("--max-bfs-nodes", caps.max_nodes, "Conjugacy search node cap")->capture_default_str();
  cmd->add_option("--length-slack", caps.length_slack, "Relator lengths added to the word length cap")
      ->capture_default_str();
  cmd->add_option("--centralizer-k", caps.centralizer_k, "Centralizer stepping bound")->capture_default_str();
}

char const *status_text(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "conjugate";
    case SearchStatus::NotFound: return "not conjugate";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Surface group automorphism verifier"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CheckConfig config;
  std::string genus_text = "2..6";
  std::string json_path;
  bool no_timing = false;
  auto *verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--genus", genus_text, "Genus list, e.g. 2..6 or 1,2,3")->capture_default_str();
  verify->add_option("--checks", config.checks, "Only run these checks (name or dotted prefix)")->delimiter(',');
  add_caps(verify, config.caps);
  verify->add_option("--seed", config.seed, "Seed for randomized checks")->capture_default_str();
  verify->add_option("--word-order-max-genus", config.word_order_max_genus,
                     "Largest genus for the word-level order check")
      ->capture_default_str();
  verify->add_option("--json", json_path, "Write the JSON report here");
  verify->add_flag("--no-timing", no_timing, "Record 0 ms for every check");

  int genus = 2;
  std::string element;
  auto *exporter = app.add_subcommand("export", "Print catalog generator images");
  exporter->add_option("--genus", genus, "Genus")->required();
  exporter->add_option("--element", element, "One element: M, eps1, eps2, eps2c, eps3, rho, C");

  SearchCaps caps;
  std::string u_text, v_text, w_text;
  auto *eq = app.add_subcommand("equal", "Decide u == v in the surface group");
  eq->add_option("--genus", genus, "Genus")->required();
  eq->add_option("u", u_text)->required();
  eq->add_option("v", v_text)->required();

  auto *conj = app.add_subcommand("conjugate", "Search w with v == w u w^-1");
  conj->add_option("--genus", genus, "Genus")->required();
  conj->add_option("u", u_text)->required();
  conj->add_option("v", v_text)->required();
  add_caps(conj, caps);

  bool free_only = false;
  auto *check = app.add_subcommand("check-witness", "Verify v == w u w^-1 for a given w");
  check->add_option("--genus", genus, "Genus")->required();
  check->add_option("--witness", w_text, "Conjugating word w")->required();
  check->add_flag("--free", free_only, "Require equality in the free group");
  check->add_option("u", u_text)->required();
  check->add_option("v", v_text)->required();

  auto *names = app.add_subcommand("list-checks", "Print the check names run for a genus");
  names->add_option("--genus", genus, "Genus")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      config.genus_list = parse_genus_list(genus_text);
      config.record_timing = !no_timing;
      VerificationReport const report = run_checks(config);
      if (json_path.empty())
        std::cout << format_table(report);
      else
        emit_report(report, json_path, std::cout);
      return exit_code(report);
    }
    if (*exporter) {
      Catalog const cat = build_catalog(genus);
      std::vector<std::string> const which = element.empty() ? catalog_names() : std::vector{element};
      for (auto const &name : which) {
        GeneratorImages const &phi = element_by_name(cat, name);
        std::cout << "# " << name << '\n' << format_images(phi) << format_matrix(matrix_of(phi)) << '\n';
      }
      return 0;
    }
    if (*names) {
      for (auto const &n : check_names(genus)) std::cout << n << '\n';
      return 0;
    }

    Presentation const p(genus);
    Word const u = parse_word(u_text, genus);
    Word const v = parse_word(v_text, genus);
    if (*eq) {
      bool const same = equal(u, v, p);
      std::cout << (same ? "equal" : "not equal") << '\n';
      return same ? 0 : 1;
    }
    if (*conj) {
      ConjugacyResult const r = conjugacy_witness(u, v, p, caps);
      std::cout << status_text(r.status);
      if (r.found) std::cout << "\nwitness: " << format_word(r.found->witness);
      std::cout << "\nexplored: " << r.explored << '\n';
      return r.status == SearchStatus::Found ? 0 : r.status == SearchStatus::NotFound ? 1 : 2;
    }
    if (*check) {
      Word const w = parse_word(w_text, genus);
      Word const image = conjugate(u, w);
      bool const ok = free_only ? image == v : equal(image, v, p);
      std::cout << (ok ? "verified" : "rejected") << '\n';
      return ok ? 0 : 1;
    }
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
