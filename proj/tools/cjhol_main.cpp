/* Copyright 2026 The cjhol Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Command-line front end: model checking, countermodel search,
// embedding, THF export and the faithfulness cross-check.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cjhol/checker.hpp"
#include "cjhol/embed.hpp"
#include "cjhol/formula.hpp"
#include "cjhol/henkin.hpp"
#include "cjhol/model.hpp"
#include "cjhol/search.hpp"
#include "cjhol/thf.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolations = 2;
constexpr int kExitRefuted = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reasoning toolkit for the Carmo-Jones dyadic deontic logic"};
  app.require_subcommand(1);

  std::string model_path, formula_text, thf_path;
  int world = -1;
  int max_worlds = 3;
  int samples = 1000;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "Evaluate a formula in a model");
  check->add_option("--model", model_path, "Model JSON file")->required();
  check->add_option("--formula", formula_text, "CJ formula")->required();
  check->add_option("--world", world, "Single world to evaluate at");

  auto* validate_cmd = app.add_subcommand("validate-model", "Check a model against the CJ conditions");
  validate_cmd->add_option("file", model_path, "Model JSON file")->required();

  auto* valid = app.add_subcommand("valid", "Search for a countermodel");
  valid->add_option("--formula", formula_text, "CJ formula")->required();
  valid->add_option("--max-worlds", max_worlds, "Largest model size searched")->capture_default_str();
  valid->add_option("--samples", samples, "Random models per size above 2")->capture_default_str();
  valid->add_option("--seed", seed, "Random seed")->capture_default_str();

  auto* embed_cmd = app.add_subcommand("embed", "Print the embedded HOL term or write a THF problem");
  embed_cmd->add_option("--formula", formula_text, "CJ formula")->required();
  embed_cmd->add_option("--thf", thf_path, "Write the THF problem here (- for stdout)");

  int faith_worlds = 2;
  auto* faith = app.add_subcommand("faithfulness", "Compare direct and embedded evaluation");
  faith->add_option("--max-worlds", faith_worlds, "Largest model size sampled")->capture_default_str();
  faith->add_option("--samples", samples, "Number of samples")->capture_default_str();
  faith->add_option("--seed", seed, "Random seed")->capture_default_str();

  auto* axioms_cmd = app.add_subcommand("axioms", "Print or export the frame axioms");
  axioms_cmd->add_option("--thf", thf_path, "Write a THF file here (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*check) {
      const cjhol::Loaded loaded = cjhol::load_file(model_path);
      for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
      const cjhol::Formula f = cjhol::parse(formula_text);
      std::vector<std::string> warnings;
      const cjhol::Prop truth = cjhol::truth_set(loaded.model, f, &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      if (world >= 0) {
        if (world >= loaded.model.n) throw std::out_of_range("world " + std::to_string(world) + " is not in the model");
        std::cout << (truth.contains(world) ? "true" : "false") << "\n";
      } else {
        if (world != -1) throw std::out_of_range("world must be nonnegative");
        for (int s = 0; s < loaded.model.n; ++s) std::cout << s << " " << (truth.contains(s) ? "true" : "false") << "\n";
      }
      return kExitOk;
    }
    if (*validate_cmd) {
      const cjhol::Loaded loaded = cjhol::load_file(model_path, /*allow_invalid=*/true);
      for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
      const cjhol::ValidationReport report = cjhol::validate(loaded.model);
      std::cout << report.to_string();
      return report.ok() ? kExitOk : kExitViolations;
    }
    if (*valid) {
      const cjhol::Verdict v = cjhol::verdict(cjhol::parse(formula_text), max_worlds, samples, seed);
      std::cout << v.to_string() << "\n";
      return v.refuted() ? kExitRefuted : kExitOk;
    }
    if (*embed_cmd) {
      const cjhol::Formula f = cjhol::parse(formula_text);
      if (thf_path.empty()) {
        std::cout << cjhol::to_string(cjhol::beta_eta_normalize(cjhol::embed(f))) << "\n";
      } else {
        write_text(thf_path, cjhol::to_thf_problem(f).to_string());
      }
      return kExitOk;
    }
    if (*faith) {
      const cjhol::FaithfulnessReport report = cjhol::check_faithfulness(faith_worlds, samples, seed);
      std::cout << report.to_string();
      return report.ok() ? kExitOk : kExitViolations;
    }
    if (*axioms_cmd) {
      if (thf_path.empty()) {
        for (const auto& ax : cjhol::axioms()) std::cout << ax.name << ": " << cjhol::to_string(ax.term) << "\n";
      } else {
        write_text(thf_path, cjhol::axioms_problem().to_string());
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
