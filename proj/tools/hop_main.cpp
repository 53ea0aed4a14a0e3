#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "hop/saturate.hpp"

namespace {

std::string basename_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

int exit_code(hop::SzsStatus s) {
  switch (s) {
    case hop::SzsStatus::Theorem:
    case hop::SzsStatus::ContradictoryAxioms:
    case hop::SzsStatus::CounterSatisfiable:
      return 0;
    case hop::SzsStatus::GaveUp:
    case hop::SzsStatus::Timeout:
      return 1;
    case hop::SzsStatus::Error:
      return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hop: a higher-order paramodulation prover for THF problems "
               "with a modal-logic front-end"};
  std::string path;
  hop::Config cfg;
  app.add_option("file", path, "TPTP THF problem file")->required();
  app.add_option("--time", cfg.timeLimitSeconds, "wall clock limit in seconds");
  app.add_option("--iters", cfg.iterationCap, "iteration cap for the main loop");
  app.add_option("--unidepth", cfg.unificationDepth,
                 "flex-rigid depth budget for pre-unification");
  app.add_flag("--fs", cfg.fsEnabled, "enable the function-synthesis rule");
  bool noProof = false;
  app.add_flag("--no-proof", noProof, "suppress the TSTP refutation output");
  app.add_flag("--replay", cfg.replayAfterProve,
               "re-check the derivation before reporting a theorem");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  cfg.proofOutput = !noProof;

  std::string name = basename_of(path);
  hop::ProverResult result;
  try {
    hop::Problem problem = hop::parse_problem_file(path);
    name = problem.sourcePath;
    result = hop::prove(problem, cfg);
    if (cfg.replayAfterProve && result.derivation) {
      std::string why;
      if (!hop::replay_check(*result.derivation, &why)) {
        result.status = hop::SzsStatus::Error;
        result.message = "derivation replay failed: " + why;
        result.derivation.reset();
      }
    }
  } catch (const std::exception& e) {
    result.status = hop::SzsStatus::Error;
    result.message = e.what();
  }

  std::printf("%s\n", hop::render_szs(result.status, name).c_str());
  if (!result.message.empty()) std::fprintf(stderr, "%% %s\n", result.message.c_str());
  if (cfg.proofOutput && result.derivation &&
      (result.status == hop::SzsStatus::Theorem ||
       result.status == hop::SzsStatus::ContradictoryAxioms)) {
    std::fputs(hop::render_tstp(*result.derivation).c_str(), stdout);
  }
  return exit_code(result.status);
}
