#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilrep/affine.hpp"
#include "nilrep/dual.hpp"
#include "nilrep/io.hpp"
#include "nilrep/quotient.hpp"
#include "nilrep/regular.hpp"
#include "nilrep/tables.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;
constexpr int kAffineFail = 3;

using namespace nilrep;

int cmd_compute(const std::string& alg, const std::string& input, const std::string& field_name, std::uint64_t seed,
                std::size_t retries, double time_limit, const std::string& out_path) {
  const LieAlgebra g = load_algebra(input, Field::parse(field_name));
  const Algorithm algorithm = algorithm_from_string(alg);
  const auto start = std::chrono::steady_clock::now();
  std::optional<Representation> rep;
  nlohmann::json summary = {{"input", input}, {"algorithm", alg}, {"field", g.field().to_string()},
                            {"algebra_dim", g.dim()}};
  switch (algorithm) {
    case Algorithm::Regular: rep = algorithm_regular(g); break;
    case Algorithm::Quotient: rep = algorithm_quotient(g); break;
    case Algorithm::Dual: rep = algorithm_dual(g); break;
    case Algorithm::Affine: {
      AffineOptions options;
      options.seed = seed;
      options.retries = retries;
      options.time_limit = time_limit;
      AffineOutcome res = algorithm_affine(g, options);
      summary["seed"] = seed;
      summary["attempts"] = res.attempts;
      if (!res.rep) {
        summary["status"] = "FAIL";
        summary["reason"] = res.reason;
        summary["deepest_step"] = res.deepest_step;
      }
      rep = std::move(res.rep);
      break;
    }
    default: throw std::invalid_argument("--alg must be regular, quotient, dual or affine");
  }
  summary["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!rep) {
    std::cout << summary.dump() << "\n";
    return kAffineFail;
  }
  const bool ok = is_homomorphism(*rep) && is_faithful(*rep);
  summary["dim"] = rep->module_dim;
  summary["status"] = ok ? "OK" : "VERIFICATION-FAILED";
  const std::string text = emit_representation(*rep);
  if (out_path.empty()) {
    std::cout << text;
    std::cerr << summary.dump() << "\n";
  } else {
    write_file(out_path, text);
    std::cout << summary.dump() << "\n";
  }
  return ok ? kOk : kVerificationFailure;
}

int cmd_verify(const std::string& algebra_path, const std::string& rep_path, const std::string& field_name) {
  const LieAlgebra g = load_algebra(algebra_path, Field::parse(field_name));
  const Representation rep = parse_representation(read_file(rep_path), g);
  const auto failure = first_homomorphism_failure(rep);
  const bool faithful = is_faithful(rep);
  const bool nilpotent = has_nilpotent_matrices(rep);
  if (failure)
    std::cout << "homomorphism: fail at pair (" << failure->first + 1 << ", " << failure->second + 1 << ")\n";
  else
    std::cout << "homomorphism: ok\n";
  std::cout << "faithful: " << (faithful ? "yes" : "no") << "\n";
  std::cout << "nilpotent matrices: " << (nilpotent ? "yes" : "no") << "\n";
  return !failure && faithful && nilpotent ? kOk : kVerificationFailure;
}

int cmd_tables(int which, std::uint64_t seed, std::size_t retries, std::size_t jobs, double time_limit) {
  TableOptions options;
  options.seed = seed;
  options.retries = retries;
  options.jobs = jobs;
  options.affine_time_limit = time_limit;
  const auto rows = run_table(which, options);
  for (const auto& r : rows) std::cout << format_row(r) << "\n";
  const std::size_t diffs = diff_count(rows);
  std::cout << "dimension differences: " << diffs << "\n";
  return diffs == 0 ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faithful representations of nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::string alg, input, out_path, field_name = "Q";
  std::uint64_t seed = 1;
  std::size_t retries = 10;
  double time_limit = 0;
  auto* compute = app.add_subcommand("compute", "Compute a faithful representation");
  compute->add_option("--alg", alg, "regular, quotient, dual or affine")->required();
  compute->add_option("--in", input, "Algebra file or catalog:<name>")->required();
  compute->add_option("--field", field_name, "Field for catalog algebras (Q, GF(p))");
  compute->add_option("--seed", seed, "Affine random seed");
  compute->add_option("--retries", retries, "Affine retries after the first attempt");
  compute->add_option("--time-limit", time_limit, "Affine wall-clock budget in seconds (0 = none)");
  compute->add_option("--out", out_path, "Write the representation here");

  std::string algebra_path, rep_path;
  auto* verify = app.add_subcommand("verify", "Verify a representation file");
  verify->add_option("--algebra", algebra_path, "Algebra file or catalog:<name>")->required();
  verify->add_option("--rep", rep_path, "Representation file")->required();
  verify->add_option("--field", field_name, "Field for catalog algebras (Q, GF(p))");

  int which = 0;
  std::size_t jobs = 1;
  auto* tables = app.add_subcommand("tables", "Reproduce the published dimension tables");
  tables->add_option("--which", which, "Table 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  tables->add_option("--seed", seed, "Affine random seed");
  tables->add_option("--retries", retries, "Affine retries after the first attempt");
  tables->add_option("--jobs", jobs, "Rows computed concurrently");
  tables->add_option("--affine-time-limit", time_limit, "Affine budget per row in seconds (0 = none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*compute) return cmd_compute(alg, input, field_name, seed, retries, time_limit, out_path);
    if (*verify) return cmd_verify(algebra_path, rep_path, field_name);
    if (*tables) return cmd_tables(which, seed, retries, jobs, time_limit);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
