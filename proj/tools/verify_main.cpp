#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "foursym/report.hpp"

using namespace foursym;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitInputError = 2;

int cmd_verify(const std::string& family, std::size_t k, std::size_t n,
               std::size_t kprime, const std::string& json_path, bool text) {
  const auto fam = family_from_name(family);
  if (!fam) {
    std::cerr << "error: unknown family '" << family
              << "' (run 'foursym list' for the supported names)\n";
    return kExitInputError;
  }
  std::size_t primary = k;
  if (family_uses_kprime(*fam)) {
    if (kprime != 0)
      primary = kprime;
    else if (k != 0 && k % 2 == 0)
      primary = k / 2;
    else {
      std::cerr << "error: " << family
                << " takes --kprime (or an even --k = 2k')\n";
      return kExitInputError;
    }
  } else if (kprime != 0) {
    std::cerr << "error: --kprime only applies to the u and sp families\n";
    return kExitInputError;
  }

  VerificationReport rep;
  try {
    rep = run_verify(FamilySpec::make(*fam, primary, n));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what()
              << " (usage: foursym verify --family sl --k 1 --n 2)\n";
    return kExitInputError;
  }

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return kExitInputError;
    }
    out << emit(rep, EmitFormat::json);
  }
  if (text || json_path.empty()) std::cout << emit(rep, EmitFormat::text);
  return rep.all_passed() ? kExitPass : kExitMathFail;
}

int cmd_sweep(std::size_t max_ambient, const std::string& out_dir) {
  std::vector<VerificationReport> reports;
  try {
    reports = sweep(max_ambient);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  bool all_pass = true;
  for (const VerificationReport& rep : reports) {
    all_pass = all_pass && rep.all_passed();
    if (out_dir.empty()) {
      std::cout << emit(rep, EmitFormat::text);
    } else {
      std::filesystem::create_directories(out_dir);
      const auto path = std::filesystem::path(out_dir) / report_file_name(rep.spec);
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << path.string() << "\n";
        return kExitInputError;
      }
      out << emit(rep, EmitFormat::json);
      std::cout << rep.spec.to_string() << ": "
                << (rep.all_passed() ? "pass" : "FAIL") << " -> " << path.string()
                << "\n";
    }
  }
  return all_pass ? kExitPass : kExitMathFail;
}

void cmd_list() {
  std::cout << "family       parameters   dim g                ambient\n";
  std::cout << "gl           k, n         (k+2n)^2             k+2n\n";
  std::cout << "sl           k, n         (k+2n)^2 - 1         k+2n\n";
  std::cout << "so-compact   k, n         (k+2n)(k+2n-1)/2     k+2n\n";
  std::cout << "so-split     k, n         (k+2n)(k+2n-1)/2     k+2n\n";
  std::cout << "u-compact    k', n        (k'+n)^2             2k'+2n\n";
  std::cout << "u-split      k', n        (k'+n)^2             2k'+2n\n";
  std::cout << "sp           k', n        (k+2n)(k+2n+1)/2     2k'+2n\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct matrix 4-symmetric spaces and verify their invariants"};
  app.require_subcommand(1);

  std::string family, json_path, out_dir;
  std::size_t k = 0, n = 0, kprime = 0, max_ambient = 0;
  bool text = false;

  CLI::App* verify = app.add_subcommand("verify", "verify one family instance");
  verify->add_option("--family", family, "family name (see 'list')")->required();
  verify->add_option("--k", k, "upper-left block size");
  verify->add_option("--n", n, "half the symplectic block size")->required();
  verify->add_option("--kprime", kprime, "k' with k = 2k' (u and sp families)");
  verify->add_option("--json", json_path, "write the JSON report to this path");
  verify->add_flag("--text", text, "print the text report even when --json is given");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify every instance up to a size bound");
  sweep_cmd->add_option("--max-ambient", max_ambient, "largest ambient matrix size k + 2n")
      ->required();
  sweep_cmd->add_option("--out", out_dir, "directory for per-instance JSON reports");

  CLI::App* list_cmd = app.add_subcommand("list", "print the supported families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  if (verify->parsed()) return cmd_verify(family, k, n, kprime, json_path, text);
  if (sweep_cmd->parsed()) return cmd_sweep(max_ambient, out_dir);
  if (list_cmd->parsed()) cmd_list();
  return kExitPass;
}
