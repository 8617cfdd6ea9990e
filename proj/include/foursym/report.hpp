#ifndef FOURSYM_REPORT_HPP
#define FOURSYM_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "foursym/tensors.hpp"

namespace foursym {

/// Tri-state outcome of one check. A failed check carries a witness string
/// and a skipped check carries its reason; neither is ever lost in
/// serialization.
struct Flag {
  enum class State { pass, fail, skipped };
  State state = State::pass;
  std::string detail;

  static Flag pass() { return {State::pass, ""}; }
  static Flag fail(std::string witness) { return {State::fail, std::move(witness)}; }
  static Flag skipped(std::string reason) { return {State::skipped, std::move(reason)}; }

  bool passed() const { return state == State::pass; }
  bool failed() const { return state == State::fail; }
  bool operator==(const Flag&) const = default;
};

struct VerdictSet {
  Flag jplus_nijenhuis_zero;
  std::size_t jminus_image_dim = 0;
  Flag maximal;
  Flag hermitian_plus, hermitian_minus;
  Flag einstein_plus;
  std::optional<Rat> lambda;  // present iff einstein_plus passed
  Flag special_minus;
  std::optional<Rat> c_minus;
  Flag special_plus;
  std::optional<Rat> c_plus;
  Flag oracle_match;
  bool operator==(const VerdictSet&) const = default;
};

/// Everything run_verify establishes about one family instance. Checks
/// never throw out of the pipeline: a mathematical failure becomes a fail
/// flag, a structurally inapplicable check a skipped flag.
struct VerificationReport {
  FamilySpec spec;

  struct Dims {
    std::size_t g = 0, gsigma = 0, gsigma_m1 = 0, p = 0, m = 0;
    bool operator==(const Dims&) const = default;
  } dims;

  struct Nondegenerate {
    Flag omega;   // the 2-form on m
    Flag gprime;  // trace form on p
    Flag betav;   // trace form on gsigma_m1
    Flag beta;    // trace form on the full algebra
    bool operator==(const Nondegenerate&) const = default;
  } nondegenerate;

  struct Signatures {
    Signature gplus, gminus;
    bool operator==(const Signatures&) const = default;
  } signatures;

  struct Nijenhuis {
    Flag jplus_zero;
    std::size_t jminus_image_dim = 0;
    bool maximal = false;
    bool symmetric_mode = false;
    bool operator==(const Nijenhuis&) const = default;
  } nijenhuis;

  VerdictSet verdicts;

  struct Consistency {
    Flag oracle_match;       // specialized tables == generic oracles
    Flag closedness;         // cyclic sum of the 2-form
    Flag compatibility;      // omega(J., J.) == omega for both signs
    Flag lift_independence;  // Nijenhuis value under a nonzero lift
    bool operator==(const Consistency&) const = default;
  } consistency;

  /// (phase name, wall-clock seconds); excluded from JSON so that reports
  /// are byte-identical across runs.
  std::vector<std::pair<std::string, double>> timing;

  bool all_passed() const;

  bool operator==(const VerificationReport& o) const;
};

/// Runs the full pipeline on one instance. Throws Error only for an invalid
/// spec; mathematical failures are recorded in the report.
VerificationReport run_verify(const FamilySpec& spec);

/// All valid instances with ambient size k + 2n <= max_ambient, in a fixed
/// order: families as listed in all_families(), then k (or k') ascending,
/// then n ascending. Throws Error if max_ambient < 3.
std::vector<FamilySpec> sweep_specs(std::size_t max_ambient);
std::vector<VerificationReport> sweep(std::size_t max_ambient);

enum class EmitFormat { json, text };

/// Serializes the report. JSON is deterministic: insertion-ordered keys,
/// rationals as canonical "p" / "p/q" strings, timing omitted. Text is a
/// human-readable table and includes the timing phases.
std::string emit(const VerificationReport& rep, EmitFormat format);

/// Inverse of emit(., json); throws Error on malformed input.
VerificationReport parse_report(const std::string& json_text);

/// File name used for one report inside a sweep output directory.
std::string report_file_name(const FamilySpec& spec);

}  // namespace foursym

#endif
