#pragma once

// Exhaustive and parametrized sweeps over Frobenius seaweeds, with NDJSON
// persistence and resume.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "seaweed/analysis.hpp"
#include "seaweed/core.hpp"

namespace seaweed {

enum class Conjecture { Unimodal_2_8, Stability_4_16, Stability_4_17, Stability_4_18, None };

/// unimodal_2_8, stability_4_16, stability_4_17, stability_4_18, none
std::string_view conjecture_name(Conjecture c);
std::optional<Conjecture> parse_conjecture(std::string_view name);

struct SweepJob {
  int n_min = 1;
  int n_max = 10;
  Conjecture conjecture = Conjecture::Unimodal_2_8;
  int k_max = 8;
  int r_max = 6;
  std::string output_path;  // empty: keep records in memory only
  unsigned workers = 1;
  bool resume = false;  // load output_path first and skip completed keys

  /// Throws DomainError on an inconsistent job.
  void validate() const;
};

class SweepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepRecord {
  std::string key;   // unique within a job; the spec text for spec sweeps
  std::string spec;
  int n = 0;
  int index = 0;  // sl index
  bool frobenius = false;
  std::optional<SpectrumReport> report;
  bool proven_ok = true;      // false marks an engine bug
  bool conjecture_ok = true;  // false marks a counterexample
  std::string note;
  std::int64_t elapsed_us = 0;

  nlohmann::ordered_json to_json() const;
  static SweepRecord from_json(const nlohmann::json& j);
  /// Equality ignoring elapsed time.
  bool same_result(const SweepRecord& other) const;
};

struct SweepSummary {
  Conjecture conjecture = Conjecture::None;
  std::int64_t records = 0;
  std::int64_t frobenius = 0;
  std::int64_t not_unimodal = 0;
  std::int64_t not_log_concave = 0;
  std::int64_t not_symmetric = 0;
  std::vector<std::string> engine_bugs;      // "key: note"
  std::vector<std::string> counterexamples;  // "key: note"

  /// 0 clean, 2 counterexample found, 1 engine bug.
  int exit_code() const;
  nlohmann::ordered_json to_json() const;
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

SweepSummary summarize(Conjecture c, const std::vector<SweepRecord>& records);

struct SweepResult {
  SweepSummary summary;
  std::vector<SweepRecord> records;  // loaded records first, then new ones in job order
};

/// All ordered pairs of compositions of n whose meander is a single path.
std::vector<SeaweedSpec> enumerate_frobenius(int n);

/// Record for one spec: index, report and the proven checks (unbroken,
/// centered, swap and reverse lemmas); conjecture_ok tracks unimodality
/// when `check_unimodal` is set.
SweepRecord evaluate_spec(const SeaweedSpec& spec, bool check_unimodal);

/// Every pair of compositions of n for n in [n_min, n_max].
SweepResult run_unimodality_sweep(const SweepJob& job);
/// The (k, r) grid of the selected stability conjecture. For stability_4_16
/// the bases are the Frobenius specs with n in [n_min, n_max] whose last top
/// part is at most k_max.
SweepResult run_stability_sweep(const SweepJob& job);
/// Dispatches on job.conjecture; `none` runs the spec sweep without the
/// unimodality check.
SweepResult run_sweep(const SweepJob& job);

/// Appends one JSON line per record.
void persist_records(const std::vector<SweepRecord>& records, const std::string& path);
/// Loads an NDJSON record file. A missing or empty file yields no records.
/// Throws SweepError naming the line number of the first corrupt line.
std::vector<SweepRecord> load_records(const std::string& path);

}  // namespace seaweed
