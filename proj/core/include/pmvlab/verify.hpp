#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pmvlab/finite_pmv.hpp"
#include "pmvlab/ortho.hpp"

namespace pmvlab {

enum class Status { pass, fail, inconclusive };
std::string_view to_string(Status s);

struct PropertyRecord {
  std::string id;
  std::string statement;
  std::vector<int> criteria;  // acceptance criteria exercised
  Status status = Status::pass;
  std::string witness;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double runtime_ms = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  std::size_t samples = 10000;
};

struct VerifyReport {
  std::string suite;
  VerifyOptions options;
  std::vector<PropertyRecord> records;

  /// 0 all pass, 1 some failure, 3 inconclusive without failure.
  int exit_code() const;
};

/// Suites: axioms, ideals, summands, ortho, all. PreconditionFailed otherwise.
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options = {});
std::vector<std::string> suite_names();

/// JSON report; runtime_ms is included unless `with_runtime` is false.
nlohmann::json to_json(const VerifyReport& report, bool with_runtime = true);

struct FiniteLargePair {
  std::string algebra;
  FinitePMV super;
  CarrierSet sub;
};

/// (M, S) for every finite corpus algebra M and subalgebra S large in M.
std::vector<FiniteLargePair> finite_large_pairs();

/// Γ(Z,10) inside Γ(Q,10).
Inclusion integer_in_rational();

/// Single-block and mixed presentations covering every chain kind.
std::vector<std::pair<std::string, SubdirectPresentation>> chain_kind_presentations();

}  // namespace pmvlab
