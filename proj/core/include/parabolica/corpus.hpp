#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parabolica/rational.hpp"
#include "parabolica/report.hpp"

namespace parabolica {

struct CorpusExpectation {
  std::optional<int> godrons;
  std::optional<int> interior;
  std::optional<int> P;
  std::optional<int> N;
  std::optional<int> chi_B_minus;
  /// Singular points of the EDLA form on the equator (antipodes counted).
  std::optional<int> equator_points;
  std::optional<std::string> b_minus_contains;
  /// Index-sum identity value; unset when a refusal is expected instead.
  std::optional<Rational> identity;
  std::optional<std::string> refusal;
};

struct CorpusEntry {
  std::string name;
  std::string polynomial;
  std::string note;
  CorpusExpectation expect;
};

/// Fixed regression inputs with their known structure.
const std::vector<CorpusEntry>& corpus();

/// Throws kInvalidArgument for an unknown name.
const CorpusEntry& corpus_entry(const std::string& name);

struct CorpusCheck {
  std::string what;
  std::string expected;
  std::string measured;
  bool pass = false;
};

struct CorpusResult {
  const CorpusEntry* entry = nullptr;
  StructureReport report;
  std::vector<CorpusCheck> checks;
  double seconds = 0.0;

  /// Every expectation met and the report verifies.
  bool pass() const;
};

CorpusResult run_corpus_entry(const CorpusEntry& entry, const ReportOptions& options = {});
std::vector<CorpusResult> run_corpus(const ReportOptions& options = {});

}  // namespace parabolica
