#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "kleinring/cocycle.hpp"
#include "kleinring/parse.hpp"

namespace kleinring {

struct VerifyOptions {
  std::uint64_t p = 2;
  unsigned precision = 16;
  int window_lo = -6;
  int window_hi = 6;
};

struct CorpusEntry {
  std::string name;
  TypedLattice lat;
};

// The named lattices every suite runs over: the translated families with
// |k| <= 3 plus the tube lists (homogeneous points fixed per prime,
// exceptional layers up to 5).
std::vector<CorpusEntry> family_corpus(const Dvr& ring);
std::vector<CorpusEntry> tube_corpus(const Dvr& ring);
std::vector<CorpusEntry> full_corpus(const Dvr& ring);
std::vector<FpPoly> homogeneous_points(std::uint64_t p);
unsigned homogeneous_max_layer(std::uint64_t p);

std::vector<std::string> suite_names();

// Runs one named suite and returns its machine-readable report:
// {suite, checks: [{name, status, expected, computed, note}], summary}.
nlohmann::ordered_json run_suite(const std::string& name,
                                 const VerifyOptions& opt);

// True if any check failed (documented discrepancies do not count).
bool suite_failed(const nlohmann::ordered_json& suite_doc);

// Tate table report for one lattice spec.
nlohmann::ordered_json cohomology_report(const std::string& spec,
                                         const VerifyOptions& opt, int from,
                                         int to);

// Wraps a suite or table document with the configuration header.
nlohmann::ordered_json report_document(const VerifyOptions& opt,
                                       nlohmann::ordered_json body);

// Plain-text rendering of a report document.
std::string format_report(const nlohmann::ordered_json& doc);

}  // namespace kleinring
