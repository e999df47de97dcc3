#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pinch/lattice.hpp"

namespace pinch::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceFailure = 3,
};

/// "2..4" -> {2, 4}; "3" -> {3, 3}. Throws SpecError.
std::pair<long long, long long> parse_range(const std::string& text);

/// "2,7" -> {2, 7}. Throws SpecError.
std::vector<long long> parse_list(const std::string& text);

struct SweepRow {
  std::string sweep;
  std::string item;
  bool passed = false;
  std::string detail;
};

std::vector<SweepRow> sweep_gap_equivalence(std::pair<long long, long long> n_range,
                                            std::pair<long long, long long> d_range, int t_max);
std::vector<SweepRow> sweep_socle(std::pair<long long, long long> d_range);
std::vector<SweepRow> sweep_frobenius(std::pair<long long, long long> n_range,
                                      std::pair<long long, long long> d_range,
                                      const std::vector<long long>& chars);
std::vector<SweepRow> sweep_multipinch(std::pair<long long, long long> n_range,
                                       std::pair<long long, long long> d_range,
                                       const std::vector<long long>& chars);

/// Removal sets checked for a multipinch sweep: every nonempty subset of
/// the candidates when there are at most 12, otherwise singletons, their
/// complements and the full set.
std::vector<std::vector<ExponentVector>> multipinch_removal_sets(std::size_t n, Coord d);

/// Entry point shared by the binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pinch::cli
