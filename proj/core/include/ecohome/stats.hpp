#pragma once

// Descriptive statistics for the usability study: completion-time group
// summaries and per-question Likert summaries, plus the plain-text report
// built from session logs and Likert response files.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecohome/session_log.hpp"

namespace ecohome {

/// Sample statistics: sd uses the n-1 denominator, sem = sd / sqrt(n).
struct StatsSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  double sem = 0.0;
};

struct LikertSummary {
  std::size_t n = 0;
  int min = 0;
  int max = 0;
  double mean = 0.0;
  double sd = 0.0;
};

/// Throws std::invalid_argument for fewer than two values.
StatsSummary summarize(std::span<const double> values);

/// Throws std::invalid_argument for fewer than two responses or any
/// response outside 1..5.
LikertSummary summarize_likert(std::span<const int> values);

/// Rounds half away from zero at `decimals` places.
double round_half_up(double value, int decimals);
/// round_half_up() then fixed-point formatting with exactly `decimals` digits.
std::string format_fixed(double value, int decimals);

/// Malformed study input; what() names the source and line.
class StatsInputError : public std::runtime_error {
 public:
  StatsInputError(const std::string& source, std::size_t line, const std::string& message);
};

struct LikertItem {
  std::string question;
  std::vector<int> responses;
};

/// Reads `question_id,response` rows (header required). Questions keep
/// first-appearance order. Throws StatsInputError.
std::vector<LikertItem> read_likert_csv(std::istream& in, const std::string& source_name);
std::vector<LikertItem> read_likert_csv_file(const std::filesystem::path& path);

struct TimingGroup {
  std::string label;
  /// One total completion time per participant, in minutes.
  std::vector<double> minutes;
};

/// Sum of SessionEnd times across all sessions of one participant's log,
/// in minutes. Throws std::invalid_argument if a session never ended or
/// the log is empty.
double total_minutes(std::span<const SessionLog> sessions);

/// Groups per-participant log totals by label. `labels` is either empty
/// (one "Use Program" group), a single label for every log, or one label
/// per log. Groups keep first-appearance order.
std::vector<TimingGroup> timing_groups_from_logs(std::span<const std::filesystem::path> logs,
                                                 std::span<const std::string> labels);

/// Table with columns Mode of Testing, N, Mean, Std. Deviation and
/// Std. Error of Mean (3 decimals), followed by Likert rows (N, Minimum,
/// Maximum, Mean to 2 decimals, Std. Deviation to 3) when any are given.
/// Throws std::invalid_argument if a group has fewer than two members.
std::string render_stats_report(std::span<const TimingGroup> groups,
                                std::span<const LikertItem> likert);

std::string stats_report(std::span<const std::filesystem::path> logs,
                         std::span<const std::string> labels,
                         std::span<const std::filesystem::path> likert_csvs = {});

}  // namespace ecohome
