#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qganlab/metrics.hpp"
#include "qganlab/train.hpp"

namespace qgan {

/// CSV column order for per-run history files.
inline constexpr const char* kHistoryCsvHeader = "iteration,loss_g,loss_d,tv,fidelity,wall_time_ms";

/** Serialize a double with 17 significant digits; round-trips exactly. */
std::string format_double(double v);

void write_history_csv(const std::filesystem::path& path, const std::vector<IterationRecord>& history);

/** Parses files produced by write_history_csv; exact round-trip. */
std::vector<IterationRecord> read_history_csv(const std::filesystem::path& path);

std::string compare_report_to_json(const CompareReport& report, const std::vector<double>& target,
                                   double epsilon, int patience);

void write_report_json(const std::filesystem::path& path, const std::string& json_text);

}  // namespace qgan
