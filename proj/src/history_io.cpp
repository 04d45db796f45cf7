#include "qganlab/history_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qganlab/errors.hpp"

namespace qgan {

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void write_history_csv(const std::filesystem::path& path, const std::vector<IterationRecord>& history) {
  std::ofstream out(path, std::ios::binary);  // LF line endings on every platform
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << kHistoryCsvHeader << '\n';
  for (const IterationRecord& r : history) {
    out << r.iteration << ',' << format_double(r.loss_g) << ',' << format_double(r.loss_d) << ','
        << format_double(r.tv_to_target) << ',' << format_double(r.fidelity_to_target) << ','
        << format_double(r.wall_time_ms) << '\n';
  }
  if (!out.flush()) throw IoError("I/O error while writing '" + path.string() + "'");
}

std::vector<IterationRecord> read_history_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string line;
  if (!std::getline(in, line)) throw IoError("'" + path.string() + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHistoryCsvHeader) {
    throw ConfigError("'" + path.string() + "' line 1: unexpected header '" + line + "'");
  }
  std::vector<IterationRecord> history;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) {
      throw ConfigError("'" + path.string() + "' line " + std::to_string(line_no) + ": expected 6 fields, got " +
                        std::to_string(fields.size()));
    }
    try {
      IterationRecord r;
      r.iteration = std::stoi(fields[0]);
      r.loss_g = std::stod(fields[1]);
      r.loss_d = std::stod(fields[2]);
      r.tv_to_target = std::stod(fields[3]);
      r.fidelity_to_target = std::stod(fields[4]);
      r.wall_time_ms = std::stod(fields[5]);
      history.push_back(r);
    } catch (const std::exception&) {
      throw ConfigError("'" + path.string() + "' line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
    }
  }
  if (in.bad()) throw IoError("I/O error while reading '" + path.string() + "'");
  return history;
}

std::string compare_report_to_json(const CompareReport& report, const std::vector<double>& target,
                                   double epsilon, int patience) {
  nlohmann::json j;
  j["epsilon"] = epsilon;
  j["patience"] = patience;
  j["target"] = target;
  nlohmann::json methods = nlohmann::json::object();
  for (const auto& [label, summary] : report.methods) {
    nlohmann::json m;
    m["seeds"] = summary.seeds;
    nlohmann::json iterations = nlohmann::json::array();
    for (const auto& it : summary.iterations) {
      if (it) {
        iterations.push_back(*it);
      } else {
        iterations.push_back(nullptr);
      }
    }
    m["iterations_to_convergence"] = iterations;
    if (summary.median_iterations) {
      m["median_iterations"] = *summary.median_iterations;
    } else {
      m["median_iterations"] = nullptr;
    }
    m["converged_fraction"] = summary.converged_fraction;
    auto finite_or_null = [](double v) {
      return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
    };
    nlohmann::json tv = nlohmann::json::array();
    for (double v : summary.final_tv) tv.push_back(finite_or_null(v));
    m["final_tv"] = tv;
    nlohmann::json fid = nlohmann::json::array();
    for (double v : summary.final_fidelity) fid.push_back(finite_or_null(v));
    m["final_fidelity"] = fid;
    methods[label] = m;
  }
  j["methods"] = methods;
  return j.dump(2) + "\n";
}

void write_report_json(const std::filesystem::path& path, const std::string& json_text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << json_text;
  if (!out.flush()) throw IoError("I/O error while writing '" + path.string() + "'");
}

}  // namespace qgan
