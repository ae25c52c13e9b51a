#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cartanqm/noise.hpp"
#include "cartanqm/sampling.hpp"

namespace cartanqm {

using MetaList = std::vector<std::pair<std::string, std::string>>;

/// Shortest round-trip decimal form of a double; infinities print as the
/// literal token "inf" (never NaN in any dataset).
std::string format_double(double x);

/// Inverse of format_double; accepts "inf"/"-inf".
double parse_double(const std::string& s);

const char* scan_kind_name(ScanKind kind);
ScanKind scan_kind_from_name(const std::string& name);

/// CSV with "# key=value" metadata comments, a header row
/// `probe_id,kind,p,inv_s,concurrence`, and LF line endings.
std::string scan_to_csv(const std::vector<ScanRecord>& records, const MetaList& meta);

struct ParsedScanCsv {
  std::map<std::string, std::string> meta;
  std::vector<ScanRecord> records;
};

/// Parses what scan_to_csv writes; lossless on finite values and inf tokens.
ParsedScanCsv scan_from_csv(const std::string& text);

/// CSV schema `class,family,scope,lambda1,lambda2,lambda3,gamma,phi,p`,
/// one row per grid cell, row-major in (gamma, phi).
std::string noise_scan_to_csv(const NoiseScanResult& result, const MetaList& meta);

struct NoiseScanRow {
  std::string probe_class, family, scope;
  double lambda1 = 0.0, lambda2 = 0.0, lambda3 = 0.0;
  double gamma = 0.0, phi = 0.0, p = 0.0;
};

struct ParsedNoiseScanCsv {
  std::map<std::string, std::string> meta;
  std::vector<NoiseScanRow> rows;
};

ParsedNoiseScanCsv noise_scan_from_csv(const std::string& text);

}  // namespace cartanqm
