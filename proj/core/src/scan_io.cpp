#include "cartanqm/scan_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cartanqm {

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) throw std::domain_error("refusing to serialize NaN");
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double parse_double(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::domain_error("malformed number: '" + s + "'");
  return v;
}

const char* scan_kind_name(ScanKind kind) {
  switch (kind) {
    case ScanKind::Haar: return "haar";
    case ScanKind::Factorizable: return "factorizable";
    case ScanKind::OptimalFamily: return "optimal";
  }
  return "?";
}

ScanKind scan_kind_from_name(const std::string& name) {
  if (name == "haar") return ScanKind::Haar;
  if (name == "factorizable") return ScanKind::Factorizable;
  if (name == "optimal") return ScanKind::OptimalFamily;
  throw std::domain_error("unknown scan kind: '" + name + "'");
}

namespace {

void write_meta(std::ostringstream& out, const MetaList& meta) {
  for (const auto& [key, value] : meta) out << "# " << key << "=" << value << "\n";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

struct CsvBody {
  std::map<std::string, std::string> meta;
  std::vector<std::vector<std::string>> rows;  // header excluded
};

CsvBody parse_csv(const std::string& text, const std::string& expected_header) {
  CsvBody body;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string payload = line.substr(1);
      std::size_t start = payload.find_first_not_of(' ');
      if (start == std::string::npos) continue;
      payload = payload.substr(start);
      std::size_t eq = payload.find('=');
      if (eq != std::string::npos) body.meta[payload.substr(0, eq)] = payload.substr(eq + 1);
      continue;
    }
    if (!header_seen) {
      if (line != expected_header)
        throw std::domain_error("unexpected CSV header: '" + line + "'");
      header_seen = true;
      continue;
    }
    body.rows.push_back(split_csv_line(line));
  }
  if (!header_seen) throw std::domain_error("CSV is missing its header row");
  return body;
}

}  // namespace

std::string scan_to_csv(const std::vector<ScanRecord>& records, const MetaList& meta) {
  std::ostringstream out;
  write_meta(out, meta);
  out << "probe_id,kind,p,inv_s,concurrence\n";
  for (const ScanRecord& r : records) {
    out << r.probe_id << ',' << scan_kind_name(r.kind) << ',' << format_double(r.p) << ','
        << format_double(r.inv_s) << ',' << format_double(r.concurrence) << '\n';
  }
  return out.str();
}

ParsedScanCsv scan_from_csv(const std::string& text) {
  CsvBody body = parse_csv(text, "probe_id,kind,p,inv_s,concurrence");
  ParsedScanCsv out;
  out.meta = std::move(body.meta);
  out.records.reserve(body.rows.size());
  for (const auto& f : body.rows) {
    if (f.size() != 5) throw std::domain_error("scan CSV row must have 5 fields");
    ScanRecord r;
    r.probe_id = std::stoull(f[0]);
    r.kind = scan_kind_from_name(f[1]);
    r.p = parse_double(f[2]);
    r.inv_s = parse_double(f[3]);
    r.concurrence = parse_double(f[4]);
    out.records.push_back(r);
  }
  return out;
}

std::string noise_scan_to_csv(const NoiseScanResult& result, const MetaList& meta) {
  std::ostringstream out;
  write_meta(out, meta);
  out << "class,family,scope,lambda1,lambda2,lambda3,gamma,phi,p\n";
  const char* cls = probe_class_name(result.grid.probe);
  const char* fam = noise_family_name(result.family);
  const char* scope = noise_scope_name(result.scope);
  std::string l1 = format_double(result.lambda.l1);
  std::string l2 = format_double(result.lambda.l2);
  std::string l3 = format_double(result.lambda.l3);
  for (int i = 0; i < result.grid.n_gamma; ++i) {
    for (int j = 0; j < result.grid.n_phi; ++j) {
      out << cls << ',' << fam << ',' << scope << ',' << l1 << ',' << l2 << ',' << l3 << ','
          << format_double(result.grid.gamma_at(i)) << ',' << format_double(result.grid.phi_at(j))
          << ',' << format_double(result.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          << '\n';
    }
  }
  return out.str();
}

ParsedNoiseScanCsv noise_scan_from_csv(const std::string& text) {
  CsvBody body = parse_csv(text, "class,family,scope,lambda1,lambda2,lambda3,gamma,phi,p");
  ParsedNoiseScanCsv out;
  out.meta = std::move(body.meta);
  out.rows.reserve(body.rows.size());
  for (const auto& f : body.rows) {
    if (f.size() != 9) throw std::domain_error("noise scan CSV row must have 9 fields");
    NoiseScanRow r;
    r.probe_class = f[0];
    r.family = f[1];
    r.scope = f[2];
    r.lambda1 = parse_double(f[3]);
    r.lambda2 = parse_double(f[4]);
    r.lambda3 = parse_double(f[5]);
    r.gamma = parse_double(f[6]);
    r.phi = parse_double(f[7]);
    r.p = parse_double(f[8]);
    out.rows.push_back(r);
  }
  return out;
}

}  // namespace cartanqm
