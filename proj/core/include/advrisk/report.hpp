#ifndef ADVRISK_REPORT_HPP
#define ADVRISK_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "advrisk/discrete.hpp"
#include "advrisk/measures.hpp"

namespace advrisk {

/// One sweep row. Methods: exact-empirical, analytic-<family>, mixture-bound,
/// wp-bound, loss-bound. `depsilon` carries D_eps or the bound's transport
/// quantity; `risk` the risk or lower bound.
struct RiskReport {
  std::string method;
  Metric metric = Metric::euclidean;
  double eps = 0.0;
  std::optional<double> sigma;
  double depsilon = 0.0;
  double risk = 0.0;
  std::string classifier;
  bool degenerate = false;
  std::map<std::string, double> diagnostics;
};

/// Shortest round-trip decimal form of a double (lossless).
std::string format_double(double v);

/// Fixed sweep-table schema.
std::string csv_header();
std::string to_csv_row(const RiskReport& r);
RiskReport parse_csv_row(const std::string& line);

/// Structured self-describing certificate document (JSON text).
std::string certificate_to_json(const TransportCertificate& cert);
TransportCertificate certificate_from_json(const std::string& text);

std::string report_to_json(const RiskReport& r);
RiskReport report_from_json(const std::string& text);

}  // namespace advrisk

#endif  // ADVRISK_REPORT_HPP
