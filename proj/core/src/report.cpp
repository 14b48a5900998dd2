#include "advrisk/report.hpp"

#include <charconv>
#include <stdexcept>

#include <json.hpp>

namespace advrisk {

namespace {
using nlohmann::json;

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}
}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string csv_header() {
  return "method,metric,eps,sigma,depsilon,risk,classifier,degenerate";
}

std::string to_csv_row(const RiskReport& r) {
  std::string row;
  row += r.method;
  row += ',';
  row += metric_name(r.metric);
  row += ',';
  row += format_double(r.eps);
  row += ',';
  if (r.sigma) row += format_double(*r.sigma);
  row += ',';
  row += format_double(r.depsilon);
  row += ',';
  row += format_double(r.risk);
  row += ',';
  row += csv_escape(r.classifier);
  row += ',';
  row += r.degenerate ? '1' : '0';
  return row;
}

RiskReport parse_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  if (fields.size() != 8) {
    throw std::invalid_argument("parse_csv_row: expected 8 fields");
  }
  auto to_d = [](const std::string& s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{}) throw std::invalid_argument("parse_csv_row: bad number");
    return v;
  };
  RiskReport r;
  r.method = fields[0];
  r.metric = metric_from_name(fields[1]);
  r.eps = to_d(fields[2]);
  if (!fields[3].empty()) r.sigma = to_d(fields[3]);
  r.depsilon = to_d(fields[4]);
  r.risk = to_d(fields[5]);
  r.classifier = fields[6];
  r.degenerate = fields[7] == "1";
  return r;
}

std::string certificate_to_json(const TransportCertificate& cert) {
  json j;
  j["kind"] = "transport-certificate";
  j["cost"] = cert.cost;
  j["eps"] = cert.eps;
  j["metric"] = metric_name(cert.metric);
  json coupling = json::array();
  for (const auto& c : cert.coupling) {
    coupling.push_back({{"from", c.from},
                        {"to", c.to},
                        {"mass", c.mass},
                        {"admissible", c.admissible}});
  }
  j["coupling"] = std::move(coupling);
  if (cert.witness) {
    if (const auto* iv = std::get_if<IntervalSet>(&*cert.witness)) {
      j["witness"] = {{"type", "intervals"}, {"set", iv->to_string()}};
    } else {
      const auto& h = std::get<Halfspace>(*cert.witness);
      j["witness"] = {{"type", "halfspace"},
                      {"normal", h.normal},
                      {"offset", h.offset}};
    }
  }
  return j.dump(2);
}

TransportCertificate certificate_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("kind", "") != "transport-certificate") {
    throw std::invalid_argument("certificate_from_json: wrong document kind");
  }
  TransportCertificate cert;
  cert.cost = j.at("cost").get<double>();
  cert.eps = j.at("eps").get<double>();
  cert.metric = metric_from_name(j.at("metric").get<std::string>());
  for (const auto& c : j.at("coupling")) {
    cert.coupling.push_back({c.at("from").get<std::size_t>(),
                             c.at("to").get<std::size_t>(),
                             c.at("mass").get<double>(),
                             c.at("admissible").get<bool>()});
  }
  if (j.contains("witness")) {
    const auto& w = j.at("witness");
    if (w.at("type") == "intervals") {
      cert.witness = IntervalSet::parse(w.at("set").get<std::string>());
    } else {
      Halfspace h;
      h.normal = w.at("normal").get<std::vector<double>>();
      h.offset = w.at("offset").get<double>();
      cert.witness = h;
    }
  }
  return cert;
}

std::string report_to_json(const RiskReport& r) {
  json j;
  j["method"] = r.method;
  j["metric"] = metric_name(r.metric);
  j["eps"] = r.eps;
  if (r.sigma) j["sigma"] = *r.sigma;
  j["depsilon"] = r.depsilon;
  j["risk"] = r.risk;
  j["classifier"] = r.classifier;
  j["degenerate"] = r.degenerate;
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  return j.dump(2);
}

RiskReport report_from_json(const std::string& text) {
  json j = json::parse(text);
  RiskReport r;
  r.method = j.at("method").get<std::string>();
  r.metric = metric_from_name(j.at("metric").get<std::string>());
  r.eps = j.at("eps").get<double>();
  if (j.contains("sigma")) r.sigma = j.at("sigma").get<double>();
  r.depsilon = j.at("depsilon").get<double>();
  r.risk = j.at("risk").get<double>();
  r.classifier = j.at("classifier").get<std::string>();
  r.degenerate = j.at("degenerate").get<bool>();
  if (j.contains("diagnostics")) {
    r.diagnostics = j.at("diagnostics").get<std::map<std::string, double>>();
  }
  return r;
}

}  // namespace advrisk
