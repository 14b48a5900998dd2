#include "advrisk/intervals.hpp"

#include "advrisk/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace advrisk {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_eps(double eps) {
  if (!(eps >= 0.0)) {
    throw std::invalid_argument("interval op: eps must be nonnegative");
  }
}
}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> pieces) {
  for (const auto& iv : pieces) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi) || iv.lo > iv.hi) {
      throw std::invalid_argument("IntervalSet: need lo <= hi and no NaN");
    }
    if (iv.lo == kInf || iv.hi == -kInf) {
      throw std::invalid_argument("IntervalSet: piece collapses at infinity");
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  for (const auto& iv : pieces) {
    if (!pieces_.empty() && iv.lo <= pieces_.back().hi) {
      pieces_.back().hi = std::max(pieces_.back().hi, iv.hi);
    } else {
      pieces_.push_back(iv);
    }
  }
}

IntervalSet IntervalSet::whole_line() { return IntervalSet({{-kInf, kInf}}); }

IntervalSet IntervalSet::of(double lo, double hi) { return IntervalSet({{lo, hi}}); }

bool IntervalSet::is_whole_line() const {
  return pieces_.size() == 1 && pieces_[0].lo == -kInf && pieces_[0].hi == kInf;
}

bool IntervalSet::contains_point(double x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == pieces_.begin()) return false;
  --it;
  return x <= it->hi;
}

bool IntervalSet::contains(const IntervalSet& other) const {
  for (const auto& iv : other.pieces_) {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), iv.lo,
                               [](double v, const Interval& p) { return v < p.lo; });
    if (it == pieces_.begin()) return false;
    --it;
    if (!(it->lo <= iv.lo && iv.hi <= it->hi)) return false;
  }
  return true;
}

IntervalSet IntervalSet::expand(double eps) const {
  check_eps(eps);
  std::vector<Interval> out;
  out.reserve(pieces_.size());
  for (const auto& iv : pieces_) {
    out.push_back({iv.lo - eps, iv.hi + eps});
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::thin(double eps) const {
  check_eps(eps);
  std::vector<Interval> out;
  out.reserve(pieces_.size());
  for (const auto& iv : pieces_) {
    double lo = iv.lo + eps;  // -inf stays -inf
    double hi = iv.hi - eps;
    if (lo <= hi) out.push_back({lo, hi});
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement() const {
  if (pieces_.empty()) return whole_line();
  std::vector<Interval> out;
  double cursor = -kInf;
  for (const auto& iv : pieces_) {
    if (iv.lo > -kInf && cursor <= iv.lo) {
      out.push_back({cursor, iv.lo});
    }
    cursor = iv.hi;
  }
  if (cursor < kInf) out.push_back({cursor, kInf});
  return IntervalSet(std::move(out));
}

double IntervalSet::mass(const UnivariateFamily& f) const {
  double total = 0.0;
  for (const auto& iv : pieces_) total += f.mass(iv.lo, iv.hi);
  return std::min(1.0, total);
}

double IntervalSet::empirical_mass(const EmpiricalMeasure& m) const {
  if (m.dim() != 1) {
    throw std::invalid_argument("empirical_mass: measure must be 1-D");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (contains_point(m.coord(i, 0))) total += m.weight(i);
  }
  return total;
}

std::string IntervalSet::to_string() const {
  if (pieces_.empty()) return "empty";
  std::ostringstream os;
  auto put = [&os](double v) {
    if (v == -kInf) {
      os << "-inf";
    } else if (v == kInf) {
      os << "inf";
    } else {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
      os << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
    }
  };
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) os << ',';
    put(pieces_[i].lo);
    os << "..";
    put(pieces_[i].hi);
  }
  return os.str();
}

namespace {
double parse_endpoint(std::string_view tok) {
  auto trimmed = tok;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed == "-inf") return -kInf;
  if (trimmed == "inf" || trimmed == "+inf") return kInf;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), v);
  if (ec != std::errc{} || ptr != trimmed.data() + trimmed.size()) {
    throw std::invalid_argument("IntervalSet::parse: bad endpoint '" +
                                std::string(tok) + "'");
  }
  return v;
}
}  // namespace

IntervalSet IntervalSet::parse(std::string_view text) {
  if (text == "empty" || text.empty()) return IntervalSet();
  std::vector<Interval> pieces;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view atom = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    std::size_t dots = atom.find("..");
    if (dots == std::string_view::npos) {
      throw std::invalid_argument("IntervalSet::parse: atom '" + std::string(atom) +
                                  "' lacks '..'");
    }
    double lo = parse_endpoint(atom.substr(0, dots));
    double hi = parse_endpoint(atom.substr(dots + 2));
    if (!(lo <= hi)) {
      throw std::invalid_argument("IntervalSet::parse: atom with lo > hi");
    }
    pieces.push_back({lo, hi});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntervalSet(std::move(pieces));
}

double classifier_risk(const UnivariateFamily& class0, const UnivariateFamily& class1,
                       const IntervalSet& decide1, double eps) {
  check_eps(eps);
  double err0 = decide1.expand(eps).mass(class0);
  double err1 = decide1.complement().expand(eps).mass(class1);
  return 0.5 * (err0 + err1);
}

double classifier_risk(const BinaryProblem& problem, const IntervalSet& decide1,
                       double eps) {
  const auto* f0 = std::get_if<UnivariateFamily>(&problem.class0);
  const auto* f1 = std::get_if<UnivariateFamily>(&problem.class1);
  if (!f0 || !f1) {
    throw std::invalid_argument(
        "classifier_risk: both classes must be univariate families");
  }
  return classifier_risk(*f0, *f1, decide1, eps);
}

}  // namespace advrisk
