#include "advrisk/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace advrisk {

namespace {

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_cell(std::string_view cell, const std::filesystem::path& path,
                  std::size_t line_no) {
  std::string_view t = cell;
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
  while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r'))
    t.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    std::ostringstream os;
    os << path.string() << ":" << line_no << ": non-numeric cell '" << cell << "'";
    throw std::runtime_error(os.str());
  }
  return v;
}

struct ParsedTable {
  std::vector<std::vector<double>> rows;
};

ParsedTable parse_delimited(const std::filesystem::path& path, char delimiter,
                            bool has_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  ParsedTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && has_header) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_fields(line, delimiter);
    std::vector<double> row;
    row.reserve(fields.size());
    for (auto f : fields) row.push_back(parse_cell(f, path, line_no));
    if (!table.rows.empty() && row.size() != table.rows.front().size()) {
      std::ostringstream os;
      os << path.string() << ":" << line_no << ": ragged row (" << row.size()
         << " fields, expected " << table.rows.front().size() << ")";
      throw std::runtime_error(os.str());
    }
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) {
    throw std::runtime_error(path.string() + ": no data rows");
  }
  return table;
}

}  // namespace

LabeledDataset load_delimited(const std::filesystem::path& path,
                              std::size_t label_column, char delimiter,
                              bool has_header) {
  ParsedTable table = parse_delimited(path, delimiter, has_header);
  std::size_t cols = table.rows.front().size();
  if (label_column >= cols) {
    throw std::runtime_error(path.string() + ": label column out of range");
  }
  LabeledDataset ds;
  ds.dim = cols - 1;
  if (ds.dim == 0) throw std::runtime_error(path.string() + ": no feature columns");
  ds.provenance = path.string() + " (delimited)";
  ds.features.reserve(table.rows.size() * ds.dim);
  ds.labels.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    double lab = row[label_column];
    long rounded = std::lround(lab);
    if (lab != static_cast<double>(rounded)) {
      throw std::runtime_error(path.string() + ": non-integer label");
    }
    ds.labels.push_back(rounded);
    for (std::size_t k = 0; k < cols; ++k) {
      if (k != label_column) ds.features.push_back(row[k]);
    }
  }
  return ds;
}

void save_delimited(const LabeledDataset& ds, const std::filesystem::path& path,
                    char delimiter) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  char buf[64];
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t k = 0; k < ds.dim; ++k) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, ds.features[i * ds.dim + k]);
      out.write(buf, ptr - buf);
      out.put(delimiter);
    }
    out << ds.labels[i] << '\n';
  }
}

namespace {

std::uint32_t read_be32(std::ifstream& in, const std::filesystem::path& path) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) {
    throw std::runtime_error(path.string() + ": truncated header");
  }
  return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
         (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]);
}

}  // namespace

LabeledDataset load_idx_images(const std::filesystem::path& images_path,
                               const std::filesystem::path& labels_path) {
  std::ifstream img(images_path, std::ios::binary);
  if (!img) throw std::runtime_error("cannot open " + images_path.string());
  if (read_be32(img, images_path) != 0x00000803u) {
    throw std::runtime_error(images_path.string() + ": wrong image magic");
  }
  std::uint32_t count = read_be32(img, images_path);
  std::uint32_t rows = read_be32(img, images_path);
  std::uint32_t cols = read_be32(img, images_path);

  std::ifstream lab(labels_path, std::ios::binary);
  if (!lab) throw std::runtime_error("cannot open " + labels_path.string());
  if (read_be32(lab, labels_path) != 0x00000801u) {
    throw std::runtime_error(labels_path.string() + ": wrong label magic");
  }
  std::uint32_t lab_count = read_be32(lab, labels_path);
  if (lab_count != count) {
    throw std::runtime_error("image/label counts differ: " + std::to_string(count) +
                             " vs " + std::to_string(lab_count));
  }

  LabeledDataset ds;
  ds.dim = static_cast<std::size_t>(rows) * cols;
  if (ds.dim == 0 || count == 0) {
    throw std::runtime_error(images_path.string() + ": empty image archive");
  }
  ds.provenance = images_path.string() + " (idx)";
  std::vector<unsigned char> pixels(ds.dim);
  ds.features.reserve(static_cast<std::size_t>(count) * ds.dim);
  for (std::uint32_t i = 0; i < count; ++i) {
    if (!img.read(reinterpret_cast<char*>(pixels.data()),
                  static_cast<std::streamsize>(pixels.size()))) {
      throw std::runtime_error(images_path.string() + ": truncated image data");
    }
    for (unsigned char p : pixels) ds.features.push_back(p / 255.0);
  }
  std::vector<unsigned char> raw_labels(count);
  if (!lab.read(reinterpret_cast<char*>(raw_labels.data()), count)) {
    throw std::runtime_error(labels_path.string() + ": truncated label data");
  }
  ds.labels.assign(raw_labels.begin(), raw_labels.end());
  return ds;
}

EmpiricalMeasure load_points(const std::filesystem::path& path, char delimiter,
                             bool has_header) {
  ParsedTable table = parse_delimited(path, delimiter, has_header);
  std::size_t cols = table.rows.front().size();
  std::vector<double> flat;
  flat.reserve(table.rows.size() * cols);
  for (const auto& row : table.rows) {
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return EmpiricalMeasure::uniform(std::move(flat), cols);
}

std::pair<EmpiricalMeasure, EmpiricalMeasure> class_pair(const LabeledDataset& ds,
                                                         long label_a, long label_b,
                                                         std::size_t n_per_class,
                                                         std::uint64_t seed) {
  std::vector<std::size_t> idx_a, idx_b;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds.labels[i] == label_a) idx_a.push_back(i);
    if (ds.labels[i] == label_b) idx_b.push_back(i);
  }
  if (idx_a.empty()) {
    throw std::invalid_argument("class_pair: label " + std::to_string(label_a) +
                                " not present");
  }
  if (idx_b.empty()) {
    throw std::invalid_argument("class_pair: label " + std::to_string(label_b) +
                                " not present");
  }
  std::size_t n = n_per_class;
  if (n == 0) n = std::min(idx_a.size(), idx_b.size());
  if (idx_a.size() < n || idx_b.size() < n) {
    throw std::invalid_argument("class_pair: insufficient examples for n=" +
                                std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::shuffle(idx_a.begin(), idx_a.end(), rng);
  std::shuffle(idx_b.begin(), idx_b.end(), rng);
  idx_a.resize(n);
  idx_b.resize(n);
  auto extract = [&ds](const std::vector<std::size_t>& idx) {
    std::vector<double> flat;
    flat.reserve(idx.size() * ds.dim);
    for (std::size_t i : idx) {
      const double* row = ds.features.data() + i * ds.dim;
      flat.insert(flat.end(), row, row + ds.dim);
    }
    return EmpiricalMeasure::uniform(std::move(flat), ds.dim);
  };
  return {extract(idx_a), extract(idx_b)};
}

EmpiricalMeasure subsample(const EmpiricalMeasure& m, std::size_t n,
                           std::uint64_t seed) {
  if (n == 0 || n > m.size()) {
    throw std::invalid_argument("subsample: n must be in [1, size]");
  }
  if (n == m.size()) return m;
  std::vector<std::size_t> idx(m.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(n);
  std::vector<double> flat;
  flat.reserve(n * m.dim());
  for (std::size_t i : idx) {
    auto p = m.point(i);
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return EmpiricalMeasure::uniform(std::move(flat), m.dim());
}

}  // namespace advrisk
