#ifndef ADVRISK_INGEST_HPP
#define ADVRISK_INGEST_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "advrisk/measures.hpp"

namespace advrisk {

struct LabeledDataset {
  std::vector<double> features;  // row-major, size() * dim
  std::size_t dim = 0;
  std::vector<long> labels;
  std::string provenance;

  std::size_t size() const { return labels.size(); }
};

/// Delimited numeric text, one row per example; `label_column` is a 0-based
/// column index. Parse failures name the offending line.
LabeledDataset load_delimited(const std::filesystem::path& path,
                              std::size_t label_column, char delimiter = ',',
                              bool has_header = false);

void save_delimited(const LabeledDataset& ds, const std::filesystem::path& path,
                    char delimiter = ',');

/// IDX image/label pair (big-endian magics 0x00000803 / 0x00000801); pixels
/// scale to [0, 1].
LabeledDataset load_idx_images(const std::filesystem::path& images_path,
                               const std::filesystem::path& labels_path);

/// Plain delimited point cloud (no label column), uniform weights.
EmpiricalMeasure load_points(const std::filesystem::path& path, char delimiter = ',',
                             bool has_header = false);

/// Extract two classes as equal-count uniform measures via a seeded
/// deterministic shuffle. n_per_class == 0 takes the full smaller-class count.
std::pair<EmpiricalMeasure, EmpiricalMeasure> class_pair(const LabeledDataset& ds,
                                                         long label_a, long label_b,
                                                         std::size_t n_per_class,
                                                         std::uint64_t seed);

/// Seeded subsample to n atoms (uniform weights preserved).
EmpiricalMeasure subsample(const EmpiricalMeasure& m, std::size_t n,
                           std::uint64_t seed);

}  // namespace advrisk

#endif  // ADVRISK_INGEST_HPP
