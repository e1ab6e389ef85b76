#include "ibi/dataset.hpp"

#include "ibi/errors.hpp"

namespace ibi {

GroupedDataset::GroupedDataset(std::array<Eigen::MatrixXd, 3> groups,
                               std::vector<std::string> feature_names,
                               std::array<std::string, 3> group_labels)
    : groups_(std::move(groups)),
      feature_names_(std::move(feature_names)),
      group_labels_(std::move(group_labels)) {
  const auto p = groups_[0].cols();
  if (p < 1) throw InvalidArgument("dataset needs at least one feature");
  for (int g = 0; g < 3; ++g) {
    if (groups_[g].cols() != p) {
      throw DimensionMismatch("groups have different feature counts");
    }
    if (groups_[g].rows() < 2) {
      throw InsufficientData("group " + group_labels_[g] +
                             " needs at least 2 observations");
    }
    if (!groups_[g].allFinite()) {
      throw InvalidArgument("group " + group_labels_[g] +
                            " contains non-finite values");
    }
  }
  if (feature_names_.empty()) {
    for (Eigen::Index j = 0; j < p; ++j) {
      feature_names_.push_back("x" + std::to_string(j + 1));
    }
  } else if (static_cast<Eigen::Index>(feature_names_.size()) != p) {
    throw DimensionMismatch("feature name count does not match columns");
  }
}

Eigen::MatrixXd GroupedDataset::pooled() const {
  Eigen::MatrixXd all(static_cast<Eigen::Index>(total_size()), dim());
  Eigen::Index row = 0;
  for (const auto& g : groups_) {
    all.middleRows(row, g.rows()) = g;
    row += g.rows();
  }
  return all;
}

GroupedDataset GroupedDataset::select_features(
    const std::vector<std::size_t>& columns) const {
  if (columns.empty()) throw InvalidArgument("no features selected");
  std::array<Eigen::MatrixXd, 3> out;
  std::vector<std::string> names;
  for (std::size_t c : columns) {
    if (c >= dim()) throw InvalidArgument("feature index out of range");
    names.push_back(feature_names_[c]);
  }
  for (int g = 0; g < 3; ++g) {
    out[g].resize(groups_[g].rows(), static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
      out[g].col(static_cast<Eigen::Index>(j)) =
          groups_[g].col(static_cast<Eigen::Index>(columns[j]));
    }
  }
  return GroupedDataset(std::move(out), std::move(names), group_labels_);
}

}  // namespace ibi
