#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ibi {

/// Observations of three groups (A, B, C) over a shared set of features.
/// Each group is an n_i x p matrix, one observation per row.
class GroupedDataset {
 public:
  /// Validates: every group has >= 2 rows, all groups have the same number
  /// of columns (>= 1), all values are finite. Feature names default to
  /// "x1".."xp"; group labels default to "A", "B", "C".
  GroupedDataset(std::array<Eigen::MatrixXd, 3> groups,
                 std::vector<std::string> feature_names = {},
                 std::array<std::string, 3> group_labels = {"A", "B", "C"});

  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(groups_[0].cols());
  }
  std::size_t size(int group) const noexcept {
    return static_cast<std::size_t>(groups_[group].rows());
  }
  std::size_t total_size() const noexcept {
    return size(0) + size(1) + size(2);
  }
  const Eigen::MatrixXd& group(int g) const noexcept { return groups_[g]; }
  const std::array<Eigen::MatrixXd, 3>& groups() const noexcept {
    return groups_;
  }
  const std::vector<std::string>& feature_names() const noexcept {
    return feature_names_;
  }
  const std::array<std::string, 3>& group_labels() const noexcept {
    return group_labels_;
  }

  /// All observations stacked A, then B, then C.
  Eigen::MatrixXd pooled() const;

  /// Keeps the listed feature columns, in order.
  GroupedDataset select_features(const std::vector<std::size_t>& columns) const;

 private:
  std::array<Eigen::MatrixXd, 3> groups_;
  std::vector<std::string> feature_names_;
  std::array<std::string, 3> group_labels_;
};

}  // namespace ibi
