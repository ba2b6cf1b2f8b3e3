#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "melodynet/metrics.hpp"

namespace melodynet {

struct TrackId {
  std::string artist;
  std::string title;

  friend bool operator==(const TrackId&, const TrackId&) = default;
  friend auto operator<=>(const TrackId&, const TrackId&) = default;
};

// The 22-name registry, in feature-vector order: n_nodes, n_edges,
// solo_length, diameter, notes_per_bar, clustering_coefficient, then
// {mean, median, min, max} for degree, in_degree, weighted_degree and
// betweenness.
const std::vector<std::string>& feature_registry();

// Value of one registry feature; throws InputError on an unknown name.
double feature_value(const MetricsReport& report, const std::string& name);

// One observation per row, one selected feature per column. Every row shares
// the identical column-name ordering.
struct FeatureDataset {
  std::vector<TrackId> ids;        // row -> track
  std::vector<std::string> names;  // column -> feature name
  Eigen::MatrixXd values;          // ids.size() x names.size()

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

// Requires >= 2 reports and a nonempty, duplicate-free selection of registry
// names; ordering follows the selection.
FeatureDataset assemble_features(const std::vector<MetricsReport>& reports,
                                 const std::vector<std::string>& selection);

}  // namespace melodynet
