#pragma once

#include <utility>
#include <vector>

#include "melodynet/network.hpp"

namespace melodynet {

struct Stats4 {
  double mean = 0;
  double median = 0;  // even-sized samples: midpoint of the two central values
  double min = 0;
  double max = 0;

  friend bool operator==(const Stats4&, const Stats4&) = default;
};

// Throws std::invalid_argument on an empty sample.
Stats4 summarize(std::vector<double> values);

struct DegreeStats {
  Stats4 degree;           // in + out distinct edges, self-loop counts 2
  Stats4 in_degree;        // incoming distinct edges, self-loop counts 1
  Stats4 weighted_degree;  // same incidence rule, summing edge weights
};

DegreeStats degree_stats(const NoteNetwork& net);

// Per-node degree (in + out, self-loop twice) with occurrence counts,
// sorted by degree ascending. Backs the "degree,count" distribution export.
std::vector<std::pair<int, int>> degree_distribution(const NoteNetwork& net);

struct PathMetrics {
  int diameter = 0;
  double avg_path_length = 0;
};

// Unweighted BFS over the largest connected component (ties broken toward
// the component containing the lowest node index). Average is over ordered
// reachable pairs u != v in that component; an isolated-node-only graph
// yields (0, 0).
PathMetrics path_metrics(const UndirectedGraph& g);

// Local coefficient per node: 2*triangles(v) / (deg(v)*(deg(v)-1)), zero
// when deg(v) < 2.
std::vector<double> local_clustering(const UndirectedGraph& g);

// Average of the local coefficients over all nodes.
double clustering_coefficient(const UndirectedGraph& g);

// Brandes on the directed, unweighted network. Scores are normalized by
// (n-1)(n-2) for n >= 3 and are all zero for n < 3.
std::vector<double> betweenness_scores(const NoteNetwork& net);

Stats4 betweenness_stats(const NoteNetwork& net);

struct MetricsReport {
  TrackRef track_ref;
  int n_nodes = 0;
  int n_edges = 0;  // distinct directed edges
  int solo_length = 0;
  double notes_per_bar = 0;  // solo_length / bars
  int diameter = 0;
  double avg_path_length = 0;
  double clustering_coefficient = 0;
  Stats4 degree;
  Stats4 in_degree;
  Stats4 weighted_degree;
  Stats4 betweenness;
};

MetricsReport full_report(const NoteNetwork& net);

}  // namespace melodynet
