#pragma once

#include <string>
#include <vector>

#include "melodynet/melody.hpp"

namespace melodynet {

struct TrackRef {
  std::string artist;
  std::string title;
  int bars = 1;

  friend bool operator==(const TrackRef&, const TrackRef&) = default;
};

struct DirectedEdge {
  int source = 0;
  int target = 0;
  int weight = 0;  // occurrence count, >= 1

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// Directed weighted note-transition network. Node i is labels[i]; labels are
// sorted and unique, edges sorted by (source, target), so equal tracks build
// byte-identical networks regardless of construction order.
struct NoteNetwork {
  std::vector<std::string> labels;
  std::vector<DirectedEdge> edges;
  TrackRef track_ref;
  int solo_length = 0;  // event count; edge weights sum to solo_length - 1

  int node_count() const { return static_cast<int>(labels.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  friend bool operator==(const NoteNetwork&, const NoteNetwork&) = default;
};

// One node per distinct canonical label; a directed edge per consecutive
// event pair, weighted by the number of occurrences. Self-loops permitted.
NoteNetwork build_network(const MelodyTrack& track);

// Simple undirected graph; adjacency lists sorted, no self-loops, no
// parallel edges.
struct UndirectedGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  int edge_count() const;
};

// Symmetrized view: {u, v} present iff (u, v) or (v, u) is a directed edge
// and u != v. Node indices match the network's label order.
UndirectedGraph undirected_view(const NoteNetwork& net);

}  // namespace melodynet
