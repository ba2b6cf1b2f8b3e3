#include "melodynet/network.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace melodynet {

NoteNetwork build_network(const MelodyTrack& track) {
  if (track.events.empty()) throw std::invalid_argument("build_network: track has no events");

  NoteNetwork net;
  net.track_ref = TrackRef{track.artist, track.title, track.bars};
  net.solo_length = static_cast<int>(track.events.size());

  std::vector<std::string> labels;
  labels.reserve(track.events.size());
  for (const auto& e : track.events) labels.push_back(canonical_label(e));

  net.labels = labels;
  std::sort(net.labels.begin(), net.labels.end());
  net.labels.erase(std::unique(net.labels.begin(), net.labels.end()), net.labels.end());

  const auto index_of = [&](const std::string& label) {
    return static_cast<int>(std::lower_bound(net.labels.begin(), net.labels.end(), label) -
                            net.labels.begin());
  };

  std::map<std::pair<int, int>, int> weights;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    ++weights[{index_of(labels[i]), index_of(labels[i + 1])}];
  }
  net.edges.reserve(weights.size());
  for (const auto& [key, w] : weights) {
    net.edges.push_back(DirectedEdge{key.first, key.second, w});
  }
  return net;
}

int UndirectedGraph::edge_count() const {
  int twice = 0;
  for (const auto& neighbors : adj) twice += static_cast<int>(neighbors.size());
  return twice / 2;
}

UndirectedGraph undirected_view(const NoteNetwork& net) {
  UndirectedGraph g;
  g.n = net.node_count();
  g.adj.assign(g.n, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& e : net.edges) {
    if (e.source == e.target) continue;
    const int u = std::min(e.source, e.target);
    const int v = std::max(e.source, e.target);
    if (seen.insert({u, v}).second) {
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
  }
  for (auto& neighbors : g.adj) std::sort(neighbors.begin(), neighbors.end());
  return g;
}

}  // namespace melodynet
