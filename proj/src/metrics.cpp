#include "melodynet/metrics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace melodynet {

Stats4 summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty sample");
  std::sort(values.begin(), values.end());
  Stats4 s;
  s.min = values.front();
  s.max = values.back();
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  const std::size_t n = values.size();
  s.median = (n % 2 == 1) ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  return s;
}

namespace {

struct NodeDegrees {
  std::vector<double> degree, in_degree, weighted_degree;
};

NodeDegrees node_degrees(const NoteNetwork& net) {
  const int n = net.node_count();
  if (n == 0) throw std::invalid_argument("degree_stats: empty network");
  NodeDegrees d;
  d.degree.assign(n, 0);
  d.in_degree.assign(n, 0);
  d.weighted_degree.assign(n, 0);
  for (const auto& e : net.edges) {
    d.degree[e.source] += 1;  // outgoing incidence
    d.degree[e.target] += 1;  // incoming incidence (self-loop lands twice)
    d.in_degree[e.target] += 1;
    d.weighted_degree[e.source] += e.weight;
    d.weighted_degree[e.target] += e.weight;
  }
  return d;
}

}  // namespace

DegreeStats degree_stats(const NoteNetwork& net) {
  const NodeDegrees d = node_degrees(net);
  return DegreeStats{summarize(d.degree), summarize(d.in_degree), summarize(d.weighted_degree)};
}

std::vector<std::pair<int, int>> degree_distribution(const NoteNetwork& net) {
  const NodeDegrees d = node_degrees(net);
  std::map<int, int> counts;
  for (double deg : d.degree) ++counts[static_cast<int>(deg)];
  return {counts.begin(), counts.end()};
}

namespace {

// BFS distances from source; -1 where unreachable.
std::vector<int> bfs_distances(const UndirectedGraph& g, int source) {
  std::vector<int> dist(g.n, -1);
  dist[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[u]) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

// Nodes of the largest connected component; ties go to the component whose
// lowest node index is smallest (i.e. the first one found scanning from 0).
std::vector<int> largest_component(const UndirectedGraph& g) {
  std::vector<char> visited(g.n, 0);
  std::vector<int> best;
  for (int s = 0; s < g.n; ++s) {
    if (visited[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    visited[s] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int v : g.adj[u]) {
        if (!visited[v]) {
          visited[v] = 1;
          queue.push_back(v);
        }
      }
    }
    if (comp.size() > best.size()) best = std::move(comp);
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace

PathMetrics path_metrics(const UndirectedGraph& g) {
  if (g.n == 0) throw std::invalid_argument("path_metrics: empty graph");
  const std::vector<int> comp = largest_component(g);
  if (comp.size() < 2) return PathMetrics{0, 0.0};

  int diameter = 0;
  long long total = 0;
  long long pairs = 0;
  for (int s : comp) {
    const std::vector<int> dist = bfs_distances(g, s);
    for (int t : comp) {
      if (t == s) continue;
      diameter = std::max(diameter, dist[t]);
      total += dist[t];
      ++pairs;
    }
  }
  return PathMetrics{diameter, static_cast<double>(total) / static_cast<double>(pairs)};
}

std::vector<double> local_clustering(const UndirectedGraph& g) {
  std::vector<double> coeffs(g.n, 0.0);
  for (int v = 0; v < g.n; ++v) {
    const auto& nb = g.adj[v];
    const int deg = static_cast<int>(nb.size());
    if (deg < 2) continue;
    int links = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (std::binary_search(g.adj[nb[i]].begin(), g.adj[nb[i]].end(), nb[j])) ++links;
      }
    }
    coeffs[v] = 2.0 * static_cast<double>(links) / (static_cast<double>(deg) * (deg - 1));
  }
  return coeffs;
}

double clustering_coefficient(const UndirectedGraph& g) {
  if (g.n == 0) throw std::invalid_argument("clustering_coefficient: empty graph");
  const std::vector<double> coeffs = local_clustering(g);
  double sum = 0;
  for (double c : coeffs) sum += c;
  return sum / static_cast<double>(g.n);
}

std::vector<double> betweenness_scores(const NoteNetwork& net) {
  const int n = net.node_count();
  if (n == 0) throw std::invalid_argument("betweenness_scores: empty network");
  std::vector<std::vector<int>> out(n);
  for (const auto& e : net.edges) {
    if (e.source != e.target) out[e.source].push_back(e.target);  // loops never shorten a path
  }

  std::vector<double> score(n, 0.0);
  // Brandes: one BFS per source with dependency accumulation in reverse
  // finish order; per-source passes sum in fixed source order.
  std::vector<int> dist(n), sigma(n), stack;
  std::vector<std::vector<int>> preds(n);
  std::vector<double> delta(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0);
    for (auto& p : preds) p.clear();
    stack.clear();
    dist[s] = 0;
    sigma[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      stack.push_back(u);
      for (int v : out[u]) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
        if (dist[v] == dist[u] + 1) {
          sigma[v] += sigma[u];
          preds[v].push_back(u);
        }
      }
    }
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      const int w = *it;
      for (int p : preds[w]) {
        delta[p] += static_cast<double>(sigma[p]) / static_cast<double>(sigma[w]) *
                    (1.0 + delta[w]);
      }
      if (w != s) score[w] += delta[w];
    }
  }

  if (n < 3) {
    std::fill(score.begin(), score.end(), 0.0);
  } else {
    const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2);
    for (double& v : score) v /= norm;
  }
  return score;
}

Stats4 betweenness_stats(const NoteNetwork& net) {
  return summarize(betweenness_scores(net));
}

MetricsReport full_report(const NoteNetwork& net) {
  MetricsReport r;
  r.track_ref = net.track_ref;
  r.n_nodes = net.node_count();
  r.n_edges = net.edge_count();
  r.solo_length = net.solo_length;
  r.notes_per_bar = static_cast<double>(net.solo_length) / static_cast<double>(net.track_ref.bars);

  const UndirectedGraph g = undirected_view(net);
  const PathMetrics pm = path_metrics(g);
  r.diameter = pm.diameter;
  r.avg_path_length = pm.avg_path_length;
  r.clustering_coefficient = clustering_coefficient(g);

  const DegreeStats ds = degree_stats(net);
  r.degree = ds.degree;
  r.in_degree = ds.in_degree;
  r.weighted_degree = ds.weighted_degree;
  r.betweenness = betweenness_stats(net);
  return r;
}

}  // namespace melodynet
