#include "mtavg/field.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace mtavg::field {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
    return a;
  }
};

std::vector<std::vector<std::size_t>> adjacency(const ScalarGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<std::size_t> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t source) {
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(adj.size(), unseen);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u]) {
      if (dist[v] != unseen) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

}  // namespace

GridMask parse_grid_mask(std::string_view text, Connectivity connectivity) {
  GridMask m;
  m.connectivity = connectivity;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.empty()) continue;
    if (m.rows == 0) m.cols = line.size();
    if (line.size() != m.cols) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": row length " + std::to_string(line.size()) +
                                  " differs from " + std::to_string(m.cols));
    }
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (line[c] != '#' && line[c] != '.') {
        throw std::invalid_argument("line " + std::to_string(line_no) + ", column " + std::to_string(c + 1) +
                                    ": expected '#' or '.'");
      }
      m.cells.push_back(line[c] == '#');
    }
    ++m.rows;
  }
  if (std::find(m.cells.begin(), m.cells.end(), true) == m.cells.end()) {
    throw std::invalid_argument("mask has no occupied cell");
  }
  return m;
}

void validate(const ScalarGraph& g) {
  if (g.vertices.empty()) throw std::invalid_argument("scalar graph has no vertices");
  std::unordered_set<std::string> ids;
  for (const auto& v : g.vertices) {
    if (!ids.insert(v.id).second) throw std::invalid_argument("duplicate graph vertex id '" + v.id + "'");
  }
  for (auto [u, v] : g.edges) {
    if (u >= g.vertices.size() || v >= g.vertices.size()) throw std::invalid_argument("edge endpoint out of range");
  }
  const auto dist = bfs(adjacency(g), 0);
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] == std::numeric_limits<std::size_t>::max()) {
      throw std::invalid_argument("scalar graph is disconnected: '" + g.vertices[v].id + "' is unreachable");
    }
  }
}

MergeTree merge_tree_from_field(const ScalarGraph& g, Orientation orientation) {
  validate(g);
  const std::size_t n = g.vertices.size();
  std::vector<Height> value(n);
  for (std::size_t v = 0; v < n; ++v) {
    value[v] = orientation == Orientation::Sublevel ? g.vertices[v].value : -g.vertices[v].value;
  }
  const auto adj = adjacency(g);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });

  DisjointSets sets(n);
  std::vector<bool> active(n, false);
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> node_of(n, none);  // per set root: tree node of that component
  std::vector<NodeSpec> nodes;

  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && value[order[j]] == value[order[i]]) ++j;
    const std::vector<std::size_t> batch(order.begin() + static_cast<std::ptrdiff_t>(i),
                                         order.begin() + static_cast<std::ptrdiff_t>(j));
    const Height& level = value[order[i]];

    // Older components touched by the batch, recorded before anything merges.
    std::vector<std::pair<std::size_t, std::size_t>> touched;  // (batch vertex, older root)
    for (std::size_t v : batch) {
      for (std::size_t u : adj[v]) {
        if (active[u]) touched.emplace_back(v, sets.find(u));
      }
    }
    for (std::size_t v : batch) active[v] = true;
    for (std::size_t v : batch) {
      for (std::size_t u : adj[v]) {
        if (active[u]) sets.unite(v, u);
      }
    }

    // Components after the batch, each with its batch vertices and older parts.
    std::map<std::size_t, std::pair<std::size_t, std::set<std::size_t>>> grown;  // root -> (first vertex, older)
    for (std::size_t v : batch) {
      auto [it, fresh] = grown.try_emplace(sets.find(v), v, std::set<std::size_t>{});
      if (!fresh) it->second.first = std::min(it->second.first, v);
    }
    for (auto [v, older] : touched) grown[sets.find(v)].second.insert(older);

    for (const auto& [root, info] : grown) {
      const auto& [first, older] = info;
      std::size_t node = none;
      if (older.size() == 1) {
        node = node_of[*older.begin()];
      } else {
        node = nodes.size();
        nodes.push_back({g.vertices[first].id, level, std::nullopt});
        for (std::size_t r : older) nodes[node_of[r]].parent = g.vertices[first].id;
      }
      node_of[root] = node;
    }
    i = j;
  }
  return MergeTree(std::move(nodes));
}

ScalarGraph geodesic_field(const GridMask& mask, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  ScalarGraph g;
  std::vector<std::size_t> index(mask.rows * mask.cols, std::numeric_limits<std::size_t>::max());
  for (std::size_t r = 0; r < mask.rows; ++r) {
    for (std::size_t c = 0; c < mask.cols; ++c) {
      if (!mask.at(r, c)) continue;
      index[r * mask.cols + c] = g.vertices.size();
      g.vertices.push_back({"r" + std::to_string(r) + "c" + std::to_string(c), Height(0)});
    }
  }
  for (std::size_t r = 0; r < mask.rows; ++r) {
    for (std::size_t c = 0; c < mask.cols; ++c) {
      if (!mask.at(r, c)) continue;
      const std::size_t u = index[r * mask.cols + c];
      auto link = [&](std::size_t rr, std::size_t cc) {
        if (rr < mask.rows && cc < mask.cols && mask.at(rr, cc)) g.edges.emplace_back(u, index[rr * mask.cols + cc]);
      };
      link(r, c + 1);
      link(r + 1, c);
      if (mask.connectivity == Connectivity::Eight) {
        link(r + 1, c + 1);
        if (c > 0) link(r + 1, c - 1);
      }
    }
  }
  if (g.vertices.empty()) throw std::invalid_argument("mask has no occupied cell");
  const auto adj = adjacency(g);
  const auto reach = bfs(adj, 0);
  if (std::count(reach.begin(), reach.end(), std::numeric_limits<std::size_t>::max()) > 0) {
    throw std::invalid_argument("mask is disconnected");
  }

  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> sources(n);
  std::iota(sources.begin(), sources.end(), 0);
  if (samples < n) {
    // Partial Fisher-Yates with explicit draws, so the sample set does not
    // depend on the standard library's distribution implementations.
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const std::size_t k = i + static_cast<std::size_t>(rng() % (n - i));
      std::swap(sources[i], sources[k]);
    }
    sources.resize(samples);
    std::sort(sources.begin(), sources.end());
  }

  std::vector<std::int64_t> total(n, 0);
  for (std::size_t s : sources) {
    const auto dist = bfs(adj, s);
    for (std::size_t v = 0; v < n; ++v) total[v] += static_cast<std::int64_t>(dist[v]);
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.vertices[v].value = Height(total[v], static_cast<std::int64_t>(sources.size()));
  }
  return g;
}

}  // namespace mtavg::field
