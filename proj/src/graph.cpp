// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "attacklab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "attacklab/rng.hpp"

namespace attacklab {
namespace {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph: agent count must be positive");
  for (auto& [i, j] : edges) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw std::invalid_argument("graph: agent ID out of range");
    if (i == j) throw std::invalid_argument("graph: self-loop not allowed");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("graph: duplicate edge");
  return Graph{n, std::move(edges)};
}

}  // namespace

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: invalid size");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: invalid size (needs n >= 3)");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return make_graph(n, std::move(edges));
}

Graph explicit_graph(int n, std::vector<std::pair<int, int>> edges) {
  return make_graph(n, std::move(edges));
}

Graph random_geometric_graph(int n, double width, double radius, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_geometric_graph: invalid size");
  if (!(width > 0.0) || !(radius > 0.0))
    throw std::invalid_argument("random_geometric_graph: width and radius must be positive");
  SplitMix64 rng(seed);
  std::vector<std::pair<double, double>> pos(n);
  for (auto& p : pos) {
    p.first = rng.next_double() * width;
    p.second = rng.next_double() * width;
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double dx = pos[i].first - pos[j].first;
      double dy = pos[i].second - pos[j].second;
      if (std::sqrt(dx * dx + dy * dy) <= radius) edges.emplace_back(i + 1, j + 1);
    }
  }
  return make_graph(n, std::move(edges));
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(g.n, 0);
  for (auto [i, j] : g.edges) {
    ++d[i - 1];
    ++d[j - 1];
  }
  return d;
}

int max_degree(const Graph& g) {
  auto d = degrees(g);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

Matrix laplacian(const Graph& g) {
  Matrix lap(g.n, g.n);
  for (auto [i, j] : g.edges) {
    lap(i - 1, i - 1) += 1.0;
    lap(j - 1, j - 1) += 1.0;
    lap(i - 1, j - 1) -= 1.0;
    lap(j - 1, i - 1) -= 1.0;
  }
  return lap;
}

bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<std::vector<int>> adj(g.n);
  for (auto [i, j] : g.edges) {
    adj[i - 1].push_back(j - 1);
    adj[j - 1].push_back(i - 1);
  }
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.n;
}

SpectralData spectral_decompose(const Matrix& lap) {
  if (!lap.is_symmetric(1e-10))
    throw std::invalid_argument("spectral_decompose: matrix is not symmetric");
  SymEig eig = sym_eig(lap);
  const std::size_t n = lap.rows();
  // sign convention: largest-magnitude entry per column non-negative
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      double mag = std::fabs(eig.vectors(i, j));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    if (eig.vectors(arg, j) < 0.0)
      for (std::size_t i = 0; i < n; ++i) eig.vectors(i, j) = -eig.vectors(i, j);
  }
  return SpectralData{std::move(eig.eigenvalues), std::move(eig.vectors)};
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string first;
  if (!(in >> first) || first.rfind("n=", 0) != 0)
    throw std::invalid_argument("graph text: expected leading n=<int>");
  int n = 0;
  try {
    n = std::stoi(first.substr(2));
  } catch (const std::exception&) {
    throw std::invalid_argument("graph text: bad agent count");
  }
  std::vector<std::pair<int, int>> edges;
  int i = 0, j = 0;
  while (in >> i >> j) edges.emplace_back(i, j);
  if (!in.eof()) throw std::invalid_argument("graph text: trailing garbage");
  return explicit_graph(n, std::move(edges));
}

std::string format_graph_text(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.n << "\n";
  for (auto [i, j] : g.edges) out << i << " " << j << "\n";
  return out.str();
}

}  // namespace attacklab
