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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "attacklab/linalg.hpp"
#include "attacklab/matrix.hpp"

namespace attacklab {

/// Undirected simple graph over agents 1..n. Edges are stored normalized
/// (i < j), sorted, duplicate-free; construction rejects self-loops and
/// out-of-range IDs.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph explicit_graph(int n, std::vector<std::pair<int, int>> edges);

/// n points i.i.d. uniform in [0,width]^2, edge iff Euclidean distance
/// <= radius. Pure in (n, width, radius, seed); no connectivity retry.
Graph random_geometric_graph(int n, double width, double radius, std::uint64_t seed);

std::vector<int> degrees(const Graph& g);
int max_degree(const Graph& g);
Matrix laplacian(const Graph& g);
bool is_connected(const Graph& g);

/// Orthonormal eigendecomposition of a graph Laplacian: L = U diag(lambda) U^T,
/// eigenvalues ascending. Sign convention: in each column the entry of
/// largest magnitude (first such on ties) is non-negative.
struct SpectralData {
  Vector eigenvalues;
  Matrix eigvecs;
};

SpectralData spectral_decompose(const Matrix& lap);

// Text format: first line "n=<int>", then one "i j" line per edge, 1-based.
Graph parse_graph_text(const std::string& text);
std::string format_graph_text(const Graph& g);

}  // namespace attacklab
