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

#include <cmath>

#include "attacklab/graph.hpp"
#include "attacklab/presets.hpp"
#include "doctest.h"

namespace {

using namespace attacklab;

TEST_CASE("path graphs") {
  Graph p2 = path_graph(2);
  CHECK(p2.edges == std::vector<std::pair<int, int>>{{1, 2}});

  Graph p6 = path_graph(6);
  CHECK(degrees(p6) == std::vector<int>{1, 2, 2, 2, 2, 1});
  CHECK(is_connected(p6));

  Graph p1 = path_graph(1);
  CHECK(p1.n == 1);
  CHECK(p1.edges.empty());

  CHECK_THROWS(path_graph(0));
}

TEST_CASE("cycle graphs") {
  Graph c3 = cycle_graph(3);
  CHECK(c3.edges.size() == 3);
  CHECK(degrees(c3) == std::vector<int>{2, 2, 2});

  Graph c4 = cycle_graph(4);
  CHECK(c4.edges.size() == 4);
  CHECK(degrees(c4) == std::vector<int>{2, 2, 2, 2});
  CHECK(is_connected(cycle_graph(5)));

  CHECK_THROWS(cycle_graph(2));
}

TEST_CASE("explicit graphs and validation") {
  Graph g = explicit_graph(2, {{1, 2}});
  CHECK(g.edges.size() == 1);
  CHECK_THROWS(explicit_graph(3, {{1, 1}}));        // self-loop
  CHECK_THROWS(explicit_graph(3, {{1, 4}}));        // out of range
  CHECK_THROWS(explicit_graph(3, {{1, 2}, {2, 1}}));  // duplicate
}

TEST_CASE("the fixed six-agent graph has the stated Laplacian") {
  Graph g = presets::fixed_graph6();
  Matrix lap = laplacian(g);
  const double expected[6][6] = {
      {1, -1, 0, 0, 0, 0},  {-1, 3, -1, -1, 0, 0}, {0, -1, 2, 0, -1, 0},
      {0, -1, 0, 2, -1, 0}, {0, 0, -1, -1, 3, -1}, {0, 0, 0, 0, -1, 1}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(lap(i, j) == expected[i][j]);
  CHECK(degrees(g) == std::vector<int>{1, 3, 2, 2, 3, 1});
}

TEST_CASE("laplacian basics") {
  Matrix lap = laplacian(path_graph(3));
  const double expected[3][3] = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(lap(i, j) == expected[i][j]);

  // zero row sums and symmetry on a batch of generators
  for (const Graph& g : {path_graph(9), cycle_graph(7),
                         random_geometric_graph(20, 10, 4, 5)}) {
    Matrix l = laplacian(g);
    CHECK(l.is_symmetric(0.0));
    for (int i = 0; i < g.n; ++i) {
      double row = 0.0;
      for (int j = 0; j < g.n; ++j) row += l(i, j);
      CHECK(row == 0.0);
    }
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path_graph(6)));
  CHECK(is_connected(cycle_graph(5)));
  Graph isolated = explicit_graph(2, {});
  CHECK_FALSE(is_connected(isolated));
  CHECK(is_connected(path_graph(1)));
}

TEST_CASE("random geometric graphs are deterministic and in-bounds") {
  Graph a = random_geometric_graph(50, 100, 15, 12345);
  Graph b = random_geometric_graph(50, 100, 15, 12345);
  CHECK(a.n == 50);
  CHECK(a.edges == b.edges);

  Graph c = random_geometric_graph(50, 100, 15, 999);
  CHECK(a.edges != c.edges);  // different seed, different layout

  // two nodes in a unit box with a huge radius must connect
  Graph tiny = random_geometric_graph(2, 1.0, 10.0, 7);
  CHECK(tiny.edges.size() == 1);

  CHECK_THROWS(random_geometric_graph(2, -1.0, 10.0, 7));
}

TEST_CASE("spectral decomposition of known graphs") {
  SpectralData p2 = spectral_decompose(laplacian(path_graph(2)));
  CHECK(p2.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p2.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));

  Matrix one(1, 1);
  SpectralData single = spectral_decompose(one * 0.0);
  CHECK(single.eigenvalues[0] == doctest::Approx(0.0));

  // cycle(4): 2 - 2 cos(2 pi k / 4) -> {0, 2, 2, 4}
  SpectralData c4 = spectral_decompose(laplacian(cycle_graph(4)));
  CHECK(c4.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(c4.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(c4.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(c4.eigenvalues[3] == doctest::Approx(4.0).epsilon(1e-10));

  Matrix asym(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS(spectral_decompose(asym));
}

TEST_CASE("spectral invariants hold on generators up to n = 64") {
  for (const Graph& g :
       {path_graph(6), cycle_graph(6), presets::fixed_graph6(), path_graph(64),
        cycle_graph(33), random_geometric_graph(48, 10, 3, 21)}) {
    Matrix lap = laplacian(g);
    SpectralData sd = spectral_decompose(lap);
    const int n = g.n;

    // orthonormality <= 1e-10
    Matrix gram = sd.eigvecs.transposed() * sd.eigvecs;
    gram -= Matrix::identity(n);
    CHECK(gram.max_abs() <= 1e-10);

    // reconstruction <= 1e-8
    Matrix lam(n, n);
    for (int k = 0; k < n; ++k) lam(k, k) = sd.eigenvalues[k];
    Matrix rec = sd.eigvecs * lam * sd.eigvecs.transposed();
    rec -= lap;
    CHECK(rec.max_abs() <= 1e-8);

    // lambda_1 = 0 and, when connected, lambda_2 > 0
    CHECK(std::fabs(sd.eigenvalues[0]) <= 1e-10);
    if (is_connected(g) && n > 1) CHECK(sd.eigenvalues[1] > 1e-10);

    // sign convention: largest-magnitude entry of each column non-negative
    for (int k = 0; k < n; ++k) {
      int arg = 0;
      double best = -1.0;
      for (int i = 0; i < n; ++i) {
        if (std::fabs(sd.eigvecs(i, k)) > best) {
          best = std::fabs(sd.eigvecs(i, k));
          arg = i;
        }
      }
      CHECK(sd.eigvecs(arg, k) >= 0.0);
    }
  }
}

TEST_CASE("graph text format round trip") {
  Graph g = presets::fixed_graph6();
  Graph parsed = parse_graph_text(format_graph_text(g));
  CHECK(parsed.n == g.n);
  CHECK(parsed.edges == g.edges);

  CHECK_THROWS(parse_graph_text("6\n1 2\n"));       // missing n=
  CHECK_THROWS(parse_graph_text("n=3\n1 1\n"));     // self loop
  CHECK_THROWS(parse_graph_text("n=3\n1 2\nbad\n"));  // trailing garbage
}

}  // namespace
