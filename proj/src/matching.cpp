// Copyright 2026 The softeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "softeq/matching.hpp"

#include <queue>

namespace softeq {

namespace {

// Textbook Edmonds: BFS from each exposed root, contracting odd cycles by
// relabelling their base.
class Blossom {
 public:
  Blossom(std::size_t n, std::span<const GraphEdge> edges)
      : n_(n), adj_(n), mate_(n, unmatched), parent_(n), base_(n), used_(n), in_blossom_(n) {
    for (const auto& e : edges) {
      if (e.u == e.v) continue;
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
  }

  std::vector<std::size_t> run() {
    // Greedy warm start.
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] != unmatched) continue;
      for (std::size_t u : adj_[v]) {
        if (mate_[u] == unmatched) {
          mate_[u] = v;
          mate_[v] = u;
          break;
        }
      }
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] != unmatched) continue;
      std::size_t end = find_path(v);
      while (end != unmatched) {
        const std::size_t pv = parent_[end];
        const std::size_t ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    return mate_;
  }

 private:
  std::size_t lca(std::size_t a, std::size_t b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == unmatched) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::size_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), unmatched);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != unmatched && parent_[mate_[to]] != unmatched)) {
          const std::size_t cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == unmatched) {
          parent_[to] = v;
          if (mate_[to] == unmatched) return to;
          used_[mate_[to]] = true;
          queue.push(mate_[to]);
        }
      }
    }
    return unmatched;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> mate_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

}  // namespace

std::vector<std::size_t> maximum_matching(std::size_t num_vertices,
                                          std::span<const GraphEdge> edges) {
  return Blossom(num_vertices, edges).run();
}

}  // namespace softeq
