// Copyright 2026 The forcelab Authors
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
#include <algorithm>

#include "forcelab/error.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

namespace {

class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, const Limits& limits)
      : g_(g), limits_(limits), on_path_(static_cast<std::size_t>(g.vertex_count()), false) {}

  std::vector<CycleWithClasses> run() {
    for (int s = 0; s < g_.vertex_count(); ++s) {
      root_ = s;
      path_.assign(1, s);
      path_edges_.clear();
      on_path_[static_cast<std::size_t>(s)] = true;
      extend(s);
      on_path_[static_cast<std::size_t>(s)] = false;
    }
    return std::move(out_);
  }

 private:
  void extend(int u) {
    for (const Incidence& inc : g_.incident(u)) {
      const int w = inc.neighbor;
      if (w == root_) {
        // Each cycle is seen twice from its root; keep the orientation whose
        // second vertex is smaller than its last.
        if (path_.size() >= 3 && path_[1] < path_.back()) emit(inc.edge);
        continue;
      }
      if (w < root_ || on_path_[static_cast<std::size_t>(w)]) continue;
      on_path_[static_cast<std::size_t>(w)] = true;
      path_.push_back(w);
      path_edges_.push_back(inc.edge);
      extend(w);
      path_edges_.pop_back();
      path_.pop_back();
      on_path_[static_cast<std::size_t>(w)] = false;
    }
  }

  void emit(EdgeId closing) {
    if (out_.size() >= limits_.max_cycles) {
      fail(ErrorCode::kCapExceeded, "cycle count exceeds cap " + std::to_string(limits_.max_cycles) +
                                        "; use the LP method instead");
    }
    CycleWithClasses c;
    c.vertices = path_;
    c.edges = path_edges_;
    c.edges.push_back(closing);
    c.odd = c.edges.size() % 2 == 1;
    if (!c.odd) {
      for (std::size_t i = 0; i < c.edges.size(); ++i) {
        (i % 2 == 0 ? c.class_a : c.class_b).push_back(c.edges[i]);
      }
      std::sort(c.class_a.begin(), c.class_a.end());
      std::sort(c.class_b.begin(), c.class_b.end());
    }
    out_.push_back(std::move(c));
  }

  const Graph& g_;
  const Limits& limits_;
  int root_ = 0;
  std::vector<int> path_;
  std::vector<EdgeId> path_edges_;
  std::vector<bool> on_path_;
  std::vector<CycleWithClasses> out_;
};

}  // namespace

std::vector<CycleWithClasses> enumerate_cycles(const Graph& g, const Limits& limits) {
  if (g.edge_count() > limits.max_cycle_edges) {
    fail(ErrorCode::kCapExceeded, "cycle enumeration limited to " +
                                      std::to_string(limits.max_cycle_edges) + " edges (graph has " +
                                      std::to_string(g.edge_count()) + "); use the LP method instead");
  }
  return CycleEnumerator(g, limits).run();
}

}  // namespace forcelab
