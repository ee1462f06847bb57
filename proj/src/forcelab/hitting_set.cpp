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
#include "forcelab/hitting_set.hpp"

#include <algorithm>
#include <numeric>

namespace forcelab {

std::vector<ElementMask> minimal_sets(std::span<const ElementMask> sets) {
  std::vector<ElementMask> sorted(sets.begin(), sets.end());
  std::sort(sorted.begin(), sorted.end(), [](ElementMask a, ElementMask b) {
    const int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<ElementMask> out;
  for (ElementMask s : sorted) {
    const bool dominated = std::any_of(out.begin(), out.end(), [s](ElementMask t) { return (t & s) == t; });
    if (!dominated) out.push_back(s);
  }
  return out;
}

namespace {

class HittingSetSearch {
 public:
  HittingSetSearch(std::span<const Rational> weights, std::vector<ElementMask> sets)
      : weights_(weights), sets_(std::move(sets)) {
    order_.resize(weights.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return weights_[static_cast<std::size_t>(a)] < weights_[static_cast<std::size_t>(b)]; });
    // Upper bound: every element that appears in some set.
    ElementMask all = 0;
    for (ElementMask s : sets_) all |= s;
    best_mask_ = all;
    best_weight_ = weight_of(all);
  }

  ElementMask run() {
    search(0, 0, 0);
    return best_mask_;
  }

 private:
  Rational weight_of(ElementMask m) const {
    Rational w = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (m >> i & 1U) w += weights_[i];
    }
    return w;
  }

  Rational min_weight(ElementMask m) const {
    for (int i : order_) {
      if (m >> i & 1U) return weights_[static_cast<std::size_t>(i)];
    }
    return 0;
  }

  void search(ElementMask chosen, ElementMask banned, const Rational& weight) {
    // Pick the unhit set with the fewest admissible elements and build a
    // disjoint-packing lower bound over the remaining unhit sets.
    int branch = -1;
    int branch_size = 65;
    Rational bound = weight;
    ElementMask packed = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      const ElementMask s = sets_[i];
      if (s & chosen) continue;
      const ElementMask open = s & ~banned;
      if (open == 0) return;  // cannot be hit any more
      const int size = popcount(open);
      if (size < branch_size) {
        branch = static_cast<int>(i);
        branch_size = size;
      }
      if ((open & packed) == 0) {
        packed |= open;
        bound += min_weight(open);
      }
    }
    if (branch < 0) {
      if (weight < best_weight_) {
        best_weight_ = weight;
        best_mask_ = chosen;
      }
      return;
    }
    if (bound >= best_weight_) return;
    ElementMask open = sets_[static_cast<std::size_t>(branch)] & ~banned;
    ElementMask local_banned = banned;
    for (int i : order_) {
      const ElementMask bit = ElementMask{1} << i;
      if (!(open & bit)) continue;
      search(chosen | bit, local_banned, weight + weights_[static_cast<std::size_t>(i)]);
      local_banned |= bit;
    }
  }

  std::span<const Rational> weights_;
  std::vector<ElementMask> sets_;
  std::vector<int> order_;
  ElementMask best_mask_ = 0;
  Rational best_weight_;
};

}  // namespace

std::optional<ElementMask> min_weight_hitting_set(std::span<const Rational> weights,
                                                  std::span<const ElementMask> sets) {
  auto reduced = minimal_sets(sets);
  if (!reduced.empty() && reduced.front() == 0) return std::nullopt;
  if (reduced.empty()) return ElementMask{0};
  return HittingSetSearch(weights, std::move(reduced)).run();
}

}  // namespace forcelab
