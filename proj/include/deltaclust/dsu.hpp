#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deltaclust/types.hpp"

namespace deltaclust {

// Disjoint sets as a label vector, merging the way Davies and Higham keep
// their cluster vector: when clusters x < y merge, members of y are relabeled
// x and every label above y is decremented, so labels stay contiguous 1..k
// (ordered by first appearance) after every union. find() is a single read;
// a union scans the whole vector.
class LabelVectorDsu {
 public:
  explicit LabelVectorDsu(std::size_t n) : labels_(n) {
    for (std::size_t i = 0; i < n; ++i) labels_[i] = static_cast<std::uint32_t>(i + 1);
  }

  std::size_t size() const noexcept { return labels_.size(); }

  std::size_t find(std::size_t i) const {
    check(i);
    return labels_[i];
  }

  // Returns true when two distinct groups were merged.
  bool unite(std::size_t i, std::size_t j) {
    check(i);
    check(j);
    std::uint32_t x = labels_[i];
    std::uint32_t y = labels_[j];
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    for (auto& label : labels_) {
      if (label == y) {
        label = x;
      } else if (label > y) {
        --label;
      }
    }
    relabel_scans_ += labels_.size();
    ++unions_;
    return true;
  }

  Clustering partition() const {
    std::uint32_t k = 0;
    for (auto label : labels_) k = std::max(k, label);
    return {labels_, k};
  }

  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
  // Elements visited by relabeling scans so far.
  std::uint64_t relabel_scans() const noexcept { return relabel_scans_; }
  std::uint64_t unions() const noexcept { return unions_; }

 private:
  void check(std::size_t i) const {
    if (i >= labels_.size()) {
      throw std::out_of_range("element " + std::to_string(i) + " out of range for DSU of size " +
                              std::to_string(labels_.size()));
    }
  }

  std::vector<std::uint32_t> labels_;
  std::uint64_t relabel_scans_ = 0;
  std::uint64_t unions_ = 0;
};

// Rooted-tree disjoint sets with union by rank and path compression.
class ForestDsu {
 public:
  explicit ForestDsu(std::size_t n) : parent_(n), rank_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
  }

  std::size_t size() const noexcept { return parent_.size(); }

  std::size_t find(std::size_t i) {
    check(i);
    std::uint32_t root = static_cast<std::uint32_t>(i);
    while (parent_[root] != root) root = parent_[root];
    auto x = static_cast<std::uint32_t>(i);
    while (parent_[x] != root) {
      const std::uint32_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  bool unite(std::size_t i, std::size_t j) {
    std::size_t a = find(i);
    std::size_t b = find(j);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = static_cast<std::uint32_t>(a);
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  Clustering partition() {
    std::vector<std::uint32_t> root_label(parent_.size(), 0);
    Clustering out;
    out.labels.resize(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      auto& label = root_label[find(i)];
      if (label == 0) label = ++out.k;
      out.labels[i] = label;
    }
    return out;
  }

  std::size_t parent_of(std::size_t i) const { return parent_.at(i); }
  unsigned rank_of(std::size_t i) const { return rank_.at(i); }

 private:
  void check(std::size_t i) const {
    if (i >= parent_.size()) {
      throw std::out_of_range("element " + std::to_string(i) + " out of range for DSU of size " +
                              std::to_string(parent_.size()));
    }
  }

  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

template <class D>
concept DisjointSets = requires(D d, std::size_t i) {
  { d.size() } -> std::convertible_to<std::size_t>;
  { d.find(i) } -> std::convertible_to<std::size_t>;
  { d.unite(i, i) } -> std::same_as<bool>;
  { d.partition() } -> std::same_as<Clustering>;
};

static_assert(DisjointSets<LabelVectorDsu>);
static_assert(DisjointSets<ForestDsu>);

// Calls f with a fresh DSU of the requested kind over n elements.
template <class F>
decltype(auto) with_dsu(DsuKind kind, std::size_t n, F&& f) {
  if (kind == DsuKind::labels) {
    LabelVectorDsu d(n);
    return std::forward<F>(f)(d);
  }
  ForestDsu d(n);
  return std::forward<F>(f)(d);
}

}  // namespace deltaclust
