// Balanced k-d tree over 3D points.
//
// Queries reproduce a brute-force distance sort exactly: k nearest neighbors
// are returned sorted by (distance, index), ties broken toward the smaller
// point index, and radius queries are inclusive of the boundary.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "rwodsn/errors.hpp"
#include "rwodsn/geometry.hpp"

namespace rwodsn {

struct Neighbor {
  int index = -1;
  double distance = 0.0;
};

class KdTree {
 public:
  KdTree() = default;

  explicit KdTree(std::span<const Vec3> points) : points_(points.begin(), points.end()) {
    order_.resize(points_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i);
    nodes_.reserve(points_.size() * 2 / kLeafSize + 4);
    if (!points_.empty()) root_ = build(0, static_cast<int>(points_.size()));
  }

  std::size_t size() const { return points_.size(); }

  // k nearest neighbors of an arbitrary query position. `exclude` removes one
  // point id from consideration (pass -1 to keep all).
  std::vector<Neighbor> knn(const Vec3& query, int k, int exclude = -1) const {
    const int available = static_cast<int>(points_.size()) - (exclude >= 0 ? 1 : 0);
    if (k < 1 || k > available) {
      throw ParameterError("knn: k must be in [1, " + std::to_string(available) + "]");
    }
    Best best;
    best.k = k;
    best.exclude = exclude;
    search_knn(root_, query, best);
    std::sort(best.heap.begin(), best.heap.end(), [](const Entry& a, const Entry& b) {
      return a.d2 != b.d2 ? a.d2 < b.d2 : a.index < b.index;
    });
    std::vector<Neighbor> out(best.heap.size());
    for (std::size_t i = 0; i < best.heap.size(); ++i) {
      out[i] = {best.heap[i].index, std::sqrt(best.heap[i].d2)};
    }
    return out;
  }

  // All points with distance <= radius from the query, ascending index order.
  std::vector<int> radius(const Vec3& query, double r, int exclude = -1) const {
    if (!(r > 0.0)) throw ParameterError("radius query: radius must be > 0");
    std::vector<int> out;
    search_radius(root_, query, r * r, exclude, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr int kLeafSize = 16;

  struct Node {
    double split = 0.0;
    int axis = -1;  // -1 marks a leaf
    int left = -1, right = -1;
    int begin = 0, end = 0;  // leaf range in order_
  };

  struct Entry {
    double d2;
    int index;
  };

  struct Best {
    int k = 0;
    int exclude = -1;
    std::vector<Entry> heap;  // max-heap on (d2, index)

    static bool worse(const Entry& a, const Entry& b) {
      return a.d2 != b.d2 ? a.d2 < b.d2 : a.index < b.index;
    }
    double bound() const { return heap.front().d2; }
    bool full() const { return static_cast<int>(heap.size()) == k; }
    void offer(double d2, int index) {
      if (index == exclude) return;
      if (!full()) {
        heap.push_back({d2, index});
        std::push_heap(heap.begin(), heap.end(), worse);
        return;
      }
      const Entry& top = heap.front();
      if (d2 < top.d2 || (d2 == top.d2 && index < top.index)) {
        std::pop_heap(heap.begin(), heap.end(), worse);
        heap.back() = {d2, index};
        std::push_heap(heap.begin(), heap.end(), worse);
      }
    }
  };

  int build(int begin, int end) {
    Node node;
    if (end - begin <= kLeafSize) {
      node.begin = begin;
      node.end = end;
      nodes_.push_back(node);
      return static_cast<int>(nodes_.size()) - 1;
    }
    Vec3 lo = points_[order_[begin]], hi = lo;
    for (int i = begin + 1; i < end; ++i) {
      const Vec3& p = points_[order_[i]];
      for (int a = 0; a < 3; ++a) {
        lo[a] = std::min(lo[a], p[a]);
        hi[a] = std::max(hi[a], p[a]);
      }
    }
    int axis = 0;
    double extent = hi.x - lo.x;
    if (hi.y - lo.y > extent) { axis = 1; extent = hi.y - lo.y; }
    if (hi.z - lo.z > extent) { axis = 2; extent = hi.z - lo.z; }
    if (extent == 0.0) {  // all coincident: keep as leaf
      node.begin = begin;
      node.end = end;
      nodes_.push_back(node);
      return static_cast<int>(nodes_.size()) - 1;
    }
    const int mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](int a, int b) {
                       const double ca = points_[a][axis], cb = points_[b][axis];
                       return ca != cb ? ca < cb : a < b;
                     });
    node.axis = axis;
    node.split = points_[order_[mid]][axis];
    const int self = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    const int left = build(begin, mid);
    const int right = build(mid, end);
    nodes_[self].left = left;
    nodes_[self].right = right;
    return self;
  }

  void search_knn(int node_id, const Vec3& query, Best& best) const {
    const Node& node = nodes_[node_id];
    if (node.axis < 0) {
      for (int i = node.begin; i < node.end; ++i) {
        const int idx = order_[i];
        best.offer(squared_distance(points_[idx], query), idx);
      }
      return;
    }
    const double delta = query[node.axis] - node.split;
    const int near = delta < 0.0 ? node.left : node.right;
    const int far = delta < 0.0 ? node.right : node.left;
    search_knn(near, query, best);
    // Equality must still descend: an equidistant point with a smaller index
    // can displace the current worst.
    if (!best.full() || delta * delta <= best.bound()) search_knn(far, query, best);
  }

  void search_radius(int node_id, const Vec3& query, double r2, int exclude,
                     std::vector<int>& out) const {
    if (node_id < 0) return;
    const Node& node = nodes_[node_id];
    if (node.axis < 0) {
      for (int i = node.begin; i < node.end; ++i) {
        const int idx = order_[i];
        if (idx != exclude && squared_distance(points_[idx], query) <= r2) out.push_back(idx);
      }
      return;
    }
    const double delta = query[node.axis] - node.split;
    const int near = delta < 0.0 ? node.left : node.right;
    const int far = delta < 0.0 ? node.right : node.left;
    search_radius(near, query, r2, exclude, out);
    if (delta * delta <= r2) search_radius(far, query, r2, exclude, out);
  }

  std::vector<Vec3> points_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace rwodsn
