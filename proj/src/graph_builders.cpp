#include "rtn/graph_builders.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rtn {

namespace {

std::string padded(int i, int width) {
  std::string s = std::to_string(i);
  return std::string(width > static_cast<int>(s.size()) ? width - s.size() : 0, '0') + s;
}

}  // namespace

Graph single_vertex() { return Graph({"x"}, {}, {{"x", Region::A}, {"x", Region::B}}); }

Graph series_chain(int s) {
  if (s < 1) throw std::invalid_argument("series chain needs at least one vertex");
  const int w = static_cast<int>(std::to_string(s).size());
  std::vector<std::string> v;
  for (int i = 1; i <= s; ++i) v.push_back("v" + padded(i, w));
  std::vector<BulkEdge> e;
  for (int i = 0; i + 1 < s; ++i) e.push_back({v[i], v[i + 1]});
  return Graph(v, std::move(e), {{v.front(), Region::B}, {v.back(), Region::A}});
}

Graph lattice(int height, int length) {
  if (height < 1 || length < 1) throw std::invalid_argument("lattice dimensions must be positive");
  const int wr = static_cast<int>(std::to_string(height).size());
  const int wc = static_cast<int>(std::to_string(length).size());
  auto name = [&](int r, int c) { return "r" + padded(r + 1, wr) + "c" + padded(c + 1, wc); };
  std::vector<std::string> v;
  std::vector<BulkEdge> e;
  std::vector<HalfEdge> h;
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < length; ++c) {
      v.push_back(name(r, c));
      if (c + 1 < length) e.push_back({name(r, c), name(r, c + 1)});
      if (r + 1 < height) e.push_back({name(r, c), name(r + 1, c)});
    }
    h.push_back({name(r, 0), Region::B});
    h.push_back({name(r, length - 1), Region::A});
  }
  return Graph(std::move(v), std::move(e), std::move(h));
}

Graph bottleneck() {
  return Graph({"x", "y"}, {{"x", "y"}}, {{"x", Region::B}, {"y", Region::A}, {"y", Region::A}});
}

Graph running_example() {
  std::vector<std::string> v;
  for (int i = 1; i <= 17; ++i) v.push_back(std::to_string(i));
  const std::vector<std::pair<int, int>> bulk = {
      {1, 2},  {1, 2},  {2, 3},   {3, 4},   {4, 13}, {13, 6}, {6, 10}, {13, 10}, {2, 5}, {5, 12},
      {5, 6},  {10, 11}, {10, 11}, {11, 14}, {15, 1}, {7, 9},  {9, 10}, {8, 9},   {8, 16}, {9, 17}};
  std::vector<BulkEdge> e;
  for (auto [a, b] : bulk) e.push_back({std::to_string(a), std::to_string(b)});
  std::vector<HalfEdge> h;
  for (int x : {1, 15, 15, 7, 8}) h.push_back({std::to_string(x), Region::B});
  for (int x : {9, 10, 11, 14, 14}) h.push_back({std::to_string(x), Region::A});
  return Graph(std::move(v), std::move(e), std::move(h));
}

void for_each_small_graph(int max_vertices, int max_edges, const std::function<void(const Graph&)>& visit) {
  for (int nv = 1; nv <= max_vertices; ++nv) {
    std::vector<std::string> names;
    for (int i = 0; i < nv; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<BulkEdge> pairs;
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j) pairs.push_back({names[i], names[j]});
    std::vector<HalfEdge> slots;
    for (const auto& n : names) {
      slots.push_back({n, Region::A});
      slots.push_back({n, Region::B});
    }

    // Multisets are generated as non-decreasing index sequences.
    std::vector<BulkEdge> bulk;
    std::vector<HalfEdge> half;
    std::function<void(std::size_t, int)> add_half = [&](std::size_t from, int budget) {
      Graph g(names, bulk, half);
      if (validate(g).ok()) visit(g);
      if (budget == 0) return;
      for (std::size_t i = from; i < slots.size(); ++i) {
        half.push_back(slots[i]);
        add_half(i, budget - 1);
        half.pop_back();
      }
    };
    std::function<void(std::size_t, int)> add_bulk = [&](std::size_t from, int budget) {
      add_half(0, budget);
      if (budget == 0) return;
      for (std::size_t i = from; i < pairs.size(); ++i) {
        bulk.push_back(pairs[i]);
        add_bulk(i, budget - 1);
        bulk.pop_back();
      }
    };
    add_bulk(0, max_edges);
  }
}

}  // namespace rtn
