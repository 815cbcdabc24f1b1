#pragma once

#include <functional>

#include "rtn/graph.hpp"

namespace rtn {

/// One vertex carrying an A and a B half-edge.
Graph single_vertex();

/// Path of s vertices, B half-edge on the first and A half-edge on the last.
Graph series_chain(int s);

/// H x L grid; the left column carries B half-edges, the right column A.
Graph lattice(int height, int length);

/// One B half-edge on x, two A half-edges on y, one bulk edge x-y; the
/// reduced state lives on D^2 dimensions but has rank at most D.
Graph bottleneck();

/// The 17-vertex network with maxflow 4 used throughout the documentation.
Graph running_example();

/// Calls `visit` on every bulk-connected graph on 1..max_vertices vertices
/// (ids "a", "b", ...) whose multisets of bulk edges (no self-loops) and
/// labelled half-edges have at most max_edges elements in total.
void for_each_small_graph(int max_vertices, int max_edges, const std::function<void(const Graph&)>& visit);

}  // namespace rtn
