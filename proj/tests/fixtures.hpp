#ifndef PGC_TESTS_FIXTURES_HPP
#define PGC_TESTS_FIXTURES_HPP

#include <vector>

#include "pgc/plane_graph.hpp"

namespace fixtures {

using pgc::Dart;
using pgc::PlaneGraph;

// edges 0={0,1}, 1={1,2}, 2={2,0}; exterior walks 0->1->2
inline PlaneGraph triangle() {
    return PlaneGraph::build(3, {{0, 5}, {2, 1}, {4, 3}}, 0);
}

// outer triangle 0,1,2 with centre node 3
inline PlaneGraph k4() {
    return PlaneGraph::build(4, {{0, 6, 5}, {2, 8, 1}, {4, 10, 3}, {11, 7, 9}}, 0);
}

// path 0-1-2-3
inline PlaneGraph path4() {
    return PlaneGraph::build(4, {{0}, {1, 2}, {3, 4}, {5}}, 0);
}

// star with centre 0 and leaves 1..3
inline PlaneGraph star3() {
    return PlaneGraph::build(4, {{0, 2, 4}, {1}, {3}, {5}}, 0);
}

inline PlaneGraph single_edge() { return PlaneGraph::build(2, {{0}, {1}}, 0); }

// two nodes joined by two parallel edges
inline PlaneGraph parallel_pair() {
    return PlaneGraph::build(2, {{0, 2}, {1, 3}}, 0);
}

// outer triangle 0,1,2 and inner triangle 3,4,5 (all degrees four)
inline PlaneGraph octahedron() {
    return PlaneGraph::build(6,
                             {{0, 14, 12, 5},
                              {2, 18, 16, 1},
                              {4, 22, 20, 3},
                              {11, 23, 13, 6},
                              {8, 7, 15, 17},
                              {21, 10, 9, 19}},
                             0);
}

// single node with one self-loop (petal)
inline PlaneGraph one_loop() { return PlaneGraph::build(1, {{0, 1}}, 0); }

}  // namespace fixtures

#endif
