#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dewet/profile.hpp"

namespace dewet {

enum class BoundaryTag : unsigned char { None = 0, Bottom = 1, Graph = 2 };

// Triangulation of the subgraph region 0 < y < h(x): one vertical fiber per
// profile node, split into at most ny layers proportionally to h; fibers
// collapse to the corner vertex at the contact points.
struct Mesh {
  struct Vertex {
    double x, y;
  };
  std::vector<Vertex> vertices;
  std::vector<std::array<int, 3>> triangles;  // positively oriented
  std::vector<bool> on_bottom;                // y = 0
  std::vector<bool> on_graph;                 // y = h(x)
  // fiber_vertex[j] = vertex index at node j, layer i (0 = bottom).
  std::vector<std::vector<int>> fiber_vertex;
  // top_vertex[j] = graph vertex at profile node j.
  std::vector<int> top_vertex;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t triangle_count() const { return triangles.size(); }
  double total_area() const;
  double triangle_area(std::size_t t) const;
};

// Structured mesh with min(ny, proportional-to-h) layers per fiber.
// Throws Error(DegenerateElement) if any triangle area < 1e-14 * A0.
Mesh build_mesh(const Profile& p, std::size_t ny, double A0);

// Axis-aligned rectangle [a,b] x [0,height], nx by ny cells; bottom tagged
// Bottom, top tagged Graph. Test fixture for the solver.
Mesh build_rectangle_mesh(double a, double b, double height, std::size_t nx,
                          std::size_t ny);

// Locate the triangle containing (x, y); returns -1 if outside.
int locate_triangle(const Mesh& m, double x, double y);

}  // namespace dewet
