#pragma once

#include <array>
#include <iosfwd>
#include <vector>

namespace burgersfem {

// Partition of [0,1] into intervals. Nodes are strictly increasing with
// nodes.front() == 0 and nodes.back() == 1; element j is (nodes[j], nodes[j+1]).
// Instances are immutable after construction and safe to share across threads.
struct Mesh1D {
    std::vector<double> nodes;
    std::vector<std::array<int, 2>> elements;
    double h = 0.0;  // max element length

    int node_count() const { return static_cast<int>(nodes.size()); }
    int element_count() const { return static_cast<int>(elements.size()); }
};

// Conforming triangulation of the unit square. Triangles are CCW (positive
// signed area); boundary_edges traverse the four sides as one closed CCW loop.
struct Mesh2D {
    std::vector<std::array<double, 2>> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 2>> boundary_edges;
    double h = 0.0;   // max triangle diameter
    int grid_n = 0;   // subdivisions per side of the generating grid

    int node_count() const { return static_cast<int>(vertices.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }
};

// n equal elements on [0,1]; h = 1/n. Throws std::invalid_argument for n < 1.
Mesh1D build_uniform_1d(int n);

// Uniform n-by-n grid, each cell split along the lower-left -> upper-right
// diagonal. (n+1)^2 vertices, 2n^2 triangles, 4n boundary edges. The diagonal
// convention makes meshes nest exactly under n -> 2n refinement.
Mesh2D build_structured_2d(int n);

// Node indices on the boundary, in deterministic order:
// 1D gives {first, last}; 2D gives the boundary loop starting at (0,0),
// counter-clockwise.
std::vector<int> boundary_nodes(const Mesh1D& mesh);
std::vector<int> boundary_nodes(const Mesh2D& mesh);

double triangle_area(const Mesh2D& mesh, int t);

// Plain-text dump: a "<n_vertices> <n_elements>" header line, then one vertex
// per line ("x" or "x y"), then one element per line (vertex indices).
void write_mesh(std::ostream& out, const Mesh1D& mesh);
void write_mesh(std::ostream& out, const Mesh2D& mesh);

}  // namespace burgersfem
