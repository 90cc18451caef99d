#include "burgersfem/mesh.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "burgersfem/csv.hpp"

namespace burgersfem {

Mesh1D build_uniform_1d(int n) {
    if (n < 1) throw std::invalid_argument("build_uniform_1d: need at least one element");
    Mesh1D mesh;
    mesh.nodes.resize(n + 1);
    for (int j = 0; j <= n; ++j) mesh.nodes[j] = static_cast<double>(j) / n;
    mesh.nodes.front() = 0.0;
    mesh.nodes.back() = 1.0;
    mesh.elements.resize(n);
    for (int j = 0; j < n; ++j) mesh.elements[j] = {j, j + 1};
    mesh.h = 0.0;
    for (int j = 0; j < n; ++j) mesh.h = std::max(mesh.h, mesh.nodes[j + 1] - mesh.nodes[j]);
    return mesh;
}

Mesh2D build_structured_2d(int n) {
    if (n < 1) throw std::invalid_argument("build_structured_2d: need at least one cell per side");
    Mesh2D mesh;
    mesh.grid_n = n;
    const int np = n + 1;
    auto vid = [np](int ix, int iy) { return iy * np + ix; };

    mesh.vertices.resize(np * np);
    for (int iy = 0; iy < np; ++iy)
        for (int ix = 0; ix < np; ++ix)
            mesh.vertices[vid(ix, iy)] = {static_cast<double>(ix) / n, static_cast<double>(iy) / n};

    mesh.triangles.reserve(2 * n * n);
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const int v00 = vid(ix, iy);
            const int v10 = vid(ix + 1, iy);
            const int v11 = vid(ix + 1, iy + 1);
            const int v01 = vid(ix, iy + 1);
            // cell diagonal v00 -> v11; both triangles CCW
            mesh.triangles.push_back({v00, v10, v11});
            mesh.triangles.push_back({v00, v11, v01});
        }
    }

    // boundary loop: bottom, right, top, left (CCW starting at the origin)
    mesh.boundary_edges.reserve(4 * n);
    for (int ix = 0; ix < n; ++ix) mesh.boundary_edges.push_back({vid(ix, 0), vid(ix + 1, 0)});
    for (int iy = 0; iy < n; ++iy) mesh.boundary_edges.push_back({vid(n, iy), vid(n, iy + 1)});
    for (int ix = n; ix > 0; --ix) mesh.boundary_edges.push_back({vid(ix, n), vid(ix - 1, n)});
    for (int iy = n; iy > 0; --iy) mesh.boundary_edges.push_back({vid(0, iy), vid(0, iy - 1)});

    const double cell = 1.0 / n;
    mesh.h = std::sqrt(2.0) * cell;  // hypotenuse is the longest triangle edge
    return mesh;
}

std::vector<int> boundary_nodes(const Mesh1D& mesh) {
    return {0, mesh.node_count() - 1};
}

std::vector<int> boundary_nodes(const Mesh2D& mesh) {
    std::vector<int> loop;
    loop.reserve(mesh.boundary_edges.size());
    for (const auto& edge : mesh.boundary_edges) loop.push_back(edge[0]);
    return loop;
}

double triangle_area(const Mesh2D& mesh, int t) {
    const auto& tri = mesh.triangles[t];
    const auto& a = mesh.vertices[tri[0]];
    const auto& b = mesh.vertices[tri[1]];
    const auto& c = mesh.vertices[tri[2]];
    return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

void write_mesh(std::ostream& out, const Mesh1D& mesh) {
    out << mesh.node_count() << ' ' << mesh.element_count() << '\n';
    for (double x : mesh.nodes) out << format_full(x) << '\n';
    for (const auto& e : mesh.elements) out << e[0] << ' ' << e[1] << '\n';
}

void write_mesh(std::ostream& out, const Mesh2D& mesh) {
    out << mesh.node_count() << ' ' << mesh.triangle_count() << '\n';
    for (const auto& v : mesh.vertices) out << format_full(v[0]) << ' ' << format_full(v[1]) << '\n';
    for (const auto& t : mesh.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

}  // namespace burgersfem
