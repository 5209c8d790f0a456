#ifndef PFRAC_MESH_HPP
#define PFRAC_MESH_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pfrac {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

enum class QuadratureKind { Reduced, Full };

struct QuadratureRule {
    QuadratureKind kind = QuadratureKind::Reduced;
    std::vector<Vec2> points;   // parent coordinates
    std::vector<double> weights;
    std::size_t size() const { return points.size(); }
};

// 2x2 Gauss (reduced, the default for Q8) or 3x3 Gauss (full).
QuadratureRule quadrature(QuadratureKind kind);

struct ShapeEval {
    std::array<double, 8> N;                  // serendipity Q8 values
    std::array<std::array<double, 2>, 8> dN;  // d/dxi, d/deta
};

// 8-node serendipity quadrilateral; corners (-1,-1),(1,-1),(1,1),(-1,1)
// followed by midsides bottom, right, top, left.
ShapeEval shape_functions(double xi, double eta);

enum class MeshGeometry { Rectangle, HalfDisc, DcbQuarter, SentHalf };

std::string to_string(MeshGeometry g);
MeshGeometry geometry_from_string(const std::string& s);

// Parameters for the structured generators. Fine-band sizes are expressed in
// multiples of ell; the generators round the band spacing so the crack path
// lands on grid lines and band elements are exact squares.
struct MeshSpec {
    MeshGeometry geometry = MeshGeometry::Rectangle;
    double ell = 0.01;       // phase field length scale (band sizing, h checks)
    double h = 0.00125;      // target element size in the refined zone

    // rectangle / dcb_quarter / sent_half
    double length = 1.0;     // x extent
    double height = 1.0;     // y extent
    double crack = 0.0;      // initial crack length a (dcb: a0, sent: a)

    // half_disc
    double outer_radius = 1.0;

    // grading controls
    double grading = 1.4;        // geometric growth ratio outside the band
    double max_cell_ell = 4.0;   // cap on graded cell size, in ell units (rectangles)
    double band_y_ell = 2.0;     // refined band height in ell units
    double band_behind_ell = 4.0;  // refined length behind the crack tip
    double band_ahead_ell = 6.0;   // refined length ahead of the crack tip

    // half_disc only
    double core_half_ell = 16.0; // half-size of the structured core box
    double ring_grading = 1.3;   // radial growth of the outer ring
};

struct Mesh {
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 8>> elements; // corners CCW then midsides
    std::map<std::string, std::vector<int>> node_sets;
    std::map<std::string, std::vector<std::pair<int, int>>> edge_sets; // (element, face)
    QuadratureRule quad = quadrature(QuadratureKind::Reduced);
    std::vector<std::string> warnings;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t element_count() const { return elements.size(); }
    const std::vector<int>& node_set(const std::string& name) const;
    const std::vector<std::pair<int, int>>& edge_set(const std::string& name) const;
    bool has_node_set(const std::string& name) const { return node_sets.count(name) > 0; }

    // Sum of |J| * w over all Gauss points.
    double area() const;
};

// Local face k of a Q8 element: corner k, midside 4+k, corner (k+1)%4.
std::array<int, 3> face_local_nodes(int face);

// Plain uniform rectangle [0,L]x[0,H] with cells of size ~h. Node sets:
// left/right/bottom/top plus ligament (= bottom).
Mesh build_plain_rectangle_mesh(const MeshSpec& spec);

// Graded rectangle for the DCB quarter model and the SENT half model: a band
// of square cells of size ~h along the crack path y=0, geometric grading
// elsewhere. Sets: symmetry, crack_face, ligament, load, top.
Mesh build_rectangle_mesh(const MeshSpec& spec);

// Half-disc of radius R, crack plane along the negative x axis, tip at the
// origin. Structured square-cell band along the ligament inside a graded core
// box, plus a square-to-circle ring out to the arc. Sets: outer, symmetry,
// crack_face, ligament.
Mesh build_half_disc_mesh(const MeshSpec& spec);

Mesh build_mesh(const MeshSpec& spec);

// Plain-text listing: header, node count, "x y" lines, element count,
// 8-id connectivity lines.
void write_mesh_text(const Mesh& mesh, std::ostream& os);

// Legacy ASCII VTK (unstructured grid, quadratic quads).
void write_mesh_vtk(const Mesh& mesh, std::ostream& os);

} // namespace pfrac

#endif
