#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sas/form.hpp"

namespace sas {

struct Vertex {
  std::string id;
  // Homogeneous coordinates; parsed vertices have z = 1. Image meshes may
  // carry points at infinity (z = 0).
  Point3 point;
  bool interior = false;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string id;
  Form form;
  std::string tail;
  std::string head;
  bool interior = false;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct BoundaryEntry {
  std::string edge;
  int sign = 1;  // +1 traverses tail -> head, -1 head -> tail

  friend bool operator==(const BoundaryEntry&, const BoundaryEntry&) = default;
};

struct Face {
  std::string id;
  std::vector<BoundaryEntry> boundary;

  friend bool operator==(const Face&, const Face&) = default;
};

// Cells sorted by id. Construction checks id uniqueness (SchemaError) and
// that every referenced id exists (DanglingReference); everything else is
// left to validate().
class Mesh {
public:
  Mesh() = default;
  Mesh(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Face> faces);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_edge(const std::string& id) const;
  std::optional<std::size_t> find_face(const std::string& id) const;
  std::size_t vertex_index(const std::string& id) const;  // throws DanglingReference
  std::size_t edge_index(const std::string& id) const;

  std::size_t interior_vertex_count() const;  // phi_0
  std::size_t interior_edge_count() const;    // phi_1
  std::size_t face_count() const { return faces_.size(); }  // phi_2

  friend bool operator==(const Mesh& a, const Mesh& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.faces_ == b.faces_;
  }

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::unordered_map<std::string, std::size_t> vertex_ids_;
  std::unordered_map<std::string, std::size_t> edge_ids_;
  std::unordered_map<std::string, std::size_t> face_ids_;
};

struct CheckResult {
  char label = '?';
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
};

struct ValidationReport {
  std::vector<CheckResult> checks;  // labels 'a' .. 'g'

  bool ok() const;
  const CheckResult& check(char label) const;
};

// (a) edge/face incidence and flag consistency, closed boundary cycles;
// (b) connected face adjacency; (c) hereditary at every vertex;
// (d) d1 * d2 = 0; (e) phi_2 - phi_1 + phi_0 = 1; (f) endpoints on curves;
// (g) nonzero forms, smooth at their endpoints.
ValidationReport validate(const Mesh& mesh);

// Integer matrix as nested rows.
using IncidenceMatrix = std::vector<std::vector<int>>;

struct Star {
  std::vector<std::string> faces;
  std::vector<std::string> edges;
  std::vector<std::string> vertices;
};

// A mesh that passed every validation check, with the interior incidence
// data used by the algebra precomputed. Interior vertices and edges are
// numbered in id order.
class ValidatedMesh {
public:
  // Throws MeshNotValidated listing the failed checks.
  static ValidatedMesh from(Mesh mesh);

  const Mesh& mesh() const { return mesh_; }

  std::size_t phi0() const { return interior_vertices_.size(); }
  std::size_t phi1() const { return interior_edges_.size(); }
  std::size_t phi2() const { return mesh_.face_count(); }

  // Mesh indices of the interior cells.
  const std::vector<std::size_t>& interior_vertices() const { return interior_vertices_; }
  const std::vector<std::size_t>& interior_edges() const { return interior_edges_; }

  const Vertex& interior_vertex(std::size_t k) const { return mesh_.vertices()[interior_vertices_[k]]; }
  const Edge& interior_edge(std::size_t k) const { return mesh_.edges()[interior_edges_[k]]; }
  // Interior edge positions incident to interior vertex k.
  const std::vector<std::size_t>& vertex_star(std::size_t k) const { return vertex_edges_[k]; }
  // Interior vertex positions of the endpoints of interior edge k, or -1.
  long head_position(std::size_t k) const { return head_pos_[k]; }
  long tail_position(std::size_t k) const { return tail_pos_[k]; }
  // (interior edge position, sign) pairs on the boundary of face f.
  const std::vector<std::pair<std::size_t, int>>& face_interior_edges(std::size_t f) const { return face_edges_[f]; }

  // phi_1 x phi_2 and phi_0 x phi_1.
  IncidenceMatrix boundary_matrix_2() const;
  IncidenceMatrix boundary_matrix_1() const;

  // Throws NotInteriorEdge for unknown or boundary edges.
  std::size_t interior_edge_position(const std::string& edge_id) const;
  std::size_t interior_vertex_position(const std::string& vertex_id) const;
  Star star(const std::string& edge_id) const;

private:
  explicit ValidatedMesh(Mesh mesh);

  Mesh mesh_;
  std::vector<std::size_t> interior_vertices_;
  std::vector<std::size_t> interior_edges_;
  std::vector<long> vertex_pos_;  // mesh vertex index -> interior position or -1
  std::vector<long> edge_pos_;
  std::vector<std::vector<std::size_t>> vertex_edges_;
  std::vector<long> head_pos_;
  std::vector<long> tail_pos_;
  std::vector<std::vector<std::pair<std::size_t, int>>> face_edges_;
};

}  // namespace sas
