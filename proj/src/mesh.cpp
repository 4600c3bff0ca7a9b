#include "sas/mesh.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "sas/error.hpp"

namespace sas {

namespace {

template <typename T>
void sort_by_id(std::vector<T>& cells) {
  std::sort(cells.begin(), cells.end(), [](const T& a, const T& b) { return a.id < b.id; });
}

template <typename T>
std::unordered_map<std::string, std::size_t> index_ids(const std::vector<T>& cells, const char* kind) {
  std::unordered_map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!ids.emplace(cells[i].id, i).second)
      throw Error(ErrorCode::SchemaError, std::string("duplicate ") + kind + " id '" + cells[i].id + "'");
  return ids;
}

// Union-find over n elements.
class Components {
public:
  explicit Components(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

std::string point_text(const Point3& p) {
  if (p[2] == 1) return "(" + to_string(p[0]) + ", " + to_string(p[1]) + ")";
  return "[" + to_string(p[0]) + " : " + to_string(p[1]) + " : " + to_string(p[2]) + "]";
}

}  // namespace

Mesh::Mesh(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Face> faces)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), faces_(std::move(faces)) {
  sort_by_id(vertices_);
  sort_by_id(edges_);
  sort_by_id(faces_);
  vertex_ids_ = index_ids(vertices_, "vertex");
  edge_ids_ = index_ids(edges_, "edge");
  face_ids_ = index_ids(faces_, "face");
  for (const Edge& e : edges_) {
    for (const std::string* end : {&e.tail, &e.head})
      if (!vertex_ids_.count(*end))
        throw Error(ErrorCode::DanglingReference, "edge '" + e.id + "' references unknown vertex '" + *end + "'");
  }
  for (const Face& f : faces_) {
    for (const BoundaryEntry& b : f.boundary) {
      if (!edge_ids_.count(b.edge))
        throw Error(ErrorCode::DanglingReference, "face '" + f.id + "' references unknown edge '" + b.edge + "'");
      if (b.sign != 1 && b.sign != -1)
        throw Error(ErrorCode::SchemaError, "face '" + f.id + "' has a boundary sign other than +1/-1");
    }
  }
}

std::optional<std::size_t> Mesh::find_vertex(const std::string& id) const {
  auto it = vertex_ids_.find(id);
  if (it == vertex_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Mesh::find_edge(const std::string& id) const {
  auto it = edge_ids_.find(id);
  if (it == edge_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Mesh::find_face(const std::string& id) const {
  auto it = face_ids_.find(id);
  if (it == face_ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t Mesh::vertex_index(const std::string& id) const {
  if (auto i = find_vertex(id)) return *i;
  throw Error(ErrorCode::DanglingReference, "unknown vertex '" + id + "'");
}

std::size_t Mesh::edge_index(const std::string& id) const {
  if (auto i = find_edge(id)) return *i;
  throw Error(ErrorCode::DanglingReference, "unknown edge '" + id + "'");
}

std::size_t Mesh::interior_vertex_count() const {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.interior; }));
}

std::size_t Mesh::interior_edge_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.interior; }));
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& ValidationReport::check(char label) const {
  for (const auto& c : checks)
    if (c.label == label) return c;
  throw Error(ErrorCode::InvalidArgument, std::string("no validation check '") + label + "'");
}

ValidationReport validate(const Mesh& mesh) {
  const auto& V = mesh.vertices();
  const auto& E = mesh.edges();
  const auto& F = mesh.faces();

  // Per edge: list of (face index, sign) occurrences.
  std::vector<std::vector<std::pair<std::size_t, int>>> occurrences(E.size());
  for (std::size_t f = 0; f < F.size(); ++f)
    for (const auto& b : F[f].boundary) occurrences[mesh.edge_index(b.edge)].emplace_back(f, b.sign);

  ValidationReport report;
  auto add = [&](char label, std::string name) -> CheckResult& {
    report.checks.push_back(CheckResult{label, std::move(name), true, {}});
    return report.checks.back();
  };
  auto fail = [](CheckResult& c, std::string msg) {
    c.passed = false;
    c.failures.push_back(std::move(msg));
  };

  {
    CheckResult& c = add('a', "edge-face incidence");
    for (std::size_t e = 0; e < E.size(); ++e) {
      const auto& occ = occurrences[e];
      if (E[e].interior) {
        if (occ.size() != 2)
          fail(c, "interior edge '" + E[e].id + "' lies on " + std::to_string(occ.size()) + " face boundaries, expected 2");
        else if (occ[0].second == occ[1].second)
          fail(c, "interior edge '" + E[e].id + "' receives the same orientation from both faces");
        else if (occ[0].first == occ[1].first)
          fail(c, "interior edge '" + E[e].id + "' bounds the same face twice");
      } else if (occ.size() != 1) {
        fail(c, "boundary edge '" + E[e].id + "' lies on " + std::to_string(occ.size()) + " face boundaries, expected 1");
      }
    }
    std::vector<bool> on_boundary(V.size(), false);
    for (const Edge& e : E)
      if (!e.interior) on_boundary[mesh.vertex_index(e.tail)] = on_boundary[mesh.vertex_index(e.head)] = true;
    for (std::size_t v = 0; v < V.size(); ++v)
      if (V[v].interior == on_boundary[v])
        fail(c, "vertex '" + V[v].id + "' is flagged " + (V[v].interior ? "interior" : "boundary") +
                    " but " + (on_boundary[v] ? "lies" : "does not lie") + " on a boundary edge");
    for (const Face& f : F) {
      if (f.boundary.empty()) {
        fail(c, "face '" + f.id + "' has an empty boundary");
        continue;
      }
      auto start = [&](const BoundaryEntry& b) {
        const Edge& e = E[mesh.edge_index(b.edge)];
        return b.sign > 0 ? e.tail : e.head;
      };
      auto end = [&](const BoundaryEntry& b) {
        const Edge& e = E[mesh.edge_index(b.edge)];
        return b.sign > 0 ? e.head : e.tail;
      };
      for (std::size_t i = 0; i < f.boundary.size(); ++i) {
        const auto& next = f.boundary[(i + 1) % f.boundary.size()];
        if (end(f.boundary[i]) != start(next))
          fail(c, "face '" + f.id + "': boundary is not a closed cycle after edge '" + f.boundary[i].edge + "'");
      }
    }
  }

  {
    CheckResult& c = add('b', "face adjacency connected");
    Components comp(F.size());
    for (const auto& occ : occurrences)
      for (std::size_t i = 1; i < occ.size(); ++i) comp.join(occ[0].first, occ[i].first);
    std::set<std::size_t> roots;
    for (std::size_t f = 0; f < F.size(); ++f) roots.insert(comp.find(f));
    if (F.empty()) fail(c, "mesh has no faces");
    else if (roots.size() != 1) fail(c, "faces form " + std::to_string(roots.size()) + " adjacency components");
  }

  {
    CheckResult& c = add('c', "hereditary at vertices");
    for (std::size_t v = 0; v < V.size(); ++v) {
      std::vector<std::size_t> faces;
      for (std::size_t f = 0; f < F.size(); ++f)
        for (const auto& b : F[f].boundary) {
          const Edge& e = E[mesh.edge_index(b.edge)];
          if (e.tail == V[v].id || e.head == V[v].id) {
            faces.push_back(f);
            break;
          }
        }
      if (faces.size() <= 1) continue;
      Components comp(F.size());
      for (std::size_t e = 0; e < E.size(); ++e) {
        if (E[e].tail != V[v].id && E[e].head != V[v].id) continue;
        const auto& occ = occurrences[e];
        for (std::size_t i = 1; i < occ.size(); ++i) comp.join(occ[0].first, occ[i].first);
      }
      std::set<std::size_t> roots;
      for (std::size_t f : faces) roots.insert(comp.find(f));
      if (roots.size() != 1)
        fail(c, "faces around vertex '" + V[v].id + "' split into " + std::to_string(roots.size()) + " groups");
    }
  }

  {
    CheckResult& c = add('d', "boundary maps compose to zero");
    // (d1 d2)[v][f] = sum over interior edges of d1[v][e] * d2[e][f].
    for (std::size_t f = 0; f < F.size(); ++f) {
      std::vector<long> column(V.size(), 0);
      for (const auto& b : F[f].boundary) {
        const Edge& e = E[mesh.edge_index(b.edge)];
        if (!e.interior) continue;
        column[mesh.vertex_index(e.head)] += b.sign;
        column[mesh.vertex_index(e.tail)] -= b.sign;
      }
      for (std::size_t v = 0; v < V.size(); ++v)
        if (V[v].interior && column[v] != 0)
          fail(c, "face '" + F[f].id + "' has nonzero boundary at vertex '" + V[v].id + "'");
    }
  }

  {
    CheckResult& c = add('e', "Euler characteristic");
    long chi = static_cast<long>(F.size()) - static_cast<long>(mesh.interior_edge_count()) +
               static_cast<long>(mesh.interior_vertex_count());
    if (chi != 1) fail(c, "faces - interior edges + interior vertices = " + std::to_string(chi) + ", expected 1");
  }

  {
    CheckResult& c = add('f', "endpoints on edge curves");
    for (const Edge& e : E)
      for (const std::string* end : {&e.tail, &e.head}) {
        const Vertex& v = V[mesh.vertex_index(*end)];
        if (!e.form.is_zero() && e.form.evaluate(v.point) != 0)
          fail(c, "vertex '" + v.id + "' " + point_text(v.point) + " is not on the curve of edge '" + e.id + "'");
      }
  }

  {
    CheckResult& c = add('g', "smooth edge curves at endpoints");
    for (const Edge& e : E) {
      if (e.form.is_zero()) {
        fail(c, "edge '" + e.id + "' has the zero form");
        continue;
      }
      for (const std::string* end : {&e.tail, &e.head}) {
        const Vertex& v = V[mesh.vertex_index(*end)];
        auto g = e.form.gradient_at(v.point);
        if (g[0] == 0 && g[1] == 0 && g[2] == 0)
          fail(c, "curve of edge '" + e.id + "' is singular at vertex '" + v.id + "'");
      }
    }
  }
  return report;
}

ValidatedMesh ValidatedMesh::from(Mesh mesh) {
  ValidationReport report = validate(mesh);
  if (!report.ok()) {
    std::string msg = "mesh failed validation";
    for (const auto& c : report.checks)
      if (!c.passed) msg += std::string("; (") + c.label + ") " + c.failures.front();
    throw Error(ErrorCode::MeshNotValidated, msg);
  }
  return ValidatedMesh(std::move(mesh));
}

ValidatedMesh::ValidatedMesh(Mesh mesh) : mesh_(std::move(mesh)) {
  const auto& V = mesh_.vertices();
  const auto& E = mesh_.edges();
  vertex_pos_.assign(V.size(), -1);
  edge_pos_.assign(E.size(), -1);
  for (std::size_t v = 0; v < V.size(); ++v)
    if (V[v].interior) {
      vertex_pos_[v] = static_cast<long>(interior_vertices_.size());
      interior_vertices_.push_back(v);
    }
  for (std::size_t e = 0; e < E.size(); ++e)
    if (E[e].interior) {
      edge_pos_[e] = static_cast<long>(interior_edges_.size());
      interior_edges_.push_back(e);
    }
  vertex_edges_.resize(interior_vertices_.size());
  for (std::size_t k = 0; k < interior_edges_.size(); ++k) {
    const Edge& e = E[interior_edges_[k]];
    head_pos_.push_back(vertex_pos_[mesh_.vertex_index(e.head)]);
    tail_pos_.push_back(vertex_pos_[mesh_.vertex_index(e.tail)]);
    for (long p : {head_pos_.back(), tail_pos_.back()})
      if (p >= 0) vertex_edges_[static_cast<std::size_t>(p)].push_back(k);
  }
  for (const Face& f : mesh_.faces()) {
    std::vector<std::pair<std::size_t, int>> entries;
    for (const auto& b : f.boundary) {
      long p = edge_pos_[mesh_.edge_index(b.edge)];
      if (p >= 0) entries.emplace_back(static_cast<std::size_t>(p), b.sign);
    }
    face_edges_.push_back(std::move(entries));
  }
}

IncidenceMatrix ValidatedMesh::boundary_matrix_2() const {
  IncidenceMatrix m(phi1(), std::vector<int>(phi2(), 0));
  for (std::size_t f = 0; f < phi2(); ++f)
    for (auto [k, sign] : face_edges_[f]) m[k][f] += sign;
  return m;
}

IncidenceMatrix ValidatedMesh::boundary_matrix_1() const {
  IncidenceMatrix m(phi0(), std::vector<int>(phi1(), 0));
  for (std::size_t k = 0; k < phi1(); ++k) {
    if (head_pos_[k] >= 0) m[static_cast<std::size_t>(head_pos_[k])][k] += 1;
    if (tail_pos_[k] >= 0) m[static_cast<std::size_t>(tail_pos_[k])][k] -= 1;
  }
  return m;
}

std::size_t ValidatedMesh::interior_edge_position(const std::string& edge_id) const {
  auto e = mesh_.find_edge(edge_id);
  if (!e || edge_pos_[*e] < 0) throw Error(ErrorCode::NotInteriorEdge, "'" + edge_id + "' is not an interior edge");
  return static_cast<std::size_t>(edge_pos_[*e]);
}

std::size_t ValidatedMesh::interior_vertex_position(const std::string& vertex_id) const {
  auto v = mesh_.find_vertex(vertex_id);
  if (!v || vertex_pos_[*v] < 0)
    throw Error(ErrorCode::NotInteriorVertex, "'" + vertex_id + "' is not an interior vertex");
  return static_cast<std::size_t>(vertex_pos_[*v]);
}

Star ValidatedMesh::star(const std::string& edge_id) const {
  interior_edge_position(edge_id);
  std::set<std::string> faces, edges, vertices;
  for (const Face& f : mesh_.faces()) {
    bool contains = std::any_of(f.boundary.begin(), f.boundary.end(),
                                [&](const BoundaryEntry& b) { return b.edge == edge_id; });
    if (!contains) continue;
    faces.insert(f.id);
    for (const auto& b : f.boundary) {
      const Edge& e = mesh_.edges()[mesh_.edge_index(b.edge)];
      edges.insert(e.id);
      vertices.insert(e.tail);
      vertices.insert(e.head);
    }
  }
  return Star{{faces.begin(), faces.end()}, {edges.begin(), edges.end()}, {vertices.begin(), vertices.end()}};
}

}  // namespace sas
