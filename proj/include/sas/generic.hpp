#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sas/form.hpp"
#include "sas/mesh.hpp"

namespace sas {

// A prime ideal of S relevant to P-adjacency: the ideal of an edge curve, or
// of a point (a complex conjugate pair counts as one point).
struct PrimeDescriptor {
  enum class Kind { Curve, Point };

  Kind kind = Kind::Curve;
  Form curve;                   // primitive edge form
  ComplexPoint3 point{};        // normalized coordinates
  std::optional<Point3> exact;  // set when the point is known exactly

  bool numeric() const { return kind == Kind::Point && !exact; }
  // Whether the form lies in the ideal.
  bool contains(const Form& g, double tol) const;
  std::string label() const;
};

struct Subcomplex {
  std::vector<std::string> faces;
  std::vector<std::string> edges;     // interior edges with form in P between class faces
  std::vector<std::string> vertices;  // interior vertices whose edge forms all lie in P

  long euler_characteristic() const {
    return static_cast<long>(faces.size()) - static_cast<long>(edges.size()) + static_cast<long>(vertices.size());
  }
};

struct ConditionResult {
  bool passed = true;
  std::vector<std::string> witnesses;
};

struct GenericOptions {
  double tol = 1e-9;
  bool strict = false;  // condition 1 also at boundary vertices and edges
  int d_cap = 12;       // degree cap for the exact part of condition 2
};

struct GenericityReport {
  std::array<ConditionResult, 4> conditions;
  std::vector<std::string> numeric_caveats;

  bool generic() const;
};

// Pairs of edges at a vertex have proportional forms or distinct tangents.
ConditionResult check_condition1(const ValidatedMesh& mesh, bool strict = false);

// At each interior vertex v the incident edge curves meet only at v: exactly,
// dim (S/<G_tau>)_d must stabilize by d_cap (NotStabilized otherwise); and
// numerically, no common zero of a pair of incident curves other than v lies
// on all of them. Numeric findings are appended to caveats.
ConditionResult check_condition2(const ValidatedMesh& mesh, int d_cap, double tol,
                                 std::vector<std::string>* caveats = nullptr);

// Distinct interior edge forms; interior vertices; pairwise intersections of
// distinct interior edge curves, including points at infinity. Sorted.
std::vector<PrimeDescriptor> enumerate_relevant_primes(const ValidatedMesh& mesh, double tol = 1e-9);

// Delta_{P, sigma} for the face with the given id.
Subcomplex subcomplex(const ValidatedMesh& mesh, const PrimeDescriptor& prime, const std::string& face_id,
                      double tol = 1e-9);
// One subcomplex per P-adjacency class; the classes partition the faces.
std::vector<Subcomplex> subcomplex_classes(const ValidatedMesh& mesh, const PrimeDescriptor& prime,
                                           double tol = 1e-9);

// Every class of every relevant prime has Euler characteristic 1.
ConditionResult check_condition3(const ValidatedMesh& mesh, double tol = 1e-9,
                                 std::vector<std::string>* caveats = nullptr);

// The interior edge forms of each face are pairwise non-proportional.
ConditionResult check_condition4(const ValidatedMesh& mesh);

GenericityReport check_generic(const ValidatedMesh& mesh, const GenericOptions& options = {});

// Number of pairwise non-proportional forms among the interior edges at an
// interior vertex.
std::size_t distinct_forms_at(const ValidatedMesh& mesh, std::size_t vertex_position);

// Closed formula for dim C^r_d on a mesh satisfying conditions (1)-(3);
// throws NotGeneric otherwise.
long generic_dim(const ValidatedMesh& mesh, int r, int d, const GenericityReport& report);
long generic_dim(const ValidatedMesh& mesh, int r, int d, const GenericOptions& options = {});

struct RegularityBound {
  long D = 0;
  std::vector<std::pair<std::string, long>> per_edge;  // D_tau by interior edge id
};

// D_tau = (r+1) * sum of deg G over interior edges in the star of tau.
RegularityBound regularity_bound(const ValidatedMesh& mesh, int r);

}  // namespace sas
