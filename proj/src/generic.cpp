#include "sas/generic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "sas/error.hpp"
#include "sas/homology.hpp"
#include "sas/intersect.hpp"

namespace sas {

namespace {

std::string complex_text(std::complex<double> c) {
  char buf[64];
  if (c.imag() == 0) std::snprintf(buf, sizeof buf, "%.10g", c.real() == 0 ? 0.0 : c.real());
  else std::snprintf(buf, sizeof buf, "%.10g%+.10gi", c.real(), c.imag());
  return buf;
}

bool proportional_vectors(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

// Best rational approximation with denominator at most max_den.
Rational approximate(double value, long max_den) {
  long sign = value < 0 ? -1 : 1;
  double x = std::abs(value);
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int step = 0; step < 64; ++step) {
    double a = std::floor(x);
    Integer ai(a);
    Integer p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = x - a;
    if (frac < 1e-15) break;
    x = 1 / frac;
  }
  if (q1 == 0) return 0;
  Rational r(p1 * sign, q1);
  r.canonicalize();
  return r;
}

// A rational point of both curves equal to p within tolerance, if any.
std::optional<Point3> exactify(const ComplexPoint3& p, const Form& f, const Form& g, double tol) {
  Point3 q;
  for (std::size_t i = 0; i < 3; ++i) {
    double scale = std::max(1.0, std::abs(p[i]));
    if (std::abs(p[i].imag()) > tol * scale) return std::nullopt;
    q[i] = approximate(p[i].real(), 1000000);
    if (std::abs(q[i].get_d() - p[i].real()) > tol * scale) return std::nullopt;
  }
  if (f.evaluate(q) != 0 || g.evaluate(q) != 0) return std::nullopt;
  return q;
}

// Faces (by index) whose closure contains each vertex id.
std::vector<std::set<std::string>> face_vertices(const Mesh& mesh) {
  std::vector<std::set<std::string>> out;
  for (const Face& f : mesh.faces()) {
    std::set<std::string> vs;
    for (const auto& b : f.boundary) {
      const Edge& e = mesh.edges()[mesh.edge_index(b.edge)];
      vs.insert(e.tail);
      vs.insert(e.head);
    }
    out.push_back(std::move(vs));
  }
  return out;
}

std::vector<Form> distinct_interior_forms(const ValidatedMesh& mesh) {
  std::vector<Form> forms;
  for (std::size_t k = 0; k < mesh.phi1(); ++k) {
    Form p = mesh.interior_edge(k).form.primitive();
    if (std::find(forms.begin(), forms.end(), p) == forms.end()) forms.push_back(p);
  }
  std::sort(forms.begin(), forms.end(), [](const Form& a, const Form& b) { return a.to_string() < b.to_string(); });
  return forms;
}

std::vector<Form> forms_at(const ValidatedMesh& mesh, std::size_t v) {
  std::vector<Form> forms;
  for (std::size_t k : mesh.vertex_star(v)) {
    Form p = mesh.interior_edge(k).form.primitive();
    if (std::find(forms.begin(), forms.end(), p) == forms.end()) forms.push_back(p);
  }
  return forms;
}

}  // namespace

bool PrimeDescriptor::contains(const Form& g, double tol) const {
  if (kind == Kind::Curve) return g.proportional_to(curve);
  if (exact) return g.evaluate(*exact) == 0;
  return relative_residual(g, point) <= tol;
}

std::string PrimeDescriptor::label() const {
  if (kind == Kind::Curve) return "curve " + curve.to_string();
  if (exact) {
    const Point3& p = *exact;
    if (p[2] != 0) return "point (" + to_string(Rational(p[0] / p[2])) + ", " + to_string(Rational(p[1] / p[2])) + ")";
    return "point [" + to_string(p[0]) + " : " + to_string(p[1]) + " : 0]";
  }
  if (std::abs(point[2]) > 0)
    return "point ~(" + complex_text(point[0]) + ", " + complex_text(point[1]) + ")";
  return "point ~[" + complex_text(point[0]) + " : " + complex_text(point[1]) + " : 0]";
}

bool GenericityReport::generic() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const ConditionResult& c) { return c.passed; });
}

ConditionResult check_condition1(const ValidatedMesh& mesh, bool strict) {
  ConditionResult result;
  const Mesh& m = mesh.mesh();
  for (const Vertex& v : m.vertices()) {
    if (!strict && !v.interior) continue;
    std::vector<const Edge*> edges;
    for (const Edge& e : m.edges())
      if ((strict || e.interior) && (e.tail == v.id || e.head == v.id)) edges.push_back(&e);
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (edges[i]->form.proportional_to(edges[j]->form)) continue;
        auto gi = edges[i]->form.gradient_at(v.point), gj = edges[j]->form.gradient_at(v.point);
        for (const auto* g : {&gi, &gj})
          if ((*g)[0] == 0 && (*g)[1] == 0 && (*g)[2] == 0)
            throw Error(ErrorCode::SingularBranch, "edge curve singular at vertex '" + v.id + "'");
        if (proportional_vectors(gi, gj)) {
          result.passed = false;
          result.witnesses.push_back("vertex '" + v.id + "': edges '" + edges[i]->id + "' and '" + edges[j]->id +
                                     "' have the same tangent line");
        }
      }
  }
  return result;
}

ConditionResult check_condition2(const ValidatedMesh& mesh, int d_cap, double tol, std::vector<std::string>* caveats) {
  ConditionResult result;
  for (std::size_t v = 0; v < mesh.phi0(); ++v) {
    const Vertex& vertex = mesh.interior_vertex(v);
    const ComplexPoint3 here = to_complex(vertex.point);
    auto forms = forms_at(mesh, v);
    if (forms.size() < 2) {
      result.passed = false;
      result.witnesses.push_back("vertex '" + vertex.id + "': all incident edges lie on one curve");
      continue;
    }
    multiplicity(forms, d_cap);  // throws NotStabilized for a positive-dimensional zero set
    bool numeric_used = false;
    std::vector<ComplexPoint3> reported;
    for (std::size_t i = 0; i < forms.size(); ++i)
      for (std::size_t j = i + 1; j < forms.size(); ++j) {
        auto inter = intersect_curves(forms[i], forms[j], tol);
        if (inter.shared_component) {
          result.passed = false;
          result.witnesses.push_back("vertex '" + vertex.id + "': incident curves share a component");
          continue;
        }
        for (const auto& p : inter.points) {
          if (same_point(p, here, tol)) continue;
          numeric_used = true;
          bool on_all = std::all_of(forms.begin(), forms.end(),
                                    [&](const Form& g) { return relative_residual(g, p) <= tol; });
          if (!on_all) continue;
          bool seen = std::any_of(reported.begin(), reported.end(), [&](const auto& q) { return same_point(p, q, tol); });
          if (seen) continue;
          reported.push_back(p);
          PrimeDescriptor d{PrimeDescriptor::Kind::Point, {}, p, exactify(p, forms[i], forms[j], tol)};
          result.passed = false;
          result.witnesses.push_back("vertex '" + vertex.id + "': incident curves also meet at " + d.label().substr(6));
        }
      }
    if (numeric_used && caveats)
      caveats->push_back("condition 2 at vertex '" + vertex.id + "' compares numerically computed intersection points (tol " +
                         complex_text(tol) + ")");
  }
  return result;
}

std::vector<PrimeDescriptor> enumerate_relevant_primes(const ValidatedMesh& mesh, double tol) {
  std::vector<PrimeDescriptor> curves, points;
  auto forms = distinct_interior_forms(mesh);
  for (const Form& f : forms) curves.push_back(PrimeDescriptor{PrimeDescriptor::Kind::Curve, f, {}, std::nullopt});
  auto add_point = [&](const ComplexPoint3& p, std::optional<Point3> exact) {
    for (const auto& q : points)
      if (same_point(q.point, p, tol)) return;
    points.push_back(PrimeDescriptor{PrimeDescriptor::Kind::Point, {}, normalize_point(p), std::move(exact)});
  };
  for (std::size_t v = 0; v < mesh.phi0(); ++v) {
    const Point3& p = mesh.interior_vertex(v).point;
    add_point(to_complex(p), p);
  }
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      for (const auto& p : intersect_curves(forms[i], forms[j], tol).points)
        add_point(p, exactify(p, forms[i], forms[j], tol));
  std::stable_sort(points.begin(), points.end(), [](const PrimeDescriptor& a, const PrimeDescriptor& b) {
    if (a.numeric() != b.numeric()) return !a.numeric();
    return a.label() < b.label();
  });
  curves.insert(curves.end(), points.begin(), points.end());
  return curves;
}

std::vector<Subcomplex> subcomplex_classes(const ValidatedMesh& mesh, const PrimeDescriptor& prime, double tol) {
  const Mesh& m = mesh.mesh();
  const std::size_t faces = mesh.phi2();
  std::vector<bool> in_prime(mesh.phi1());
  for (std::size_t k = 0; k < mesh.phi1(); ++k) in_prime[k] = prime.contains(mesh.interior_edge(k).form, tol);

  std::vector<std::vector<std::size_t>> sides(mesh.phi1());
  for (std::size_t f = 0; f < faces; ++f)
    for (auto [k, sign] : mesh.face_interior_edges(f)) sides[k].push_back(f);
  std::vector<std::size_t> parent(faces);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (std::size_t k = 0; k < mesh.phi1(); ++k)
    if (in_prime[k]) parent[find(sides[k][0])] = find(sides[k][1]);

  std::map<std::size_t, std::size_t> class_of_root;
  std::vector<Subcomplex> classes;
  for (std::size_t f = 0; f < faces; ++f) {
    auto [it, inserted] = class_of_root.try_emplace(find(f), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].faces.push_back(m.faces()[f].id);
  }
  for (std::size_t k = 0; k < mesh.phi1(); ++k)
    if (in_prime[k]) classes[class_of_root[find(sides[k][0])]].edges.push_back(mesh.interior_edge(k).id);

  auto closure = face_vertices(m);
  for (std::size_t v = 0; v < mesh.phi0(); ++v) {
    const auto& star = mesh.vertex_star(v);
    if (!std::all_of(star.begin(), star.end(), [&](std::size_t k) { return in_prime[k]; })) continue;
    const std::string& id = mesh.interior_vertex(v).id;
    for (std::size_t f = 0; f < faces; ++f)
      if (closure[f].count(id)) {
        classes[class_of_root[find(f)]].vertices.push_back(id);
        break;
      }
  }
  return classes;
}

Subcomplex subcomplex(const ValidatedMesh& mesh, const PrimeDescriptor& prime, const std::string& face_id, double tol) {
  if (!mesh.mesh().find_face(face_id)) throw Error(ErrorCode::DanglingReference, "unknown face '" + face_id + "'");
  for (auto& c : subcomplex_classes(mesh, prime, tol))
    if (std::find(c.faces.begin(), c.faces.end(), face_id) != c.faces.end()) return c;
  throw Error(ErrorCode::InvalidArgument, "face '" + face_id + "' missing from every class");
}

ConditionResult check_condition3(const ValidatedMesh& mesh, double tol, std::vector<std::string>* caveats) {
  ConditionResult result;
  for (const auto& prime : enumerate_relevant_primes(mesh, tol)) {
    if (prime.numeric() && caveats)
      caveats->push_back("condition 3 for " + prime.label() + " uses numeric membership (tol " + complex_text(tol) + ")");
    for (const auto& c : subcomplex_classes(mesh, prime, tol)) {
      long chi = c.euler_characteristic();
      if (chi == 1) continue;
      std::string faces;
      for (const auto& f : c.faces) faces += (faces.empty() ? "" : ",") + f;
      result.passed = false;
      result.witnesses.push_back(prime.label() + ", faces {" + faces + "}: chi = " + std::to_string(chi));
    }
  }
  return result;
}

ConditionResult check_condition4(const ValidatedMesh& mesh) {
  ConditionResult result;
  for (std::size_t f = 0; f < mesh.phi2(); ++f) {
    const auto& entries = mesh.face_interior_edges(f);
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j) {
        const Edge& a = mesh.interior_edge(entries[i].first);
        const Edge& b = mesh.interior_edge(entries[j].first);
        if (a.form.proportional_to(b.form)) {
          result.passed = false;
          result.witnesses.push_back("face '" + mesh.mesh().faces()[f].id + "': edges '" + a.id + "' and '" + b.id +
                                     "' lie on the same curve");
        }
      }
  }
  return result;
}

GenericityReport check_generic(const ValidatedMesh& mesh, const GenericOptions& options) {
  GenericityReport report;
  report.conditions[0] = check_condition1(mesh, options.strict);
  report.conditions[1] = check_condition2(mesh, options.d_cap, options.tol, &report.numeric_caveats);
  report.conditions[2] = check_condition3(mesh, options.tol, &report.numeric_caveats);
  report.conditions[3] = check_condition4(mesh);
  return report;
}

std::size_t distinct_forms_at(const ValidatedMesh& mesh, std::size_t vertex_position) {
  return forms_at(mesh, vertex_position).size();
}

long generic_dim(const ValidatedMesh& mesh, int r, int d, const GenericityReport& report) {
  if (r < 0 || d < 0) throw Error(ErrorCode::InvalidArgument, "r and d must be nonnegative");
  for (std::size_t i = 0; i < 3; ++i)
    if (!report.conditions[i].passed)
      throw Error(ErrorCode::NotGeneric, "condition " + std::to_string(i + 1) + " fails" +
                                             (report.conditions[i].witnesses.empty()
                                                  ? std::string()
                                                  : ": " + report.conditions[i].witnesses.front()));
  long total = (static_cast<long>(mesh.phi2()) - static_cast<long>(mesh.phi1())) * forms_dim(d);
  for (std::size_t k = 0; k < mesh.phi1(); ++k) total += dim_J_edge(mesh.interior_edge(k).form.degree(), r, d);
  for (std::size_t v = 0; v < mesh.phi0(); ++v) {
    long t = std::min<long>(r + 2, static_cast<long>(distinct_forms_at(mesh, v)));
    if (t < 2) throw Error(ErrorCode::NotGeneric, "fewer than two curves meet at '" + mesh.interior_vertex(v).id + "'");
    long a = (r + 1) / (t - 1);
    total += forms_dim(r + a) - t * forms_dim(a - 1);
  }
  return total;
}

long generic_dim(const ValidatedMesh& mesh, int r, int d, const GenericOptions& options) {
  return generic_dim(mesh, r, d, check_generic(mesh, options));
}

RegularityBound regularity_bound(const ValidatedMesh& mesh, int r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "r must be nonnegative");
  RegularityBound bound;
  const Mesh& m = mesh.mesh();
  for (std::size_t k = 0; k < mesh.phi1(); ++k) {
    const Edge& tau = mesh.interior_edge(k);
    long degrees = 0;
    for (const auto& id : mesh.star(tau.id).edges) {
      const Edge& e = m.edges()[m.edge_index(id)];
      if (e.interior) degrees += e.form.degree();
    }
    long d_tau = (r + 1) * degrees;
    bound.per_edge.emplace_back(tau.id, d_tau);
    bound.D = std::max(bound.D, d_tau);
  }
  return bound;
}

}  // namespace sas
