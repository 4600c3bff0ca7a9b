#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sas/form.hpp"
#include "sas/hilbert.hpp"
#include "sas/mesh.hpp"

namespace sas {

// Three forms of a common degree n spanning a three-dimensional space.
struct NetSpec {
  std::array<Form, 3> forms;
  int n = 0;
  bool basepoint_free = false;
};

// Throws DegreeMismatch, SpanDeficient or HasBasepoints. Basepoints are
// detected as dim (S/<f,g,h>)_{3n-2} > 0.
NetSpec net_check(const Form& f, const Form& g, const Form& h);

// {"forms": [f, g, h]}
NetSpec parse_net(std::string_view json_text);
NetSpec load_net(const std::filesystem::path& path);

// (alpha, beta, gamma) with G = alpha f + beta g + gamma h, if any.
// Throws DegreeMismatch if deg G != n.
std::optional<std::array<Rational, 3>> net_membership(const NetSpec& net, const Form& g);

// Coefficients of (1 + t + ... + t^{n-1})^3, indices 0 .. 3n-3.
std::vector<long> c_table(int n);
// c_n(i) + c_n(i+n) + c_n(i+2n) = n^2 for 0 <= i < n.
bool cn_sum_check(int n);

struct ImageMesh {
  Mesh mesh;
  std::vector<std::string> warnings;  // coinciding vertex images
};

// Same cells; each edge form G = alpha f + beta g + gamma h becomes the linear
// form alpha x + beta y + gamma z, and each vertex p maps to (f(p), g(p), h(p)).
// Throws NotInNet.
ImageMesh image_mesh(const Mesh& mesh, const NetSpec& net);

// sum over n i + j = d of hf(i) c_n(j). Image values past the end of the
// table come from image_hp when given; otherwise InsufficientImageData.
long tensor_dim(const DegreeValues& image_values, const std::optional<Quadratic>& image_hp, int n, int d);

struct HpTransform {
  Quadratic hp;
  std::optional<long> postulation_bound;  // n (d0 + 3) - 3
};

HpTransform hp_transform(const Quadratic& image_hp, int n, std::optional<long> image_postulation = std::nullopt);

}  // namespace sas
