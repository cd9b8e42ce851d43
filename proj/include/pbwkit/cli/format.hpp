#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbwkit/entwine/braiding.hpp"
#include "pbwkit/pbw/deformation.hpp"

namespace pbwkit::cli {

using algebra::Bimodule;
using algebra::FiniteAlgebra;
using entwine::Braiding;
using exactlin::FieldSpec;
using exactlin::Matrix;
using exactlin::Scalar;
using exactlin::Vector;
using pbw::DeformationData;
using quadratic::QuadraticPresentation;

struct Bounds {
  std::optional<int> deg_max, n_max, n_sat;
  std::optional<std::size_t> trial_budget;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// The validated contents of a .alg file. Algebra shortcuts (ground, cyclic)
/// and group actions are expanded on parse, so serialize writes the explicit
/// form.
struct PresentationFile {
  enum class ModuleKind { Bimodule, Braided };
  enum class RelationSpace { V, M };

  FieldSpec field;
  std::size_t dim_s = 0;
  std::vector<std::vector<Vector>> product;  // product[i][j] = e_i e_j
  Vector unit;

  ModuleKind kind = ModuleKind::Bimodule;
  std::size_t dim_m = 0;                 // bimodule: dim M; braided: dim V
  std::vector<Matrix> left, right;       // bimodule
  Matrix psi;                            // braided, (dim V dim S) x (dim S dim V)

  RelationSpace space = RelationSpace::M;
  std::vector<Vector> relations;

  struct Deformation {
    Matrix phi, theta;
    friend bool operator==(const Deformation&, const Deformation&) = default;
  };
  std::optional<Deformation> deformation;
  bool sigma_auto = false;
  std::optional<Vector> sigma_e;  // only with sigma_auto

  Bounds bounds;

  friend bool operator==(const PresentationFile&, const PresentationFile&) = default;
};

/// Throws ParseError or ValidationError; messages start with "line N".
PresentationFile parse(const std::string& text);
PresentationFile parse_file(const std::string& path);
std::string serialize(const PresentationFile& file);

/// The algebraic objects behind a file.
struct Model {
  PresentationFile file;
  FiniteAlgebra S;
  Bimodule M;
  std::optional<Braiding> psi;
  /// Throws RNotSubbimodule when R is not closed under the actions.
  QuadraticPresentation presentation() const;
  /// Explicit deformation, theta from sigma mode with e, or zero.
  DeformationData deformation(const QuadraticPresentation& pres, std::uint64_t seed, std::size_t budget) const;
  bool smash_shaped() const { return psi.has_value() && file.space == PresentationFile::RelationSpace::V; }
};

Model build(const PresentationFile& file);

}  // namespace pbwkit::cli
