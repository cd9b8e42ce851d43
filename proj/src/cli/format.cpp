#include "pbwkit/cli/format.hpp"

#include <fstream>
#include <sstream>

#include "pbwkit/entwine/smash.hpp"
#include "pbwkit/error.hpp"
#include "pbwkit/gorenstein/gorenstein.hpp"

namespace pbwkit::cli {

using Kind = PresentationFile::ModuleKind;
using Space = PresentationFile::RelationSpace;

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;  // a bracket group is one token, brackets kept
};

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void invalid(int line, const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ValidationError, "line " + std::to_string(line) + " (" + field + "): " + what);
}

std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0, depth = 0;
  std::string pending;
  int start = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (depth == 0) {
      pending.clear();
      start = number;
    } else {
      pending += ' ';
    }
    for (char c : raw) {
      if (c == '[') ++depth;
      if (c == ']' && --depth < 0) parse_error(number, "unmatched ']'");
    }
    pending += raw;
    if (depth > 0) continue;
    Line line{start, {}};
    std::size_t i = 0;
    while (i < pending.size()) {
      if (std::isspace(static_cast<unsigned char>(pending[i]))) {
        ++i;
      } else if (pending[i] == '[') {
        std::size_t j = pending.find(']', i);
        line.tokens.push_back(pending.substr(i, j - i + 1));
        i = j + 1;
      } else {
        std::size_t j = i;
        while (j < pending.size() && !std::isspace(static_cast<unsigned char>(pending[j])) && pending[j] != '[') ++j;
        line.tokens.push_back(pending.substr(i, j - i));
        i = j;
      }
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  if (depth > 0) parse_error(start, "unterminated '['");
  return out;
}

std::size_t parse_count(int line, const std::string& tok) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    parse_error(line, "expected a non-negative integer, got '" + tok + "'");
  }
  if (pos != tok.size() || tok[0] == '-') parse_error(line, "expected a non-negative integer, got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

Scalar parse_scalar(int line, const FieldSpec& f, const std::string& tok) {
  try {
    return f.parse(tok);
  } catch (const Error& e) {
    parse_error(line, e.what());
  }
}

std::vector<Vector> parse_rows(int line, const FieldSpec& f, const std::string& tok) {
  if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']') parse_error(line, "expected [ ... ], got '" + tok + "'");
  std::vector<Vector> rows;
  std::stringstream body(tok.substr(1, tok.size() - 2));
  std::string row;
  while (std::getline(body, row, ';')) {
    std::istringstream words(row);
    std::string w;
    Vector v;
    while (words >> w) v.push_back(parse_scalar(line, f, w));
    if (!v.empty()) rows.push_back(std::move(v));
  }
  return rows;
}

Vector parse_vector(int line, const FieldSpec& f, const std::string& tok, std::size_t n, const std::string& field) {
  auto rows = parse_rows(line, f, tok);
  if (rows.size() > 1) parse_error(line, "expected a single row in " + field);
  Vector v = rows.empty() ? Vector{} : rows[0];
  if (v.size() != n) invalid(line, field, "length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  return v;
}

Matrix parse_matrix(int line, const FieldSpec& f, const std::string& tok, std::size_t r, std::size_t c,
                    const std::string& field) {
  auto rows = parse_rows(line, f, tok);
  if (rows.empty() && (r == 0 || c == 0)) return Matrix(f, r, c);
  if (rows.size() != r) invalid(line, field, std::to_string(rows.size()) + " rows, expected " + std::to_string(r));
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      invalid(line, field, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) + " entries, expected " +
                               std::to_string(c));
    m.set_row(i, rows[i]);
  }
  return m;
}

void expect_tokens(const Line& l, std::size_t n) {
  if (l.tokens.size() != n)
    parse_error(l.number, "'" + l.tokens[0] + "' expects " + std::to_string(n - 1) + " argument(s)");
}

FiniteAlgebra make_algebra(const PresentationFile& f) { return FiniteAlgebra::make(f.field, f.dim_s, f.product, f.unit); }

std::vector<exactlin::SparseMatrix> sparse_all(const std::vector<Matrix>& ms) {
  std::vector<exactlin::SparseMatrix> out;
  for (const auto& m : ms) out.push_back(exactlin::SparseMatrix::from_dense(m));
  return out;
}

Bimodule make_module(const PresentationFile& f, const FiniteAlgebra& s, std::optional<Braiding>& psi) {
  if (f.kind == Kind::Braided) {
    psi = Braiding::make(s, f.dim_m, f.psi);
    return entwine::bimodule_from_braiding(*psi);
  }
  return Bimodule::make(s, f.dim_m, sparse_all(f.left), sparse_all(f.right));
}

// "cyclic n" shortcut: basis g^0 .. g^{n-1}.
void expand_cyclic(PresentationFile& f, std::size_t n) {
  auto s = FiniteAlgebra::cyclic_group_algebra(f.field, n);
  f.dim_s = n;
  f.unit = s.unit();
  f.product.assign(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.product[i][j] = s.product(i, j);
}

std::string scalar_text(const Scalar& s) { return s.to_string(); }

std::string vector_text(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + scalar_text(v[i]);
  return out + "]";
}

std::string matrix_text(const Matrix& m, const std::string& indent) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ";\n" + indent + " ";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + scalar_text(m(r, c));
  }
  return out + "]";
}

}  // namespace

PresentationFile parse(const std::string& text) {
  auto lines = logical_lines(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"pbwkit-alg", "1"})
    parse_error(lines.empty() ? 1 : lines[0].number, "file must start with 'pbwkit-alg 1'");
  PresentationFile f;
  bool have_field = false, have_algebra = false, have_module = false, have_relations = false;
  int algebra_line = 0, module_line = 0;
  std::optional<FiniteAlgebra> s;
  std::size_t i = 1;
  auto block = [&](const std::string& what) {
    std::vector<Line> body;
    const int opened = lines[i].number;
    for (++i; i < lines.size(); ++i) {
      if (lines[i].tokens[0] == "end") {
        expect_tokens(lines[i], 1);
        ++i;
        return body;
      }
      body.push_back(lines[i]);
    }
    parse_error(opened, what + " block is missing 'end'");
  };
  auto need = [&](bool ok, const Line& l, const std::string& what) {
    if (!ok) parse_error(l.number, "'" + l.tokens[0] + "' must come after " + what);
  };
  auto once = [&](bool seen, const Line& l) {
    if (seen) parse_error(l.number, "duplicate '" + l.tokens[0] + "'");
  };
  while (i < lines.size()) {
    const Line l = lines[i];
    const std::string& key = l.tokens[0];
    if (key == "field") {
      once(have_field, l);
      expect_tokens(l, 2);
      const std::string& v = l.tokens[1];
      if (v == "Q") {
        f.field = FieldSpec::rationals();
      } else if (v.rfind("GF(", 0) == 0 && v.back() == ')') {
        const std::size_t p = parse_count(l.number, v.substr(3, v.size() - 4));
        if (!exactlin::is_prime(p) || p >= (1ULL << 31)) invalid(l.number, "field", std::to_string(p) + " is not a prime below 2^31");
        f.field = FieldSpec::prime(p);
      } else {
        parse_error(l.number, "field must be Q or GF(p), got '" + v + "'");
      }
      have_field = true;
      ++i;
    } else if (key == "algebra") {
      once(have_algebra, l);
      need(have_field, l, "'field'");
      algebra_line = l.number;
      if (l.tokens.size() < 2) parse_error(l.number, "algebra expects ground, cyclic n or table n");
      if (l.tokens[1] == "ground") {
        expect_tokens(l, 2);
        expand_cyclic(f, 1);
        ++i;
      } else if (l.tokens[1] == "cyclic") {
        expect_tokens(l, 3);
        const std::size_t n = parse_count(l.number, l.tokens[2]);
        if (n == 0) invalid(l.number, "algebra", "cyclic group of order 0");
        expand_cyclic(f, n);
        ++i;
      } else if (l.tokens[1] == "table") {
        expect_tokens(l, 3);
        const std::size_t n = parse_count(l.number, l.tokens[2]);
        if (n == 0) invalid(l.number, "algebra", "dimension 0");
        f.dim_s = n;
        f.product.assign(n, std::vector<Vector>(n, Vector(n, f.field.zero())));
        bool have_unit = false;
        for (const auto& b : block("algebra")) {
          if (b.tokens[0] == "unit") {
            expect_tokens(b, 2);
            f.unit = parse_vector(b.number, f.field, b.tokens[1], n, "unit");
            have_unit = true;
          } else if (b.tokens[0] == "product") {
            expect_tokens(b, 4);
            const std::size_t x = parse_count(b.number, b.tokens[1]), y = parse_count(b.number, b.tokens[2]);
            if (x >= n || y >= n) invalid(b.number, "product", "basis index out of range (dim S = " + std::to_string(n) + ")");
            f.product[x][y] = parse_vector(b.number, f.field, b.tokens[3], n, "product " + b.tokens[1] + " " + b.tokens[2]);
          } else {
            parse_error(b.number, "unknown algebra entry '" + b.tokens[0] + "'");
          }
        }
        if (!have_unit) invalid(l.number, "algebra", "missing unit");
      } else {
        parse_error(l.number, "algebra expects ground, cyclic n or table n");
      }
      try {
        s = make_algebra(f);
      } catch (const Error& e) {
        invalid(algebra_line, "algebra", e.what());
      }
      have_algebra = true;
    } else if (key == "module") {
      once(have_module, l);
      need(have_algebra, l, "'algebra'");
      module_line = l.number;
      expect_tokens(l, 3);
      const std::size_t n = parse_count(l.number, l.tokens[2]);
      const std::size_t ds = f.dim_s;
      f.dim_m = n;
      if (l.tokens[1] == "bimodule") {
        f.kind = Kind::Bimodule;
        f.left.assign(ds, Matrix());
        f.right.assign(ds, Matrix());
        std::vector<bool> seen_l(ds), seen_r(ds);
        for (const auto& b : block("module")) {
          if (b.tokens[0] != "left" && b.tokens[0] != "right") parse_error(b.number, "expected left i [...] or right i [...]");
          expect_tokens(b, 3);
          const std::size_t t = parse_count(b.number, b.tokens[1]);
          if (t >= ds) invalid(b.number, b.tokens[0], "basis index " + std::to_string(t) + " out of range");
          const bool is_left = b.tokens[0] == "left";
          (is_left ? f.left : f.right)[t] =
              parse_matrix(b.number, f.field, b.tokens[2], n, n, b.tokens[0] + " " + b.tokens[1]);
          (is_left ? seen_l : seen_r)[t] = true;
        }
        for (std::size_t t = 0; t < ds; ++t)
          if (!seen_l[t] || !seen_r[t]) invalid(l.number, "module", "missing action of basis element " + std::to_string(t));
      } else if (l.tokens[1] == "braided") {
        f.kind = Kind::Braided;
        std::vector<Matrix> action(ds);
        std::vector<bool> seen(ds);
        bool have_psi = false;
        for (const auto& b : block("module")) {
          if (b.tokens[0] == "psi") {
            expect_tokens(b, 2);
            f.psi = parse_matrix(b.number, f.field, b.tokens[1], n * ds, ds * n, "psi");
            have_psi = true;
          } else if (b.tokens[0] == "action") {
            expect_tokens(b, 3);
            const std::size_t t = parse_count(b.number, b.tokens[1]);
            if (t >= ds) invalid(b.number, "action", "group element " + std::to_string(t) + " out of range");
            action[t] = parse_matrix(b.number, f.field, b.tokens[2], n, n, "action " + b.tokens[1]);
            seen[t] = true;
          } else {
            parse_error(b.number, "expected psi [...] or action g [...]");
          }
        }
        const bool any_action = std::find(seen.begin(), seen.end(), true) != seen.end();
        if (have_psi == any_action) invalid(l.number, "module", "give either psi or one action per group element");
        if (any_action) {
          for (std::size_t t = 0; t < ds; ++t)
            if (!seen[t]) invalid(l.number, "module", "missing action of group element " + std::to_string(t));
          try {
            f.psi = Braiding::group_action(*s, action).matrix().to_dense();
          } catch (const Error& e) {
            invalid(l.number, "module", e.what());
          }
        }
      } else {
        parse_error(l.number, "module expects bimodule n or braided n");
      }
      try {
        std::optional<Braiding> psi;
        make_module(f, *s, psi);
      } catch (const Error& e) {
        invalid(module_line, "module", e.what());
      }
      have_module = true;
    } else if (key == "relations") {
      once(have_relations, l);
      need(have_module, l, "'module'");
      expect_tokens(l, 2);
      if (l.tokens[1] == "V") {
        if (f.kind != Kind::Braided) invalid(l.number, "relations", "relations in V need a braided module");
        f.space = Space::V;
      } else if (l.tokens[1] == "M") {
        f.space = Space::M;
      } else {
        parse_error(l.number, "relations expects V or M");
      }
      const std::size_t n = f.space == Space::V ? f.dim_m * f.dim_m : (f.kind == Kind::Braided ? f.dim_m * f.dim_s : f.dim_m);
      const std::size_t amb = f.space == Space::V ? n : n * n;
      for (const auto& b : block("relations")) {
        expect_tokens(b, 1);
        f.relations.push_back(
            parse_vector(b.number, f.field, b.tokens[0], amb, "relations[" + std::to_string(f.relations.size()) + "]"));
      }
      have_relations = true;
    } else if (key == "deformation") {
      once(f.deformation.has_value() || f.sigma_auto, l);
      need(have_relations, l, "'relations'");
      expect_tokens(l, 1);
      const std::size_t nr = f.relations.size();
      const std::size_t rows = f.space == Space::V ? f.dim_m * f.dim_s : (f.kind == Kind::Braided ? f.dim_m * f.dim_s : f.dim_m);
      PresentationFile::Deformation d{Matrix(f.field, rows, nr), Matrix()};
      bool have_theta = false;
      for (const auto& b : block("deformation")) {
        expect_tokens(b, 2);
        if (b.tokens[0] == "phi") {
          d.phi = parse_matrix(b.number, f.field, b.tokens[1], rows, nr, "phi");
        } else if (b.tokens[0] == "theta") {
          d.theta = parse_matrix(b.number, f.field, b.tokens[1], f.dim_s, nr, "theta");
          have_theta = true;
        } else {
          parse_error(b.number, "expected phi [...] or theta [...]");
        }
      }
      if (!have_theta) invalid(l.number, "deformation", "missing theta");
      f.deformation = std::move(d);
    } else if (key == "sigma") {
      once(f.deformation.has_value() || f.sigma_auto, l);
      need(have_relations, l, "'relations'");
      if (l.tokens.size() < 2 || l.tokens[1] != "auto") parse_error(l.number, "expected 'sigma auto' or 'sigma auto e [...]'");
      f.sigma_auto = true;
      if (l.tokens.size() == 4 && l.tokens[2] == "e") {
        f.sigma_e = parse_vector(l.number, f.field, l.tokens[3], f.dim_s, "sigma e");
      } else if (l.tokens.size() != 2) {
        parse_error(l.number, "expected 'sigma auto' or 'sigma auto e [...]'");
      }
      ++i;
    } else if (key == "bounds") {
      once(f.bounds != Bounds{}, l);
      if (l.tokens.size() % 2 != 1) parse_error(l.number, "bounds expects key value pairs");
      for (std::size_t k = 1; k < l.tokens.size(); k += 2) {
        const std::string& name = l.tokens[k];
        const std::size_t v = parse_count(l.number, l.tokens[k + 1]);
        if (name == "deg_max") f.bounds.deg_max = static_cast<int>(v);
        else if (name == "n_max") f.bounds.n_max = static_cast<int>(v);
        else if (name == "n_sat") f.bounds.n_sat = static_cast<int>(v);
        else if (name == "trial_budget") f.bounds.trial_budget = v;
        else if (name == "seed") f.bounds.seed = v;
        else parse_error(l.number, "unknown bound '" + name + "'");
      }
      ++i;
    } else {
      parse_error(l.number, "unknown statement '" + key + "'");
    }
  }
  const int last = lines.back().number;
  if (!have_field) invalid(last, "field", "missing");
  if (!have_algebra) invalid(last, "algebra", "missing");
  if (!have_module) invalid(last, "module", "missing");
  if (!have_relations) invalid(last, "relations", "missing");
  return f;
}

PresentationFile parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string serialize(const PresentationFile& f) {
  std::ostringstream out;
  out << "pbwkit-alg 1\n";
  out << "field " << f.field.name() << "\n";
  out << "algebra table " << f.dim_s << "\n";
  out << "  unit " << vector_text(f.unit) << "\n";
  for (std::size_t i = 0; i < f.dim_s; ++i)
    for (std::size_t j = 0; j < f.dim_s; ++j)
      if (!exactlin::is_zero(f.product[i][j])) out << "  product " << i << " " << j << " " << vector_text(f.product[i][j]) << "\n";
  out << "end\n";
  if (f.kind == Kind::Braided) {
    out << "module braided " << f.dim_m << "\n";
    out << "  psi " << matrix_text(f.psi, "     ") << "\n";
  } else {
    out << "module bimodule " << f.dim_m << "\n";
    for (std::size_t t = 0; t < f.dim_s; ++t) out << "  left " << t << " " << matrix_text(f.left[t], "         ") << "\n";
    for (std::size_t t = 0; t < f.dim_s; ++t) out << "  right " << t << " " << matrix_text(f.right[t], "          ") << "\n";
  }
  out << "end\n";
  out << "relations " << (f.space == Space::V ? "V" : "M") << "\n";
  for (const auto& r : f.relations) out << "  " << vector_text(r) << "\n";
  out << "end\n";
  if (f.deformation) {
    out << "deformation\n";
    out << "  phi " << matrix_text(f.deformation->phi, "      ") << "\n";
    out << "  theta " << matrix_text(f.deformation->theta, "        ") << "\n";
    out << "end\n";
  }
  if (f.sigma_auto) {
    out << "sigma auto";
    if (f.sigma_e) out << " e " << vector_text(*f.sigma_e);
    out << "\n";
  }
  if (f.bounds != Bounds{}) {
    out << "bounds";
    if (f.bounds.deg_max) out << " deg_max " << *f.bounds.deg_max;
    if (f.bounds.n_max) out << " n_max " << *f.bounds.n_max;
    if (f.bounds.n_sat) out << " n_sat " << *f.bounds.n_sat;
    if (f.bounds.trial_budget) out << " trial_budget " << *f.bounds.trial_budget;
    if (f.bounds.seed) out << " seed " << *f.bounds.seed;
    out << "\n";
  }
  return out.str();
}

Model build(const PresentationFile& file) {
  Model m;
  m.file = file;
  m.S = make_algebra(file);
  m.M = make_module(file, m.S, m.psi);
  return m;
}

QuadraticPresentation Model::presentation() const {
  if (file.space == Space::V) return entwine::smash_presentation(*psi, file.relations);
  return QuadraticPresentation::from_ambient(M, file.relations);
}

DeformationData Model::deformation(const QuadraticPresentation& pres, std::uint64_t seed, std::size_t budget) const {
  const FieldSpec f = file.field;
  if (file.sigma_auto && file.sigma_e) {
    auto sd = gorenstein::extract_sigma(pres, seed, budget);
    return gorenstein::theta_from_e(pres, sd, *file.sigma_e);
  }
  const std::size_t nr = file.relations.size();
  const std::size_t rows = smash_shaped() ? file.dim_m * file.dim_s : M.dim();
  Matrix phi = file.deformation ? file.deformation->phi : Matrix(f, rows, nr);
  Matrix theta = file.deformation ? file.deformation->theta : Matrix(f, file.dim_s, nr);
  if (smash_shaped()) return pbw::smash_deformation(*psi, file.relations, phi, theta);
  std::vector<exactlin::SparseVec> basis;
  for (const auto& r : file.relations) basis.push_back(pres.T2().project_ambient(exactlin::SparseVec::from_dense(r)));
  return DeformationData::on_basis(pres, basis, phi, theta);
}

}  // namespace pbwkit::cli
