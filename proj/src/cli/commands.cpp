#include "pbwkit/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pbwkit/algebra/section.hpp"
#include "pbwkit/cli/report.hpp"
#include "pbwkit/entwine/smash.hpp"
#include "pbwkit/entwine/smash_resolution.hpp"
#include "pbwkit/gorenstein/gorenstein.hpp"
#include "pbwkit/pbw/oracle.hpp"
#include "pbwkit/pbw/resolution.hpp"
#include "pbwkit/pbw/theorems.hpp"
#include "pbwkit/quadratic/koszul.hpp"

namespace pbwkit::cli {

using algebra::Side;

Options resolve(const Bounds& file, const Overrides& cli) {
  Options o;
  o.deg_max = cli.deg_max.value_or(file.deg_max.value_or(o.deg_max));
  o.n_max = cli.n_max.value_or(file.n_max.value_or(o.n_max));
  o.n_sat = cli.n_sat.value_or(file.n_sat.value_or(o.n_sat));
  o.seed = cli.seed.value_or(file.seed.value_or(o.seed));
  o.trial_budget = cli.trial_budget.value_or(file.trial_budget.value_or(o.trial_budget));
  return o;
}

int error_exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::EquivarianceFailed:
    case ErrorCode::NotClassicallyKoszul:
    case ErrorCode::BraidingNotBijective:
    case ErrorCode::RelationsNotStable:
    case ErrorCode::SplittingMissing:
    case ErrorCode::HomotopySolveFailed:
    case ErrorCode::Pdim2PreconditionFailed:
    case ErrorCode::NotFreeRight:
    case ErrorCode::NotProjective:
    case ErrorCode::SigmaNotAutomorphism:
    case ErrorCode::EOutsideSpace:
      return kFail;
    case ErrorCode::NoFreeGenerator:
    case ErrorCode::CapExceeded:
      return kUndecided;
    default:
      return kInputError;
  }
}

namespace {

void add_caught(VerdictReport& r, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    if (error_exit_code(e.code()) == kInputError) throw;
    r.add(name, error_exit_code(e.code()) == kFail ? Status::Fail : Status::Undecided, "", e.what());
  }
}

VerdictReport check_algebra(const Model& m, const Options&) {
  VerdictReport r;
  r.title = "algebra data";
  const auto& f = m.file;
  r.add("S associative and unital", true, "dim S = " + std::to_string(m.S.dim()));
  r.add("M bimodule axioms", true, "dim M = " + std::to_string(m.M.dim()));
  r.add("M right projective", algebra::is_projective(m.M, Side::Right));
  r.add("M left projective", algebra::is_projective(m.M, Side::Left));
  std::optional<QuadraticPresentation> pres;
  try {
    pres = m.presentation();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RNotSubbimodule) throw;
    r.add("R sub-bimodule", false, "", e.what());
  }
  if (pres) {
    r.add("R sub-bimodule", true, "dim R = " + std::to_string(pres->R().dim()));
    const auto rb = pres->R_bimodule();
    r.add("R right projective", algebra::is_projective(rb, Side::Right));
    r.add("R left projective", algebra::is_projective(rb, Side::Left));
  }
  Table t{"data", {"item", "value"}, {}};
  t.rows.push_back({"field", f.field.name()});
  t.rows.push_back({"dim S", std::to_string(m.S.dim())});
  t.rows.push_back({"S commutative", m.S.is_commutative() ? "yes" : "no"});
  t.rows.push_back({"S selfinjective", gorenstein::check_selfinjective(m.S) ? "yes" : "no"});
  t.rows.push_back({"dim M", std::to_string(m.M.dim())});
  t.rows.push_back({"relations given", std::to_string(f.relations.size())});
  r.tables.push_back(std::move(t));
  return r;
}

VerdictReport check_braiding_cmd(const Model& m, const Options& o) {
  VerdictReport r;
  r.title = "braiding";
  std::optional<entwine::Braiding> psi = m.psi;
  if (!psi) {
    add_caught(r, "M free as a right module", [&] {
      psi = entwine::braiding_from_bimodule(m.M).psi;
      r.add("M free as a right module", true, "braiding induced from a free right basis");
    });
    if (!psi) return r;
  }
  r.merge(entwine::check_braiding(*psi), "");
  r.add("Psi bijective", psi->bijective());
  auto t = entwine::extend_to_tensor(*psi, std::max(o.deg_max, 2));
  r.merge(entwine::check_tensor_entwining(t), "T(V): ");
  if (m.smash_shaped()) {
    std::string w;
    bool ok = entwine::check_relation_stability(t, m.file.relations, &w);
    r.add("Psi_T(S (x) R) in R (x) S", ok, "", w);
  }
  return r;
}

VerdictReport check_koszul_cmd(const Model& m, const Options& o) {
  return quadratic::is_koszul(m.presentation(), o.deg_max);
}

VerdictReport check_pbw_a(const Model& m, const Options& o) {
  auto pres = m.presentation();
  auto r = pbw::check_theorem_a(m.deformation(pres, o.seed, o.trial_budget));
  r.title = "Theorem A";
  return r;
}

VerdictReport check_pbw_b(const Model& m, const Options& o) {
  auto pres = m.presentation();
  auto r = pbw::check_theorem_b(m.deformation(pres, o.seed, o.trial_budget));
  r.title = "Theorem B";
  return r;
}

VerdictReport oracle_cmd(const Model& m, const Options& o) {
  auto pres = m.presentation();
  return pbw::is_pbw_up_to(m.deformation(pres, o.seed, o.trial_budget), o.n_max, o.n_sat);
}

VerdictReport resolution_cmd(const Model& m, const Options& o) {
  VerdictReport r;
  r.title = "resolutions";
  auto pres = m.presentation();
  const int deg = std::min(o.deg_max, 4);
  auto kr = quadratic::koszul_resolution(pres, deg);
  r.merge(kr.certify(deg), "koszul: ");
  auto bc = quadratic::bimodule_complex(pres, deg);
  r.merge(bc.certify(deg), "bimodule: ");
  std::string w;
  if (pbw::pdim2_precondition(pres, &w)) {
    add_caught(r, "P complex", [&] {
      auto p = pbw::build_p_complex_pdim2(pres, 3, deg);
      r.merge(p.report, "");
    });
  } else {
    r.notes.push_back("P complex skipped: " + w);
  }
  if (m.smash_shaped()) {
    add_caught(r, "smash resolution", [&] {
      auto a = entwine::classical_presentation(m.file.field, m.file.dim_m, m.file.relations);
      auto sk = entwine::smash_koszul_resolution(*m.psi, a, 3, deg);
      r.merge(sk.report, "smash: ");
    });
  }
  return r;
}

VerdictReport gorenstein_cmd(const Model& m, const Options& o) {
  auto pres = m.presentation();
  auto c = gorenstein::check_gorenstein(pres, o.inj_dim, o.gor_param, -o.deg_max, o.deg_max, o.seed, o.trial_budget);
  VerdictReport r = c.report;
  for (const auto* side : {&c.ext, &c.ext_left}) {
    Table t{side == &c.ext ? "Ext^i(S_B, B)" : "Ext^i(_B S, B)", {"i"}, {}};
    for (int e = c.lo; e <= c.hi; ++e) t.header.push_back("e=" + std::to_string(e));
    for (int i = 0; i <= side->i_max; ++i) {
      std::vector<std::string> row{std::to_string(i)};
      for (int e = c.lo; e <= c.hi; ++e) row.push_back(std::to_string(side->at(i, e)));
      t.rows.push_back(std::move(row));
    }
    r.tables.push_back(std::move(t));
  }
  return r;
}

std::string matrix_rows(const Matrix& mat) {
  std::string out;
  for (std::size_t i = 0; i < mat.rows(); ++i) out += (i ? "; " : "") + exactlin::to_string(mat.row(i));
  return out;
}

VerdictReport deform_sigma(const Model& m, const Options& o) {
  VerdictReport r;
  r.title = "U_e deformations";
  auto pres = m.presentation();
  auto sd = gorenstein::extract_sigma(pres, o.seed, o.trial_budget);
  r.add("free right generator r0", true, std::to_string(sd.trials) + " trial(s)");
  r.add("sigma automorphism", true);
  r.notes.push_back("r0 = " + exactlin::to_string(sd.r0) + " in relation-basis coordinates");
  r.notes.push_back("sigma rows: " + matrix_rows(sd.sigma));
  r.notes.push_back("sigma is determined up to an inner automorphism; this one comes from seed " +
                    std::to_string(o.seed));
  const FieldSpec f = m.file.field;
  const std::size_t ds = m.S.dim();
  std::vector<Vector> es;
  if (m.file.sigma_e) {
    es.push_back(*m.file.sigma_e);
  } else {
    es.push_back(exactlin::zero_vector(f, ds));
    for (std::size_t k = 0; k < sd.e_space.dim(); ++k) es.push_back(sd.e_space.basis_vector(k));
  }
  Table t{"admissible e", {"e", "theorem A", "oracle"}, {}};
  t.rows.push_back({"dim e_space", std::to_string(sd.e_space.dim()), ""});
  for (const auto& e : es) {
    const std::string tag = "e=" + exactlin::to_string(e) + ": ";
    if (!sd.e_space.contains(e)) {
      std::string w = "e is outside e_space";
      for (std::size_t t = 0; t < ds; ++t) {
        const Vector st = exactlin::unit_vector(f, ds, t);
        const Vector lhs = m.S.multiply(st, e), rhs = m.S.multiply(e, sd.sigma.column(t));
        if (lhs != rhs) {
          w = "s=e" + std::to_string(t) + ": s e = " + exactlin::to_string(lhs) + " but e sigma(s) = " + exactlin::to_string(rhs);
          break;
        }
      }
      r.add(tag + "s e = e sigma(s)", false, "", w);
      continue;
    }
    auto u = gorenstein::build_U_e(pres, sd, e, o.n_max, o.n_sat);
    r.merge(u.theorem_a, tag + "A: ");
    r.merge(u.oracle, tag + "oracle: ");
    const Check* pred = u.theorem_a.find("predicted_pbw");
    const Status a = pred ? pred->status : Status::Undecided;
    const Status b = u.oracle.overall();
    if (a != Status::Undecided && b != Status::Undecided)
      r.add(tag + "theorem A matches oracle", a == b, "",
            a == b ? "" : "theorem A " + status_name(a) + ", oracle " + status_name(b));
    t.rows.push_back({exactlin::to_string(e), status_name(a), status_name(b)});
  }
  r.tables.push_back(std::move(t));
  return r;
}

using Handler = VerdictReport (*)(const Model&, const Options&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"check-algebra", check_algebra}, {"check-braiding", check_braiding_cmd}, {"check-koszul", check_koszul_cmd},
      {"check-pbw-a", check_pbw_a},     {"check-pbw-b", check_pbw_b},           {"oracle", oracle_cmd},
      {"resolution", resolution_cmd},   {"gorenstein", gorenstein_cmd},         {"deform-sigma", deform_sigma}};
  return h;
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string error_json(const RunInfo& info, const Error& e, int code) {
  nlohmann::ordered_json j;
  j["tool"] = "pbwkit";
  j["version"] = kToolVersion;
  j["command"] = info.command;
  j["input"] = info.input;
  j["input_sha256"] = info.digest;
  j["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  j["exit_code"] = code;
  return j.dump(2) + "\n";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : handlers()) out.push_back(k);
    return out;
  }();
  return names;
}

VerdictReport run_command(const std::string& name, const Model& model, const Options& opt) {
  auto it = handlers().find(name);
  if (it == handlers().end()) throw Error(ErrorCode::ValidationError, "unknown command '" + name + "'");
  return it->second(model, opt);
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact PBW-deformation checks for quadratic algebras over a finite-dimensional base algebra"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Overrides ov;
  std::string report_path;
  bool quiet = false, timing = false;
  int inj_dim = 2, gor_param = 2;
  app.add_option("--deg-max", ov.deg_max, "internal degree bound (default 5)");
  app.add_option("--n-max", ov.n_max, "filtration degree checked by the oracle (default 4)");
  app.add_option("--n-sat", ov.n_sat, "saturation degree of the oracle (default 6)");
  app.add_option("--seed", ov.seed, "seed for randomized searches (default 0)");
  app.add_option("--trial-budget", ov.trial_budget, "trial budget for randomized searches (default 64)");
  app.add_option("--report", report_path, "write the JSON report here");
  app.add_flag("--quiet", quiet, "no text report on stdout");
  app.add_flag("--timing", timing, "record elapsed time (reports are then no longer byte-identical)");
  std::string input;
  std::string chosen;
  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("file", input, ".alg presentation file")->required();
    if (name == "gorenstein") {
      sub->add_option("--inj-dim", inj_dim, "claimed injective dimension d (default 2)");
      sub->add_option("--gor-param", gor_param, "Gorenstein parameter l (default 2)");
    }
    sub->callback([&chosen, name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  RunInfo info;
  info.command = chosen;
  info.input = input;
  auto emit = [&](const std::string& json, const std::string& text) {
    if (!quiet) out << text;
    if (!report_path.empty()) {
      std::ofstream rep(report_path, std::ios::binary);
      rep << json;
    }
  };
  try {
    const std::string bytes = read_bytes(input);
    info.digest = sha256_hex(bytes);
    Model model = build(parse(bytes));
    Options opt = resolve(model.file.bounds, ov);
    opt.inj_dim = inj_dim;
    opt.gor_param = gor_param;
    info.field = model.file.field.name();
    info.deg_max = opt.deg_max;
    info.n_max = opt.n_max;
    info.n_sat = opt.n_sat;
    info.seed = opt.seed;
    info.trial_budget = opt.trial_budget;
    const auto t0 = std::chrono::steady_clock::now();
    VerdictReport report;
    try {
      report = run_command(chosen, model, opt);
    } catch (const Error& e) {
      if (error_exit_code(e.code()) == kInputError) throw;
      report.title = chosen;
      report.add(std::string(error_code_name(e.code())), error_exit_code(e.code()) == kFail ? Status::Fail : Status::Undecided,
                 "", e.what());
    }
    if (timing)
      info.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const int code = exit_code(report.overall());
    emit(render_json(report, info, code), render_text(report, info, code));
    return code;
  } catch (const Error& e) {
    err << "pbwkit: " << e.what() << "\n";
    const int code = kInputError;
    emit(error_json(info, e, code), "");
    return code;
  }
}

}  // namespace pbwkit::cli
