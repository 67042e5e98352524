#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace rpa::cli {

namespace {

std::string combination(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    const bool neg = sgn(v[k]) < 0;
    const Scalar mag = neg ? Scalar(-v[k]) : v[k];
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_den() == 1 ? format_scalar(mag) : "(" + format_scalar(mag) + ")";
    out += labels[k];
  }
  return out.empty() ? "0" : out;
}

std::string tensor_combination(const Matrix& m, const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> labels;
  Vec flat;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      labels.push_back(a[i] + "⊗" + b[j]);
      flat.push_back(m(i, j));
    }
  return combination(flat, labels);
}

void list_product(std::ostringstream& os, const BilinearOp& op, const std::string& open, const std::string& sep,
                  const std::string& close) {
  const auto& L = op.space().labels();
  for (std::size_t i = 0; i < op.dim(); ++i)
    for (std::size_t j = 0; j < op.dim(); ++j) {
      const Vec v = op.product(i, j);
      if (!is_zero(v)) os << "  " << open << L[i] << sep << L[j] << close << " = " << combination(v, L) << "\n";
    }
}

void list_map(std::ostringstream& os, const std::string& name, const Matrix& m, const std::vector<std::string>& in,
              const std::vector<std::string>& out) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Vec v = m.column(j);
    if (!is_zero(v)) os << "  " << name << "(" << in[j] << ") = " << combination(v, out) << "\n";
  }
}

void list_action(std::ostringstream& os, const std::string& name, const std::vector<Matrix>& ops,
                 const std::vector<std::string>& alg, const std::vector<std::string>& mod) {
  for (std::size_t x = 0; x < ops.size(); ++x) list_map(os, name + "(" + alg[x] + ")", ops[x], mod, mod);
}

void list_comult(std::ostringstream& os, const std::string& name, const Comultiplication& c) {
  const auto& L = c.space.labels();
  for (std::size_t k = 0; k < c.dim(); ++k) {
    const Matrix m = c.of(k);
    if (!m.is_zero()) os << "  " << name << "(" << L[k] << ") = " << tensor_combination(m, L, L) << "\n";
  }
}

Document circ_completed(const Document& in) {
  if (in.kind == "zinbiel") {
    return from_rel_pre_poisson(RelPrePoissonAlgebra(star_of(in), circ_from_derivation(star_of(in), P_of(in)), P_of(in)));
  }
  return in;
}

void expect_kind(const Document& d, std::initializer_list<const char*> kinds, const std::string& recipe) {
  for (const char* k : kinds)
    if (d.kind == k) return;
  std::string list;
  for (const char* k : kinds) list += (list.empty() ? "" : ", ") + std::string(k);
  throw PreconditionError(recipe, "expected a document of kind " + list + ", got " + d.kind);
}

void emit(const Document& doc, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << serialize(doc);
  } else {
    write_document(doc, path);
  }
}

}  // namespace

const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> kinds = [] {
    std::vector<std::string> k = known_kinds();
    for (const char* extra : {"jacobi", "frobenius-jacobi", "matched-pair", "manin-triple"}) k.emplace_back(extra);
    return k;
  }();
  return kinds;
}

AxiomReport check_as(const Document& d, const std::string& kind) {
  AxiomReport out;
  if (kind == "comm-assoc") {
    out = check_comm_assoc(dot_of(d));
    if (d.P) out.merge(check_derivation(dot_of(d), *d.P), "P");
  } else if (kind == "lie") {
    out = check_lie(bracket_of(d));
    if (d.P) out.merge(check_derivation(bracket_of(d), *d.P), "P");
  } else if (kind == "rel-poisson") {
    out = check_rel_poisson(to_rel_poisson(d));
  } else if (kind == "zinbiel") {
    out = check_zinbiel(star_of(d));
    if (d.P) out.merge(check_derivation(star_of(d), *d.P), "P");
  } else if (kind == "pre-lie") {
    out = check_prelie(circ_of(d));
    if (d.P) out.merge(check_derivation(circ_of(d), *d.P), "P");
  } else if (kind == "rel-pre-poisson") {
    out = check_rel_pre_poisson(to_rel_pre_poisson(d));
  } else if (kind == "representation") {
    const RepData rep = to_representation(d);
    out = check_representation(rep);
    if (d.beta) out.merge(check_dualrep_conditions(rep, *d.beta), "beta");
    if (d.Q) out.merge(check_dually_represents(rep.algebra, *d.Q), "Q");
    if (d.T) out.merge(check_weak_o_operator(rep, *d.T), "T");
  } else if (kind == "comultiplication") {
    if (d.Delta && d.delta) {
      out = check_rel_poisson_coalgebra(*d.Delta, *d.delta, Q_of(d));
    } else {
      if (d.Delta) out.merge(check_cocomm_coassoc(*d.Delta), "Delta");
      if (d.delta) out.merge(check_lie_coalgebra(*d.delta), "delta");
    }
  } else if (kind == "bialgebra") {
    out = check_bialgebra(to_bialgebra(d));
  } else if (kind == "rmatrix") {
    const Matrix r = d.r ? *d.r : Matrix(d.dim(), d.dim());
    out.merge(check_rel_poisson(to_rel_poisson(d)), "algebra");
    if (!is_antisymmetric(r)) out.expect_zero("antisymmetry", {}, r + r.transpose());
    out.merge(check_rpybe(to_rel_poisson(d), Q_of(d), r));
  } else if (kind == "bilinear-form") {
    const Matrix g = d.gram ? *d.gram : Matrix(d.dim(), d.dim());
    const BilinForm form(d.space, g);
    if (d.dot || d.bracket || d.P) out.merge(check_rel_poisson(to_rel_poisson(d)), "algebra");
    out.expect_zero("form-symmetric", {}, g - g.transpose());
    if (!is_nondegenerate(form)) out.expect_zero("form-nondegenerate", {}, Vec{Scalar(1)});
    out.merge(check_invariant_form(to_rel_poisson(d), form));
  } else if (kind == "jacobi") {
    out = check_jacobi_algebra(dot_of(d), bracket_of(d));
  } else if (kind == "frobenius-jacobi") {
    const Matrix g = d.gram ? *d.gram : Matrix(d.dim(), d.dim());
    out = check_frobenius_jacobi(FrobeniusJacobiAlgebra{to_rel_poisson(d), BilinForm(d.space, g)});
  } else if (kind == "matched-pair") {
    const BialgebraData b = to_bialgebra(d);
    out = check_matched_pair(induced_matched_pair(b.algebra, dual_algebra(b)));
  } else if (kind == "manin-triple") {
    const BialgebraData b = to_bialgebra(d);
    const MatchedPairData mp = induced_matched_pair(b.algebra, dual_algebra(b));
    out = check_manin_triple(mp.A1, mp.A2, bowtie(mp, false));
  } else {
    throw ParseError("unknown kind '" + kind + "'");
  }
  return out;
}

const std::vector<std::string>& recipes() {
  static const std::vector<std::string> r{"bracket-from-derivation", "circ-from-derivation", "subadjacent",
                                          "semidirect", "dualize", "extend-jacobi", "coboundary",
                                          "o-operator-rmatrix", "bowtie"};
  return r;
}

Document construct(const std::string& recipe, const Document& in) {
  if (recipe == "bracket-from-derivation") {
    expect_kind(in, {"comm-assoc", "rel-poisson"}, recipe);
    const BilinearOp dot = dot_of(in);
    return from_rel_poisson(RelPoissonAlgebra(dot, bracket_from_derivation(dot, P_of(in)), P_of(in)),
                            "bracket x.P(y) - P(x).y");
  }
  if (recipe == "circ-from-derivation") {
    expect_kind(in, {"zinbiel"}, recipe);
    return circ_completed(in);
  }
  if (recipe == "subadjacent") {
    expect_kind(in, {"zinbiel", "rel-pre-poisson"}, recipe);
    const RelPrePoissonAlgebra pp = to_rel_pre_poisson(circ_completed(in));
    require(check_rel_pre_poisson(pp), recipe);
    return from_rel_poisson(subadjacent(pp).first, "sub-adjacent relative Poisson algebra");
  }
  if (recipe == "semidirect") {
    expect_kind(in, {"representation"}, recipe);
    return from_rel_poisson(semidirect_product(to_representation(in), true), "semidirect product");
  }
  if (recipe == "dualize") {
    expect_kind(in, {"bialgebra"}, recipe);
    return from_bialgebra(dualize_bialgebra(to_bialgebra(in), true), "dual bialgebra");
  }
  if (recipe == "extend-jacobi") {
    expect_kind(in, {"rel-poisson"}, recipe);
    return from_rel_poisson(extend_jacobi(to_rel_poisson(in)), "extended Jacobi algebra");
  }
  if (recipe == "coboundary") {
    expect_kind(in, {"rmatrix"}, recipe);
    const Matrix r = in.r ? *in.r : Matrix(in.dim(), in.dim());
    return from_bialgebra(coboundary_bialgebra(to_rel_poisson(in), Q_of(in), r), "coboundary comultiplications");
  }
  if (recipe == "o-operator-rmatrix") {
    expect_kind(in, {"representation", "rel-pre-poisson", "zinbiel"}, recipe);
    if (in.kind != "representation") {
      const RMatrixConstruction rc = prepoisson_to_rmatrix(to_rel_pre_poisson(circ_completed(in)));
      return from_rmatrix(rc.algebra, rc.Q, rc.r, "r = id - tau(id)");
    }
    const RepData rep = to_representation(in);
    const std::size_t m = rep.module_dim(), n = rep.algebra.dim();
    const RMatrixConstruction rc = o_operator_to_rmatrix(rep, in.beta ? *in.beta : Matrix(m, m), Q_of(in),
                                                         in.T ? *in.T : Matrix(n, m));
    return from_rmatrix(rc.algebra, rc.Q, rc.r, "r = T - tau(T)");
  }
  if (recipe == "bowtie") {
    expect_kind(in, {"bialgebra"}, recipe);
    const MatchedPairData mp = bialgebra_to_matched_pair(to_bialgebra(in), true);
    const RelPoissonAlgebra dbl = bowtie(mp, true);
    return from_form(dbl, BilinForm(dbl.space, canonical_pairing_form(mp.A1.space).gram), "double with B_d");
  }
  throw ParseError("unknown recipe '" + recipe + "'");
}

std::string describe(const Document& d) {
  std::ostringstream os;
  const auto& L = d.space.labels();
  os << "kind: " << d.kind << "\n";
  if (!d.note.empty()) os << "note: " << d.note << "\n";
  os << "dimension: " << d.dim() << "\n";
  if (d.dot) list_product(os, *d.dot, "", "·", "");
  if (d.star) list_product(os, *d.star, "", "⋆", "");
  if (d.circ) list_product(os, *d.circ, "", "∘", "");
  if (d.bracket) list_product(os, *d.bracket, "[", ",", "]");
  if (d.P) list_map(os, "P", *d.P, L, L);
  if (d.Q) list_map(os, "Q", *d.Q, L, L);
  if (d.module) {
    const auto& M = d.module->labels();
    os << "module dimension: " << M.size() << "\n";
    if (d.mu) list_action(os, "mu", *d.mu, L, M);
    if (d.rho) list_action(os, "rho", *d.rho, L, M);
    if (d.alpha) list_map(os, "alpha", *d.alpha, M, M);
    if (d.beta) list_map(os, "beta", *d.beta, M, M);
    if (d.T) list_map(os, "T", *d.T, M, L);
  }
  if (d.Delta) list_comult(os, "Δ", *d.Delta);
  if (d.delta) list_comult(os, "δ", *d.delta);
  if (d.r) os << "  r = " << tensor_combination(*d.r, L, L) << "\n";
  if (d.gram) {
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = 0; j < d.dim(); ++j)
        if (!is_zero((*d.gram)(i, j))) os << "  B(" << L[i] << "," << L[j] << ") = " << format_scalar((*d.gram)(i, j)) << "\n";
  }
  return os.str();
}

std::string format_report(const AxiomReport& r) {
  std::ostringstream os;
  if (r.ok()) {
    os << "ok\n";
    return os.str();
  }
  os << "FAILED: " << r.total() << " violation(s)";
  if (r.total() > r.violations().size()) os << ", first " << r.violations().size() << " shown";
  os << "\n";
  for (const auto& v : r.violations()) {
    os << "  " << v.axiom << " [";
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? ", " : "") << v.indices[i];
    os << "] defect (";
    for (std::size_t i = 0; i < v.defect.size(); ++i) os << (i ? ", " : "") << format_scalar(v.defect[i]);
    os << ")\n";
  }
  return os.str();
}

std::string report_json(const AxiomReport& r, const std::string& kind) {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["ok"] = r.ok();
  j["total"] = r.total();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations()) {
    nlohmann::ordered_json e;
    e["axiom"] = v.axiom;
    e["indices"] = v.indices;
    std::vector<std::string> defect;
    for (const auto& s : v.defect) defect.push_back(format_scalar(s));
    e["defect"] = defect;
    j["violations"].push_back(e);
  }
  return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for relative Poisson algebras", "rpa"};
  app.require_subcommand(1);

  std::string check_file, check_kind;
  bool check_json = false;
  auto* check = app.add_subcommand("check", "Verify the axioms of a structure document");
  check->add_option("file", check_file, "Structure document")->required();
  check->add_option("--as", check_kind, "Check as another kind")->check(CLI::IsMember(check_kinds()));
  check->add_flag("--json", check_json, "Machine-readable report");

  std::string recipe, construct_out;
  std::vector<std::string> inputs;
  auto* cons = app.add_subcommand("construct", "Build a structure from an input document");
  cons->add_option("recipe", recipe, "Construction")->required()->check(CLI::IsMember(recipes()));
  cons->add_option("inputs", inputs, "Input documents")->required();
  cons->add_option("-o,--output", construct_out, "Output file (default stdout)");

  std::string pipe_file, pipe_out, emit_dir;
  bool pipe_json = false;
  auto* pipe = app.add_subcommand("pipeline", "Relative pre-Poisson algebra to Frobenius Jacobi algebra");
  pipe->add_option("file", pipe_file, "Relative pre-Poisson (or Zinbiel with derivation) document")->required();
  pipe->add_option("-o,--output", pipe_out, "Output file for the final document (default stdout)");
  pipe->add_option("--emit-dir", emit_dir, "Also write every intermediate structure to this directory");
  pipe->add_flag("--json", pipe_json, "Machine-readable stage report");

  std::string report_file;
  bool report_as_json = false;
  auto* rep = app.add_subcommand("report", "Print the structure constants and the check result");
  rep->add_option("file", report_file, "Structure document")->required();
  rep->add_flag("--json", report_as_json, "Machine-readable report");

  std::vector<const char*> argv{"rpa"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kParseOrIo;
  }

  try {
    if (*check) {
      const Document d = read_document(check_file);
      const std::string kind = check_kind.empty() ? d.kind : check_kind;
      const AxiomReport r = check_as(d, kind);
      out << (check_json ? report_json(r, kind) : kind + ": " + format_report(r));
      return r.ok() ? kOk : kAxiomFailure;
    }
    if (*cons) {
      if (inputs.size() != 1) throw ParseError("recipe " + recipe + " takes exactly one input document");
      emit(construct(recipe, read_document(inputs.front())), construct_out, out);
      return kOk;
    }
    if (*pipe) {
      const Document in = read_document(pipe_file);
      if (in.kind != "rel-pre-poisson" && in.kind != "zinbiel") {
        throw ParseError("pipeline expects a rel-pre-poisson or zinbiel document, got " + in.kind);
      }
      std::ostream& log = (pipe_out.empty() || pipe_out == "-") ? err : out;
      PipelineResult res;
      try {
        res = frobenius_jacobi_pipeline(to_rel_pre_poisson(circ_completed(in)));
      } catch (const PreconditionError& e) {
        log << (pipe_json ? nlohmann::json{{"ok", false}, {"stage", e.stage()}, {"message", e.what()}}.dump(2) + "\n"
                          : "stage " + e.stage() + " failed: " + e.what() + "\n");
        return kPrecondition;
      }
      const Document final_doc =
          from_form(res.frobenius.algebra, res.frobenius.form, "Frobenius Jacobi algebra with the form B_d");
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        const auto path = [&](const char* name) { return (std::filesystem::path(emit_dir) / name).string(); };
        write_document(from_rel_poisson(res.subadjacent, "sub-adjacent relative Poisson algebra"),
                       path("01-subadjacent.json"));
        write_document(from_rel_poisson(res.extended, "extended Jacobi algebra"), path("02-extended.json"));
        write_document(from_rmatrix(res.rmatrix.algebra, res.rmatrix.Q, res.rmatrix.r, "Jacobi algebra J with r"),
                       path("03-rmatrix.json"));
        write_document(from_bialgebra(res.bialgebra, "coboundary bialgebra on J"), path("04-bialgebra.json"));
        write_document(from_rel_poisson(res.matched_pair.A2, "dual algebra J*"), path("05-dual.json"));
        write_document(final_doc, path("06-double.json"));
      }
      emit(final_doc, pipe_out, out);
      if (pipe_json) {
        nlohmann::ordered_json j;
        j["ok"] = true;
        j["stages"] = nlohmann::ordered_json::array();
        for (const auto& s : res.stages) j["stages"].push_back({{"name", s.name}, {"detail", s.detail}});
        log << j.dump(2) << "\n";
      } else {
        for (const auto& s : res.stages) log << "stage " << s.name << ": ok (" << s.detail << ")\n";
      }
      return kOk;
    }
    if (*rep) {
      const Document d = read_document(report_file);
      const AxiomReport r = check_as(d, d.kind);
      if (report_as_json) {
        out << report_json(r, d.kind);
      } else {
        out << describe(d) << "check: " << format_report(r);
      }
      return r.ok() ? kOk : kAxiomFailure;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseOrIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kParseOrIo;
  } catch (const PreconditionError& e) {
    err << "precondition failed at " << e.stage() << ": " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}

}  // namespace rpa::cli
