#include "document.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rpa::cli {

using nlohmann::json;

namespace {

const std::map<std::string, std::vector<std::string>>& kind_table() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"comm-assoc", {"dot", "P"}},
      {"lie", {"bracket", "P"}},
      {"rel-poisson", {"dot", "bracket", "P"}},
      {"zinbiel", {"star", "P"}},
      {"pre-lie", {"circ", "P"}},
      {"rel-pre-poisson", {"star", "circ", "P"}},
      {"representation", {"module", "dot", "bracket", "P", "Q", "mu", "rho", "alpha", "beta", "T"}},
      {"comultiplication", {"Q", "Delta", "delta"}},
      {"bialgebra", {"dot", "bracket", "P", "Q", "Delta", "delta"}},
      {"rmatrix", {"dot", "bracket", "P", "Q", "r"}},
      {"bilinear-form", {"dot", "bracket", "P", "gram"}},
  };
  return table;
}

bool permits(const std::string& kind, const std::string& field) {
  const auto& f = fields_of(kind);
  return std::find(f.begin(), f.end(), field) != f.end();
}

// ---- parsing helpers -------------------------------------------------------

std::size_t read_index(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": index is not an integer");
  const auto i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= bound) {
    throw ParseError(where + ": index " + std::to_string(i) + " out of range");
  }
  return static_cast<std::size_t>(i);
}

Scalar read_scalar(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw ParseError(where + ": scalar must be a \"p/q\" string");
}

// Reads a list of entries with `arity` indices each, bounded by `bounds`,
// and hands them to `sink`.
template <typename Sink>
void read_entries(const json& arr, const std::string& name, const std::vector<std::size_t>& bounds, Sink sink) {
  if (!arr.is_array()) throw ParseError(name + ": expected an array of entries");
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const json& row = arr[e];
    const std::string where = name + "[" + std::to_string(e) + "]";
    if (!row.is_array() || row.size() != bounds.size() + 1) {
      throw ParseError(where + ": expected " + std::to_string(bounds.size()) + " indices and a scalar");
    }
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < bounds.size(); ++t) idx.push_back(read_index(row[t], bounds[t], where));
    if (!seen.insert(idx).second) throw ParseError(where + ": duplicate entry");
    sink(idx, read_scalar(row[bounds.size()], where));
  }
}

BilinearOp read_product(const json& arr, const std::string& name, const Space& s) {
  const std::size_t n = s.dim();
  BilinearOp op(s);
  read_entries(arr, name, {n, n, n}, [&](const auto& i, const Scalar& v) { op.set(i[0], i[1], i[2], v); });
  return op;
}

// Map entries are [input, output, value].
Matrix read_map(const json& arr, const std::string& name, std::size_t in, std::size_t out) {
  Matrix m(out, in);
  read_entries(arr, name, {in, out}, [&](const auto& i, const Scalar& v) { m(i[1], i[0]) = v; });
  return m;
}

// Tensor entries are [i, j, value] for the coefficient of e_i (x) e_j.
Matrix read_tensor2(const json& arr, const std::string& name, std::size_t n) {
  Matrix m(n, n);
  read_entries(arr, name, {n, n}, [&](const auto& i, const Scalar& v) { m(i[0], i[1]) = v; });
  return m;
}

std::vector<Matrix> read_action(const json& arr, const std::string& name, std::size_t n, std::size_t m) {
  std::vector<Matrix> ops(n, Matrix(m, m));
  read_entries(arr, name, {n, m, m}, [&](const auto& i, const Scalar& v) { ops[i[0]](i[2], i[1]) = v; });
  return ops;
}

// Comultiplication entries are [k, i, j, value]: e_k has v e_i (x) e_j.
Comultiplication read_comult(const json& arr, const std::string& name, const Space& s) {
  const std::size_t n = s.dim();
  Comultiplication c(s);
  read_entries(arr, name, {n, n, n}, [&](const auto& i, const Scalar& v) { c.d(i[1], i[2], i[0]) = v; });
  return c;
}

Space read_space(const json& j, const char* dim_key, const char* basis_key, const std::string& default_prefix) {
  if (!j.contains(dim_key) || !j[dim_key].is_number_integer() || j[dim_key].get<long long>() < 0) {
    throw ParseError(std::string("missing or invalid \"") + dim_key + "\"");
  }
  const auto n = static_cast<std::size_t>(j[dim_key].get<long long>());
  if (!j.contains(basis_key)) return Space::standard(n, default_prefix);
  const json& b = j[basis_key];
  if (!b.is_array() || b.size() != n) throw ParseError(std::string("\"") + basis_key + "\" must list dimension labels");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& l : b) {
    if (!l.is_string()) throw ParseError(std::string("\"") + basis_key + "\" entries must be strings");
    if (!seen.insert(l.get<std::string>()).second) throw ParseError("duplicate basis label " + l.dump());
    labels.push_back(l.get<std::string>());
  }
  return Space(std::move(labels));
}

// ---- serialization helpers -------------------------------------------------

std::string q(const std::string& s) { return json(s).dump(); }

std::string entry_list(const std::vector<std::string>& rows) {
  if (rows.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += "    " + rows[i];
    out += (i + 1 < rows.size()) ? ",\n" : "\n";
  }
  return out + "  ]";
}

std::string row(std::initializer_list<std::size_t> idx, const Scalar& v) {
  std::string out = "[";
  for (std::size_t i : idx) out += std::to_string(i) + ", ";
  return out + q(format_scalar(v)) + "]";
}

std::string write_product(const BilinearOp& op) {
  std::vector<std::string> rows;
  const std::size_t n = op.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(op(i, j, k))) rows.push_back(row({i, j, k}, op(i, j, k)));
  return entry_list(rows);
}

std::string write_map(const Matrix& m) {
  std::vector<std::string> rows;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (!is_zero(m(k, j))) rows.push_back(row({j, k}, m(k, j)));
  return entry_list(rows);
}

std::string write_tensor2(const Matrix& m) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) rows.push_back(row({i, j}, m(i, j)));
  return entry_list(rows);
}

std::string write_action(const std::vector<Matrix>& ops) {
  std::vector<std::string> rows;
  for (std::size_t x = 0; x < ops.size(); ++x)
    for (std::size_t j = 0; j < ops[x].cols(); ++j)
      for (std::size_t k = 0; k < ops[x].rows(); ++k)
        if (!is_zero(ops[x](k, j))) rows.push_back(row({x, j, k}, ops[x](k, j)));
  return entry_list(rows);
}

std::string write_comult(const Comultiplication& c) {
  std::vector<std::string> rows;
  const std::size_t n = c.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(c.d(i, j, k))) rows.push_back(row({k, i, j}, c.d(i, j, k)));
  return entry_list(rows);
}

std::string labels_json(const Space& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + q(s.label(i));
  return out + "]";
}

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) throw std::invalid_argument(std::string(name) + " has the wrong shape");
}

}  // namespace

const std::vector<std::string>& known_kinds() {
  static const std::vector<std::string> kinds = [] {
    std::vector<std::string> k;
    for (const auto& [name, fields] : kind_table()) k.push_back(name);
    return k;
  }();
  return kinds;
}

const std::vector<std::string>& fields_of(const std::string& kind) {
  const auto it = kind_table().find(kind);
  if (it == kind_table().end()) throw ParseError("unknown kind '" + kind + "'");
  return it->second;
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing \"kind\"");

  Document d;
  d.kind = j["kind"].get<std::string>();
  const auto& fields = fields_of(d.kind);
  const bool has_module = std::find(fields.begin(), fields.end(), "module") != fields.end();

  static const std::set<std::string> header{"kind", "note", "dimension", "basis"};
  for (const auto& [key, value] : j.items()) {
    if (header.count(key)) continue;
    if (has_module && (key == "module_dimension" || key == "module_basis")) continue;
    if (!permits(d.kind, key)) throw ParseError("field \"" + key + "\" is not allowed for kind " + d.kind);
  }
  if (j.contains("note")) {
    if (!j["note"].is_string()) throw ParseError("\"note\" must be a string");
    d.note = j["note"].get<std::string>();
  }
  d.space = read_space(j, "dimension", "basis", "e");
  const std::size_t n = d.dim();
  if (has_module) d.module = read_space(j, "module_dimension", "module_basis", "v");
  const std::size_t m = d.module ? d.module->dim() : 0;

  if (j.contains("dot")) d.dot = read_product(j["dot"], "dot", d.space);
  if (j.contains("bracket")) d.bracket = read_product(j["bracket"], "bracket", d.space);
  if (j.contains("star")) d.star = read_product(j["star"], "star", d.space);
  if (j.contains("circ")) d.circ = read_product(j["circ"], "circ", d.space);
  if (j.contains("P")) d.P = read_map(j["P"], "P", n, n);
  if (j.contains("Q")) d.Q = read_map(j["Q"], "Q", n, n);
  if (j.contains("mu")) d.mu = read_action(j["mu"], "mu", n, m);
  if (j.contains("rho")) d.rho = read_action(j["rho"], "rho", n, m);
  if (j.contains("alpha")) d.alpha = read_map(j["alpha"], "alpha", m, m);
  if (j.contains("beta")) d.beta = read_map(j["beta"], "beta", m, m);
  if (j.contains("T")) d.T = read_map(j["T"], "T", m, n);
  if (j.contains("Delta")) d.Delta = read_comult(j["Delta"], "Delta", d.space);
  if (j.contains("delta")) d.delta = read_comult(j["delta"], "delta", d.space);
  if (j.contains("r")) d.r = read_tensor2(j["r"], "r", n);
  if (j.contains("gram")) d.gram = read_tensor2(j["gram"], "gram", n);
  return d;
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string serialize(const Document& d) {
  fields_of(d.kind);
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("kind", q(d.kind));
  if (!d.note.empty()) kv.emplace_back("note", q(d.note));
  kv.emplace_back("dimension", std::to_string(d.dim()));
  kv.emplace_back("basis", labels_json(d.space));
  if (d.module) {
    kv.emplace_back("module_dimension", std::to_string(d.module->dim()));
    kv.emplace_back("module_basis", labels_json(*d.module));
  }
  if (d.dot) kv.emplace_back("dot", write_product(*d.dot));
  if (d.bracket) kv.emplace_back("bracket", write_product(*d.bracket));
  if (d.star) kv.emplace_back("star", write_product(*d.star));
  if (d.circ) kv.emplace_back("circ", write_product(*d.circ));
  if (d.P) kv.emplace_back("P", write_map(*d.P));
  if (d.Q) kv.emplace_back("Q", write_map(*d.Q));
  if (d.mu) kv.emplace_back("mu", write_action(*d.mu));
  if (d.rho) kv.emplace_back("rho", write_action(*d.rho));
  if (d.alpha) kv.emplace_back("alpha", write_map(*d.alpha));
  if (d.beta) kv.emplace_back("beta", write_map(*d.beta));
  if (d.T) kv.emplace_back("T", write_map(*d.T));
  if (d.Delta) kv.emplace_back("Delta", write_comult(*d.Delta));
  if (d.delta) kv.emplace_back("delta", write_comult(*d.delta));
  if (d.r) kv.emplace_back("r", write_tensor2(*d.r));
  if (d.gram) kv.emplace_back("gram", write_tensor2(*d.gram));

  std::string out = "{\n";
  for (std::size_t i = 0; i < kv.size(); ++i) {
    out += "  " + q(kv[i].first) + ": " + kv[i].second;
    out += (i + 1 < kv.size()) ? ",\n" : "\n";
  }
  return out + "}\n";
}

void write_document(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << serialize(doc);
  if (!out) throw ParseError("write failed for " + path);
}

BilinearOp dot_of(const Document& d) { return d.dot ? *d.dot : BilinearOp(d.space); }
BilinearOp bracket_of(const Document& d) { return d.bracket ? *d.bracket : BilinearOp(d.space); }
BilinearOp star_of(const Document& d) { return d.star ? *d.star : BilinearOp(d.space); }
BilinearOp circ_of(const Document& d) { return d.circ ? *d.circ : BilinearOp(d.space); }
Matrix P_of(const Document& d) { return d.P ? *d.P : Matrix(d.dim(), d.dim()); }
Matrix Q_of(const Document& d) { return d.Q ? *d.Q : Matrix(d.dim(), d.dim()); }

RelPoissonAlgebra to_rel_poisson(const Document& d) { return RelPoissonAlgebra(dot_of(d), bracket_of(d), P_of(d)); }

RelPrePoissonAlgebra to_rel_pre_poisson(const Document& d) {
  return RelPrePoissonAlgebra(star_of(d), circ_of(d), P_of(d));
}

RepData to_representation(const Document& d) {
  const Space v = d.module ? *d.module : Space();
  const std::size_t m = v.dim();
  auto zeros = [&] { return std::vector<Matrix>(d.dim(), Matrix(m, m)); };
  return RepData(to_rel_poisson(d), v, d.mu ? *d.mu : zeros(), d.rho ? *d.rho : zeros(),
                 d.alpha ? *d.alpha : Matrix(m, m));
}

BialgebraData to_bialgebra(const Document& d) {
  return BialgebraData{to_rel_poisson(d), d.Delta ? *d.Delta : Comultiplication(d.space),
                       d.delta ? *d.delta : Comultiplication(d.space), Q_of(d)};
}

Document from_rel_poisson(const RelPoissonAlgebra& a, std::string note) {
  Document d;
  d.kind = "rel-poisson";
  d.note = std::move(note);
  d.space = a.space;
  d.dot = a.dot;
  d.bracket = a.bracket;
  d.P = a.P;
  return d;
}

Document from_rel_pre_poisson(const RelPrePoissonAlgebra& pp, std::string note) {
  Document d;
  d.kind = "rel-pre-poisson";
  d.note = std::move(note);
  d.space = pp.space;
  d.star = pp.star;
  d.circ = pp.circ;
  d.P = pp.P;
  return d;
}

Document from_bialgebra(const BialgebraData& b, std::string note) {
  Document d = from_rel_poisson(b.algebra, std::move(note));
  d.kind = "bialgebra";
  d.Q = b.Q;
  d.Delta = b.Delta;
  d.delta = b.delta;
  return d;
}

Document from_rmatrix(const RelPoissonAlgebra& a, const Matrix& Q, const Matrix& r, std::string note) {
  check_shape(Q, a.dim(), a.dim(), "Q");
  check_shape(r, a.dim(), a.dim(), "r");
  Document d = from_rel_poisson(a, std::move(note));
  d.kind = "rmatrix";
  d.Q = Q;
  d.r = r;
  return d;
}

Document from_form(const RelPoissonAlgebra& a, const BilinForm& form, std::string note) {
  check_shape(form.gram, a.dim(), a.dim(), "gram");
  Document d = from_rel_poisson(a, std::move(note));
  d.kind = "bilinear-form";
  d.gram = form.gram;
  return d;
}

}  // namespace rpa::cli
