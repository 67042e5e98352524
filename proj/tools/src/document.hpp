#pragma once

#include "rpa/rpa.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpa::cli {

/// Malformed text, bad scalar, out-of-range index, duplicate entry or
/// unknown kind.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure read from or written to a JSON document. Which optional
/// fields may appear depends on the kind; a permitted field that is absent
/// stands for zero.
struct Document {
  std::string kind;
  std::string note;
  Space space;

  std::optional<BilinearOp> dot, bracket, star, circ;
  std::optional<Matrix> P, Q, r, gram;

  std::optional<Space> module;
  std::optional<std::vector<Matrix>> mu, rho;
  std::optional<Matrix> alpha, beta, T;

  std::optional<Comultiplication> Delta, delta;

  std::size_t dim() const { return space.dim(); }
  friend bool operator==(const Document&, const Document&) = default;
};

const std::vector<std::string>& known_kinds();
/// Field names permitted for a kind, in serialization order.
const std::vector<std::string>& fields_of(const std::string& kind);

Document parse_document(const std::string& text);
Document read_document(const std::string& path);
/// Canonical text: fixed key order, entries sorted by indices, zero entries
/// dropped, fractions reduced, one entry per line.
std::string serialize(const Document& doc);
void write_document(const Document& doc, const std::string& path);

/// Accessors that fill absent fields with zero of the right shape.
BilinearOp dot_of(const Document& d);
BilinearOp bracket_of(const Document& d);
BilinearOp star_of(const Document& d);
BilinearOp circ_of(const Document& d);
Matrix P_of(const Document& d);
Matrix Q_of(const Document& d);

RelPoissonAlgebra to_rel_poisson(const Document& d);
RelPrePoissonAlgebra to_rel_pre_poisson(const Document& d);
RepData to_representation(const Document& d);
BialgebraData to_bialgebra(const Document& d);

/// Builders; every permitted field of the kind is set.
Document from_rel_poisson(const RelPoissonAlgebra& a, std::string note = {});
Document from_rel_pre_poisson(const RelPrePoissonAlgebra& pp, std::string note = {});
Document from_bialgebra(const BialgebraData& b, std::string note = {});
Document from_rmatrix(const RelPoissonAlgebra& a, const Matrix& Q, const Matrix& r, std::string note = {});
Document from_form(const RelPoissonAlgebra& a, const BilinForm& form, std::string note = {});

}  // namespace rpa::cli
