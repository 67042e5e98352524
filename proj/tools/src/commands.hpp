#pragma once

#include "document.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rpa::cli {

enum ExitCode : int { kOk = 0, kAxiomFailure = 1, kPrecondition = 2, kParseOrIo = 3 };

/// Kinds accepted by `check --as`: every document kind plus the derived
/// predicates jacobi, frobenius-jacobi, matched-pair and manin-triple.
const std::vector<std::string>& check_kinds();
AxiomReport check_as(const Document& doc, const std::string& kind);

/// Runs one construction recipe on a parsed input.
Document construct(const std::string& recipe, const Document& input);
const std::vector<std::string>& recipes();

/// Human-readable listing of every nonzero structure constant.
std::string describe(const Document& doc);
std::string format_report(const AxiomReport& report);
std::string report_json(const AxiomReport& report, const std::string& kind);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpa::cli
