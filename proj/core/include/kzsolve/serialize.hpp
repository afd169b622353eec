#pragma once

#include <string>

#include "kzsolve/kz_assembly.hpp"
#include "kzsolve/report.hpp"

namespace kz {

// JSON documents with rationals as "p/q" strings, polynomials as term lists
// in graded-lex order, rational functions as {num, den}, matrices row-major.
// Serialization is canonical: equal values produce identical bytes.
std::string to_document(const AssembledSolution& sol);
AssembledSolution solution_from_document(const std::string& text);  // throws ParseError

std::string to_document(const RFMatrix& m);
RFMatrix matrix_from_document(const std::string& text);

std::string report_to_json(const Report& rep, const std::string& command_echo);

// LaTeX emission (documentation aid, non-canonical).
std::string latex_matrix(const RatMatrix& m);
std::string latex_matrix(const RFMatrix& m, const std::string& var_prefix);

} // namespace kz
