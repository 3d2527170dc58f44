#pragma once
// Text, CSV, and LaTeX emitters. All output is deterministic; the text
// table layout is the byte format the golden files pin down.

#include <string>
#include <vector>

#include "springer/basis.hpp"
#include "springer/pinball.hpp"

namespace springer {

// "{(1,2),(3,4)}"; "{}" when empty.
std::string dim_pairs_str(const std::vector<DimPair>& pairs);

// Space-padded columns, two-space gutter, no trailing whitespace, final
// newline; first row is the header.
std::string render_table_text(const std::vector<std::vector<std::string>>& rows);
// RFC-style CSV: fields holding comma, quote, or newline get quoted.
std::string render_table_csv(const std::vector<std::vector<std::string>>& rows);
// tabular with a header rule.
std::string render_table_latex(const std::vector<std::vector<std::string>>& rows);

std::vector<std::vector<std::string>> pinball_cells(
    const std::vector<PinballRow>& rows);

// Polynomial grid without labels, one matrix row per line.
std::string render_poly_matrix_text(
    const std::vector<std::vector<UniPoly>>& M);
std::string render_poly_matrix_csv(const std::vector<std::vector<UniPoly>>& M);
std::string render_poly_matrix_latex(
    const std::vector<std::vector<UniPoly>>& M);

}  // namespace springer
