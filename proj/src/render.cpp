#include "springer/render.hpp"

#include <algorithm>
#include <sstream>

namespace springer {

std::string dim_pairs_str(const std::vector<DimPair>& pairs) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i) out << ',';
    out << '(' << pairs[i].a << ',' << pairs[i].b << ')';
  }
  out << '}';
  return out.str();
}

std::string render_table_text(
    const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::vector<size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) line += std::string(width[c - 1] - row[c - 1].size() + 2, ' ');
      line += row[c];
    }
    out << line << '\n';
  }
  return out.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string latex_field(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '{' || ch == '}') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string render_table_csv(
    const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << csv_field(row[c]);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_table_latex(
    const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::ostringstream out;
  out << "\\begin{tabular}{" << std::string(rows[0].size(), 'c') << "}\n";
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out << " & ";
      out << latex_field(rows[r][c]);
    }
    out << " \\\\\n";
    if (r == 0) out << "\\hline\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

std::vector<std::vector<std::string>> pinball_cells(
    const std::vector<PinballRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(
      {"w", "w^-1", "filling", "dim_pairs", "deg", "omega", "roll"});
  for (const auto& row : rows)
    cells.push_back({row.w.str(), row.w.inverse().str(), row.filling.str(),
                     dim_pairs_str(row.dim_pairs), std::to_string(row.deg),
                     row.omega.str(), row.roll.str()});
  return cells;
}

namespace {

std::vector<std::vector<std::string>> poly_cells(
    const std::vector<std::vector<UniPoly>>& M) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : M) {
    std::vector<std::string> line;
    for (const auto& p : row) line.push_back(p.str());
    cells.push_back(std::move(line));
  }
  return cells;
}

}  // namespace

std::string render_poly_matrix_text(
    const std::vector<std::vector<UniPoly>>& M) {
  return render_table_text(poly_cells(M));
}

std::string render_poly_matrix_csv(
    const std::vector<std::vector<UniPoly>>& M) {
  return render_table_csv(poly_cells(M));
}

std::string render_poly_matrix_latex(
    const std::vector<std::vector<UniPoly>>& M) {
  std::ostringstream out;
  out << "\\begin{pmatrix}\n";
  for (const auto& row : M) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << " & ";
      out << row[c].str();
    }
    out << " \\\\\n";
  }
  out << "\\end{pmatrix}\n";
  return out.str();
}

}  // namespace springer
