#include "springer/cli.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "springer/basis.hpp"
#include "springer/billey.hpp"
#include "springer/filling.hpp"
#include "springer/hessenberg.hpp"
#include "springer/json_io.hpp"
#include "springer/nilmatrix.hpp"
#include "springer/partition.hpp"
#include "springer/permutation.hpp"
#include "springer/pinball.hpp"
#include "springer/polynomial.hpp"
#include "springer/render.hpp"

namespace springer {

namespace {

enum class Fmt { text, json, csv, latex };

Fmt parse_fmt(const std::string& s) {
  if (s == "text") return Fmt::text;
  if (s == "json") return Fmt::json;
  if (s == "csv") return Fmt::csv;
  if (s == "latex") return Fmt::latex;
  throw std::invalid_argument("unknown format: " + s);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (pos != item.size())
      throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

Permutation parse_perm(const std::string& spec, int n) {
  if (spec == "id" || spec == "identity") return Permutation::identity(n);
  Permutation w{parse_int_list(spec)};
  if (w.n() != n)
    throw std::invalid_argument("permutation must have length " +
                                std::to_string(n));
  return w;
}

Permutation parse_sigma(const std::string& spec, const Partition& shape) {
  if (spec == "rotated-english") return rotated_english_sigma(shape);
  return parse_perm(spec, shape.n());
}

HessenbergFunction parse_h(const std::string& spec, int n) {
  if (spec == "id" || spec == "identity") return identity_h(n);
  std::vector<int> vals = parse_int_list(spec);
  if ((int)vals.size() != n)
    throw std::invalid_argument("h must have length " + std::to_string(n));
  return HessenbergFunction(std::move(vals));
}

std::string ones_str(const NilMatrix& X) {
  if (X.ones().empty()) return "-";
  std::string s;
  for (const auto& [i, j] : X.ones()) {
    if (!s.empty()) s += ",";
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return s;
}

std::string latex_poly(const UniPoly& p) {
  const std::string plain = p.str();
  std::string s;
  for (size_t i = 0; i < plain.size(); ++i) {
    if (plain[i] != '^') {
      s += plain[i];
      continue;
    }
    size_t j = i + 1;
    while (j < plain.size() && std::isdigit((unsigned char)plain[j])) ++j;
    s += "^{" + plain.substr(i + 1, j - i - 1) + "}";
    i = j - 1;
  }
  return s;
}

int cmd_highest_forms(const Partition& shape, Fmt fmt, std::ostream& out) {
  const std::vector<Filling> fillings = highest_form_fillings(shape);
  std::set<NilMatrix> distinct;
  std::vector<std::vector<std::string>> cells{{"filling", "sigma", "matrix"}};
  Json jrows = Json::array();
  for (const auto& T : fillings) {
    const Permutation s = english_read(T);
    const NilMatrix N = adjacent_pair_matrix(T);
    distinct.insert(N);
    cells.push_back({T.str(), s.str(), ones_str(N)});
    jrows.push_back(Json{{"filling", filling_json(T)},
                         {"sigma", perm_json(s)},
                         {"matrix", nilmatrix_json(N)}});
  }
  const long long formula = count_distinct_highest_forms(shape);
  const bool ok = (long long)distinct.size() == formula;
  switch (fmt) {
    case Fmt::text:
      out << render_table_text(cells);
      out << "fillings: " << fillings.size() << "\n";
      out << "distinct matrices: " << distinct.size() << "\n";
      out << "closed form: " << formula << "\n";
      out << "check: " << (ok ? "ok" : "FAIL") << "\n";
      break;
    case Fmt::json: {
      const Json j{{"partition", partition_json(shape)},
                   {"fillings", jrows},
                   {"distinct_matrices", (long long)distinct.size()},
                   {"closed_form", formula},
                   {"check", ok}};
      out << j.dump(2) << "\n";
      break;
    }
    case Fmt::csv:
      out << render_table_csv(cells);
      break;
    case Fmt::latex:
      out << render_table_latex(cells);
      break;
  }
  return ok ? 0 : 1;
}

int cmd_pinball(const Partition& shape, const Permutation& sigma, Fmt fmt,
                std::ostream& out) {
  const std::vector<PinballRow> rows = pinball_table(shape, sigma);
  switch (fmt) {
    case Fmt::text:
      out << render_table_text(pinball_cells(rows));
      break;
    case Fmt::json: {
      Json jrows = Json::array();
      for (const auto& r : rows) jrows.push_back(pinball_row_json(r));
      const Json j{{"partition", partition_json(shape)},
                   {"sigma", perm_json(sigma)},
                   {"rows", jrows}};
      out << j.dump(2) << "\n";
      break;
    }
    case Fmt::csv:
      out << render_table_csv(pinball_cells(rows));
      break;
    case Fmt::latex:
      out << render_table_latex(pinball_cells(rows));
      break;
  }
  return 0;
}

int cmd_fixed_points(const Partition& shape, const HessenbergFunction& h,
                     const Permutation& sigma, bool brute, Fmt fmt,
                     std::ostream& out, std::ostream& err) {
  const std::vector<Filling> fillings =
      h.is_identity() ? canonical_filling_order(shape, sigma)
                      : permissible_fillings(shape, h);
  std::vector<std::vector<std::string>> cells{{"w", "filling"}};
  Json jrows = Json::array();
  std::vector<Permutation> points;
  for (const auto& T : fillings) {
    const Permutation w = fixed_point_of_filling(T, sigma);
    points.push_back(w);
    cells.push_back({w.str(), T.str()});
    jrows.push_back(Json{{"w", perm_json(w)}, {"filling", filling_json(T)}});
  }
  bool checked = false;
  if (brute) {
    if (shape.n() > 8) {
      err << "error: --brute-force enumerates S_n and supports n <= 8\n";
      return 2;
    }
    const NilMatrix N = conjugate(jordan_matrix(shape), sigma);
    const std::vector<Permutation> bf = fixed_points_bruteforce(N, h);
    std::vector<Permutation> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != bf) {
      err << "brute force MISMATCH: fillings give " << sorted.size()
          << " points, enumeration gives " << bf.size() << "\n";
      return 1;
    }
    checked = true;
  }
  switch (fmt) {
    case Fmt::text:
      out << render_table_text(cells);
      if (checked)
        out << "brute force: match (" << points.size() << " points)\n";
      break;
    case Fmt::json: {
      Json j{{"partition", partition_json(shape)},
             {"h", hess_json(h)},
             {"sigma", perm_json(sigma)},
             {"points", jrows}};
      if (checked) j["brute_force_match"] = true;
      out << j.dump(2) << "\n";
      break;
    }
    case Fmt::csv:
      out << render_table_csv(cells);
      break;
    case Fmt::latex:
      out << render_table_latex(cells);
      break;
  }
  return 0;
}

int cmd_betti(const Partition& shape, Fmt fmt, std::ostream& out) {
  const std::vector<long long> b = betti_numbers(shape);
  std::string line;
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) line += ",";
    line += std::to_string(b[i]);
  }
  std::vector<std::vector<std::string>> cells(2);
  for (size_t i = 0; i < b.size(); ++i) {
    cells[0].push_back("b_" + std::to_string(i));
    cells[1].push_back(std::to_string(b[i]));
  }
  switch (fmt) {
    case Fmt::text:
      out << line << "\n";
      break;
    case Fmt::json: {
      const Json j{{"partition", partition_json(shape)}, {"betti", b}};
      out << j.dump(2) << "\n";
      break;
    }
    case Fmt::csv:
      out << render_table_csv(cells);
      break;
    case Fmt::latex:
      out << render_table_latex(cells);
      break;
  }
  return 0;
}

int cmd_restrict(const Partition& shape, const Permutation& v,
                 const Permutation& u, const Permutation& sigma, Fmt fmt,
                 std::ostream& out) {
  const WeightAssignment wts = circle_weights(shape, sigma);
  const UniPoly p = springer_schubert(v, u, wts);
  switch (fmt) {
    case Fmt::text:
    case Fmt::csv:
      out << p.str() << "\n";
      break;
    case Fmt::json: {
      const Json j{{"partition", partition_json(shape)},
                   {"sigma", perm_json(sigma)},
                   {"v", perm_json(v)},
                   {"u", perm_json(u)},
                   {"value", unipoly_json(p)}};
      out << j.dump(2) << "\n";
      break;
    }
    case Fmt::latex:
      out << "$" << latex_poly(p) << "$\n";
      break;
  }
  return 0;
}

bool is_two_row(const Partition& shape) {
  return shape.num_rows() == 2 && shape.row(2) == 2;
}

int cmd_verify_basis(const Partition& shape, Fmt fmt, std::ostream& out) {
  const RestrictionMatrix M = build_matrix(shape);
  const int n = shape.n();
  const RankResult rk = is_full_column_rank(M);
  const TriangularReport tri = check_upper_triangular(M);
  const bool two_row = is_two_row(shape);

  bool b_zero = false;
  int a_state = -1;  // -1 n/a, 0 differs, 1 equal
  bool a_unproj = false;
  int d_state = -1;  // -1 n/a, 0 differs, 1 equal
  int d_row = -1, d_col = -1;
  UniPoly d_got, d_want;
  if (two_row) {
    b_zero = true;
    for (const auto& row : b_block(M))
      for (const auto& e : row)
        if (!e.is_zero()) b_zero = false;
    if (shape.row(1) >= 3) {
      const ABlockComparison cmp = compare_a_block(M);
      a_state = cmp.literal ? 1 : 0;
      a_unproj = cmp.unprojected;
    }
    if (n >= 6) {
      const auto D = d_block(M);
      const auto C = d_block_closed_form(n);
      d_state = 1;
      for (int r = 0; r < (int)D.size() && d_state == 1; ++r)
        for (int c = 0; c < (int)D[r].size(); ++c)
          if (D[r][c] != C[r][c]) {
            d_state = 0;
            d_row = r;
            d_col = c;
            d_got = D[r][c];
            d_want = C[r][c];
            break;
          }
    }
  }

  if (fmt == Fmt::text) {
    out << "partition: " << shape.str() << "\n";
    out << "points: " << M.size() << "\n";
    out << "rank: " << rk.rank << " / " << M.size() << "\n";
    out << "full column rank: " << (rk.full_column_rank ? "yes" : "no")
        << "\n";
    if (rk.full_column_rank && rk.minor) {
      out << "certificate: nonzero maximal minor, degree "
          << rk.minor->degree() << "\n";
    } else if (rk.dependence) {
      out << "dependence certificate over columns:";
      for (int j = 0; j < (int)rk.dependence->size(); ++j)
        if (!(*rk.dependence)[j].is_zero())
          out << " " << j << ":" << (*rk.dependence)[j].str();
      out << "\n";
    }
    out << "poset-upper-triangular: "
        << (tri.inequality_holds() ? "yes" : "no") << "\n";
    auto dump_pairs =
        [&out](const std::vector<std::pair<Permutation, Permutation>>& pairs,
               const char* label) {
          if (pairs.empty()) return;
          out << "  " << label << ": " << pairs.size() << "\n";
          int shown = 0;
          for (const auto& [w, u] : pairs) {
            if (shown++ == 4) {
              out << "    ...\n";
              break;
            }
            out << "    w=" << w.str() << " u=" << u.str() << "\n";
          }
        };
    dump_pairs(tri.roll_leq_only, "roll(w) <= u without w <= u");
    dump_pairs(tri.w_leq_only, "w <= u without roll(w) <= u");
    if (two_row) {
      out << "B block zero: " << (b_zero ? "yes" : "no") << "\n";
      if (a_state >= 0) {
        const Partition prev({shape.row(1) - 1, 2});
        out << "A block equals " << prev.str()
            << " matrix: " << (a_state == 1 ? "yes" : "no") << "\n";
        out << "A block restrictions match " << prev.str()
            << " before weight projection: " << (a_unproj ? "yes" : "no")
            << "\n";
      }
      if (d_state >= 0) {
        out << "D block matches closed form: "
            << (d_state == 1 ? "yes" : "no") << "\n";
        if (d_state == 0)
          out << "  first difference at row " << d_row + 1 << " col "
              << d_col + 1 << ": computed " << d_got.str()
              << ", closed form " << d_want.str() << "\n";
      } else {
        out << "D block closed form: n/a (defined for n >= 6)\n";
      }
      for (const auto& col : tri.columns) {
        out << "change of basis k=" << col.k << " (roll " << col.roll.str()
            << "): multiple " << col.zeroing_multiple.str()
            << ", zero prefix " << col.zero_prefix << ", tail";
        for (const auto& p : col.tail) out << " " << p.str();
        out << "\n";
        out << "  documented multiple and tail: "
            << (col.documented_pattern_holds ? "holds" : "does not hold")
            << "\n";
      }
    }
    out << (rk.full_column_rank ? "verified: full column rank\n"
                                : "FAILED: rank deficient\n");
  } else if (fmt == Fmt::json) {
    Json j{{"partition", partition_json(shape)},
           {"sigma", perm_json(M.sigma)},
           {"weights", weights_json(M.wts)},
           {"matrix", matrix_json(M)},
           {"rank", rk.rank},
           {"full_column_rank", rk.full_column_rank},
           {"poset_upper_triangular", tri.inequality_holds()}};
    Json rolls = Json::array();
    for (const auto& r : M.rolls) rolls.push_back(perm_json(r));
    j["rolls"] = rolls;
    Json viol_roll = Json::array(), viol_w = Json::array();
    for (const auto& [w, u] : tri.roll_leq_only)
      viol_roll.push_back(Json::array({perm_json(w), perm_json(u)}));
    for (const auto& [w, u] : tri.w_leq_only)
      viol_w.push_back(Json::array({perm_json(w), perm_json(u)}));
    j["violations_roll_only"] = viol_roll;
    j["violations_w_only"] = viol_w;
    if (two_row) {
      j["b_block_zero"] = b_zero;
      if (a_state >= 0) {
        j["a_block_literal"] = (a_state == 1);
        j["a_block_unprojected"] = a_unproj;
      }
      if (d_state >= 0) j["d_block_matches_closed_form"] = (d_state == 1);
      Json cols = Json::array();
      for (const auto& col : tri.columns) {
        Json tail = Json::array();
        for (const auto& p : col.tail) tail.push_back(unipoly_json(p));
        cols.push_back(Json{
            {"k", col.k},
            {"roll", perm_json(col.roll)},
            {"top_entry", unipoly_json(col.top_entry)},
            {"zeroing_multiple", unipoly_json(col.zeroing_multiple)},
            {"zero_prefix", col.zero_prefix},
            {"tail", tail},
            {"documented_pattern_holds", col.documented_pattern_holds}});
      }
      j["change_of_basis"] = cols;
    }
    out << j.dump(2) << "\n";
  } else {
    // Data export: the D block once it exists, else the whole matrix.
    const std::vector<std::vector<UniPoly>> grid =
        (two_row && n >= 6) ? d_block(M) : M.entries;
    out << (fmt == Fmt::csv ? render_poly_matrix_csv(grid)
                            : render_poly_matrix_latex(grid));
  }
  return rk.full_column_rank ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "exact fixed-point, pinball, and basis computations for nilpotent "
      "Hessenberg and Springer varieties"};
  app.require_subcommand(1);
  // The Hessenberg flag is spelled --h, so help lives on --help alone.
  app.set_help_flag("--help", "print help");
  const std::vector<std::string> formats{"text", "json", "csv", "latex"};

  struct Opts {
    std::string partition;
    std::string format = "text";
    std::string sigma = "rotated-english";
    std::string h = "id";
    std::string v, u;
    bool brute = false;
  };
  Opts hf, pb, fp, bt, vb, rs;

  const char* part_help = "partition as comma-separated row lengths, e.g. 4,2";
  const char* sigma_help =
      "reading order: rotated-english, id, or a one-line comma list";

  CLI::App* c_hf = app.add_subcommand(
      "highest-forms",
      "enumerate highest-form fillings, their matrices, and the count");
  c_hf->add_option("partition", hf.partition, part_help)->required();
  c_hf->add_option("--format", hf.format, "output format")
      ->check(CLI::IsMember(formats));

  CLI::App* c_pb = app.add_subcommand(
      "pinball", "dimension pairs, degrees, and rolldowns per fixed point");
  c_pb->add_option("partition", pb.partition, part_help)->required();
  c_pb->add_option("--format", pb.format, "output format")
      ->check(CLI::IsMember(formats));
  c_pb->add_option("--sigma", pb.sigma, sigma_help);
  c_pb->add_option("--h", pb.h, "Hessenberg function; must be id here");

  CLI::App* c_fp = app.add_subcommand(
      "fixed-points", "fixed points with their permissible fillings");
  c_fp->add_option("partition", fp.partition, part_help)->required();
  c_fp->add_option("--format", fp.format, "output format")
      ->check(CLI::IsMember(formats));
  c_fp->add_option("--sigma", fp.sigma, sigma_help);
  c_fp->add_option("--h", fp.h, "Hessenberg function: id or a comma list");
  c_fp->add_flag("--brute-force", fp.brute,
                 "cross-check against enumeration of S_n (n <= 8)");

  CLI::App* c_bt =
      app.add_subcommand("betti", "Betti numbers from filling degrees");
  c_bt->add_option("partition", bt.partition, part_help)->required();
  c_bt->add_option("--format", bt.format, "output format")
      ->check(CLI::IsMember(formats));

  CLI::App* c_vb = app.add_subcommand(
      "verify-basis",
      "build the restriction matrix and certify its column rank");
  c_vb->add_option("partition", vb.partition, part_help)->required();
  c_vb->add_option("--format", vb.format, "output format")
      ->check(CLI::IsMember(formats));

  CLI::App* c_rs = app.add_subcommand(
      "restrict", "one projected Schubert class restriction p_v(u)");
  c_rs->add_option("partition", rs.partition, part_help)->required();
  c_rs->add_option("--v", rs.v, "Schubert class index, one-line comma list")
      ->required();
  c_rs->add_option("--u", rs.u, "fixed point, one-line comma list")
      ->required();
  c_rs->add_option("--format", rs.format, "output format")
      ->check(CLI::IsMember(formats));
  c_rs->add_option("--sigma", rs.sigma, sigma_help);

  for (CLI::App* sub : {c_hf, c_pb, c_fp, c_bt, c_vb, c_rs})
    sub->set_help_flag("--help", "print help");

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("springer");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());

  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_hf->parsed()) {
      const Partition shape = Partition::parse(hf.partition);
      return cmd_highest_forms(shape, parse_fmt(hf.format), out);
    }
    if (c_pb->parsed()) {
      const Partition shape = Partition::parse(pb.partition);
      if (!parse_h(pb.h, shape.n()).is_identity()) {
        err << "error: pinball is defined for h = id only\n";
        return 2;
      }
      return cmd_pinball(shape, parse_sigma(pb.sigma, shape),
                         parse_fmt(pb.format), out);
    }
    if (c_fp->parsed()) {
      const Partition shape = Partition::parse(fp.partition);
      return cmd_fixed_points(shape, parse_h(fp.h, shape.n()),
                              parse_sigma(fp.sigma, shape), fp.brute,
                              parse_fmt(fp.format), out, err);
    }
    if (c_bt->parsed()) {
      const Partition shape = Partition::parse(bt.partition);
      return cmd_betti(shape, parse_fmt(bt.format), out);
    }
    if (c_vb->parsed()) {
      const Partition shape = Partition::parse(vb.partition);
      return cmd_verify_basis(shape, parse_fmt(vb.format), out);
    }
    if (c_rs->parsed()) {
      const Partition shape = Partition::parse(rs.partition);
      return cmd_restrict(shape, parse_perm(rs.v, shape.n()),
                          parse_perm(rs.u, shape.n()),
                          parse_sigma(rs.sigma, shape), parse_fmt(rs.format),
                          out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace springer
