#include "springer/json_io.hpp"

#include <stdexcept>

namespace springer {

Json perm_json(const Permutation& w) { return Json(w.oneline()); }

Json partition_json(const Partition& shape) { return Json(shape.rows()); }

Json filling_json(const Filling& T) { return Json(T.rows()); }

Json nilmatrix_json(const NilMatrix& X) {
  Json ones = Json::array();
  for (auto [i, j] : X.ones()) ones.push_back(Json::array({i, j}));
  return Json{{"n", X.n()}, {"ones", std::move(ones)}};
}

Json weights_json(const WeightAssignment& wts) { return Json(wts.weights); }

Json hess_json(const HessenbergFunction& h) { return Json(h.values()); }

Json unipoly_json(const UniPoly& p) {
  Json out = Json::array();
  for (const Rat& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

Json pinball_row_json(const PinballRow& row) {
  Json pairs = Json::array();
  for (const auto& p : row.dim_pairs) pairs.push_back(Json::array({p.a, p.b}));
  return Json{{"w", perm_json(row.w)},
              {"filling", filling_json(row.filling)},
              {"dim_pairs", std::move(pairs)},
              {"deg", row.deg},
              {"omega", perm_json(row.omega)},
              {"roll", perm_json(row.roll)}};
}

Json matrix_json(const RestrictionMatrix& M) {
  Json order = Json::array();
  for (const auto& w : M.order) order.push_back(perm_json(w));
  Json entries = Json::array();
  for (const auto& row : M.entries) {
    Json line = Json::array();
    for (const auto& p : row) line.push_back(unipoly_json(p));
    entries.push_back(std::move(line));
  }
  return Json{{"order", std::move(order)}, {"entries", std::move(entries)}};
}

namespace {

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(v.get<int>());
  return out;
}

}  // namespace

Permutation perm_from_json(const Json& j) {
  return Permutation(int_list(j, "permutation"));
}

Partition partition_from_json(const Json& j) {
  return Partition(int_list(j, "partition"));
}

Filling filling_from_json(const Json& j) {
  std::vector<std::vector<int>> rows;
  std::vector<int> lens;
  for (const auto& row : j) {
    rows.push_back(int_list(row, "filling row"));
    lens.push_back((int)rows.back().size());
  }
  return Filling(Partition(std::move(lens)), std::move(rows));
}

NilMatrix nilmatrix_from_json(const Json& j) {
  std::vector<std::pair<int, int>> ones;
  for (const auto& pos : j.at("ones"))
    ones.emplace_back(pos.at(0).get<int>(), pos.at(1).get<int>());
  return NilMatrix(j.at("n").get<int>(), std::move(ones));
}

WeightAssignment weights_from_json(const Json& j) {
  WeightAssignment wts;
  wts.weights = int_list(j, "weights");
  wts.n = (int)wts.weights.size();
  return wts;
}

HessenbergFunction hess_from_json(const Json& j) {
  return HessenbergFunction(int_list(j, "hessenberg"));
}

UniPoly unipoly_from_json(const Json& j) {
  std::vector<Rat> coeffs;
  for (const auto& c : j) {
    Rat q(c.get<std::string>());
    q.canonicalize();
    coeffs.push_back(std::move(q));
  }
  return UniPoly(std::move(coeffs));
}

PinballRow pinball_row_from_json(const Json& j) {
  std::vector<DimPair> pairs;
  for (const auto& p : j.at("dim_pairs"))
    pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  return PinballRow{perm_from_json(j.at("w")),
                    filling_from_json(j.at("filling")),
                    std::move(pairs),
                    j.at("deg").get<int>(),
                    perm_from_json(j.at("omega")),
                    perm_from_json(j.at("roll"))};
}

std::pair<std::vector<Permutation>, std::vector<std::vector<UniPoly>>>
matrix_from_json(const Json& j) {
  std::vector<Permutation> order;
  for (const auto& w : j.at("order")) order.push_back(perm_from_json(w));
  std::vector<std::vector<UniPoly>> entries;
  for (const auto& row : j.at("entries")) {
    std::vector<UniPoly> line;
    for (const auto& p : row) line.push_back(unipoly_from_json(p));
    entries.push_back(std::move(line));
  }
  return {std::move(order), std::move(entries)};
}

}  // namespace springer
