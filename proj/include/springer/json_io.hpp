#pragma once
// JSON serialization and parsing for every type that crosses the CLI
// boundary. Schemas:
//   Permutation        [2,4,1,3]               (one-line)
//   Partition          [4,2]                   (row lengths)
//   Filling            [[2,4],[1,3]]           (rows; shape implied)
//   NilMatrix          {"n":4,"ones":[[1,3],[2,4]]}
//   WeightAssignment   [2,6,1,5,4,3]
//   HessenbergFunction [1,2,3,4]
//   UniPoly            ["0","-2"]              (ascending powers of t)
//   PinballRow         {"w","filling","dim_pairs","deg","omega","roll"}
//   RestrictionMatrix  {"order":[...],"entries":[[...]...]}

#include <utility>
#include <vector>

#include "json.hpp"

#include "springer/basis.hpp"
#include "springer/hessenberg.hpp"
#include "springer/nilmatrix.hpp"
#include "springer/pinball.hpp"

namespace springer {

using Json = nlohmann::json;

Json perm_json(const Permutation& w);
Json partition_json(const Partition& shape);
Json filling_json(const Filling& T);
Json nilmatrix_json(const NilMatrix& X);
Json weights_json(const WeightAssignment& wts);
Json hess_json(const HessenbergFunction& h);
Json unipoly_json(const UniPoly& p);
Json pinball_row_json(const PinballRow& row);
Json matrix_json(const RestrictionMatrix& M);

Permutation perm_from_json(const Json& j);
Partition partition_from_json(const Json& j);
Filling filling_from_json(const Json& j);
NilMatrix nilmatrix_from_json(const Json& j);
WeightAssignment weights_from_json(const Json& j);
HessenbergFunction hess_from_json(const Json& j);
UniPoly unipoly_from_json(const Json& j);
PinballRow pinball_row_from_json(const Json& j);
std::pair<std::vector<Permutation>, std::vector<std::vector<UniPoly>>>
matrix_from_json(const Json& j);

}  // namespace springer
