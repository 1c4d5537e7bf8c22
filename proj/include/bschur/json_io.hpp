#pragma once

#include <json.hpp>

#include "bschur/arc.hpp"
#include "bschur/descents.hpp"
#include "bschur/partition.hpp"
#include "bschur/qpoly.hpp"
#include "bschur/qsym.hpp"
#include "bschur/signed_permutation.hpp"
#include "bschur/tableaux.hpp"

namespace bschur {

// Schemas:
//   partition            [5,5,3,3,2]
//   permutation          "-3,8,5,-2,1,-9,-7,4,-6"
//   Young tableau        {"rows":[[1,3],[2]]}
//   domino tableau       {"shape":[...],"kind":"standard","dominoes":
//                          [{"row":1,"col":1,"orient":"V","label":1},...]}
//                        dominoes sorted by (row, col)
//   bi-tableau           {"t1":{"rows":...},"t2":{"rows":...},"kind":...}
//   descent set          [0,2,3]
//   signed descent set   {"S":[...],"eps":"+-..."}
//   polynomial           {"degree":n,"vars":m+1,"terms":[{"exps":[...],"coef":c}]}
//   classification       {"type":"T3","k":4,"l":1,"pattern":"P2"}

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SignedPermutation& pi);
SignedPermutation signed_permutation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const YoungTableau& t);
YoungTableau young_tableau_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DominoTableau& t);
DominoTableau domino_tableau_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BiTableau& b);
BiTableau bitableau_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DescentSet& d);
nlohmann::json to_json(const SignedDescentSet& sd);

nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SBExpansion& e);

nlohmann::json to_json(const ArcClassification& c);

nlohmann::json to_json(const Weight& w);

} // namespace bschur
