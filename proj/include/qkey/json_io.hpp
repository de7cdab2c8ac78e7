#pragma once

#include <json.hpp>

#include "qkey/hall.hpp"
#include "qkey/hecke.hpp"
#include "qkey/laurent.hpp"
#include "qkey/matrix.hpp"
#include "qkey/operators.hpp"
#include "qkey/qrat.hpp"
#include "qkey/scalar.hpp"

namespace qkey {

using Json = nlohmann::json;

// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const Integer& z);
Integer integer_from_json(const Json& j);

/// {"num":[c0,c1,...],"den":[...]}, ascending powers of q.
Json to_json(const QRat& r);
QRat qrat_from_json(const Json& j);

/// {"n":3,"terms":[{"exp":[2,1,0],"coeff":QRat},...]}
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

/// {"n":3,"terms":[{"perm":[3,1,2],"coeff":QRat},...]}
Json to_json(const HeckeElt& h);
HeckeElt hecke_from_json(const Json& j);

/// {"terms":[{"partition":[2,1],"coeff":QRat},...]}
Json to_json(const HLExpansion& e);
HLExpansion hl_expansion_from_json(const Json& j);

/// [{"kind":"box","i":1,"shift":QRat},...]
Json to_json(const OpWord& w);
OpWord op_word_from_json(const Json& j);

/// {"rows":[[..],..],"cols":[[..],..],"entries":[[QRat,..],..]}
Json to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

/// {"lambda":[2,1,0],"n":3,"left":[..],"right":[..],"gram":[[QRat,..]],"pass":true}
Json to_json(const ScalarReport& r);
ScalarReport scalar_report_from_json(const Json& j);

}  // namespace qkey
