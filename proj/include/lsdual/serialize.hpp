#pragma once

#include "lsdual/commring.hpp"
#include "lsdual/dihedral.hpp"
#include "lsdual/ncalg.hpp"
#include "lsdual/subspace.hpp"

#include "json.hpp"

namespace lsdual {

using Json = nlohmann::ordered_json;

/// Rationals are always written as "p/q".
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// [[index, "p/q"], ...]
Json to_json(const SparseVector& v);
SparseVector sparse_from_json(const Json& j, std::size_t dim);

/// {"ambient": n, "dim": d, "basis": [sparse vectors]}
Json to_json(const Subspace& s);
/// Throws std::invalid_argument when the payload is not a reduced echelon basis.
Subspace subspace_from_json(const Json& j);

/// [{"word": "xzz", "coeff": "p/q"}, ...]; the empty word is "".
Json to_json(const NcPoly& p);
/// [{"left": ..., "right": ..., "coeff": ...}, ...]
Json to_json(const Tensor2& t);
/// [{"exponents": [...], "coeff": "p/q"}, ...]
Json to_json(const CommPoly& p);

/// {"kind": "I" | "I'", "index": [...]}
Json to_json(const VIndex& v);
/// [{"index": [...], "kind": ..., "coeff": ...}, ...]
Json to_json(const VVector& v);
Json to_json(const VTensor2& t);

}  // namespace lsdual
