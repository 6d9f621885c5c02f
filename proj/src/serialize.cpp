#include "lsdual/serialize.hpp"

#include <stdexcept>

namespace lsdual {

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational_from_json: expected a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

Json to_json(const SparseVector& v) {
    Json out = Json::array();
    for (const auto& [i, c] : v.entries()) out.push_back(Json::array({i, to_json(c)}));
    return out;
}

SparseVector sparse_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) throw std::invalid_argument("sparse_from_json: expected an array");
    SparseVector v(dim);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("sparse_from_json: malformed entry");
        const auto i = e[0].get<std::size_t>();
        if (i >= dim) throw std::invalid_argument("sparse_from_json: index out of range");
        v.push_back(i, rational_from_json(e[1]));
    }
    return v;
}

Json to_json(const Subspace& s) {
    Json basis = Json::array();
    for (const auto& v : s.basis()) basis.push_back(to_json(v));
    return Json{{"ambient", s.ambient_dim()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const Json& j) {
    const auto n = j.at("ambient").get<std::size_t>();
    std::vector<SparseVector> rows;
    for (const auto& r : j.at("basis")) rows.push_back(sparse_from_json(r, n));
    Subspace s = Subspace::span(rows, n);
    if (s.dim() != j.at("dim").get<std::size_t>() || s.basis() != rows) {
        throw std::invalid_argument("subspace_from_json: basis is not in canonical form");
    }
    return s;
}

Json to_json(const NcPoly& p) {
    Json out = Json::array();
    for (const auto& [w, c] : p) out.push_back(Json{{"word", w.str()}, {"coeff", to_json(c)}});
    return out;
}

Json to_json(const Tensor2& t) {
    Json out = Json::array();
    for (const auto& [pair, c] : t) {
        out.push_back(Json{{"left", pair.first.str()}, {"right", pair.second.str()}, {"coeff", to_json(c)}});
    }
    return out;
}

Json to_json(const CommPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json{{"exponents", e}, {"coeff", to_json(c)}});
    return out;
}

Json to_json(const VIndex& v) { return Json{{"kind", v.is_w() ? "I" : "I'"}, {"index", v.parts}}; }

Json to_json(const VVector& v) {
    Json out = Json::array();
    for (const auto& [idx, c] : v) {
        out.push_back(Json{{"index", idx.parts}, {"kind", idx.is_w() ? "I" : "I'"}, {"coeff", to_json(c)}});
    }
    return out;
}

Json to_json(const VTensor2& t) {
    Json out = Json::array();
    for (const auto& [pair, c] : t) {
        out.push_back(Json{{"left", to_json(pair.first)}, {"right", to_json(pair.second)}, {"coeff", to_json(c)}});
    }
    return out;
}

}  // namespace lsdual
