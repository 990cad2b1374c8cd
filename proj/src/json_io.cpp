#include "lmmt/json_io.hpp"

#include "lmmt/salamon.hpp"

namespace lmmt {

namespace {

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw Error("expected a scalar string such as \"1/2\"");
}

unsigned index_from(const std::string& s) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size() || v == 0 || v > kMaxDimension) throw Error("bad basis index '" + s + "'");
    return static_cast<unsigned>(v);
}

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

Json to_json(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.dense_row(r)));
    return a;
}

Json form_to_json(const KForm& f) {
    Json terms = Json::object();
    for (const auto& [m, c] : f.terms()) terms[MultiIndex(f.dimension(), m).to_string()] = c.to_string();
    return Json{{"n", f.dimension()}, {"degree", f.degree()}, {"terms", terms}};
}

KForm form_from_json(const Json& j) {
    try {
        const unsigned n = j.at("n").get<unsigned>();
        const unsigned degree = j.at("degree").get<unsigned>();
        KForm f(n, degree);
        for (const auto& [key, value] : j.at("terms").items()) {
            Mask m = 0;
            int sign = 1;
            std::size_t start = 0;
            while (start <= key.size()) {
                const std::size_t comma = std::min(key.find(',', start), key.size());
                const unsigned i = index_from(key.substr(start, comma - start));
                const Mask bit = Mask{1} << (i - 1);
                if (m & bit) throw Error("repeated index in '" + key + "'");
                sign *= wedge_sign(m, bit);
                m |= bit;
                start = comma + 1;
            }
            const Scalar c = scalar_from_json(value);
            f.add_term(m, sign < 0 ? -c : c);
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("form JSON: ") + e.what(), 0);
    } catch (const std::invalid_argument&) {
        throw ParseError("form JSON: bad index list", 0);
    }
}

Json algebra_to_json(const LieAlgebra& g) {
    Json brackets = Json::array();
    for (const auto& [ij, row] : g.structure_constants().brackets) {
        Json c = Json::object();
        for (const auto& [k, v] : row) c[std::to_string(k + 1)] = v.to_string();
        brackets.push_back(Json{{"i", ij.first + 1}, {"j", ij.second + 1}, {"c", c}});
    }
    return Json{{"dim", g.dimension()}, {"brackets", brackets}, {"field", Json{{"sqrt", g.field()}}}};
}

LieAlgebra algebra_from_json(const Json& j) {
    try {
        StructureConstants sc;
        sc.dim = j.at("dim").get<unsigned>();
        if (sc.dim == 0 || sc.dim > 30) throw ParseError("algebra JSON: dimension must be 1..30", 0);
        long field = 1;
        if (j.contains("field")) field = j.at("field").at("sqrt").get<long>();
        for (const auto& b : j.at("brackets")) {
            const unsigned i = b.at("i").get<unsigned>();
            const unsigned k = b.at("j").get<unsigned>();
            if (i == 0 || k == 0 || i > sc.dim || k > sc.dim) throw ParseError("algebra JSON: index out of range", 0);
            for (const auto& [key, value] : b.at("c").items()) {
                const unsigned l = index_from(key);
                if (l > sc.dim) throw ParseError("algebra JSON: component index out of range", 0);
                const Scalar c = scalar_from_json(value);
                if (!c.is_rational() && c.field() != field) {
                    throw ParseError("algebra JSON: coefficient outside the declared field", 0);
                }
                sc.add(i - 1, k - 1, l - 1, c);
            }
        }
        return LieAlgebra(std::move(sc));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("algebra JSON: ") + e.what(), 0);
    } catch (const std::invalid_argument&) {
        throw ParseError("algebra JSON: bad index", 0);
    }
}

}  // namespace lmmt
