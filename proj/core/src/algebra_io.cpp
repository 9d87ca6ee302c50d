#include "hilb/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hilb {

namespace {

using nlohmann::json;

Rational parse_rational(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
        if (j.is_string()) return rational_from_string(j.get<std::string>());
    } catch (const std::exception&) {
    }
    throw input_error("expected an exact rational (integer or \"p/q\") at " + where);
}

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw input_error(std::string("missing key '") + key + "'");
    return *it;
}

std::vector<CoproductPair> coproduct_from_counit(const FrobeniusAlgebra& h,
                                                 const std::vector<Rational>& eps) {
    // Gram matrix of the pairing (a, b) -> eps(ab); the coproduct element is
    // sum_{j,k} (-1)^{|b_j|} (G^{-1})_{kj} b_j x b_k.
    Matrix<Rational> g(h.dim, h.dim);
    for (int i = 0; i < h.dim; ++i)
        for (int k = 0; k < h.dim; ++k) {
            Rational v(0);
            for (int m = 0; m < h.dim; ++m) v += h.mul_coeff(i, k, m) * eps[m];
            g(i, k) = v;
        }
    auto inv = inverse(g);
    if (!inv) throw input_error("counit pairing is degenerate");
    std::vector<CoproductPair> out;
    for (int j = 0; j < h.dim; ++j)
        for (int k = 0; k < h.dim; ++k) {
            Rational c = (*inv)(k, j);
            if (is_zero(c)) continue;
            if (h.parity(j)) c = -c;
            out.push_back({j, k, c});
        }
    return out;
}

} // namespace

FrobeniusAlgebra load_algebra(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("algebra file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("algebra file must be a JSON object");

    FrobeniusAlgebra h;
    h.name = doc.value("name", std::string("unnamed"));
    const json& jdim = require(doc, "dim");
    if (!jdim.is_number_integer()) throw input_error("'dim' must be an integer");
    h.dim = jdim.get<int>();
    if (h.dim <= 0) throw input_error("'dim' must be positive");

    const json& jlabels = require(doc, "labels");
    if (!jlabels.is_array() || static_cast<int>(jlabels.size()) != h.dim)
        throw input_error("'labels' must be an array of dim strings");
    for (const auto& l : jlabels) h.labels.push_back(l.get<std::string>());

    const json& jdeg = require(doc, "degrees");
    if (!jdeg.is_array() || static_cast<int>(jdeg.size()) != h.dim)
        throw input_error("'degrees' must be an array of dim integers");
    for (const auto& d : jdeg) h.degrees.push_back(d.get<int>());

    h.unit = require(doc, "unit").get<int>();
    if (h.unit < 0 || h.unit >= h.dim) throw input_error("'unit' index out of range");

    h.mul_table.assign(static_cast<size_t>(h.dim) * h.dim * h.dim, Rational(0));
    const json& jmul = require(doc, "mul");
    if (!jmul.is_array()) throw input_error("'mul' must be an array of [i,j,k,coeff] rows");
    for (const auto& row : jmul) {
        if (!row.is_array() || row.size() != 4)
            throw input_error("'mul' rows must be [i,j,k,coeff]");
        int i = row[0].get<int>(), j = row[1].get<int>(), k = row[2].get<int>();
        if (i < 0 || i >= h.dim || j < 0 || j >= h.dim || k < 0 || k >= h.dim)
            throw input_error("'mul' row index out of range");
        h.mul_coeff(i, j, k) = parse_rational(row[3], "'mul'");
    }

    h.canonical.assign(h.dim, Rational(0));
    const json& jk = require(doc, "K");
    if (!jk.is_array() || static_cast<int>(jk.size()) != h.dim)
        throw input_error("'K' must be an array of dim rationals");
    for (int c = 0; c < h.dim; ++c) h.canonical[c] = parse_rational(jk[c], "'K'");

    if (doc.contains("socle_degree")) h.socle_degree = doc["socle_degree"].get<int>();

    bool has_cop = doc.contains("coproduct"), has_counit = doc.contains("counit");
    if (has_cop == has_counit)
        throw input_error("exactly one of 'coproduct' and 'counit' is required");
    if (has_cop) {
        const json& jc = doc["coproduct"];
        if (!jc.is_array()) throw input_error("'coproduct' must be an array of [i,j,coeff] rows");
        for (const auto& row : jc) {
            if (!row.is_array() || row.size() != 3)
                throw input_error("'coproduct' rows must be [i,j,coeff]");
            int i = row[0].get<int>(), j = row[1].get<int>();
            if (i < 0 || i >= h.dim || j < 0 || j >= h.dim)
                throw input_error("'coproduct' row index out of range");
            h.coproduct.push_back({i, j, parse_rational(row[2], "'coproduct'")});
        }
    } else {
        const json& jc = doc["counit"];
        if (!jc.is_array() || static_cast<int>(jc.size()) != h.dim)
            throw input_error("'counit' must be an array of dim rationals");
        std::vector<Rational> eps(h.dim);
        for (int c = 0; c < h.dim; ++c) eps[c] = parse_rational(jc[c], "'counit'");
        h.coproduct = coproduct_from_counit(h, eps);
    }

    h.validate();
    return h;
}

FrobeniusAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open algebra file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_algebra(buf.str());
}

std::string algebra_to_json(const FrobeniusAlgebra& h) {
    json doc;
    doc["name"] = h.name;
    doc["dim"] = h.dim;
    doc["labels"] = h.labels;
    doc["degrees"] = h.degrees;
    doc["unit"] = h.unit;
    json mul = json::array();
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j)
            for (int k = 0; k < h.dim; ++k)
                if (!is_zero(h.mul_coeff(i, j, k)))
                    mul.push_back({i, j, k, to_string(h.mul_coeff(i, j, k))});
    doc["mul"] = mul;
    json cop = json::array();
    for (const auto& p : h.coproduct) cop.push_back({p.left, p.right, to_string(p.coeff)});
    doc["coproduct"] = cop;
    json kk = json::array();
    for (const auto& q : h.canonical) kk.push_back(to_string(q));
    doc["K"] = kk;
    if (h.socle_degree) doc["socle_degree"] = *h.socle_degree;
    return doc.dump(2);
}

FrobeniusAlgebra point_algebra(const Rational& t) {
    FrobeniusAlgebra h;
    h.name = "point";
    h.dim = 1;
    h.labels = {"1"};
    h.degrees = {0};
    h.unit = 0;
    h.mul_table = {Rational(1)};
    h.coproduct = {{0, 0, t}};
    h.canonical = {Rational(0)};
    h.socle_degree = 0;
    h.validate();
    return h;
}

FrobeniusAlgebra plane_algebra() {
    FrobeniusAlgebra h;
    h.name = "plane";
    h.dim = 3;
    h.labels = {"1", "h", "h2"};
    h.degrees = {0, 2, 4};
    h.unit = 0;
    h.mul_table.assign(27, Rational(0));
    h.mul_coeff(0, 0, 0) = 1;
    h.mul_coeff(0, 1, 1) = h.mul_coeff(1, 0, 1) = 1;
    h.mul_coeff(0, 2, 2) = h.mul_coeff(2, 0, 2) = 1;
    h.mul_coeff(1, 1, 2) = 1;
    h.coproduct = {{0, 2, Rational(1)}, {1, 1, Rational(1)}, {2, 0, Rational(1)}};
    h.canonical = {Rational(0), Rational(-3), Rational(0)};
    h.socle_degree = 4;
    h.validate();
    return h;
}

FrobeniusAlgebra torus_algebra() {
    FrobeniusAlgebra h;
    h.name = "torus";
    h.dim = 4;
    h.labels = {"1", "a", "b", "w"};
    h.degrees = {0, 1, 1, 2};
    h.unit = 0;
    h.mul_table.assign(64, Rational(0));
    for (int c = 0; c < 4; ++c) {
        h.mul_coeff(0, c, c) = 1;
        if (c) h.mul_coeff(c, 0, c) = 1;
    }
    h.mul_coeff(1, 2, 3) = 1;
    h.mul_coeff(2, 1, 3) = -1;
    h.coproduct = {{0, 3, Rational(1)}, {3, 0, Rational(1)}, {1, 2, Rational(-1)},
                   {2, 1, Rational(1)}};
    h.canonical = {Rational(0), Rational(0), Rational(0), Rational(0)};
    h.socle_degree = 2;
    h.validate();
    return h;
}

FrobeniusAlgebra tpoint_algebra(const Rational& t) {
    FrobeniusAlgebra h;
    h.name = "tpoint";
    h.dim = 2;
    h.labels = {"1", "v"};
    h.degrees = {0, 0};
    h.unit = 0;
    h.mul_table.assign(8, Rational(0));
    h.mul_coeff(0, 0, 0) = 1;
    h.mul_coeff(0, 1, 1) = h.mul_coeff(1, 0, 1) = 1;
    h.mul_coeff(1, 1, 1) = t;
    h.coproduct = {{0, 1, Rational(1)}, {1, 0, Rational(1)}, {0, 0, -t}};
    h.canonical = {Rational(0), Rational(0)};
    h.validate();
    return h;
}

FrobeniusAlgebra resolve_algebra(const std::string& arg) {
    std::string base = arg, param;
    if (auto pos = arg.find(':'); pos != std::string::npos) {
        base = arg.substr(0, pos);
        param = arg.substr(pos + 1);
    }
    if (base == "point") return point_algebra(param.empty() ? Rational(1)
                                                            : rational_from_string(param));
    if (base == "plane") return plane_algebra();
    if (base == "torus") return torus_algebra();
    if (base == "tpoint") return tpoint_algebra(param.empty() ? Rational(1)
                                                              : rational_from_string(param));
    return load_algebra_file(arg);
}

} // namespace hilb
