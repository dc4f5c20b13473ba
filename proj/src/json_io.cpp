#include "bdtori/json_io.hpp"

namespace bdtori {

mpz_class parse_int(const nlohmann::json& j, const std::string& pointer) {
    if (!j.is_number_integer()) throw SchemaError(pointer, "expected an integer");
    return mpz_class(static_cast<long>(j.get<long long>()));
}

IntMatrix parse_matrix(const nlohmann::json& j, const std::string& pointer) {
    if (!j.is_array() || j.empty()) throw SchemaError(pointer, "expected a nonempty array of rows");
    std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        throw SchemaError(pointer + "/0", "expected a nonempty row");
    std::size_t cols = j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j[i];
        std::string rp = pointer + "/" + std::to_string(i);
        if (!row.is_array() || row.size() != cols)
            throw SchemaError(rp, "expected a row of length " + std::to_string(cols));
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = parse_int(row[k], rp + "/" + std::to_string(k));
    }
    return m;
}

namespace {
const nlohmann::json& require_field(const nlohmann::json& j, const std::string& key,
                                    const std::string& base) {
    if (!j.is_object()) throw SchemaError(base.empty() ? "/" : base, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(base + "/" + key, "missing required field");
    return *it;
}
}  // namespace

BDDatum parse_datum(const nlohmann::json& j) {
    BDDatum d;
    mpz_class rank = parse_int(require_field(j, "rank", ""), "/rank");
    if (rank < 1) throw SchemaError("/rank", "rank must be >= 1");
    d.torus.rank = rank.get_ui();
    d.torus.frobenius = parse_matrix(require_field(j, "frobenius", ""), "/frobenius");
    mpz_class order = parse_int(require_field(j, "order", ""), "/order");
    if (order < 1) throw SchemaError("/order", "order must be >= 1");
    d.torus.order = order.get_ui();
    d.C = parse_matrix(require_field(j, "C", ""), "/C");
    d.n = parse_int(require_field(j, "n", ""), "/n");
    if (d.n < 1) throw SchemaError("/n", "n must be >= 1");
    try {
        d.validate();
    } catch (const std::invalid_argument& e) {
        throw SchemaError("/", e.what());
    }
    return d;
}

LocalFieldSpec parse_field(const nlohmann::json& j, const std::string& base_pointer) {
    LocalFieldSpec f;
    f.q = parse_int(require_field(j, "q", base_pointer), base_pointer + "/q");
    f.n = parse_int(require_field(j, "n", base_pointer), base_pointer + "/n");
    try {
        f.validate();
    } catch (const std::invalid_argument& e) {
        throw SchemaError(base_pointer + "/q", e.what());
    }
    return f;
}

TameElement parse_tame(const nlohmann::json& j, const LocalFieldSpec& spec,
                       const std::string& base_pointer) {
    mpz_class val = parse_int(require_field(j, "val", base_pointer), base_pointer + "/val");
    mpz_class ue = parse_int(require_field(j, "unit_exp", base_pointer),
                             base_pointer + "/unit_exp");
    return tame_canonical(spec, val, ue);
}

GlobalBoundInput parse_global_bound(const nlohmann::json& j) {
    GlobalBoundInput in;
    const auto& s = require_field(j, "is_split", "");
    if (!s.is_boolean()) throw SchemaError("/is_split", "expected a boolean");
    in.is_split = s.get<bool>();
    if (j.contains("ker_sha")) in.ker_sha = parse_int(j["ker_sha"], "/ker_sha");
    if (j.contains("sha_n")) in.sha_n = parse_int(j["sha_n"], "/sha_n");
    if (!in.is_split && (!in.ker_sha || !in.sha_n))
        throw SchemaError("/is_split", "nonsplit input requires ker_sha and sha_n");
    if ((in.ker_sha && *in.ker_sha < 1) || (in.sha_n && *in.sha_n < 1))
        throw SchemaError("/ker_sha", "cardinalities must be >= 1");
    return in;
}

long long to_long(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("value too large for JSON output");
    return static_cast<long long>(v.get_si());
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_long(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json factors_to_json(const FiniteAbelianGroup& g) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& d : g.invariant_factors()) out.push_back(to_long(d));
    return out;
}

nlohmann::json vector_to_json(const std::vector<mpz_class>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(to_long(x));
    return out;
}

nlohmann::json qmodz_to_json(const QmodZ& v) {
    return nlohmann::json::array({to_long(v.num()), to_long(v.den())});
}

}  // namespace bdtori
