#pragma once

#include "bdtori/bdinv.hpp"
#include "bdtori/cover.hpp"
#include "bdtori/localfield.hpp"
#include "bdtori/reps.hpp"

#include <json.hpp>

#include <string>

namespace bdtori {

/// Input does not conform to the documented JSON schema; `pointer` locates
/// the offending field (JSON-pointer style).
struct SchemaError : std::runtime_error {
    std::string pointer;

    SchemaError(std::string ptr, const std::string& message)
        : std::runtime_error(message + " (at " + ptr + ")"), pointer(std::move(ptr)) {}
};

/// Parses {"rank": r, "frobenius": [[..]], "order": d, "C": [[..]], "n": n}.
BDDatum parse_datum(const nlohmann::json& j);

/// Parses {"q": q, "n": n} (or reads q next to a datum with n supplied).
LocalFieldSpec parse_field(const nlohmann::json& j, const std::string& base_pointer = "");

/// Parses {"val": v, "unit_exp": u} at the given pointer.
TameElement parse_tame(const nlohmann::json& j, const LocalFieldSpec& spec,
                       const std::string& base_pointer);

/// Parses the global-bound input {"is_split": b, "ker_sha"?: k, "sha_n"?: s}.
GlobalBoundInput parse_global_bound(const nlohmann::json& j);

mpz_class parse_int(const nlohmann::json& j, const std::string& pointer);
IntMatrix parse_matrix(const nlohmann::json& j, const std::string& pointer);

nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json factors_to_json(const FiniteAbelianGroup& g);
nlohmann::json vector_to_json(const std::vector<mpz_class>& v);
nlohmann::json qmodz_to_json(const QmodZ& v);  // [num, den]
long long to_long(const mpz_class& v);

}  // namespace bdtori
