#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdtori/json_io.hpp"

using namespace bdtori;
using nlohmann::json;

TEST_CASE("datum schema parses the documented example") {
    json j = json::parse(R"({"rank":1,"frobenius":[[1]],"order":1,"C":[[1]],"n":4})");
    BDDatum d = parse_datum(j);
    CHECK(d.torus.rank == 1);
    CHECK(d.torus.is_split());
    CHECK(d.C.at(0, 0) == 1);
    CHECK(d.n == 4);
}

TEST_CASE("schema errors carry pointers to the offending field") {
    auto ptr_of = [](const json& j) {
        try {
            parse_datum(j);
        } catch (const SchemaError& e) {
            return e.pointer;
        }
        return std::string("(no error)");
    };
    CHECK(ptr_of(json::parse(R"({"frobenius":[[1]],"order":1,"C":[[1]],"n":4})")) == "/rank");
    CHECK(ptr_of(json::parse(R"({"rank":1,"frobenius":[[1]],"order":1,"C":[[1]]})")) == "/n");
    CHECK(ptr_of(json::parse(R"({"rank":1,"frobenius":[[1]],"order":1,"C":[["x"]],"n":4})")) ==
          "/C/0/0");
    CHECK(ptr_of(json::parse(R"({"rank":2,"frobenius":[[1,0],[0,1]],"order":1,"C":[[1,0],[0]],"n":4})")) ==
          "/C/1");
    CHECK(ptr_of(json::parse(R"({"rank":0,"frobenius":[[1]],"order":1,"C":[[1]],"n":4})")) ==
          "/rank");
    // Semantic violation (non-unimodular Frobenius) is reported at the root.
    CHECK(ptr_of(json::parse(R"({"rank":1,"frobenius":[[2]],"order":1,"C":[[1]],"n":4})")) == "/");
}

TEST_CASE("field and element schemas") {
    LocalFieldSpec f = parse_field(json::parse(R"({"q":7,"n":2})"));
    CHECK(f.q == 7);
    CHECK(f.n == 2);
    CHECK_THROWS_AS(parse_field(json::parse(R"({"q":7,"n":4})")), SchemaError);
    TameElement a = parse_tame(json::parse(R"({"val":-1,"unit_exp":8})"), f, "/a");
    CHECK(a.val == -1);
    CHECK(a.unit_exp == 2);  // canonicalized mod q-1
}

TEST_CASE("global bound schema") {
    CHECK(parse_global_bound(json::parse(R"({"is_split":true})")).is_split);
    auto in = parse_global_bound(json::parse(R"({"is_split":false,"ker_sha":2,"sha_n":3})"));
    CHECK(*in.ker_sha == 2);
    CHECK(*in.sha_n == 3);
    CHECK_THROWS_AS(parse_global_bound(json::parse(R"({"is_split":false})")), SchemaError);
    CHECK_THROWS_AS(parse_global_bound(json::parse(R"({"is_split":"yes"})")), SchemaError);
    CHECK_THROWS_AS(
        parse_global_bound(json::parse(R"({"is_split":false,"ker_sha":0,"sha_n":3})")),
        SchemaError);
}

TEST_CASE("serializers round-trip through the parsers") {
    IntMatrix m = IntMatrix::from_rows({{1, -2}, {3, 4}});
    CHECK(parse_matrix(matrix_to_json(m), "/m") == m);
    FiniteAbelianGroup g({2, 6});
    json fj = factors_to_json(g);
    CHECK(fj == json::parse("[2,6]"));
    CHECK(vector_to_json({mpz_class(-1), mpz_class(5)}) == json::parse("[-1,5]"));
    CHECK(qmodz_to_json(QmodZ(3, 4)) == json::parse("[3,4]"));
    // Documented datum example round-trips parse -> serialize -> parse.
    json j = json::parse(R"({"rank":1,"frobenius":[[1]],"order":1,"C":[[1]],"n":4})");
    BDDatum d = parse_datum(j);
    json back{{"rank", d.torus.rank},
              {"frobenius", matrix_to_json(d.torus.frobenius)},
              {"order", d.torus.order},
              {"C", matrix_to_json(d.C)},
              {"n", to_long(d.n)}};
    CHECK(back == j);
    BDDatum d2 = parse_datum(back);
    CHECK(d2.C == d.C);
    CHECK(d2.n == d.n);
}
