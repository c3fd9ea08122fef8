#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fspec/vector_io.hpp"

using namespace fspec;

TEST_CASE("inline vector expressions") {
    const FreqVector a = parse_vector_expr("e0+e5");
    CHECK(a.coefficient(0) == Complex{1.0, 0.0});
    CHECK(a.coefficient(5) == Complex{1.0, 0.0});
    CHECK(a.support_size() == 2);

    const FreqVector b = parse_vector_expr("0.5*e1-0.5*e4");
    CHECK(b.coefficient(1) == Complex{0.5, 0.0});
    CHECK(b.coefficient(4) == Complex{-0.5, 0.0});

    const FreqVector c = parse_vector_expr("(0.25+1i)*e-3 + 2i*e2");
    CHECK(c.coefficient(-3) == Complex{0.25, 1.0});
    CHECK(c.coefficient(2) == Complex{0.0, 2.0});

    // terms accumulate and may cancel
    CHECK(parse_vector_expr("e7-e7").empty());

    const FreqVector big = parse_vector_expr("e59604644775390625");
    CHECK(big.coefficient(BigInt("59604644775390625")) == Complex{1.0, 0.0});
}

TEST_CASE("malformed expressions carry positions") {
    CHECK_THROWS_AS(parse_vector_expr("e"), parse_error);
    CHECK_THROWS_AS(parse_vector_expr(""), parse_error);
    CHECK_THROWS_AS(parse_vector_expr("e1++e2"), parse_error);
    CHECK_THROWS_AS(parse_vector_expr("0.5 e1"), parse_error);
    CHECK_THROWS_AS(parse_vector_expr("12"), parse_error);
    try {
        parse_vector_expr("e1+e");
    } catch (const parse_error& e) {
        CHECK(e.position() >= 3);
    }
}

TEST_CASE("json round trip") {
    FreqVector f;
    f.add_term(BigInt("123456789012345678901234567890"), {0.125, -3.5});
    f.add_term(-2, {1.0 / 3.0, 0.0});
    const nlohmann::json j = vector_to_json(f);
    CHECK(j["entries"].size() == 2);
    for (const auto& e : j["entries"]) CHECK(e["index"].is_string());
    CHECK(vector_from_json(j) == f);

    const std::string path = "vector_io_roundtrip.json";
    save_vector_file(f, path);
    CHECK(load_vector_file(path) == f);
    CHECK(resolve_vector_argument(path) == f);
    std::remove(path.c_str());
}

TEST_CASE("argument resolution falls back to the expression grammar") {
    const FreqVector f = resolve_vector_argument("e0+e1");
    CHECK(f.support_size() == 2);
    CHECK_THROWS_AS(resolve_vector_argument("definitely-not-a-file-or-expr"),
                    parse_error);
}

TEST_CASE("trig polynomial expressions") {
    const TrigPoly p = parse_trig_poly("z^2+1");
    CHECK(p.coefficient(2) == Complex{1.0, 0.0});
    CHECK(p.coefficient(0) == Complex{1.0, 0.0});
    CHECK(p.degree() == 2);

    const TrigPoly q = parse_trig_poly("0.5*z^-1 - z");
    CHECK(q.coefficient(-1) == Complex{0.5, 0.0});
    CHECK(q.coefficient(1) == Complex{-1.0, 0.0});

    const TrigPoly r = parse_trig_poly("z - z + 1");
    CHECK(r.coefficient(1) == Complex{0.0, 0.0});
    CHECK(r.degree() == 0);

    CHECK_THROWS_AS(parse_trig_poly("z^100"), parse_error);
    CHECK_THROWS_AS(parse_trig_poly("2*"), parse_error);
    CHECK_THROWS_AS(parse_trig_poly(""), parse_error);
}
