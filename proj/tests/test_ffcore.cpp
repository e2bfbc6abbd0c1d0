#include <doctest.h>

#include <set>

#include "fdsf/field.hpp"
#include "fdsf/mod_matrix.hpp"
#include "fdsf/numeric.hpp"
#include "fdsf/poly_zp.hpp"

using namespace fdsf;

namespace {

FieldElement elem(const FieldContext& ctx, std::vector<std::int64_t> coords) {
    FieldElement e{std::move(coords)};
    ctx.check_element(e);
    return e;
}

const std::vector<std::pair<std::int64_t, int>> kDeskFields = {
    {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};

}  // namespace

TEST_CASE("poly arithmetic over Z_p") {
    PolyZp a(2, {1, 1, 0, 0});  // trailing zeros stripped
    CHECK(a.degree() == 1);
    CHECK(PolyZp(3, {-1}).coeff(0) == 2);  // residues normalized
    CHECK(PolyZp::from_encoding(2, 11).encoding() == 11);
    CHECK(PolyZp::from_encoding(2, 11).to_string() == "x^3 + x + 1");

    // divmod identity on an exhaustive small family
    for (std::int64_t ea = 0; ea < 81; ++ea) {
        for (std::int64_t eb = 1; eb < 27; ++eb) {
            PolyZp f = PolyZp::from_encoding(3, ea), g = PolyZp::from_encoding(3, eb);
            auto [q, r] = poly_divmod(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
        }
    }

    PolyZp m(2, {1, 1, 0, 1});  // x^3 + x + 1
    PolyZp x(2, {0, 1});
    PolyZp inv = poly_inverse_mod(x, m);
    CHECK(poly_mod(inv * x, m).is_one());
    CHECK_THROWS_AS(poly_inverse_mod(PolyZp::zero(2), m), std::domain_error);
}

TEST_CASE("canonical modulus search") {
    // encodings 8..10 factor (x^3, (x+1)(x^2+x+1), x(x^2+1)); 11 = x^3+x+1 has
    // no root over Z_2 and a rootless cubic is irreducible
    PolyZp cand11 = PolyZp::from_encoding(2, 11);
    CHECK(cand11.eval(0) == 1);
    CHECK(cand11.eval(1) == 1);
    CHECK(PolyZp(2, {0, 0, 0, 1}) == PolyZp(2, {0, 1}) * PolyZp(2, {0, 0, 1}));
    CHECK(PolyZp::from_encoding(2, 9) == PolyZp(2, {1, 1}) * PolyZp(2, {1, 1, 1}));
    CHECK(PolyZp::from_encoding(2, 10) == PolyZp(2, {0, 1}) * PolyZp(2, {1, 0, 1}));

    FieldContext gf8 = make_extension_field(2, 3);
    CHECK(gf8.modulus() == cand11);
    CHECK(gf8.element_count() == 8);

    FieldContext z2 = make_extension_field(2, 1);
    CHECK(z2.modulus() == PolyZp::x(2));

    // x^2 + 1 has no square root of -1 mod 3
    CHECK_NOTHROW(make_extension_field(3, 2, PolyZp(3, {1, 0, 1})));

    CHECK_THROWS_AS(make_extension_field(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_extension_field(2, 2, PolyZp(2, {1, 0, 1})), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(make_extension_field(2, 3, PolyZp(2, {1, 1, 1})), std::invalid_argument);  // degree 2

    // determinism
    CHECK(make_extension_field(2, 3) == make_extension_field(2, 3));
    CHECK(make_extension_field(5, 2) == make_extension_field(5, 2));
}

TEST_CASE("field spec strings") {
    FieldContext gf8 = make_extension_field(2, 3);
    CHECK(parse_field_spec("GF(2^3)/1,1,0,1") == gf8);
    CHECK(parse_field_spec("GF(2^3)") == gf8);
    CHECK(parse_field_spec("GF(5)").p() == 5);
    CHECK(parse_field_spec(gf8.spec_string()) == gf8);
    CHECK_THROWS_AS(parse_field_spec("GF(6)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_spec("Zp(2)"), std::invalid_argument);
}

TEST_CASE("GF(4) multiplication fixture") {
    FieldContext gf4 = make_extension_field(2, 2);
    CHECK(gf4.modulus() == PolyZp(2, {1, 1, 1}));
    FieldElement alpha = elem(gf4, {0, 1});
    CHECK(gf4.mul(alpha, alpha) == elem(gf4, {1, 1}));  // alpha^2 = alpha + 1
    CHECK(gf4.frobenius(alpha, 1) == elem(gf4, {1, 1}));
}

TEST_CASE("GF(8): x * x^2 = x + 1 under x^3+x+1") {
    FieldContext gf8 = make_extension_field(2, 3);
    CHECK(gf8.mul(elem(gf8, {0, 1, 0}), elem(gf8, {0, 0, 1})) == elem(gf8, {1, 1, 0}));
}

TEST_CASE("field axioms, exhaustive at desk scale") {
    for (auto [p, r] : kDeskFields) {
        if (checked_pow(p, r) > 64) continue;
        FieldContext ctx = make_extension_field(p, r);
        const std::int64_t q = ctx.element_count();
        // inverses and identity
        for (std::int64_t i = 0; i < q; ++i) {
            FieldElement a = ctx.from_index(i);
            CHECK(ctx.add(a, ctx.neg(a)) == ctx.zero());
            CHECK(ctx.mul(a, ctx.one()) == a);
            if (i != 0) CHECK(ctx.mul(a, ctx.inv(a)) == ctx.one());
        }
        CHECK_THROWS_AS(ctx.inv(ctx.zero()), std::domain_error);
        // associativity and distributivity
        for (std::int64_t i = 0; i < q; ++i)
            for (std::int64_t j = 0; j < q; ++j) {
                FieldElement a = ctx.from_index(i), b = ctx.from_index(j);
                CHECK(ctx.mul(a, b) == ctx.mul(b, a));
                for (std::int64_t k = 0; k < q; ++k) {
                    FieldElement c = ctx.from_index(k);
                    CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
                    CHECK(ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
                }
            }
    }
}

TEST_CASE("frobenius is additive, fixes Z_p, has order dividing r") {
    for (auto [p, r] : kDeskFields) {
        if (checked_pow(p, r) > 64) continue;
        FieldContext ctx = make_extension_field(p, r);
        for (std::int64_t i = 0; i < ctx.element_count(); ++i) {
            FieldElement a = ctx.from_index(i);
            CHECK(ctx.frobenius(a, 0) == a);
            CHECK(ctx.frobenius(a, r) == a);
            for (std::int64_t j = 0; j < ctx.element_count(); ++j) {
                FieldElement b = ctx.from_index(j);
                for (int t = 1; t < r; ++t)
                    CHECK(ctx.frobenius(ctx.add(a, b), t) ==
                          ctx.add(ctx.frobenius(a, t), ctx.frobenius(b, t)));
            }
        }
        for (std::int64_t c = 0; c < p; ++c)
            CHECK(ctx.frobenius(ctx.from_int(c), 1) == ctx.from_int(c));
    }
}

TEST_CASE("power map agrees with repeated multiplication") {
    FieldContext ctx = make_extension_field(3, 2);
    for (std::int64_t i = 0; i < ctx.element_count(); ++i) {
        FieldElement a = ctx.from_index(i);
        FieldElement acc = ctx.one();
        for (int e = 0; e < 12; ++e) {
            CHECK(ctx.pow(a, e) == acc);
            acc = ctx.mul(acc, a);
        }
        if (i != 0) CHECK(ctx.pow(a, -1) == ctx.inv(a));
    }
}

TEST_CASE("normal basis construction") {
    FieldContext z2 = make_extension_field(2, 1);
    Basis nb1 = find_normal_basis(z2);
    CHECK(nb1.vectors() == std::vector<FieldElement>{elem(z2, {1})});

    FieldContext gf4 = make_extension_field(2, 2);
    Basis nb2 = find_normal_basis(gf4);
    CHECK(nb2.vectors() == std::vector<FieldElement>{elem(gf4, {0, 1}), elem(gf4, {1, 1})});
    CHECK(nb2.kind() == Basis::Kind::normal);

    // element 1 is skipped (conjugates all equal 1); first normal alpha is x+1
    FieldContext gf8 = make_extension_field(2, 3);
    Basis nb3 = find_normal_basis(gf8);
    CHECK(nb3.vectors()[0] == elem(gf8, {1, 1, 0}));

    for (auto [p, r] : kDeskFields) {
        if (checked_pow(p, r) > 64) continue;
        FieldContext ctx = make_extension_field(p, r);
        Basis nb = find_normal_basis(ctx);
        for (int i = 0; i + 1 < r; ++i)
            CHECK(nb.vectors()[i + 1] == ctx.pow(nb.vectors()[i], p));
    }
}

TEST_CASE("coordinate maps are mutually inverse bijections") {
    FieldContext gf4 = make_extension_field(2, 2);
    Basis normal = find_normal_basis(gf4);
    CHECK(normal.elem_to_vec(gf4.one()) == std::vector<std::int64_t>{1, 1});  // 1 = a + a^2

    for (auto [p, r] : kDeskFields) {
        if (checked_pow(p, r) > 81) continue;
        FieldContext ctx = make_extension_field(p, r);
        std::vector<Basis> bases{Basis::polynomial(ctx), find_normal_basis(ctx)};
        for (const Basis& b : bases) {
            std::set<std::vector<std::int64_t>> images;
            for (std::int64_t i = 0; i < ctx.element_count(); ++i) {
                FieldElement a = ctx.from_index(i);
                auto v = b.elem_to_vec(a);
                CHECK(b.vec_to_elem(v) == a);
                images.insert(v);
                if (b.kind() == Basis::Kind::polynomial) CHECK(v == a.coords);
            }
            CHECK(images.size() == static_cast<size_t>(ctx.element_count()));
        }
    }

    FieldContext gf9 = make_extension_field(3, 2);
    CHECK_THROWS_AS(Basis::custom(gf9, {elem(gf9, {1, 1}), elem(gf9, {2, 2})}),
                    std::invalid_argument);
}

TEST_CASE("element enumeration round trip") {
    FieldContext ctx = make_extension_field(5, 2);
    for (std::int64_t i = 0; i < ctx.element_count(); ++i)
        CHECK(ctx.index_of(ctx.from_index(i)) == i);
}

TEST_CASE("prime power validation") {
    CHECK(PrimePower(2, 3).value == 8);
    CHECK_THROWS_AS(PrimePower(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimePower(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(PrimePower(2, 40), std::invalid_argument);
    CHECK_THROWS_AS(make_extension_field(2, 64), std::invalid_argument);
}

TEST_CASE("matrices over Z_8: the worked 2x2 example") {
    ModMatrix a(2, 3, 2, {0, 5, 1, 2});
    ModMatrix a2 = a * a;
    CHECK(a2 == ModMatrix(2, 3, 2, {5, 2, 2, 1}));
    CHECK(ModMatrix::identity(2, 3, 2) * a == a);
    CHECK(a2.is_identity_mod(1));        // order of A mod 2 is 2
    CHECK_FALSE(a2.is_identity_mod(2));  // beta = 1
    CHECK(mat_pow(a, 8).is_identity());
    CHECK_FALSE(mat_pow(a, 4).is_identity());

    ModMatrix b(2, 3, 3);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a * ModMatrix(3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(ModMatrix(2, 3, 2, {0, 5, 1}), std::invalid_argument);
}
