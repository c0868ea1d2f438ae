#include "satake/atoms.hpp"
#include "satake/satake.hpp"
#include "satake/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace satake;

namespace {

// One A1 string with the given top eigenvalue; e maps each weight to the
// next one by the given scalars.
GradedModule a1_string(int top, const std::vector<Rational>& e_scalars)
{
    auto d = make_datum("A1");
    Character dims;
    for (int k = -top; k <= top; k += 2)
        dims[Coweight{k}] = 1;
    auto m = make_module(d, dims);
    for (int k = -top, j = 0; k < top; k += 2, ++j) {
        QMatrix b(1, 1);
        b(0, 0) = e_scalars.at(static_cast<std::size_t>(j));
        m.e[0].blocks[Coweight{k}] = b;
    }
    return m;
}

Rational entry(const WeightedOperator& op, const Coweight& mu)
{
    const auto* b = op.block(mu);
    return b ? (*b)(0, 0) : Rational(0);
}

}  // namespace

TEST_CASE("sl2 completion on single strings")
{
    auto two = a1_string(1, {1});
    const auto f2 = sl2_completion(two.e[0], two.h[0]);
    CHECK(entry(f2, Coweight{1}) == Rational(1));

    auto three = a1_string(2, {1, 1});
    const auto f3 = sl2_completion(three.e[0], three.h[0]);
    CHECK(entry(f3, Coweight{2}) == Rational(2));
    CHECK(entry(f3, Coweight{0}) == Rational(2));

    auto scaled = a1_string(2, {3, Rational(1, 2)});
    const auto fs = sl2_completion(scaled.e[0], scaled.h[0]);
    // [E, F] = H on the top and middle weights.
    CHECK(Rational(1, 2) * entry(fs, Coweight{2}) == Rational(2));
    CHECK(Rational(3) * entry(fs, Coweight{0}) - entry(fs, Coweight{2}) * Rational(1, 2) == Rational(0));

    CHECK(sl2_uniqueness_defect(three.e[0], three.h[0]) == 0);
    CHECK(lefschetz_failure(three.e[0], three.h[0]).empty());
}

TEST_CASE("sl2 completion of the zero operator on a weight-zero space is zero")
{
    auto d = make_datum("A1");
    auto m = make_module(d, {{Coweight{0}, 3}});
    const auto f = sl2_completion(m.e[0], m.h[0]);
    CHECK(f.is_zero());
}

TEST_CASE("Lefschetz failures are detected")
{
    auto broken = a1_string(2, {1, 0});
    CHECK_FALSE(lefschetz_failure(broken.e[0], broken.h[0]).empty());
    CHECK_THROWS_AS(sl2_completion(broken.e[0], broken.h[0]), LefschetzError);
    // Uniqueness fails when E vanishes: any lowering map commutes with it.
    auto dead = a1_string(1, {0});
    CHECK(sl2_uniqueness_defect(dead.e[0], dead.h[0]) > 0);
}

TEST_CASE("tensor products, highest vectors and generated submodules")
{
    auto d = make_datum("A1");
    const auto v = build_atom(d, Coweight{1});
    const auto t = tensor_module(v, v);
    CHECK(t.dim() == 4);
    CHECK(verify_relations(t).passed());
    CHECK(highest_vectors(t, Coweight{2}).size() == 1);
    const auto hv0 = highest_vectors(t, Coweight{0});
    REQUIRE(hv0.size() == 1);
    CHECK(highest_weight_multiplicities(t) == Character{{Coweight{0}, 1}, {Coweight{2}, 1}});

    const auto triv = generate_submodule(t, {Coweight{0}, hv0.front()});
    CHECK(triv.dim() == 1);
    const auto sym = generate_highest_weight_submodule(t, {Coweight{2}, highest_vectors(t, Coweight{2}).front()});
    CHECK(sym.module.dim() == 3);
    CHECK(verify_relations(sym.module).passed());

    // The full space at weight 0 is generated from a non-highest vector.
    QVector mixed(t.dim(Coweight{0}), Rational(0));
    mixed[0] = 1;
    CHECK(generate_submodule(t, {Coweight{0}, mixed}).dim() == 4);
    CHECK_THROWS_AS(generate_highest_weight_submodule(t, {Coweight{0}, mixed}), std::invalid_argument);
}

TEST_CASE("decomposition of tensor products by highest vectors")
{
    CHECK(decompose_tensor_product(make_datum("A1"), Coweight{1}, Coweight{1}) ==
          Character{{Coweight{0}, 1}, {Coweight{2}, 1}});
    CHECK(decompose_tensor_product(make_datum("A2"), Coweight{1, 0}, Coweight{0, 1}) ==
          Character{{Coweight{0, 0}, 1}, {Coweight{1, 1}, 1}});
    CHECK(decompose_tensor_product(make_datum("G2"), Coweight{0, 1}, Coweight{0, 1}) ==
          Character{{Coweight{0, 0}, 1}, {Coweight{0, 1}, 1}, {Coweight{1, 0}, 1}, {Coweight{0, 2}, 1}});
    CHECK_THROWS_AS(decompose_tensor_product(make_datum("G2"), Coweight{0, 1}, Coweight{0, 1}, 10), CapExceeded);
}

TEST_CASE("Levi restriction into strings")
{
    auto g = make_datum("G2");
    const auto m = build_atom(g, Coweight{0, 1});
    auto lengths = [&](std::size_t i) {
        std::vector<std::size_t> out;
        for (const auto& s : levi_restrict(m, i))
            out.push_back(s.length());
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(lengths(0) == std::vector<std::size_t>{1, 1, 1, 2, 2});
    CHECK(lengths(1) == std::vector<std::size_t>{2, 2, 3});
    for (const auto& s : levi_restrict(m, 1)) {
        const auto rep = levi_class_representative(*g, s.top, 1);
        CHECK((rep[1] == 0 || rep[1] == 1));
        CHECK(s.component == rep);
    }
    CHECK_THROWS_AS(levi_restrict(m, 2), std::out_of_range);
}

TEST_CASE("Shapovalov model matches the character")
{
    for (const char* t : {"A2", "B2", "G2"}) {
        CAPTURE(t);
        auto d = make_datum(t);
        for (const Coweight lam : {Coweight{1, 0}, Coweight{0, 1}, Coweight{1, 1}}) {
            const auto m = shapovalov_construct(d, lam);
            CHECK(character_of(m) == freudenthal_character(*d, lam));
            CHECK(verify_relations(m).passed());
        }
    }
    CHECK_THROWS_AS(shapovalov_construct(make_datum("G2"), Coweight{2, 2}, 20), CapExceeded);
}

TEST_CASE("IC modules: small cases and cap")
{
    auto aa = make_datum("A1xA1");
    IcBuildTrace trace;
    const auto m = build_ic_module(aa, Coweight{1, 1}, kDefaultDimensionCap, &trace);
    CHECK(m.dim() == 4);
    std::vector<int> degrees;
    for (const auto& [mu, s] : m.spaces)
        degrees.push_back(s.degree);
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{-2, 0, 0, 2});
    CHECK(verify_all(m, Coweight{1, 1}).passed());

    auto g = make_datum("G2");
    const auto adj = build_ic_module(g, Coweight{1, 0});
    CHECK(adj.dim() == 14);
    CHECK(verify_all(adj, Coweight{1, 0}).passed());
    CHECK_THROWS_AS(build_ic_module(g, Coweight{1, 0}, 10), CapExceeded);
    CHECK_THROWS_AS(build_ic_module(g, Coweight{-1, 1}), std::invalid_argument);
}
