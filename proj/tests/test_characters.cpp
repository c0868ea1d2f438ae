#include "oracles.hpp"
#include "satake/atoms.hpp"
#include "satake/satake.hpp"
#include "satake/verify.hpp"

#include <doctest.h>

using namespace satake;

namespace {

long mult(const Character& ch, const Coweight& mu)
{
    auto it = ch.find(mu);
    return it == ch.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("known weight multiplicities")
{
    auto a1 = make_datum("A1");
    const auto s4 = freudenthal_character(*a1, Coweight{4});
    CHECK(s4.size() == 5);
    for (int k = -4; k <= 4; k += 2)
        CHECK(mult(s4, Coweight{k}) == 1);

    CHECK(mult(freudenthal_character(*make_datum("A2"), Coweight{1, 1}), Coweight{0, 0}) == 2);
    CHECK(mult(freudenthal_character(*make_datum("G2"), Coweight{0, 1}), Coweight{0, 0}) == 1);
    CHECK(mult(freudenthal_character(*make_datum("G2"), Coweight{1, 0}), Coweight{0, 0}) == 2);
    auto b2 = make_datum("B2");
    // The adjoint representation of the dual group: highest coroot.
    Coweight top = b2->zero();
    for (const auto& c : b2->positive_coroots())
        if (b2->two_rho_pairing(c) > b2->two_rho_pairing(top))
            top = c;
    const auto adj = freudenthal_character(*b2, top);
    CHECK(dimension(adj) == 10);
    CHECK(mult(adj, b2->zero()) == 2);
}

TEST_CASE("characters are Weyl invariant and sized by the dimension formula")
{
    for (const char* t : {"A2", "B2", "G2", "A1xA1"}) {
        CAPTURE(t);
        auto d = make_datum(t);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                const Coweight lam{a, b};
                const auto ch = freudenthal_character(*d, lam);
                CHECK(dimension(ch) == oracle::weyl_dimension(d->cartan(), {a, b}));
                for (const auto& [mu, k] : ch)
                    for (std::size_t i = 0; i < d->rank(); ++i)
                        CHECK(mult(ch, d->reflect(mu, i)) == k);
            }
    }
}

TEST_CASE("tensor decomposition reproduces the product character")
{
    auto d = make_datum("A2");
    const Coweight a{1, 0}, b{0, 1};
    const auto prod = multiply(freudenthal_character(*d, a), freudenthal_character(*d, b));
    const auto parts = tensor_decomposition(*d, a, freudenthal_character(*d, b));
    CHECK(parts == std::map<Coweight, long>{{Coweight{0, 0}, 1}, {Coweight{1, 1}, 1}});
    Character sum;
    for (const auto& [nu, k] : parts)
        for (const auto& [mu, m] : freudenthal_character(*d, nu))
            sum[mu] += k * m;
    CHECK(sum == prod);
}

TEST_CASE("classification of atoms")
{
    auto a2 = make_datum("A2");
    CHECK(classify_coweight(*a2, Coweight{0, 0}) == AtomKind::Zero);
    CHECK(classify_coweight(*a2, Coweight{1, 0}) == AtomKind::Minuscule);
    CHECK(classify_coweight(*a2, Coweight{1, 1}) == AtomKind::QuasiMinuscule);
    CHECK(classify_coweight(*a2, Coweight{2, 0}) == AtomKind::Neither);
    CHECK_THROWS_AS(classify_coweight(*a2, Coweight{-1, 0}), std::invalid_argument);

    auto g2 = make_datum("G2");
    CHECK(classify_coweight(*g2, Coweight{0, 1}) == AtomKind::QuasiMinuscule);
    CHECK(classify_coweight(*g2, Coweight{1, 0}) == AtomKind::Neither);
    CHECK(minuscule_coweights(*g2).empty());

    auto aa = make_datum("A1xA1");
    CHECK(minuscule_coweights(*aa).size() == 3);
    CHECK(classify_coweight(*aa, Coweight{1, 1}) == AtomKind::Minuscule);
    CHECK(classify_coweight(*aa, Coweight{2, 0}) == AtomKind::QuasiMinuscule);
    CHECK(classify_coweight(*aa, Coweight{2, 2}) == AtomKind::Neither);
    CHECK(minuscule_coweights(*make_datum("A3")).size() == 3);
    CHECK(minuscule_coweights(*make_datum("B2")).size() == 1);
}

TEST_CASE("atom decompositions")
{
    auto kinds = [](const std::vector<AtomDescriptor>& v) {
        std::vector<Coweight> out;
        for (const auto& a : v)
            out.push_back(a.coweight);
        return out;
    };
    CHECK(kinds(atom_decomposition(*make_datum("A1"), Coweight{3})) ==
          std::vector<Coweight>{Coweight{1}, Coweight{1}, Coweight{1}});
    // Factors with minuscule coweights are built from those alone.
    CHECK(kinds(atom_decomposition(*make_datum("A2"), Coweight{1, 1})) ==
          std::vector<Coweight>{Coweight{0, 1}, Coweight{1, 0}});
    const auto g = atom_decomposition(*make_datum("G2"), Coweight{1, 0});
    CHECK(kinds(g) == std::vector<Coweight>{Coweight{0, 1}, Coweight{0, 1}});
    for (const auto& a : g)
        CHECK(a.kind == AtomKind::QuasiMinuscule);
}

TEST_CASE("atoms satisfy every relation and carry the right character")
{
    for (const char* t : {"A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "C3"}) {
        CAPTURE(t);
        auto d = make_datum(t);
        std::vector<Coweight> atoms = minuscule_coweights(*d);
        for (std::size_t f = 0; f < d->factors().size(); ++f)
            atoms.push_back(quasi_minuscule_coweight(*d, f));
        for (const auto& lam : atoms) {
            CAPTURE(lam);
            const auto m = build_atom(d, lam);
            CHECK(character_of(m) == freudenthal_character(*d, lam));
            CHECK(verify_relations(m).passed());
        }
    }
}
