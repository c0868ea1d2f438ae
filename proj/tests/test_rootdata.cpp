#include "oracles.hpp"
#include "satake/atoms.hpp"
#include "satake/satake.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace satake;

namespace {

const char* const kTypes[] = {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xG2", "D4", "F4"};

std::set<oracle::Vec> as_set(const std::vector<Coweight>& v)
{
    std::set<oracle::Vec> out;
    for (const auto& c : v)
        out.insert(c.to_vector());
    return out;
}

}  // namespace

TEST_CASE("Weyl group orders from reflection closure")
{
    CHECK(oracle::weyl_group(make_datum("A1")->cartan()).size() == 2);
    CHECK(oracle::weyl_group(make_datum("A2")->cartan()).size() == 6);
    CHECK(oracle::weyl_group(make_datum("B2")->cartan()).size() == 8);
    CHECK(oracle::weyl_group(make_datum("G2")->cartan()).size() == 12);
    CHECK(oracle::weyl_group(make_datum("A1xA1")->cartan()).size() == 4);
    CHECK(oracle::weyl_group(make_datum("A3")->cartan()).size() == 24);
}

TEST_CASE("positive roots match an independent closure")
{
    for (const char* t : kTypes) {
        CAPTURE(t);
        auto d = make_datum(t);
        const auto expected = oracle::positive_roots(d->cartan());
        std::set<oracle::Vec> got;
        for (const auto& r : d->positive_roots())
            got.insert(r.root_coords);
        CHECK(got == expected);
    }
    CHECK(make_datum("G2")->positive_roots().size() == 6);
    CHECK(make_datum("F4")->positive_roots().size() == 24);
}

TEST_CASE("G2 conventions")
{
    auto d = make_datum("G2");
    CHECK(d->cartan(0, 1) == -1);
    CHECK(d->cartan(1, 0) == -3);
    CHECK(d->is_long_coroot(0));
    CHECK(d->is_short_coroot(1));
    CHECK(d->simple_coroot(1) == Coweight{-1, 2});
    CHECK(quasi_minuscule_coweight(*d, 0) == Coweight{0, 1});
    CHECK(d->simple_coroot(0) + 2 * d->simple_coroot(1) == Coweight{0, 1});
}

TEST_CASE("orbits, dominance and 2rho pairing against brute force")
{
    for (const char* t : {"A2", "B2", "G2", "A1xA1", "A3"}) {
        CAPTURE(t);
        auto d = make_datum(t);
        const std::size_t n = d->rank();
        std::vector<int> v(n, 0);
        // All coweights in a small box.
        std::function<void(std::size_t)> walk = [&](std::size_t k) {
            if (k == n) {
                Coweight c(v);
                const auto orb = oracle::orbit(d->cartan(), v);
                CHECK(as_set(d->weyl_orbit(c)) == orb);
                oracle::Vec dom;
                for (const auto& x : orb)
                    if (std::all_of(x.begin(), x.end(), [](int y) { return y >= 0; }))
                        dom = x;
                CHECK(d->dominant_representative(c).first.to_vector() == dom);
                CHECK(d->is_dominant(c) == (dom == v));
                CHECK(d->two_rho_pairing(c) == oracle::two_rho(d->cartan(), v));
                return;
            }
            for (int x = -2; x <= 2; ++x) {
                v[k] = x;
                walk(k + 1);
            }
        };
        walk(0);
    }
}

TEST_CASE("Weyl dimension formula against the oracle product")
{
    for (const char* t : {"A2", "B2", "G2", "A1xA1", "A3", "B3"}) {
        CAPTURE(t);
        auto d = make_datum(t);
        std::vector<int> v(d->rank(), 0);
        for (int s = 0; s < 9; ++s) {
            for (std::size_t k = 0; k < v.size(); ++k)
                v[k] = (s >> k) % 3;
            CHECK(weyl_dimension(*d, Coweight(v)) == oracle::weyl_dimension(d->cartan(), v));
        }
    }
    CHECK(weyl_dimension(*make_datum("G2"), Coweight{0, 1}) == 7);
    CHECK(weyl_dimension(*make_datum("G2"), Coweight{1, 0}) == 14);
}

TEST_CASE("descriptors")
{
    CHECK(make_datum("A1xA1")->rank() == 2);
    CHECK(make_datum("A1xA1")->factors().size() == 2);
    CHECK(make_datum("G2")->type_label() == "G2");
    CHECK_THROWS_AS(make_datum("Q7"), RootDatumError);
    CHECK_THROWS_AS(make_datum("G3"), RootDatumError);
    CHECK_THROWS_AS(RootDatum::from_cartan({{2, -1}, {0, 2}}), RootDatumError);
    CHECK(RootDatum::from_cartan(make_datum("B2")->cartan()) == *make_datum("B2"));
}

TEST_CASE("coroot lattice membership and dominance order")
{
    auto d = make_datum("A2");
    CHECK(d->in_coroot_lattice(Coweight{1, 1}));
    CHECK_FALSE(d->in_coroot_lattice(Coweight{1, 0}));
    CHECK(d->dominates(Coweight{1, 1}, Coweight{0, 0}));
    CHECK_FALSE(d->dominates(Coweight{1, 0}, Coweight{0, 1}));
    auto g = make_datum("G2");
    CHECK(g->dominates(Coweight{1, 0}, Coweight{0, 1}));
}
