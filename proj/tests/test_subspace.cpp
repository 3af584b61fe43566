#include <doctest.h>

#include "ssc/subspace.hpp"
#include "oracles.hpp"

using namespace ssc;

TEST_SUITE("subspace") {

TEST_CASE("from_generators canonical form") {
    auto tw = FieldTower::build(2, 1, 6);
    CHECK(Subspace::zero(*tw).dim() == 0);
    CHECK(Subspace::from_generators(*tw, std::vector<Elem>{}).dim() == 0);

    oracle::Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        Subspace s = oracle::random_subspace(*tw, 3, rng);
        // any shuffled spanning set of s yields the identical matrix
        auto elems = s.all_elements();
        std::vector<Elem> gens;
        while (true) {
            gens.clear();
            for (int i = 0; i < 5; ++i) gens.push_back(elems[rng.below(elems.size())]);
            if (Subspace::from_generators(*tw, gens).dim() == 3) break;
        }
        CHECK(Subspace::from_generators(*tw, gens) == s);
    }
}

TEST_CASE("dependent generators reduce dimension silently") {
    auto tw = FieldTower::build(2, 1, 4);
    Elem g = tw->gamma();
    std::vector<Elem> gens{1, g, tw->top().add(1, g)};
    CHECK(Subspace::from_generators(*tw, gens).dim() == 2);
    // F_q-dependence over general q: gens {1, gamma, gamma*c} with c in F_q
    auto t4 = FieldTower::build(2, 2, 2);
    Elem gg = t4->gamma();
    std::vector<Elem> gens2{1, gg, t4->top().mul(gg, t4->embed_mid(3))};
    CHECK(Subspace::from_generators(*t4, gens2).dim() == 2);
}

TEST_CASE("subfield copy from generators equals Frobenius fixed points") {
    auto tw = FieldTower::build(2, 1, 6);
    // basis of F_8 inside F_64: the canonical subfield elements
    auto sub = tw->subfield_elements(3);
    CHECK(sub.size() == 8);
    Subspace s = Subspace::from_generators(*tw, sub);
    CHECK(s.dim() == 3);
    for (Elem a = 0; a < 64; ++a) {
        bool fixed = tw->frobenius(a, 3) == a;
        CHECK(s.contains(a) == fixed);
    }
}

TEST_CASE("intersection and distance against set oracle") {
    auto tw = FieldTower::build(2, 1, 6);
    oracle::Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        unsigned ku = 1 + static_cast<unsigned>(rng.below(3));
        unsigned kv = 1 + static_cast<unsigned>(rng.below(3));
        Subspace u = oracle::random_subspace(*tw, ku, rng);
        Subspace v = oracle::random_subspace(*tw, kv, rng);
        unsigned d = oracle::setwise_intersection_dim(u, v);
        CHECK(intersect_dim(u, v) == d);
        CHECK(distance(u, v) == ku + kv - 2 * d);
        CHECK(distance(u, u) == 0);
        CHECK(distance(u, v) == distance(v, u));
    }
}

TEST_CASE("generic path (m > 1, p = 3) intersection oracle") {
    for (auto tw : {FieldTower::build(2, 2, 2), FieldTower::build(3, 1, 3)}) {
        oracle::Rng rng(13);
        for (int t = 0; t < 60; ++t) {
            Subspace u = oracle::random_subspace(*tw, 1 + static_cast<unsigned>(rng.below(2)), rng);
            Subspace v = oracle::random_subspace(*tw, 1 + static_cast<unsigned>(rng.below(2)), rng);
            CHECK(intersect_dim(u, v) == oracle::setwise_intersection_dim(u, v));
        }
    }
}

TEST_CASE("distance: triangle inequality randomized") {
    auto tw = FieldTower::build(2, 1, 6);
    oracle::Rng rng(17);
    for (int t = 0; t < 10000; ++t) {
        Subspace a = oracle::random_subspace(*tw, 1 + static_cast<unsigned>(rng.below(3)), rng);
        Subspace b = oracle::random_subspace(*tw, 1 + static_cast<unsigned>(rng.below(3)), rng);
        Subspace c = oracle::random_subspace(*tw, 1 + static_cast<unsigned>(rng.below(3)), rng);
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c));
    }
}

TEST_CASE("cyclic shift: identity, F_q scalars, group action") {
    auto tw = FieldTower::build(2, 1, 4);
    auto sub = tw->subfield_elements(2); // F_4 inside F_16
    Subspace f4 = Subspace::from_generators(*tw, sub);
    CHECK(f4.cyclic_shift(1) == f4);
    Elem g = tw->gamma();
    CHECK(f4.cyclic_shift(g) != f4); // gamma has order 15, not in F_4... it moves F_4
    CHECK_THROWS_AS(f4.cyclic_shift(0), std::invalid_argument);

    oracle::Rng rng(19);
    for (int t = 0; t < 100; ++t) {
        Subspace v = oracle::random_subspace(*tw, 2, rng);
        Elem a = oracle::random_nonzero(*tw, rng), b = oracle::random_nonzero(*tw, rng);
        CHECK(v.cyclic_shift(a).cyclic_shift(b) == v.cyclic_shift(tw->top().mul(a, b)));
        CHECK(v.cyclic_shift(a).dim() == v.dim());
        // d(aU, aV) = d(U, V)
        Subspace u = oracle::random_subspace(*tw, 2, rng);
        CHECK(distance(u.cyclic_shift(a), v.cyclic_shift(a)) == distance(u, v));
        // F_q scalars fix every subspace (q = 2: only alpha = 1, covered above)
    }
    // F_q^* scalars preserve subspaces: check over q = 4
    auto t4 = FieldTower::build(2, 2, 2);
    oracle::Rng rng2(23);
    for (int t = 0; t < 40; ++t) {
        Subspace v = oracle::random_subspace(*t4, 1, rng2);
        for (Elem c = 1; c < 4; ++c) CHECK(v.cyclic_shift(t4->embed_mid(c)) == v);
    }
}

TEST_CASE("frobenius shift: identity, subfields stable, distance invariant") {
    auto tw = FieldTower::build(2, 1, 6);
    auto f8 = Subspace::from_generators(*tw, tw->subfield_elements(3));
    CHECK(f8.frobenius_shift(0) == f8);
    for (unsigned i = 0; i < 6; ++i) CHECK(f8.frobenius_shift(i) == f8);
    oracle::Rng rng(29);
    for (int t = 0; t < 100; ++t) {
        Subspace v = oracle::random_subspace(*tw, 2, rng);
        Subspace u = oracle::random_subspace(*tw, 2, rng);
        unsigned i = static_cast<unsigned>(rng.below(6));
        CHECK(v.frobenius_shift(i).dim() == v.dim());
        CHECK(distance(u.frobenius_shift(i), v.frobenius_shift(i)) == distance(u, v));
    }
}

TEST_CASE("serialization round trip and serial order") {
    auto tw = FieldTower::build(2, 1, 6);
    oracle::Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        Subspace v = oracle::random_subspace(*tw, 1 + static_cast<unsigned>(rng.below(3)), rng);
        CHECK(Subspace::parse(*tw, v.to_string()) == v);
    }
    CHECK(Subspace::zero(*tw).to_string() == "k=0;rows=");
    // serial order matches comparing serialized strings
    for (int t = 0; t < 200; ++t) {
        Subspace a = oracle::random_subspace(*tw, 2, rng);
        Subspace b = oracle::random_subspace(*tw, 2, rng);
        bool lt = Subspace::serial_less(a, b);
        CHECK(lt == (a.to_string() < b.to_string()));
    }
    // also for p = 3 digits
    auto t3 = FieldTower::build(3, 1, 2);
    for (int t = 0; t < 100; ++t) {
        Elem a = rng.below(9), b = rng.below(9);
        if (a == b) continue;
        CHECK(elem_serial_less(*t3, a, b) == (t3->elem_string(a) < t3->elem_string(b)));
    }
}

TEST_CASE("grassmannian enumeration counts") {
    auto tw = FieldTower::build(2, 1, 4);
    std::uint64_t count = 0;
    std::set<std::vector<Elem>> seen;
    enumerate_grassmannian(*tw, 2, [&](const Subspace& s) {
        ++count;
        CHECK(s.dim() == 2);
        seen.insert(s.rows());
    });
    CHECK(count == 35);
    CHECK(seen.size() == 35); // pairwise distinct
    // q = 3: G_3(4,2) has 130 subspaces
    auto t3 = FieldTower::build(3, 1, 4);
    count = 0;
    enumerate_grassmannian(*t3, 2, [&](const Subspace&) { ++count; });
    CHECK(count == 130);
    // m = 2: G_4(3,1) has (4^3-1)/3 = 21 points
    auto t4 = FieldTower::build(2, 2, 3);
    count = 0;
    enumerate_grassmannian(*t4, 1, [&](const Subspace&) { ++count; });
    CHECK(count == 21);
}

TEST_CASE("subfield grassmannian enumeration") {
    auto tw = FieldTower::build(2, 1, 4);
    // F_4-lines in F_16: 5 subspaces, each 2-dimensional over F_2
    std::uint64_t count = 0;
    std::set<std::vector<Elem>> seen;
    enumerate_subfield_grassmannian(*tw, 2, 1, [&](const Subspace& s) {
        ++count;
        CHECK(s.dim() == 2);
        seen.insert(s.rows());
        // closed under multiplication by the subfield
        Elem delta = tw->subfield_generator(2);
        CHECK(s.cyclic_shift(delta) == s);
    });
    CHECK(count == 5);
    CHECK(seen.size() == 5);

    auto t6 = FieldTower::build(2, 1, 6);
    count = 0;
    enumerate_subfield_grassmannian(*t6, 3, 1, [&](const Subspace& s) {
        ++count;
        CHECK(s.dim() == 3);
    });
    CHECK(count == 9); // gaussian(2,1,8)
}

} // TEST_SUITE
