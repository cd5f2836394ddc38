#include "doctest.h"
#include "oracle.hpp"

#include "gcw/sectors.hpp"

using namespace gcw;

namespace {

SectorKey key_of(ComplexId c, int d, int g, int v, int vw = 0) {
    SectorKey k;
    k.complex_id = c;
    k.d = int8_t(d);
    k.g = int8_t(g);
    if (complex_flavor(c) == Flavor::HAT) {
        k.vw = int8_t(vw);
        k.vb = int8_t(v - vw);
    } else {
        k.vb = int8_t(v);
    }
    return k;
}

} // namespace

TEST_CASE("named small sectors") {
    // with tadpoles excluded only the triangle survives; the tadpole-ended
    // path joins it under the permissive convention
    GenOptions no_tp;
    no_tp.allow_tadpoles = false;
    Basis tri = generate_basis(key_of(ComplexId::GC0, 2, 1, 3), no_tp);
    REQUIRE(tri.size() == 1);
    CHECK(loop_order(tri.graphs[0]) == 1);
    CHECK(tri.graphs[0].ne == 3);
    CHECK_FALSE(tri.graphs[0].has_tadpole());
    Basis tri_tp = generate_basis(key_of(ComplexId::GC0, 2, 1, 3));
    CHECK(tri_tp.size() == 2);

    Basis edge = generate_basis(key_of(ComplexId::GC0, 2, 0, 2));
    REQUIRE(edge.size() == 1);
    CHECK(edge.graphs[0].ne == 1);

    // every loop-order-1 bivalent graph is a cycle; the pentagon survives
    Basis penta = generate_basis(key_of(ComplexId::GC2, 2, 1, 5));
    REQUIRE(penta.size() == 1);
    for (int v = 0; v < 5; ++v) CHECK(penta.graphs[0].valence(v) == 2);

    // squares and hexagons die by their reflection symmetry
    CHECK(generate_basis(key_of(ComplexId::GC2, 2, 1, 4)).size() == 0);
    CHECK(generate_basis(key_of(ComplexId::GC2, 2, 1, 6)).size() == 0);

    // black vertex with two edges onto two whites
    Basis hat = generate_basis(key_of(ComplexId::HAT, 2, 0, 3, 2));
    REQUIRE(hat.size() == 1);
    CHECK(hat.graphs[0].num_whites() == 2);
    CHECK(hat.graphs[0].outdeg(0) + hat.graphs[0].outdeg(1) + hat.graphs[0].outdeg(2) ==
          2);
}

TEST_CASE("oriented triangle sector matches the oracle") {
    for (int d : {1, 2}) {
        Basis gen = generate_basis(key_of(ComplexId::OGC0, d, 1, 3));
        Basis orc = oracle::basis(key_of(ComplexId::OGC0, d, 1, 3));
        CHECK(gen.graphs == orc.graphs);
    }
}

TEST_CASE("generate equals oracle across small sectors") {
    for (ComplexId c : {ComplexId::GC0, ComplexId::GC2, ComplexId::GC3,
                        ComplexId::OGC0, ComplexId::OGC2, ComplexId::OGC3}) {
        for (int d : {1, 2}) {
            for (int g = 0; g <= 2; ++g) {
                for (int v = 1; v <= 5; ++v) {
                    if (v + g - 1 < 0) continue;
                    SectorKey k = key_of(c, d, g, v);
                    Basis gen = generate_basis(k);
                    Basis orc = oracle::basis(k);
                    INFO(k.str());
                    CHECK(gen.graphs == orc.graphs);
                }
            }
        }
    }
    for (int d : {1, 2})
        for (int g = 0; g <= 1; ++g)
            for (int v = 2; v <= 5; ++v)
                for (int vw = 0; vw < v; ++vw) {
                    SectorKey k = key_of(ComplexId::HAT, d, g, v, vw);
                    if (k.e() < 0) continue;
                    Basis gen = generate_basis(k);
                    Basis orc = oracle::basis(k);
                    INFO(k.str());
                    CHECK(gen.graphs == orc.graphs);
                }
}

TEST_CASE("non-connected complexes agree with the oracle") {
    for (int g = 0; g <= 1; ++g)
        for (int v = 1; v <= 4; ++v) {
            SectorKey k = key_of(ComplexId::fGC, 2, g, v);
            Basis gen = generate_basis(k);
            Basis orc = oracle::basis(k);
            INFO(k.str());
            CHECK(gen.graphs == orc.graphs);
        }
    // loop order can drop below zero once components multiply
    SectorKey k = key_of(ComplexId::fGC, 2, -1, 2);
    CHECK(generate_basis(k).size() == 1); // two isolated vertices
}

TEST_CASE("degree is constant on a sector") {
    for (ComplexId c : {ComplexId::GC0, ComplexId::OGC0}) {
        for (int g = 0; g <= 2; ++g)
            for (int v = 1; v <= 5; ++v) {
                SectorKey k = key_of(c, 2, g, v);
                if (k.e() < 0) continue;
                Basis b = generate_basis(k);
                for (const Graph& gr : b.graphs) CHECK(degree(gr) == sector_degree(k));
            }
    }
    SectorKey hk = key_of(ComplexId::HAT, 2, 1, 4, 2);
    Basis hb = generate_basis(hk);
    CHECK(hb.size() > 0);
    for (const Graph& gr : hb.graphs) CHECK(degree(gr) == sector_degree(hk));
}

TEST_CASE("tadpole flag") {
    SectorKey k = key_of(ComplexId::GC2, 2, 1, 1); // lone vertex with a tadpole
    CHECK(generate_basis(k).size() == 1);
    GenOptions no_tp;
    no_tp.allow_tadpoles = false;
    CHECK(generate_basis(k, no_tp).size() == 0);
}

TEST_CASE("basis files round trip") {
    Basis b = generate_basis(key_of(ComplexId::OGC0, 2, 1, 4));
    auto lines = basis_to_lines(b);
    Basis b2 = basis_from_lines(lines);
    CHECK(b2.key == b.key);
    CHECK(b2.graphs == b.graphs);
    CHECK(basis_to_lines(b2) == lines);
}

TEST_CASE("parallel generation matches the serial reference") {
    for (ComplexId c : {ComplexId::GC0, ComplexId::OGC0}) {
        SectorKey k = key_of(c, 2, 2, 6);
        GenOptions serial;
        serial.threads = 1;
        GenOptions parallel;
        parallel.threads = 2;
        Basis a = generate_basis(k, serial);
        Basis b = generate_basis(k, parallel);
        CHECK(a.graphs == b.graphs);
        CHECK(a.size() > 0);
    }
}

TEST_CASE("sector caps raise explicit overflow errors") {
    GenOptions tight;
    tight.candidate_cap = 3;
    CHECK_THROWS_AS(generate_basis(key_of(ComplexId::OGC0, 2, 2, 6), tight),
                    cap_exceeded);
}
