#include "doctest.h"
#include "oracle.hpp"

#include "gcw/graph.hpp"

using namespace gcw;

namespace {

Graph tetrahedron(int d) {
    return Graph::make(Flavor::GC, d, 4,
                       {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{1, 2}, Edge{1, 3},
                        Edge{2, 3}});
}

} // namespace

TEST_CASE("loop order") {
    CHECK(loop_order(Graph::make(Flavor::GC, 2, 2, {Edge{0, 1}})) == 0);
    CHECK(loop_order(Graph::make(Flavor::GC, 2, 3, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}})) ==
          1);
    Graph t = tetrahedron(2);
    CHECK(loop_order(t) == 3);
    CHECK(oracle::cycle_space_rank(t) == 3);

    Graph disconnected = Graph::make(Flavor::GC, 2, 3, {Edge{0, 1}});
    CHECK_THROWS(loop_order(disconnected));
}

TEST_CASE("degree formulas") {
    CHECK(degree(tetrahedron(2)) == 0); // 2*3 + (1-2)*6
    for (int d = -1; d <= 3; ++d) {
        Graph e = Graph::make(Flavor::GC, d, 2, {Edge{0, 1}});
        CHECK(degree(e) == 1);
    }
    // black vertex with k white children sits in degree 1 for every d
    for (int d = 1; d <= 3; ++d)
        for (int k = 1; k <= 4; ++k) {
            Graph c;
            c.flavor = Flavor::HAT;
            c.d = int8_t(d);
            c.nv = uint8_t(k + 1);
            for (int i = 1; i <= k; ++i) {
                c.add_edge(0, i);
                c.white_mask |= uint16_t(1u << i);
            }
            CHECK(degree(c) == 1);
        }
    // directed edge in the oriented family, parameter shift d -> d+1
    Graph oe = Graph::make(Flavor::OGC, 2, 2, {Edge{0, 1}});
    CHECK(degree(oe) == 1); // 3*1 - 2*1
}

TEST_CASE("validate membership") {
    Graph triangle = Graph::make(Flavor::GC, 2, 3, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}});
    CHECK(validate(triangle, ComplexId::GC2));
    CHECK(validate(triangle, ComplexId::GC0));
    CHECK_FALSE(validate(triangle, ComplexId::GC3));

    Graph pendant = Graph::make(Flavor::GC, 2, 3,
                                {Edge{0, 1}, Edge{0, 1}, Edge{1, 2}});
    CHECK_FALSE(validate(pendant, ComplexId::GC2)); // valence-1 vertex present

    Graph cyc3 = Graph::make(Flavor::OGC, 2, 3, {Edge{0, 1}, Edge{1, 2}, Edge{2, 0}});
    CHECK_FALSE(validate(cyc3, ComplexId::OGC0)); // closed directed path

    Graph hat = Graph::make(Flavor::HAT, 2, 3, {Edge{0, 1}, Edge{0, 2}}, 0b110);
    CHECK(validate(hat, ComplexId::HAT));
    CHECK_FALSE(validate(hat, ComplexId::HATblack));

    Graph tadpole = Graph::make(Flavor::GC, 2, 1, {Edge{0, 0}});
    CHECK(validate(tadpole, ComplexId::GC2));
    CHECK_FALSE(validate(tadpole, ComplexId::GC2, /*allow_tadpoles=*/false));
}

TEST_CASE("encode examples") {
    Graph single = Graph::make(Flavor::GC, 2, 1, {});
    CHECK(encode(single) == "GC;d=2;V=1;C=b;E=;s=+");
    CHECK(decode("GC;d=2;V=1;C=b;E=;s=+") == single);

    Graph oe = Graph::make(Flavor::OGC, 2, 2, {Edge{0, 1}});
    CHECK(encode(oe) == "OGC;d=2;V=2;C=bb;E=0>1;s=+");
    CHECK(decode("OGC;d=2;V=2;C=bb;E=0>1;s=+") == oe);
}

TEST_CASE("decode rejects invariant violations") {
    // directed cycle under flavor OGC
    CHECK_THROWS(decode("OGC;d=2;V=2;C=bb;E=0>1,1>0;s=+"));
    // white vertex with outgoing edge
    CHECK_THROWS(decode("HAT;d=2;V=2;C=wb;E=0>1;s=+"));
    // malformed text
    CHECK_THROWS_WITH_AS(decode("GC;d=2;V=1;C=b;E=;s=?"), doctest::Contains("position"),
                         std::runtime_error);
    CHECK_THROWS(decode("XX;d=2;V=1;C=b;E=;s=+"));
    CHECK_THROWS(decode("GC;d=2;V=1;C=b;E=0>4;s=+"));
}

TEST_CASE("encode round trip on assorted graphs") {
    std::vector<Graph> gs = {
        tetrahedron(2),
        Graph::make(Flavor::GC, 3, 2, {Edge{0, 1}, Edge{0, 1}}),
        Graph::make(Flavor::OGC, 1, 3, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}}),
        Graph::make(Flavor::HAT, 2, 4, {Edge{0, 1}, Edge{0, 2}, Edge{3, 2}}, 0b0110),
    };
    for (const Graph& g : gs) CHECK(decode(encode(g)) == g);

    Graph neg = tetrahedron(2);
    neg.sign = -1;
    CHECK(decode(encode(neg)) == neg);
}
