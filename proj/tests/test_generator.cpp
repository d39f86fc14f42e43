#include <doctest.h>

#include "frc/errors.hpp"
#include "frc/generator.hpp"

using namespace frc;

TEST_SUITE("generator") {

TEST_CASE("random codes are rho-regular and reproducible") {
    const GenSpec spec{7, 8, 3, 11, GenKind::random};
    const FRCode a = generate_random(spec);
    const FRCode b = generate_random(spec);
    CHECK(a == b);
    CHECK(validate(a).ok);
    CHECK(validate(a).eq1_residual == 0);

    GenSpec other = spec;
    other.seed = 12;
    CHECK_FALSE(generate_random(other) == a);
}

TEST_CASE("forced placement: two nodes, rho = 2") {
    const FRCode c = generate_random({2, 5, 2, 99, GenKind::random});
    CHECK(c.node(NodeId{1}) == PacketList{1, 2, 3, 4, 5});
    CHECK(c.node(NodeId{2}) == PacketList{1, 2, 3, 4, 5});
}

TEST_CASE("seed 42, (5, 15, 2): residual 0 and delta recomputed by hand") {
    const FRCode c = generate_random({5, 15, 2, 42, GenKind::random});
    const auto p = derive_params(c);
    int max_size = 0, total = 0;
    for (const auto& u : c.nodes()) {
        max_size = std::max(max_size, static_cast<int>(u.size()));
        total += static_cast<int>(u.size());
    }
    CHECK(total == 30);
    CHECK(p.alpha == max_size);
    CHECK(p.delta == 5 * max_size - 30);
    CHECK(validate(c).eq1_residual == 0);
}

TEST_CASE("random generator parameter and exhaustion errors") {
    CHECK_THROWS_AS(generate_random({3, 4, 4, 1, GenKind::random}), ParameterError);
    CHECK_THROWS_AS(generate_random({0, 4, 1, 1, GenKind::random}), ParameterError);
    // 10 nodes cannot all be non-empty with only 2 packet copies
    CHECK_THROWS_AS(generate_random({10, 2, 1, 1, GenKind::random}), ExhaustionError);
}

TEST_CASE("strong codes") {
    const FRCode fig = generate_strong({4, 6, 2, 5, GenKind::strong});
    const auto p = derive_params(fig);
    CHECK(p.delta == 0);
    CHECK(p.strong);
    CHECK(p.alpha_i == std::vector<int>(4, 3));
    CHECK(validate(fig).ok);

    const FRCode six = generate_strong({6, 9, 2, 3, GenKind::strong});
    CHECK(derive_params(six).alpha_i == std::vector<int>(6, 3));

    CHECK_THROWS_AS(generate_strong({4, 7, 2, 1, GenKind::strong}), ParameterError);
    CHECK_THROWS_AS(generate_strong({2, 4, 3, 1, GenKind::strong}), ParameterError);
    CHECK(generate_strong({6, 9, 2, 3, GenKind::strong}) == six);
}

TEST_CASE("property: strong generation over many triples") {
    int count = 0;
    for (int n = 2; n <= 12; ++n) {
        for (int rho = 1; rho <= std::min(n, 4); ++rho) {
            for (int theta = 1; theta <= 20; ++theta) {
                if ((rho * theta) % n != 0) continue;
                const auto seed = static_cast<std::uint64_t>(n * 1000 + rho * 100 + theta);
                const FRCode c = generate_strong({n, theta, rho, seed, GenKind::strong});
                const auto p = derive_params(c);
                CAPTURE(n);
                CAPTURE(theta);
                CAPTURE(rho);
                CHECK(validate(c).ok);
                CHECK(p.delta == 0);
                CHECK(n * p.alpha == rho * theta);
                ++count;
            }
        }
    }
    CHECK(count > 100);
}

TEST_CASE("corpus transcriptions") {
    REQUIRE(corpus().size() == 4);
    CHECK(corpus()[0].first == "table1");
    CHECK(corpus_code("table1")->node(NodeId{1}) == PacketList{1, 6, 7, 8});
    CHECK(corpus_code("m11x8")->node(NodeId{5}) == PacketList{1, 2, 3, 4});
    CHECK(corpus_code("table3")->node(NodeId{5}) == PacketList{6});
    CHECK(corpus_code("table2")->n() == 5);
    CHECK(corpus_code("table2")->theta() == 9);
    CHECK(corpus_code("m11x8")->rho() == 3);
    CHECK_FALSE(corpus_code("figure7").has_value());
}

}  // TEST_SUITE
