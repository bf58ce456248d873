#include <doctest.h>

#include <sstream>
#include <thread>

#include "oracles.hpp"

using namespace idring;

TEST_SUITE("cost_meter") {
    TEST_CASE("measured pairings follow 2n-1 and 2") {
        CHECK(measure_ring_sign(1).pairings == 1);
        CHECK(measure_ring_sign(4).pairings == 7);
        CHECK(measure_ring_verify(4).pairings == 2);
        for (std::size_t n = 1; n <= 8; ++n) {
            CHECK(measure_ring_sign(n).pairings == 2 * n - 1);
            CHECK(measure_ring_verify(n).pairings == 2);
            CHECK(measure_proxy_sign(n).pairings == 2 * n - 1);
            CHECK(measure_proxy_verify(n).pairings == 2);
        }
    }

    TEST_CASE("measurements are deterministic") {
        CHECK(measure_ring_sign(5) == measure_ring_sign(5));
        CHECK(measure_proxy_verify(3) == measure_proxy_verify(3));
    }

    TEST_CASE("hash and multiplication tallies") {
        for (std::int64_t n = 1; n <= 6; ++n) {
            const auto sign = as_formula(measure_ring_sign(static_cast<std::size_t>(n)));
            const auto verify = as_formula(measure_ring_verify(static_cast<std::size_t>(n)));
            // one H1 call plus one H3 per ring slot
            CHECK(sign.hashes == n + 1);
            CHECK(verify.hashes == n + 1);
            CHECK(sign.pairings == predicted_ring_sign(n).pairings);
            CHECK(verify.pairings == predicted_ring_verify(n).pairings);
            CHECK(sign.muls_target == n - 1);
        }
    }

    TEST_CASE("predicted formulas") {
        const CostFormula s = predicted_ring_sign(4);
        CHECK(s.pairings == 7);
        CHECK(s.hashes == 4);
        CHECK(s.adds == 5);
        CHECK(s.muls_source == 8);
        CHECK(s.muls_target == 3);
        const CostFormula v = predicted_ring_verify(4);
        CHECK(v.pairings == 2);
        CHECK(v.hashes == 5);
        CHECK(v.muls_field == 3);
        CHECK(v.muls_target == 1);
    }

    TEST_CASE("interleaved scopes never cross-contaminate") {
        const OpCounts alone = measure_ring_sign(3);
        {
            CountingScope outer;
            const OpCounts a = measure_ring_sign(3);
            const OpCounts b = measure_ring_verify(3);
            const OpCounts a2 = measure_ring_sign(3);
            CHECK(a == alone);
            CHECK(a2 == alone);
            CHECK(b.pairings == 2);
        }

        OpCounts x, y;
        {
            CountingScope s1;
            (void)pairing(BasePoint::generator(), KeyPoint::generator());
            {
                CountingScope s2;
                (void)pairing(BasePoint::generator(), KeyPoint::generator());
                (void)pairing(BasePoint::generator(), KeyPoint::generator());
                y = s2.counts();
            }
            (void)pairing(BasePoint::generator(), KeyPoint::generator());
            x = s1.counts();
        }
        CHECK(x.pairings == 2);
        CHECK(y.pairings == 2);
    }

    TEST_CASE("measurements on separate threads are isolated") {
        std::vector<std::thread> threads;
        std::vector<std::size_t> got(4);
        for (std::size_t i = 0; i < got.size(); ++i)
            threads.emplace_back([&, i] { got[i] = measure_ring_sign(i + 2).pairings; });
        for (auto& t : threads) t.join();
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == 2 * (i + 2) - 1);
    }

    TEST_CASE("report rows") {
        const auto rows = cost_report(8);
        REQUIRE(rows.size() == 8);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].n == i + 1);
            CHECK(rows[i].pairings_match());
        }
        CHECK(cost_report(1).size() == 1);
        CHECK_THROWS_AS(cost_report(0), Error);
    }

    TEST_CASE("csv report lists sign pairings 1,3,...,15") {
        const std::string csv = format_cost_report(cost_report(8), true);
        std::istringstream in(csv);
        std::string line;
        REQUIRE(std::getline(in, line));
        CHECK(line.rfind("n,scheme,op,pairings,pred_pairings", 0) == 0);
        std::vector<std::string> idbrs_sign;
        int lines = 0;
        while (std::getline(in, line)) {
            ++lines;
            std::vector<std::string> cells;
            std::stringstream ls(line);
            for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
            REQUIRE(cells.size() >= 5);
            CHECK(cells[3] == cells[4]);
            if (cells[1] == "idbrs" && cells[2] == "sign") idbrs_sign.push_back(cells[3]);
            if (cells[2] == "verify") CHECK(cells[3] == "2");
        }
        CHECK(lines == 32);
        CHECK(idbrs_sign == std::vector<std::string>{"1", "3", "5", "7", "9", "11", "13", "15"});
    }

    TEST_CASE("text report mentions competitor rows") {
        const std::string text = format_cost_report(cost_report(2), false);
        CHECK(text.find("Zhang") != std::string::npos);
        CHECK(text.find("Lin") != std::string::npos);
        CHECK(text.find("MISMATCH") == std::string::npos);
    }
}
