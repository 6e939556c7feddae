#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "enssum/complexity.hpp"

using namespace enssum;

TEST_CASE("table rows instantiate the four columns at N = 1024") {
    const std::uint64_t N = 1024;

    const ComplexityReport summing = table_row(AlgorithmKind::ensemble_summing, N);
    CHECK(summing.single_run_queries == 1.0);
    CHECK(summing.trials == 1048576.0);
    CHECK(summing.overall_queries == 1048576.0);
    CHECK(summing.sensitivity_scaling == "1/N");

    const ComplexityReport search = table_row(AlgorithmKind::ensemble_search, N);
    CHECK(search.single_run_queries == 10.0);
    CHECK(search.trials == 1048576.0);
    CHECK(search.overall_queries == 10485760.0);

    const ComplexityReport pseudo = table_row(AlgorithmKind::grover_pseudopure, N);
    CHECK(pseudo.single_run_queries == 32.0);
    CHECK(pseudo.trials == 1048576.0);
    CHECK(pseudo.overall_queries == 1048576.0 * 32.0);

    const ComplexityReport pure = table_row(AlgorithmKind::grover_pure, N);
    CHECK(pure.single_run_queries == 32.0);
    CHECK(pure.trials == 1.0);
    CHECK(pure.overall_queries == 32.0);
    CHECK(pure.sensitivity_scaling == "1");

    CHECK(all_table_rows(N).size() == 4);
    CHECK_THROWS_AS(table_row(AlgorithmKind::grover_pure, 1), ParameterError);
}

TEST_CASE("summing/pseudopure overall ratio is 1/sqrt(N) at powers of two") {
    for (int m = 4; m <= 20; m += 2) {
        const std::uint64_t N = std::uint64_t{1} << m;
        const double summing = table_row(AlgorithmKind::ensemble_summing, N).overall_queries;
        const double pseudo = table_row(AlgorithmKind::grover_pseudopure, N).overall_queries;
        REQUIRE(summing / pseudo ==
                Catch::Approx(1.0 / std::sqrt(static_cast<double>(N))).epsilon(1e-12));
    }
}

TEST_CASE("summing threshold is S^(4/3)") {
    CHECK(summing_threshold(1e4) == Catch::Approx(2.1544e5).epsilon(1e-3));
    CHECK(summing_threshold(1e4) >= 2.0e5);
    CHECK(summing_threshold(1e4) <= 2.2e5);
    CHECK(summing_threshold(1.0) == Catch::Approx(1.0).epsilon(1e-12));
    // 8^(4/3) = 16, and 16*sqrt(16) = 64 = 8^2
    CHECK(summing_threshold(8.0) == Catch::Approx(16.0).epsilon(1e-12));
    CHECK_THROWS_AS(summing_threshold(0.0), ParameterError);
}

TEST_CASE("search threshold solves N^1.5 log2 N = S^2") {
    // at N = 2 the left side is 2^1.5, so S = sqrt(2^1.5) pins the root at 2
    const double s_for_two = std::sqrt(std::pow(2.0, 1.5));
    CHECK(search_threshold(s_for_two) == Catch::Approx(2.0).epsilon(1e-6));

    for (const double snr : {2.0, 10.0, 1.0e4}) {
        const double n_max = search_threshold(snr);
        const double residual = std::pow(n_max, 1.5) * std::log2(n_max) - snr * snr;
        REQUIRE(std::abs(residual) <= 1e-6 * snr * snr);
    }

    CHECK_THROWS_AS(search_threshold(1.0), ParameterError);
}

TEST_CASE("search threshold is monotone and below the summing threshold") {
    double prev = 0.0;
    for (const double snr : {1.7, 2.0, 5.0, 50.0, 1e3, 1e4, 1e6}) {
        const double n_max = search_threshold(snr);
        REQUIRE(n_max > prev);
        prev = n_max;
        if (n_max >= 2.0) REQUIRE(n_max < summing_threshold(snr));
    }
}

TEST_CASE("small sensitivities leave no search advantage regime") {
    CHECK(search_threshold(1.5) < 2.0);  // S^2 = 2.25 < 2^1.5 * 1
}

TEST_CASE("advantage verdict uses the strict inequality") {
    CHECK(advantage_regime(100000, 1e4).verdict == Verdict::ensemble_advantage);
    CHECK(advantage_regime(1000000, 1e4).verdict == Verdict::no_advantage);

    // exact boundary: N*sqrt(N) = 64 = S^2 at N = 16, S = 8
    const AdvantageReport edge = advantage_regime(16, 8.0);
    CHECK(edge.n_sqrt_n == 64.0);
    CHECK(edge.snr_squared == 64.0);
    CHECK(edge.verdict == Verdict::no_advantage);

    const AdvantageReport rep = advantage_regime(100000, 1e4);
    CHECK(rep.summing_limit == Catch::Approx(summing_threshold(1e4)));
    CHECK(rep.search_limit == Catch::Approx(search_threshold(1e4)));

    CHECK_THROWS_AS(advantage_regime(1, 10.0), ParameterError);
    CHECK_THROWS_AS(advantage_regime(4, 0.0), ParameterError);
}

TEST_CASE("the verdict flips exactly once along an N sweep") {
    const double snr = 300.0;
    int flips = 0;
    Verdict last = advantage_regime(2, snr).verdict;
    REQUIRE(last == Verdict::ensemble_advantage);
    for (double nd = 2.0; nd < 5.0e5; nd *= 1.07) {
        const Verdict v = advantage_regime(static_cast<std::uint64_t>(nd), snr).verdict;
        if (v != last) ++flips;
        last = v;
    }
    CHECK(flips == 1);
    CHECK(last == Verdict::no_advantage);
}
