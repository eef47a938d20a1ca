#include <doctest.h>

#include <sstream>

#include "mlcss/bench.hpp"
#include "mlcss/errors.hpp"

using namespace mlcss;

TEST_CASE("parse_grid accepts the documented shape") {
    const GridSpec grid = parse_grid("s=1,2;t=1,2;m=8,16,32;n=8,16,32");
    CHECK(grid.s == std::vector<std::uint64_t>{1, 2});
    CHECK(grid.t == std::vector<std::uint64_t>{1, 2});
    CHECK(grid.m == std::vector<std::uint64_t>{8, 16, 32});
    CHECK(grid.n == std::vector<std::uint64_t>{8, 16, 32});
}

TEST_CASE("parse_grid rejects malformed specs") {
    CHECK_THROWS_AS(parse_grid("s=1;t=1;m=8"), InputError);            // missing n
    CHECK_THROWS_AS(parse_grid("s=1;t=1;m=8;n=x"), InputError);        // bad value
    CHECK_THROWS_AS(parse_grid("s=0;t=1;m=8;n=8"), InputError);        // s >= 1
    CHECK_THROWS_AS(parse_grid("s=1;s=2;t=1;m=8;n=8"), InputError);    // duplicate
    CHECK_THROWS_AS(parse_grid("s=1;t=1;m=8;n=8;k=2"), InputError);    // unknown key
    CHECK_THROWS_AS(parse_grid("s=1;t=1;m=;n=8"), InputError);         // empty values
}

TEST_CASE("run_grid reports exact cell counts and resident bounds") {
    const GridSpec grid = parse_grid("s=1,2;t=1;m=4,8;n=4");
    const auto points = run_grid(grid, {TableMode::Full, TableMode::Rolling}, 7,
                                 SolveConfig{}.max_cells, 4, nullptr);
    REQUIRE(points.size() == 2 * 2 * 2); // (s) x (m) x (modes)

    for (const auto& p : points) {
        std::uint64_t want_cells = p.n;
        for (std::uint64_t k = 0; k < p.s; ++k) want_cells *= p.m;
        CHECK(p.cells == want_cells);

        std::uint64_t full_cells = p.n + 1;
        for (std::uint64_t k = 0; k < p.s; ++k) full_cells *= p.m + 1;
        if (p.mode == TableMode::Full) {
            CHECK(p.peak_cells_resident == full_cells);
        } else {
            // the two-layer bound, met with equality by the slab
            CHECK(p.peak_cells_resident == 2 * full_cells / (p.m + 1));
        }
    }

    // doubling m at s=1, t=1 doubles the cells
    const auto at = [&](std::uint64_t s, std::uint64_t m, TableMode mode) {
        for (const auto& p : points)
            if (p.s == s && p.m == m && p.mode == mode) return p.cells;
        FAIL("missing point");
        return std::uint64_t{0};
    };
    CHECK(at(1, 8, TableMode::Rolling) == 2 * at(1, 4, TableMode::Rolling));
}

TEST_CASE("run_grid skips points over budget and keeps going") {
    const GridSpec grid = parse_grid("s=1;t=1;m=4,64;n=64");
    std::ostringstream log;
    // full table at m=n=64 needs 65*65 = 4225 cells; cap below that
    const auto points = run_grid(grid, {TableMode::Full}, 7, 2000, 4, &log);
    REQUIRE(points.size() == 1);
    CHECK(points[0].m == 4);
    CHECK(log.str().find("skip") != std::string::npos);
    CHECK(log.str().find("m=64") != std::string::npos);
}

TEST_CASE("csv header and rows are stable") {
    std::vector<BenchPoint> points{
        {1, 2, 8, 16, TableMode::Rolling, 128, 0.5, 34},
    };
    std::ostringstream os;
    write_csv(points, os);
    CHECK(os.str() ==
          "s,t,m,n,mode,cells,elapsed_ms,peak_cells_resident\n"
          "1,2,8,16,rolling,128,0.5,34\n");
}
