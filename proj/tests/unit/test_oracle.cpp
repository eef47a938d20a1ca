#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "mlcss/oracle.hpp"

using namespace mlcss;

TEST_CASE("is_subsequence") {
    CHECK(is_subsequence(seq("ace"), seq("abcde")));
    CHECK(is_subsequence(seq(""), seq("xyz")));
    CHECK(is_subsequence(seq(""), seq("")));
    CHECK_FALSE(is_subsequence(seq("ba"), seq("ab")));
    CHECK_FALSE(is_subsequence(seq("a"), seq("")));
}

TEST_CASE("occurs_as_substring") {
    CHECK(occurs_as_substring(seq("bd"), seq("bdc")));
    CHECK(occurs_as_substring(seq(""), seq("x")));
    CHECK(occurs_as_substring(seq(""), seq("")));
    CHECK_FALSE(occurs_as_substring(seq("bc"), seq("bdc")));
    CHECK_FALSE(occurs_as_substring(seq("aa"), seq("a")));
}

TEST_CASE("oracle_solve examples") {
    const Solution a = oracle_solve(make_instance({"abab"}, {"ba"}));
    CHECK(a.length == 2);
    CHECK(a.witness == seq("ba"));

    const Solution b = oracle_solve(make_instance({"abc", "cba"}, {"abc"}));
    CHECK(b.length == 1);

    const Solution c = oracle_solve(make_instance({"", "abc"}, {"abc"}));
    CHECK(c.length == 0);
    CHECK(c.witness.empty());

    const Solution d = oracle_solve(make_instance({"abc"}, {"abc", ""}));
    CHECK(d.length == 0);
}

TEST_CASE("oracle tie-break takes the earliest end") {
    // "ab" occurs ending at 2 and at 4; the earlier end wins.
    const Solution sol = oracle_solve(make_instance({"ab"}, {"abab"}));
    CHECK(sol.length == 2);
    CHECK(sol.witness == seq("ab"));
    CHECK(sol.end_in_y1 == 2);
}

TEST_CASE("oracle end_in_y1 names a slice of Y_1") {
    // Y_2 is the shortest, so the enumeration runs over it; the reported end
    // must still point into Y_1.
    const Instance inst = make_instance({"dcba"}, {"xdc", "dc"});
    const Solution sol = oracle_solve(inst);
    CHECK(sol.length == 2);
    CHECK(sol.witness == seq("dc"));
    CHECK(sol.end_in_y1 == 3);
    CHECK(inst.ys[0].slice1(sol.end_in_y1 - sol.length + 1, sol.end_in_y1) == sol.witness);
}

TEST_CASE("oracle guard rejects long shortest Y") {
    const std::string long_y(65, 'a');
    CHECK_THROWS_AS(oracle_solve(make_instance({"a"}, {long_y})), GuardError);
    // a long Y is fine as long as some other Y is short
    CHECK_NOTHROW(oracle_solve(make_instance({"a"}, {long_y, "a"})));
}

TEST_CASE("oracle is deterministic") {
    const Instance inst = make_instance({"abcabc", "bcabca"}, {"cabcab", "abcab"});
    const Solution a = oracle_solve(inst);
    const Solution b = oracle_solve(inst);
    CHECK(a.length == b.length);
    CHECK(a.witness == b.witness);
    CHECK(a.end_in_y1 == b.end_in_y1);
}

TEST_CASE("verify reports per-sequence results") {
    CHECK(verify(make_instance({"ab"}, {"ab"}), seq("ab")).pass());

    const VerifyReport fail = verify(make_instance({"ab"}, {"ab"}), seq("ba"));
    CHECK_FALSE(fail.pass());
    CHECK_FALSE(fail.x_ok[0]);

    CHECK(verify(make_instance({"ab", "xy"}, {"q"}), seq("")).pass());
}

TEST_CASE("gen_random is a pure function of its params") {
    GenParams params;
    params.s = 3;
    params.t = 2;
    params.len_x = {0, 9};
    params.len_y = {0, 7};
    params.alphabet_size = 3;
    params.seed = 42;

    const Instance a = gen_random(params);
    const Instance b = gen_random(params);
    CHECK(a.xs == b.xs);
    CHECK(a.ys == b.ys);

    params.seed = 43;
    const Instance c = gen_random(params);
    CHECK((a.xs != c.xs || a.ys != c.ys));
}

TEST_CASE("gen_random respects ranges and alphabet") {
    GenParams params;
    params.s = 2;
    params.t = 2;
    params.len_x = {3, 5};
    params.len_y = {1, 4};
    params.alphabet_size = 4;
    for (std::uint64_t s = 0; s < 50; ++s) {
        params.seed = s;
        const Instance inst = gen_random(params);
        for (const auto& x : inst.xs) {
            CHECK(x.size() >= 3);
            CHECK(x.size() <= 5);
            for (Symbol sym : x.symbols) CHECK(sym < 4);
        }
        for (const auto& y : inst.ys) {
            CHECK(y.size() >= 1);
            CHECK(y.size() <= 4);
        }
    }
}

TEST_CASE("gen_random degenerate ranges give empty sequences") {
    GenParams params;
    params.len_x = {0, 0};
    params.len_y = {0, 0};
    const Instance inst = gen_random(params);
    CHECK(inst.xs[0].empty());
    CHECK(inst.ys[0].empty());
}

TEST_CASE("gen_random rejects bad params") {
    GenParams params;
    params.s = 0;
    CHECK_THROWS_AS(gen_random(params), ContractError);
    params.s = 1;
    params.alphabet_size = 0;
    CHECK_THROWS_AS(gen_random(params), ContractError);
    params.alphabet_size = 2;
    params.len_x = {5, 3};
    CHECK_THROWS_AS(gen_random(params), ContractError);
}

TEST_CASE("gen_planted instances contain the plant") {
    GenParams params;
    params.s = 2;
    params.t = 2;
    params.len_x = {4, 9};
    params.len_y = {4, 8};
    params.alphabet_size = 3;
    for (std::uint64_t s = 0; s < 50; ++s) {
        params.seed = s;
        const PlantedInstance planted = gen_planted(params, 4);
        CHECK(planted.planted.size() == 4);
        CHECK(verify(planted.instance, planted.planted).pass());
        for (const auto& x : planted.instance.xs) {
            CHECK(x.size() >= 4);
            CHECK(x.size() <= 9);
        }
    }
}

TEST_CASE("gen_planted with length zero is unconstrained") {
    GenParams params;
    params.len_x = {0, 5};
    params.len_y = {0, 5};
    const PlantedInstance planted = gen_planted(params, 0);
    CHECK(planted.planted.empty());
    CHECK(verify(planted.instance, planted.planted).pass());
}

TEST_CASE("gen_planted rejects an infeasible plant") {
    GenParams params;
    params.len_x = {2, 5};
    params.len_y = {4, 5};
    CHECK_THROWS_AS(gen_planted(params, 3), ContractError);
}
