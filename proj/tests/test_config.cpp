#include <cstdlib>

#include "doctest.h"
#include "polarimeter/config.hpp"
#include "polarimeter/util.hpp"
#include "scratch.hpp"

using namespace polarimeter;

TEST_CASE("config parses key = value lines with comments") {
    const Config cfg = Config::parse(
        "# a comment\n"
        "cluster.k = 4\n"
        "\n"
        "  window.start=2021-06-01  \n"
        "paths.members = data/m.csv\n",
        "test");
    CHECK(cfg.get_int("cluster.k", 5) == 4);
    CHECK(cfg.get_string("window.start", "") == "2021-06-01");
    CHECK(cfg.get_string("paths.members", "") == "data/m.csv");
    CHECK(cfg.get_string("paths.tweets", "fallback") == "fallback");
}

TEST_CASE("config rejects unknown keys with the line number") {
    CHECK_THROWS_WITH_AS(Config::parse("nope.key = 1\n", "cfg"),
                         doctest::Contains("cfg:1"), Error);
    CHECK_THROWS_WITH_AS(Config::parse("cluster.k = 5\nbad = x\n", "cfg"),
                         doctest::Contains("cfg:2"), Error);
    CHECK_THROWS_WITH_AS(Config::parse("just words\n", "cfg"),
                         doctest::Contains("expected 'key = value'"), Error);
}

TEST_CASE("later set() wins, implementing CLI-over-file precedence") {
    Config cfg = Config::parse("cluster.k = 4\n", "test");
    cfg.set("cluster.k", "7");
    CHECK(cfg.get_int("cluster.k", 5) == 7);
    CHECK_THROWS_AS(cfg.set("unknown.key", "x"), Error);
}

TEST_CASE("get_bool accepts common spellings") {
    Config cfg;
    cfg.set("flags.welch", "true");
    CHECK(cfg.get_bool("flags.welch", false));
    cfg.set("flags.welch", "0");
    CHECK_FALSE(cfg.get_bool("flags.welch", true));
    cfg.set("flags.welch", "yes");
    CHECK(cfg.get_bool("flags.welch", false));
    cfg.set("flags.welch", "maybe");
    CHECK_THROWS_AS(cfg.get_bool("flags.welch", false), Error);
    CHECK(Config{}.get_bool("flags.welch", true));
}

TEST_CASE("resolve prefers the explicit path over the environment") {
    const std::string dir = scratch_dir("config");
    write_file(dir + "/cli.cfg", "cluster.k = 3\n");
    write_file(dir + "/env.cfg", "cluster.k = 9\n");

    ::setenv("POLARIMETER_CONFIG", (dir + "/env.cfg").c_str(), 1);
    CHECK(Config::resolve(dir + "/cli.cfg").get_int("cluster.k", 0) == 3);
    CHECK(Config::resolve(std::nullopt).get_int("cluster.k", 0) == 9);
    ::unsetenv("POLARIMETER_CONFIG");
    CHECK(Config::resolve(std::nullopt).get_int("cluster.k", 0) == 0);
}

TEST_CASE("config getters validate numeric values") {
    Config cfg;
    cfg.set("cluster.tol", "not-a-number");
    CHECK_THROWS_AS(cfg.get_real("cluster.tol", 0.0), Error);
    cfg.set("cluster.max_iter", "7.5");
    CHECK_THROWS_AS(cfg.get_int("cluster.max_iter", 0), Error);
}
