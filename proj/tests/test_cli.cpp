#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

const std::string kCli = NCCR_CLI_PATH;
const std::string kFixtures = NCCR_FIXTURE_DIR;

struct RunResult {
    int exit_code;
    std::string output; // stdout and stderr combined
};

RunResult run(const std::string& args) {
    std::string cmd = kCli + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("toric subcommand on the named cones") {
    RunResult sigma = run("toric " + kFixtures + "/sigma_cone.json");
    CHECK(sigma.exit_code == 0);
    CHECK(contains(sigma.output, "simplicial: no"));
    CHECK(contains(sigma.output, "Cl = Z + Z/2 + Z/2"));
    CHECK(contains(sigma.output, "steady splitting NCCR: NO"));

    RunResult octant = run("toric " + kFixtures + "/octant.json");
    CHECK(octant.exit_code == 0);
    CHECK(contains(octant.output, "quotient group: trivial"));
    CHECK(contains(octant.output, "steady splitting NCCR: YES"));

    RunResult bad = run("toric " + kFixtures + "/bad_ray_cone.json");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "non_primitive_ray"));
    CHECK(contains(bad.output, "ray 0"));
}

TEST_CASE("dimer subcommand on the shipped fixtures") {
    RunResult hex = run("dimer " + kFixtures + "/one_hexagon.json");
    CHECK(hex.exit_code == 0);
    CHECK(contains(hex.output, "consistent: yes"));
    CHECK(contains(hex.output, "hexagonal: yes"));
    CHECK(contains(hex.output, "steady: yes"));
    CHECK(contains(hex.output, "group: trivial"));

    RunResult sigma = run("dimer " + kFixtures + "/sigma_dimer.json");
    CHECK(sigma.exit_code == 0);
    CHECK(contains(sigma.output, "consistent: yes"));
    CHECK(contains(sigma.output, "hexagonal: no"));
    CHECK(contains(sigma.output, "steady: no"));
    CHECK(contains(sigma.output, "polygon hull: (-1,-1) (1,-1) (1,1) (-1,1)"));

    RunResult con = run("dimer " + kFixtures + "/conifold.json");
    CHECK(con.exit_code == 0);
    CHECK(contains(con.output, "consistent: yes"));
    CHECK(contains(con.output, "hexagonal: no"));
    CHECK(contains(con.output, "Cl = Z"));
    CHECK(contains(con.output, "splitting NCCR exists, steady does not"));

    RunResult inc = run("dimer " + kFixtures + "/inconsistent_parallel.json");
    CHECK(inc.exit_code == 0);
    CHECK(contains(inc.output, "consistent: no"));
    CHECK(contains(inc.output, "trivial_zigzag"));
}

TEST_CASE("generate subcommand writes a loadable model") {
    std::string out = "/tmp/nccr_cli_gen.json";
    RunResult gen = run("generate --group 14 --weights 1,5,8 -o " + out);
    CHECK(gen.exit_code == 0);
    CHECK(contains(gen.output, "14 faces"));
    CHECK(contains(gen.output, "dual quiver isomorphic to McKay quiver: yes"));

    RunResult check = run("dimer " + out);
    CHECK(check.exit_code == 0);
    CHECK(contains(check.output, "steady: yes"));
    CHECK(contains(check.output, "group: Z/14"));

    RunResult one = run("generate --group trivial --weights 0,0,0 -o /tmp/nccr_cli_one.json");
    CHECK(one.exit_code == 0);
    CHECK(contains(one.output, "1 faces"));

    // Weight sum 2+2+1 = 5 is nonzero mod 4.
    RunResult bad = run("generate --group 4 --weights 2,2,1 -o /tmp/nccr_cli_bad.json");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "weight_sum_nonzero"));
}

TEST_CASE("mckay subcommand emits DOT") {
    RunResult q = run("mckay --group 2 --weights 1,1,0");
    CHECK(q.exit_code == 0);
    CHECK(contains(q.output, "digraph mckay"));
    CHECK(contains(q.output, "v0 -> v1;"));
}

TEST_CASE("steady subcommand") {
    RunResult yes = run("steady --group 4 --classes 0,2");
    CHECK(yes.exit_code == 0);
    CHECK(contains(yes.output, "steady: yes"));

    RunResult no = run("steady --group 4 --classes 0,1,2");
    CHECK(no.exit_code == 0);
    CHECK(contains(no.output, "steady: no"));
    CHECK(contains(no.output, "closure = {0,1,2,3}"));

    RunResult pair = run("steady --group 2,2 --classes \"(0,0),(1,0)\"");
    CHECK(pair.exit_code == 0);
    CHECK(contains(pair.output, "steady: yes"));
    CHECK(contains(pair.output, "generates Cl: no"));

    RunResult empty = run("steady --group 4 --classes \"\"");
    CHECK(empty.exit_code == 2);
}

TEST_CASE("json reports are byte-identical across runs and versioned") {
    RunResult a = run("toric " + kFixtures + "/sigma_cone.json --format json");
    RunResult b = run("toric " + kFixtures + "/sigma_cone.json --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "\"schema\": 1"));
    CHECK(contains(a.output, "\"kind\": \"toric\""));

    RunResult d1 = run("dimer " + kFixtures + "/sigma_dimer.json --format json");
    RunResult d2 = run("dimer " + kFixtures + "/sigma_dimer.json --format json");
    CHECK(d1.exit_code == 0);
    CHECK(d1.output == d2.output);
}

TEST_CASE("emit flags write side files") {
    RunResult r = run("dimer " + kFixtures + "/one_hexagon.json --emit-dot /tmp/nccr_hex.dot "
                      "--emit-polygon /tmp/nccr_hex_poly.txt");
    CHECK(r.exit_code == 0);
    std::ifstream dot("/tmp/nccr_hex.dot");
    std::string dot_text((std::istreambuf_iterator<char>(dot)), std::istreambuf_iterator<char>());
    CHECK(contains(dot_text, "digraph dual_quiver"));
    std::ifstream poly("/tmp/nccr_hex_poly.txt");
    std::string poly_text((std::istreambuf_iterator<char>(poly)),
                          std::istreambuf_iterator<char>());
    CHECK(contains(poly_text, "points\n"));
    CHECK(contains(poly_text, "hull\n"));
}

TEST_CASE("matching bound flag") {
    RunResult r = run("dimer " + kFixtures + "/conifold.json --max-matchings 3");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "matching_bound"));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("toric").exit_code == 2);
    CHECK(run("frobnicate x").exit_code == 2);
    CHECK(run("toric /tmp/definitely_missing_nccr.json").exit_code == 2);
}
