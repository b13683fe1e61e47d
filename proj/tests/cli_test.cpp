#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "ct/fixtures.hpp"
#include "ct/io.hpp"
#include "ct/triangulation.hpp"

using namespace ct;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

// Runs the installed binary with stdout/stderr captured in the scratch dir.
RunResult run_cli(const fs::path& dir, const std::string& args) {
    const fs::path outFile = dir / "stdout.txt";
    const fs::path errFile = dir / "stderr.txt";
    const std::string cmd = std::string(CT_CLI_PATH) + " " + args + " >" + outFile.string() +
                            " 2>" + errFile.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = io::read_file(outFile.string());
    r.err = io::read_file(errFile.string());
    return r;
}

// Fresh scratch directory with the fixture corpus already emitted.
fs::path scratch(const std::string& name) {
    const fs::path dir = fs::path("cli_scratch") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    RunResult r;
    r = run_cli(dir, "fixtures " + (dir / "fx").string());
    REQUIRE(r.code == 0);
    return dir;
}

std::string path(const fs::path& dir, const std::string& name) {
    return (dir / name).string();
}

}  // namespace

TEST_CASE("fixture corpus files parse back to the built-in fixtures") {
    const fs::path dir = scratch("fixtures");
    CHECK(io::read_complex(io::read_file(path(dir, "fx/sigma_t.cmplx"))) == fixtures::sigma_t());
    CHECK(io::read_complex(io::read_file(path(dir, "fx/octahedron.cmplx"))) ==
          fixtures::octahedron());
    CHECK(io::read_complex(io::read_file(path(dir, "fx/torus7.cmplx"))) == fixtures::torus7());
    CHECK(io::read_complex(io::read_file(path(dir, "fx/boundary_delta4.cmplx"))) ==
          fixtures::boundary_delta4());
    CHECK(canonical_form(io::read_midsection(io::read_file(path(dir, "fx/fig4.msec")))) ==
          canonical_form(fixtures::fig4_midsection()));
}

TEST_CASE("validate reports the certified slice") {
    const fs::path dir = scratch("validate");
    RunResult r = run_cli(dir, "build-prism " + path(dir, "fx/sigma_t.cmplx") + " -o " +
                                   path(dir, "prism.cmplx"));
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    r = run_cli(dir, "validate " + path(dir, "prism.cmplx"));
    CHECK(r.code == 0);
    CHECK(r.out == "valid causal slice, V=12, genus 0\n");
    CHECK(r.err.empty());

    // A surface is not a slice: validation failure, not a format failure.
    r = run_cli(dir, "validate " + path(dir, "fx/sigma_t.cmplx"));
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("ValidationError: ", 0) == 0);
}

TEST_CASE("reconstruct rejects the obstructed fixture") {
    const fs::path dir = scratch("obstruction");
    const RunResult r = run_cli(dir, "reconstruct " + path(dir, "fx/fig4.msec"));
    CHECK(r.code == 1);
    CHECK(r.err == "ObstructionError: corners joined by red and blue paths\n");
    CHECK(r.out.empty());
}

TEST_CASE("midsection and reconstruct invert each other on files") {
    const fs::path dir = scratch("roundtrip");
    REQUIRE(run_cli(dir, "build-lemma3 " + path(dir, "fx/sigma_t.cmplx") + " -o " +
                             path(dir, "slice.cmplx"))
                .code == 0);

    RunResult r = run_cli(dir, "validate " + path(dir, "slice.cmplx"));
    CHECK(r.out == "valid causal slice, V=14, genus 0\n");

    // The minimal-slice construction needs a degree-3 vertex; the octahedron
    // has none.
    r = run_cli(dir, "build-lemma3 " + path(dir, "fx/octahedron.cmplx"));
    CHECK(r.code == 1);
    CHECK(r.err.rfind("ValidationError: ", 0) == 0);

    REQUIRE(run_cli(dir, "midsection " + path(dir, "slice.cmplx") + " -o " + path(dir, "m.msec"))
                .code == 0);
    REQUIRE(run_cli(dir, "reconstruct " + path(dir, "m.msec") + " -o " + path(dir, "back.cmplx"))
                .code == 0);

    const ColouredComplex a = io::read_complex(io::read_file(path(dir, "slice.cmplx")));
    const ColouredComplex b = io::read_complex(io::read_file(path(dir, "back.cmplx")));
    CHECK(canonical_form(a) == canonical_form(b));

    r = run_cli(dir, "roundtrip " + path(dir, "slice.cmplx"));
    CHECK(r.code == 0);
    CHECK(r.out == "roundtrip ok, V=14\n");
}

TEST_CASE("stack and glue compose slices into larger stacks") {
    const fs::path dir = scratch("stack");
    REQUIRE(run_cli(dir, "build-prism " + path(dir, "fx/sigma_t.cmplx") + " -o " +
                             path(dir, "prism.cmplx"))
                .code == 0);
    const std::string prism = path(dir, "prism.cmplx");
    RunResult r = run_cli(dir, "stack " + prism + " " + prism + " -o " + path(dir, "two.ctri"));
    CHECK(r.code == 0);

    const CausalTriangulation two = io::read_triangulation(io::read_file(path(dir, "two.ctri")));
    CHECK(two.volume() == 24);
    CHECK(two.slices.size() == 2);

    const std::string t = path(dir, "two.ctri");
    r = run_cli(dir, "glue " + t + " " + t + " " + t + " -o " + path(dir, "six.ctri"));
    CHECK(r.code == 0);
    const CausalTriangulation six = io::read_triangulation(io::read_file(path(dir, "six.ctri")));
    CHECK(six.volume() == 72);
    CHECK(six.slices.size() == 6);

    // Incompatible boundaries are a validation failure.
    REQUIRE(run_cli(dir, "build-prism " + path(dir, "fx/torus7.cmplx") + " -o " +
                             path(dir, "tprism.cmplx"))
                .code == 0);
    r = run_cli(dir, "stack " + prism + " " + path(dir, "tprism.cmplx") + " -o " +
                         path(dir, "bad.ctri"));
    CHECK(r.code == 1);
    CHECK(r.err.rfind("ValidationError: ", 0) == 0);
}

TEST_CASE("chi reports the Euler identity for spheres and the torus") {
    const fs::path dir = scratch("chi");
    REQUIRE(run_cli(dir, "build-prism " + path(dir, "fx/sigma_t.cmplx") + " -o " +
                             path(dir, "prism.cmplx"))
                .code == 0);
    RunResult r = run_cli(dir, "chi " + path(dir, "prism.cmplx"));
    CHECK(r.code == 0);
    CHECK(r.out ==
          "chi_dual_red,chi_midsection,chi_red_boundary,chi_blue_boundary,all_equal\n"
          "2,2,2,2,1\n");

    REQUIRE(run_cli(dir, "build-prism " + path(dir, "fx/torus7.cmplx") + " -o " +
                             path(dir, "tprism.cmplx"))
                .code == 0);
    r = run_cli(dir, "chi " + path(dir, "tprism.cmplx"));
    CHECK(r.code == 0);
    CHECK(r.out ==
          "chi_dual_red,chi_midsection,chi_red_boundary,chi_blue_boundary,all_equal\n"
          "0,0,0,0,1\n");
}

TEST_CASE("census emits matching tables and is byte-deterministic") {
    const fs::path dir = scratch("census");
    const RunResult both = run_cli(dir, "census --vmax 12 --strategy both");
    CHECK(both.code == 0);

    // Two blocks separated by a blank line, identical except for the tag.
    const std::size_t split = both.out.find("\n\n");
    REQUIRE(split != std::string::npos);
    const std::string first = both.out.substr(0, split + 1);
    std::string second = both.out.substr(split + 2);
    CHECK(io::read_census_csv(first).counts == io::read_census_csv(second).counts);
    CHECK(io::read_census_csv(first).counts.at(12) == 1);

    const RunResult again = run_cli(dir, "census --vmax 12 --strategy both");
    CHECK(again.out == both.out);

    const RunResult jobs = run_cli(dir, "census --vmax 12 --strategy both --jobs 3");
    CHECK(jobs.out == both.out);
}

TEST_CASE("census golden directories freeze then compare") {
    const fs::path dir = scratch("golden");
    const std::string gdir = (dir / "gold").string();
    fs::create_directories(gdir);

    RunResult r = run_cli(dir, "census --vmax 5 --golden " + gdir);
    CHECK(r.code == 0);
    const std::string goldenFile = gdir + "/census_direct_g0_v5.csv";
    CHECK(fs::exists(goldenFile));

    r = run_cli(dir, "census --vmax 5 --golden " + gdir);
    CHECK(r.code == 0);
    CHECK(r.err.empty());

    // Tamper with the stored counts: the next run must fail validation.
    std::string text = io::read_file(goldenFile);
    text.replace(text.find("5,0,direct"), 3, "5,9");
    io::write_file(goldenFile, text);
    r = run_cli(dir, "census --vmax 5 --golden " + gdir);
    CHECK(r.code == 1);
    CHECK(r.err.rfind("ValidationError: golden mismatch", 0) == 0);
}

TEST_CASE("beta consumes census csv from a file") {
    const fs::path dir = scratch("beta");
    RunResult r = run_cli(dir, "census --vmax 12");
    REQUIRE(r.code == 0);
    io::write_file(path(dir, "table.csv"), r.out);

    r = run_cli(dir, "beta " + path(dir, "table.csv") + " --v0 12");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "V,logN_over_V,running_inf\n"
          "24,0,0\n");

    // An all-zero table cannot produce estimates.
    r = run_cli(dir, "census --vmax 5");
    REQUIRE(r.code == 0);
    io::write_file(path(dir, "zeros.csv"), r.out);
    r = run_cli(dir, "beta " + path(dir, "zeros.csv") + " --v0 12");
    CHECK(r.code == 1);
}

TEST_CASE("format problems exit with code 2") {
    const fs::path dir = scratch("format");
    io::write_file(path(dir, "junk.cmplx"), "not a header\n");
    RunResult r = run_cli(dir, "validate " + path(dir, "junk.cmplx"));
    CHECK(r.code == 2);
    CHECK(r.err.rfind("FormatError: ", 0) == 0);

    // Missing file.
    r = run_cli(dir, "validate " + path(dir, "missing.cmplx"));
    CHECK(r.code == 2);

    // Usage errors (unknown command, bad flag value) are format problems too.
    r = run_cli(dir, "frobnicate");
    CHECK(r.code == 2);
    r = run_cli(dir, "census --vmax 0");
    CHECK(r.code == 2);
    r = run_cli(dir, "census --vmax 5 --strategy sideways");
    CHECK(r.code == 2);

    // Malformed beta input.
    io::write_file(path(dir, "bad.csv"), "V,count\n");
    r = run_cli(dir, "beta " + path(dir, "bad.csv") + " --v0 0");
    CHECK(r.code == 2);
}

TEST_CASE("resource caps exit with code 3") {
    const fs::path dir = scratch("cap");
    const RunResult r = run_cli(dir, "census --vmax 12 --state-cap 50");
    CHECK(r.code == 3);
    CHECK(r.err.rfind("ResourceCapError: ", 0) == 0);
}

TEST_CASE("help exits cleanly") {
    const fs::path dir = scratch("help");
    CHECK(run_cli(dir, "--help").code == 0);
    CHECK(run_cli(dir, "census --help").code == 0);
}
