// Command-line front end for the causal-slice library: validation,
// construction, midsection/reconstruction, census and reporting over
// line-based text formats.
//
// Exit codes: 0 success, 1 validation failure, 2 format/usage error,
// 3 resource cap exceeded.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ct/builders.hpp"
#include "ct/census.hpp"
#include "ct/dual_graph.hpp"
#include "ct/errors.hpp"
#include "ct/fixtures.hpp"
#include "ct/io.hpp"
#include "ct/midsection.hpp"
#include "ct/reconstruct.hpp"
#include "ct/triangulation.hpp"

namespace {

using namespace ct;

ColouredComplex load_complex(const std::string& path) {
    return io::read_complex(io::read_file(path));
}

// Writers send their result to --out when given, otherwise to stdout.
void emit(const std::string& outPath, const std::string& text) {
    if (outPath.empty())
        std::fputs(text.c_str(), stdout);
    else
        io::write_file(outPath, text);
}

struct CensusArgs {
    int vmax = 0;
    int genus = 0;
    std::string strategy = "direct";
    int jobs = 1;
    long long stateCap = 500'000'000;
    std::string goldenDir;
};

void run_census(const CensusArgs& a) {
    CensusOptions opt;
    opt.jobs = a.jobs;
    opt.stateCap = a.stateCap;

    std::vector<CensusTable> tables;
    if (a.strategy == "direct" || a.strategy == "both")
        tables.push_back(enumerate_slices(a.vmax, a.genus, opt).table);
    if (a.strategy == "midsection" || a.strategy == "both") {
        if (a.genus != 0)
            throw ValidationError("the midsection strategy enumerates genus 0 only");
        tables.push_back(enumerate_via_midsections(a.vmax, opt));
    }
    if (tables.size() == 2 && tables[0].counts != tables[1].counts)
        throw ValidationError("enumeration strategies disagree");

    std::string out;
    for (const CensusTable& t : tables) {
        const std::string csv = io::write_census_csv(t);
        if (!a.goldenDir.empty()) {
            const std::string path = a.goldenDir + "/census_" + t.strategy + "_g" +
                                     std::to_string(t.genus) + "_v" + std::to_string(t.vmax) +
                                     ".csv";
            if (!std::filesystem::exists(path)) {
                io::write_file(path, csv);
                std::cerr << "golden written: " << path << "\n";
            } else if (io::read_file(path) != csv) {
                throw ValidationError("golden mismatch for " + path);
            }
        }
        if (!out.empty()) out += "\n";
        out += csv;
    }
    std::fputs(out.c_str(), stdout);
}

void write_fixtures(const std::string& dir) {
    std::filesystem::create_directories(dir);
    io::write_file(dir + "/sigma_t.cmplx", io::write_complex(fixtures::sigma_t()));
    io::write_file(dir + "/octahedron.cmplx", io::write_complex(fixtures::octahedron()));
    io::write_file(dir + "/torus7.cmplx", io::write_complex(fixtures::torus7()));
    io::write_file(dir + "/boundary_delta4.cmplx",
                   io::write_complex(fixtures::boundary_delta4()));
    io::write_file(dir + "/fig4.msec", io::write_midsection(fixtures::fig4_midsection()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causal-slice toolbox: validation, construction, census, reporting"};
    app.require_subcommand(1);

    std::string in, in2, in3, out, format = "csv";
    std::vector<std::string> stackIns;
    CensusArgs census;
    int v0 = 0;

    auto addFormat = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "certify a slice file");
    validate->add_option("input", in, "cmplx file")->required();
    validate->callback([&] {
        const CausalSlice s = validate_slice(load_complex(in));
        std::printf("valid causal slice, V=%lld, genus %d\n", s.volume(), s.genus);
    });

    CLI::App* prism = app.add_subcommand("build-prism", "product slice over a closed manifold");
    prism->add_option("input", in, "cmplx file")->required();
    prism->add_option("-o,--out", out, "output cmplx file");
    prism->callback([&] { emit(out, io::write_complex(prism_slice(load_complex(in)).complex)); });

    CLI::App* lemma3 = app.add_subcommand(
        "build-lemma3", "minimal slice over a sphere with a degree-3 vertex");
    lemma3->add_option("input", in, "cmplx file")->required();
    lemma3->add_option("-o,--out", out, "output cmplx file");
    lemma3->callback(
        [&] { emit(out, io::write_complex(lemma3_slice(load_complex(in)).complex)); });

    CLI::App* stack = app.add_subcommand("stack", "stack slices blue-to-red into a ctri file");
    stack->add_option("inputs", stackIns, "cmplx slice files")->required()->expected(-1);
    stack->add_option("-o,--out", out, "output ctri file");
    stack->callback([&] {
        std::vector<CausalSlice> slices;
        for (const std::string& path : stackIns) slices.push_back(validate_slice(load_complex(path)));
        emit(out, io::write_triangulation(stack_auto(std::move(slices))));
    });

    CLI::App* glue = app.add_subcommand("glue", "concatenate three stacks out-to-in");
    glue->add_option("first", in, "ctri file")->required();
    glue->add_option("middle", in2, "ctri file")->required();
    glue->add_option("last", in3, "ctri file")->required();
    glue->add_option("-o,--out", out, "output ctri file");
    glue->callback([&] {
        const CausalTriangulation t1 = io::read_triangulation(io::read_file(in));
        const CausalTriangulation t0 = io::read_triangulation(io::read_file(in2));
        const CausalTriangulation t2 = io::read_triangulation(io::read_file(in3));
        emit(out, io::write_triangulation(glue_stacks(t1, t0, t2)));
    });

    CLI::App* mids = app.add_subcommand("midsection", "section a slice at half height");
    mids->add_option("input", in, "cmplx file")->required();
    mids->add_option("-o,--out", out, "output msec file");
    mids->callback(
        [&] { emit(out, io::write_midsection(midsection(validate_slice(load_complex(in))))); });

    CLI::App* rec = app.add_subcommand("reconstruct", "rebuild the slice of a midsection");
    rec->add_option("input", in, "msec file")->required();
    rec->add_option("-o,--out", out, "output cmplx file");
    rec->callback([&] {
        const MidsectionComplex m = io::read_midsection(io::read_file(in));
        validate_midsection(m);
        emit(out, io::write_complex(reconstruct(m).complex));
    });

    CLI::App* round = app.add_subcommand("roundtrip", "section and rebuild, then compare");
    round->add_option("input", in, "cmplx file")->required();
    round->callback([&] {
        const CausalSlice s = validate_slice(load_complex(in));
        if (!roundtrip_certify(s).equal) throw ValidationError("roundtrip mismatch");
        std::printf("roundtrip ok, V=%lld\n", s.volume());
    });

    CLI::App* cen = app.add_subcommand("census", "enumerate slices by volume");
    cen->add_option("--vmax", census.vmax, "largest volume")->required()->check(CLI::Range(1, 64));
    cen->add_option("--genus", census.genus, "boundary genus")->check(CLI::Range(0, 16));
    cen->add_option("--strategy", census.strategy, "enumeration strategy")
        ->check(CLI::IsMember({"direct", "midsection", "both"}));
    cen->add_option("--jobs", census.jobs, "worker threads")->check(CLI::Range(1, 64));
    cen->add_option("--state-cap", census.stateCap, "search-state cap")
        ->check(CLI::Range(1LL, 4'000'000'000LL));
    cen->add_option("--golden", census.goldenDir,
                    "directory of frozen tables: first run writes, later runs must match");
    addFormat(cen);
    cen->callback([&] { run_census(census); });

    CLI::App* beta = app.add_subcommand("beta", "growth estimates from a census table");
    beta->add_option("input", in, "census csv file")->required();
    beta->add_option("--v0", v0, "volume of the fixed middle block")
        ->required()
        ->check(CLI::Range(0, 1024));
    addFormat(beta);
    beta->callback([&] {
        const CensusTable t = io::read_census_csv(io::read_file(in));
        std::fputs(io::write_beta_csv(estimate_beta(t, v0)).c_str(), stdout);
    });

    CLI::App* chi = app.add_subcommand("chi", "Euler characteristic of the midsection");
    chi->add_option("input", in, "cmplx file")->required();
    addFormat(chi);
    chi->callback([&] {
        const EulerIdentityReport r = euler_identity_check(validate_slice(load_complex(in)));
        std::printf("chi_dual_red,chi_midsection,chi_red_boundary,chi_blue_boundary,all_equal\n");
        std::printf("%lld,%lld,%lld,%lld,%d\n", r.chiDualRed, r.chiMidsection, r.chiRedBoundary,
                    r.chiBlueBoundary, r.allEqual ? 1 : 0);
    });

    CLI::App* fix = app.add_subcommand("fixtures", "write the built-in fixture corpus");
    fix->add_option("dir", in, "output directory")->required();
    fix->callback([&] { write_fixtures(in); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const FormatError& e) {
        std::cerr << "FormatError: " << e.what() << "\n";
        return 2;
    } catch (const ObstructionError& e) {
        std::cerr << "ObstructionError: " << e.what() << "\n";
        return 1;
    } catch (const CollisionError& e) {
        std::cerr << "CollisionError: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "ValidationError: " << e.what() << "\n";
        return 1;
    } catch (const ResourceCapError& e) {
        std::cerr << "ResourceCapError: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
