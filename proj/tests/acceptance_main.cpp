// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Census sizes are pinned so the whole run stays within minutes on a
// single core.

#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "ct/builders.hpp"
#include "ct/census.hpp"
#include "ct/dual_graph.hpp"
#include "ct/errors.hpp"
#include "ct/fixtures.hpp"
#include "ct/io.hpp"
#include "ct/midsection.hpp"
#include "ct/reconstruct.hpp"
#include "ct/subdivision.hpp"
#include "ct/triangulation.hpp"
#include "golden_util.hpp"

using namespace ct;

namespace {

constexpr int kRoundtripVmax = 14;     // direct census size for criteria 1, 3, 4
constexpr int kEquivalenceVmax = 13;   // both-strategy comparison size

CensusOptions options(long long cap) {
    CensusOptions opt;
    opt.jobs = 3;
    opt.stateCap = cap;
    return opt;
}

std::vector<CausalSlice> fixture_slices() {
    return {prism_slice(fixtures::sigma_t()), prism_slice(fixtures::torus7()),
            lemma3_slice(fixtures::sigma_t()), prism_slice(fixtures::boundary_delta4())};
}

std::string check_roundtrip(const SliceCensus& census) {
    long long checked = 0;
    for (const CausalSlice& s : census.reps) {
        if (!roundtrip_certify(s).equal)
            return "census slice of volume " + std::to_string(s.volume()) + " failed";
        ++checked;
    }
    for (const CausalSlice& s : fixture_slices()) {
        if (!roundtrip_certify(s).equal)
            return "fixture slice of volume " + std::to_string(s.volume()) + " failed";
        ++checked;
    }
    return "ok: " + std::to_string(checked) + " slices rebuilt isomorphically";
}

std::string check_construction_counts() {
    std::mt19937 rng(20240817);
    std::vector<ColouredComplex> spheres;
    for (int i = 0; i < 20; ++i) spheres.push_back(fixtures::stellar_sphere(rng, 1 + i % 8));

    for (const ColouredComplex& sigma : spheres) {
        const long long faces = static_cast<long long>(sigma.maximal_simplices().size());
        if (lemma3_slice(sigma).volume() != faces + 10)
            return "cone slice volume differs from |surface|+10";
    }
    for (std::size_t i = 0; i + 1 < spheres.size(); i += 2) {
        const CausalSlice first = lemma3_slice(spheres[i]);
        const CausalSlice second = reversed(lemma3_slice(spheres[i + 1]));
        const CausalTriangulation pair = stack_auto({first, second});
        const long long vin = static_cast<long long>(spheres[i].maximal_simplices().size());
        const long long vout = static_cast<long long>(spheres[i + 1].maximal_simplices().size());
        if (pair.volume() != vin + vout + 20) return "glued pair volume differs from |in|+|out|+20";
    }
    return "ok: 20 spheres, 10 glued pairs";
}

std::string check_euler_identity(const SliceCensus& census) {
    long long checked = 0;
    auto verify = [&](const CausalSlice& s) -> bool {
        const EulerIdentityReport r = euler_identity_check(s);
        ++checked;
        return r.allEqual && r.chiDualRed == 2 - 2 * s.genus;
    };
    for (const CausalSlice& s : census.reps)
        if (!verify(s)) return "census slice of volume " + std::to_string(s.volume()) + " failed";
    for (const CausalSlice& s : fixture_slices())
        if (s.complex.dim() == 3 && !verify(s)) return "fixture slice failed";

    const EulerIdentityReport torus = euler_identity_check(prism_slice(fixtures::torus7()));
    if (torus.chiDualRed != 0 || torus.chiMidsection != 0 || torus.chiRedBoundary != 0 ||
        torus.chiBlueBoundary != 0)
        return "torus characteristics are not all zero";
    return "ok: " + std::to_string(checked) + " slices, torus included";
}

std::string check_counting_identities(const SliceCensus& census) {
    for (const CausalSlice& s : census.reps) {
        const MidsectionComplex m = midsection(s);
        if (m.cell_count() != s.volume()) return "cell count differs from slice volume";

        const DualGraph g = dual_graph(m, Colour::Red);
        const auto kinds = m.kind_counts();
        const long long redTris = kinds.count(CellKind::RedTriangle)
                                      ? kinds.at(CellKind::RedTriangle)
                                      : 0;
        const long long quads =
            kinds.count(CellKind::Quadrangle) ? kinds.at(CellKind::Quadrangle) : 0;
        if (2 * g.edge_count() != 3 * redTris + 2 * quads)
            return "edge count disagrees with red sides";
        if (g.faceCount != static_cast<long long>(s.redBoundary.vertex_count()))
            return "face count differs from red-boundary vertex count";
        if (!g.connected) return "red dual graph disconnected";
        for (int d : g.degree)
            if (d != 2 && d != 3) return "red dual degree outside {2,3}";
    }
    return "ok: " + std::to_string(census.reps.size()) + " slices";
}

std::string check_strategy_equivalence() {
    const SliceCensus direct = enumerate_slices(kEquivalenceVmax, 0, options(100'000'000));
    const CensusTable mids = enumerate_via_midsections(kEquivalenceVmax, options(500'000'000));
    if (direct.table.counts != mids.counts) return "tables differ";
    if (mids.filteredOut <= 0) return "no colourings were filtered";
    std::string g = golden_check_census("census_direct_g0_v13.csv", direct.table);
    if (g.empty()) g = golden_check_census("census_midsection_g0_v13.csv", mids);
    if (!g.empty()) return g;

    const SliceCensus wide = enumerate_slices(kRoundtripVmax, 0, options(100'000'000));
    g = golden_check_census("census_direct_g0_v14.csv", wide.table);
    if (!g.empty()) return g;
    return "ok: identical tables to volume " + std::to_string(kEquivalenceVmax) +
           ", goldens match";
}

std::string check_subadditivity() {
    CensusOptions opt = options(100'000'000);
    opt.maxSliceVolume = 13;
    const CensusTable live =
        count_fixed_boundaries(38, fixtures::sigma_t(), fixtures::sigma_t(), opt);
    const std::string g = golden_check_census("census_fixed_cap13_v38.csv", live);
    if (!g.empty()) return g;

    const CensusTable frozen = load_census_golden("census_fixed_cap14_v42.csv");
    long long pairs = 0;
    for (const CensusTable* table : {&live, &frozen}) {
        for (const auto& [v1, n1] : table->counts) {
            if (n1 == 0) continue;
            for (const auto& [v2, n2] : table->counts) {
                if (n2 == 0 || v1 + v2 + 12 > table->vmax) continue;
                if (n1 * n2 > table->counts.at(v1 + v2 + 12))
                    return "violated at (" + std::to_string(v1) + "," + std::to_string(v2) + ")";
                ++pairs;
            }
        }
    }
    if (frozen.counts.at(28) <= 0) return "no stack at volume |in|+|out|+20";
    return "ok: " + std::to_string(pairs) + " pairs, nonempty at volume 28";
}

std::string check_obstruction() {
    bool rejected = false;
    try {
        reconstruct(fixtures::fig4_midsection());
    } catch (const ObstructionError&) {
        rejected = true;
    }
    if (!rejected) return "forbidden midsection was accepted";

    for (const CausalSlice& s : fixture_slices()) {
        try {
            reconstruct(midsection(s));
        } catch (const ValidationError& e) {
            return std::string("valid fixture rejected: ") + e.what();
        }
    }
    return "ok: forbidden midsection rejected, 4 valid fixtures accepted";
}

std::string check_4d_subdivision() {
    const CausalSlice p4 = prism_slice(fixtures::boundary_delta4());
    const MidsectionComplex m = midsection(p4);
    const auto kinds = m.kind_counts();
    auto at = [&](CellKind k) { return kinds.count(k) ? kinds.at(k) : 0; };
    const long long tets = at(CellKind::RedTet) + at(CellKind::BlueTet);
    const long long prisms = at(CellKind::RedPrism) + at(CellKind::BluePrism);

    const EdgeColouredComplex sub = subdivide_4d(m);
    const long long pieces = static_cast<long long>(sub.maximal.size());
    if (pieces != tets + 3 * prisms) return "piece count differs from tets + 3*prisms";
    if (pieces != 40) return "expected 40 tetrahedra, got " + std::to_string(pieces);
    if (pieces > 3 * m.cell_count()) return "piece count exceeds 3 per cell";

    const MidsectionComplex back = reassemble_4d(sub);
    if (canonical_form(back) != canonical_form(m)) return "reassembly is not inverse";
    return "ok: 40 tetrahedra, reassembled isomorphically";
}

}  // namespace

int main() {
    int failures = 0;
    auto gate = [&](const char* name, const std::string& detail) {
        const bool ok = detail.rfind("ok", 0) == 0;
        std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    };
    auto run = [&](const char* name, auto&& fn) {
        try {
            gate(name, fn());
        } catch (const std::exception& e) {
            gate(name, std::string("exception: ") + e.what());
        }
    };

    try {
        const SliceCensus census = enumerate_slices(kRoundtripVmax, 0, options(100'000'000));
        run("round-trip bijection on the slice census and fixtures",
            [&] { return check_roundtrip(census); });
        run("construction counts for cone slices and glued pairs", check_construction_counts);
        run("Euler identity across midsection and boundaries",
            [&] { return check_euler_identity(census); });
        run("counting identities of the red dual graph",
            [&] { return check_counting_identities(census); });
    } catch (const std::exception& e) {
        std::printf("FAIL shared slice census: exception: %s\n", e.what());
        failures += 4;
    }
    run("strategy equivalence of the two enumerations", check_strategy_equivalence);
    run("subadditivity of fixed-boundary counts", check_subadditivity);
    run("obstruction detection in reconstruction", check_obstruction);
    run("4D subdivision bound and reassembly", check_4d_subdivision);

    return failures == 0 ? 0 : 1;
}
