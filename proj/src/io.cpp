#include "ct/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ct/errors.hpp"
#include "ct/slice.hpp"

namespace ct {
namespace io {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw FormatError("line " + std::to_string(line) + ": " + msg);
}

// Splits the input into newline-terminated lines; every line must be consumed
// by a grammar rule, so parsers track the 1-based number of the line they are
// looking at.
struct Reader {
    std::vector<std::string> lines;
    std::size_t next = 0;
    std::size_t cur = 0;  // line number of the most recently taken line

    explicit Reader(const std::string& text) {
        if (text.empty() || text.back() != '\n')
            throw FormatError("input must end with a newline");
        std::size_t start = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != '\n') continue;
            lines.emplace_back(text, start, i - start);
            start = i + 1;
        }
    }

    bool done() const { return next >= lines.size(); }
    const std::string& peek() const { return lines[next]; }
    const std::string& take() {
        if (done()) fail(lines.size() + 1, "unexpected end of input");
        cur = ++next;
        return lines[next - 1];
    }
};

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t p = line.find(sep, start);
        out.push_back(line.substr(start, p == std::string::npos ? p : p - start));
        if (p == std::string::npos) return out;
        start = p + 1;
    }
}

// Takes the next line and splits it on single spaces; empty fields (leading,
// trailing or doubled separators) and carriage returns are rejected.
std::vector<std::string> words(Reader& r) {
    const std::string& line = r.take();
    if (line.find('\r') != std::string::npos) fail(r.cur, "carriage return in input");
    std::vector<std::string> out = split(line, ' ');
    for (const std::string& w : out)
        if (w.empty()) fail(r.cur, "stray whitespace");
    return out;
}

// Canonical decimal integers only: no sign prefix for zero, no leading
// zeros, no surrounding junk. to_string(value) == token captures all of it.
long long parse_number(std::size_t line, const std::string& tok, const char* what, long long lo,
                       long long hi) {
    long long value = 0;
    const char* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc() || p != end || std::to_string(value) != tok)
        fail(line, std::string("malformed ") + what + " '" + tok + "'");
    if (value < lo || value > hi) fail(line, std::string(what) + " out of range");
    return value;
}

constexpr long long kMaxVertexId = std::numeric_limits<VertexId>::max();

bool block_keyword(const std::string& line) {
    return line.rfind("slice ", 0) == 0 || line.rfind("iface ", 0) == 0;
}

void append_body(std::string& out, const ColouredComplex& k) {
    if (k.empty()) throw ValidationError("cannot serialize an empty complex");
    out += "dim " + std::to_string(k.dim()) + "\n";
    for (VertexId v : k.vertices()) {
        out += "v " + std::to_string(v) + ' ';
        out += to_char(k.colour(v));
        out += '\n';
    }
    for (const Simplex& s : k.maximal_simplices()) {
        out += 's';
        for (VertexId v : s) out += ' ' + std::to_string(v);
        out += '\n';
    }
}

// Parses the dim/v/s body shared by "cmplx v1" and the slice blocks of
// "ctri v1"; inside a stack the body ends at the next block keyword.
ColouredComplex parse_body(Reader& r, bool insideStack) {
    std::vector<std::string> w = words(r);
    if (w.size() != 2 || w[0] != "dim") fail(r.cur, "expected 'dim <D>'");
    const int dim = static_cast<int>(parse_number(r.cur, w[1], "dimension", 0, 9));

    std::vector<std::pair<VertexId, Colour>> colours;
    std::vector<Simplex> maximal;
    auto declared = [&](VertexId id) {
        auto it = std::lower_bound(colours.begin(), colours.end(), id,
                                   [](const auto& p, VertexId x) { return p.first < x; });
        return it != colours.end() && it->first == id;
    };
    bool inSimplices = false;
    while (!r.done() && !(insideStack && block_keyword(r.peek()))) {
        std::vector<std::string> t = words(r);
        if (t[0] == "v") {
            if (inSimplices) fail(r.cur, "vertex line after simplex lines");
            if (t.size() != 3) fail(r.cur, "expected 'v <id> <R|B>'");
            const auto id =
                static_cast<VertexId>(parse_number(r.cur, t[1], "vertex id", 0, kMaxVertexId));
            if (!colours.empty() && id <= colours.back().first)
                fail(r.cur, "vertex ids not strictly ascending");
            Colour c = Colour::Red;
            if (t[2] == "B")
                c = Colour::Blue;
            else if (t[2] != "R")
                fail(r.cur, "vertex colour must be R or B");
            colours.emplace_back(id, c);
        } else if (t[0] == "s") {
            inSimplices = true;
            if (static_cast<int>(t.size()) != dim + 2)
                fail(r.cur, "maximal simplex must list exactly dim+1 vertices");
            Simplex s;
            for (std::size_t i = 1; i < t.size(); ++i) {
                const auto id =
                    static_cast<VertexId>(parse_number(r.cur, t[i], "vertex id", 0, kMaxVertexId));
                if (!s.empty() && id <= s.back())
                    fail(r.cur, "simplex vertices not strictly ascending");
                if (!declared(id)) fail(r.cur, "undeclared vertex id in simplex");
                s.push_back(id);
            }
            if (!maximal.empty() && !(maximal.back() < s))
                fail(r.cur, "simplex lines not in ascending order");
            maximal.push_back(std::move(s));
        } else {
            fail(r.cur, "expected 'v' or 's' line");
        }
    }
    if (colours.empty()) fail(r.cur, "complex has no vertices");
    if (maximal.empty()) fail(r.cur, "complex has no simplices");
    return ColouredComplex::build(dim, std::move(colours), std::move(maximal));
}

const std::map<std::string, CellKind>& kind_tokens() {
    static const std::map<std::string, CellKind> m = {
        {"rtri", CellKind::RedTriangle}, {"btri", CellKind::BlueTriangle},
        {"quad", CellKind::Quadrangle},  {"rtet", CellKind::RedTet},
        {"btet", CellKind::BlueTet},     {"rprism", CellKind::RedPrism},
        {"bprism", CellKind::BluePrism}};
    return m;
}

// The edge colours of a cell in cell_edges order depend only on the kind.
std::string colour_word(CellKind kind) {
    std::vector<int> dummy(corner_count_for(kind));
    for (std::size_t i = 0; i < dummy.size(); ++i) dummy[i] = static_cast<int>(i);
    std::string w;
    for (const CellEdge& e : cell_edges(Cell{kind, dummy})) w += to_char(e.second);
    return w;
}

std::string fmt_double(double x) {
    if (x == 0.0) x = 0.0;  // collapse negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

const std::string kCensusHeader = "V,count,strategy,genus";

bool plain_token(const std::string& s) {
    return !s.empty() &&
           s.find_first_not_of("abcdefghijklmnopqrstuvwxyz0123456789-") == std::string::npos;
}

}  // namespace

std::string write_complex(const ColouredComplex& k) {
    std::string out = "cmplx v1\n";
    append_body(out, k);
    return out;
}

ColouredComplex read_complex(const std::string& text) {
    Reader r(text);
    if (r.take() != "cmplx v1") fail(r.cur, "expected header 'cmplx v1'");
    return parse_body(r, false);
}

std::string write_edge_coloured(const EdgeColouredComplex& k) {
    if (k.vertices.empty() || k.maximal.empty())
        throw ValidationError("cannot serialize an empty complex");
    std::string out = "cmplx v1\n";
    out += "dim " + std::to_string(k.dim) + "\n";
    for (VertexId v : k.vertices) out += "v " + std::to_string(v) + "\n";
    for (const auto& [e, c] : k.colours) {
        out += "e " + std::to_string(e.first) + ' ' + std::to_string(e.second) + ' ';
        out += to_char(c);
        out += '\n';
    }
    for (const Simplex& s : k.maximal) {
        out += 's';
        for (VertexId v : s) out += ' ' + std::to_string(v);
        out += '\n';
    }
    return out;
}

EdgeColouredComplex read_edge_coloured(const std::string& text) {
    Reader r(text);
    if (r.take() != "cmplx v1") fail(r.cur, "expected header 'cmplx v1'");
    std::vector<std::string> w = words(r);
    if (w.size() != 2 || w[0] != "dim") fail(r.cur, "expected 'dim <D>'");
    const int dim = static_cast<int>(parse_number(r.cur, w[1], "dimension", 0, 9));

    std::vector<VertexId> vertices;
    std::map<std::pair<VertexId, VertexId>, EdgeColour> colours;
    std::vector<Simplex> maximal;
    auto declared = [&](VertexId id) {
        return std::binary_search(vertices.begin(), vertices.end(), id);
    };
    int phase = 0;  // v lines, then e lines, then s lines
    while (!r.done()) {
        std::vector<std::string> t = words(r);
        if (t[0] == "v") {
            if (phase > 0) fail(r.cur, "vertex line after edge or simplex lines");
            if (t.size() != 2) fail(r.cur, "expected 'v <id>'");
            const auto id =
                static_cast<VertexId>(parse_number(r.cur, t[1], "vertex id", 0, kMaxVertexId));
            if (!vertices.empty() && id <= vertices.back())
                fail(r.cur, "vertex ids not strictly ascending");
            vertices.push_back(id);
        } else if (t[0] == "e") {
            if (phase > 1) fail(r.cur, "edge line after simplex lines");
            phase = 1;
            if (t.size() != 4) fail(r.cur, "expected 'e <u> <v> <R|B|K>'");
            const auto a =
                static_cast<VertexId>(parse_number(r.cur, t[1], "vertex id", 0, kMaxVertexId));
            const auto b =
                static_cast<VertexId>(parse_number(r.cur, t[2], "vertex id", 0, kMaxVertexId));
            if (!(a < b)) fail(r.cur, "edge endpoints must be ascending");
            if (!declared(a) || !declared(b)) fail(r.cur, "undeclared vertex id in edge");
            EdgeColour c = EdgeColour::Red;
            if (t[3] == "B")
                c = EdgeColour::Blue;
            else if (t[3] == "K")
                c = EdgeColour::Black;
            else if (t[3] != "R")
                fail(r.cur, "edge colour must be R, B, or K");
            const std::pair<VertexId, VertexId> key{a, b};
            if (!colours.empty() && !(colours.rbegin()->first < key))
                fail(r.cur, "edge lines not in ascending order");
            colours.emplace(key, c);
        } else if (t[0] == "s") {
            phase = 2;
            if (static_cast<int>(t.size()) != dim + 2)
                fail(r.cur, "maximal simplex must list exactly dim+1 vertices");
            Simplex s;
            for (std::size_t i = 1; i < t.size(); ++i) {
                const auto id =
                    static_cast<VertexId>(parse_number(r.cur, t[i], "vertex id", 0, kMaxVertexId));
                if (!s.empty() && id <= s.back())
                    fail(r.cur, "simplex vertices not strictly ascending");
                if (!declared(id)) fail(r.cur, "undeclared vertex id in simplex");
                s.push_back(id);
            }
            if (!maximal.empty() && !(maximal.back() < s))
                fail(r.cur, "simplex lines not in ascending order");
            maximal.push_back(std::move(s));
        } else {
            fail(r.cur, "expected 'v', 'e' or 's' line");
        }
    }
    if (vertices.empty()) fail(r.cur, "complex has no vertices");
    if (maximal.empty()) fail(r.cur, "complex has no simplices");
    return EdgeColouredComplex::build(dim, std::move(vertices), std::move(maximal),
                                      std::move(colours));
}

std::string write_midsection(const MidsectionComplex& m) {
    std::string out = "msec v1\n";
    out += "dim " + std::to_string(m.dim) + "\n";
    for (int i = 0; i < m.cornerCount; ++i) out += "corner " + std::to_string(i) + "\n";
    std::vector<Cell> cells = m.cells;
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw ValidationError("cannot serialize duplicate cells");
    for (const Cell& c : cells) {
        out += "cell ";
        out += to_token(c.kind);
        for (int x : c.corners) out += ' ' + std::to_string(x);
        out += ' ' + colour_word(c.kind);
        out += '\n';
    }
    return out;
}

MidsectionComplex read_midsection(const std::string& text) {
    Reader r(text);
    if (r.take() != "msec v1") fail(r.cur, "expected header 'msec v1'");
    std::vector<std::string> w = words(r);
    if (w.size() != 2 || w[0] != "dim") fail(r.cur, "expected 'dim <2|3>'");
    const int dim = static_cast<int>(parse_number(r.cur, w[1], "dimension", 2, 3));
    MidsectionComplex m;
    m.dim = dim;
    m.cornerCount = 0;
    bool inCells = false;
    while (!r.done()) {
        std::vector<std::string> t = words(r);
        if (t[0] == "corner") {
            if (inCells) fail(r.cur, "corner lines must precede cell lines");
            if (t.size() != 2) fail(r.cur, "expected 'corner <i>'");
            const long long i = parse_number(r.cur, t[1], "corner id", 0,
                                             std::numeric_limits<int>::max() - 1LL);
            if (i != m.cornerCount) fail(r.cur, "corner ids must run 0, 1, 2, ...");
            ++m.cornerCount;
            continue;
        }
        inCells = true;
        if (t[0] != "cell" || t.size() < 2)
            fail(r.cur, "expected 'corner <i>' or 'cell <kind> <corners> <edge colours>'");
        auto it = kind_tokens().find(t[1]);
        if (it == kind_tokens().end()) fail(r.cur, "unknown cell kind '" + t[1] + "'");
        const CellKind kind = it->second;
        if (!kind_allowed(kind, dim)) fail(r.cur, "cell kind not allowed in this dimension");
        const int arity = corner_count_for(kind);
        if (static_cast<int>(t.size()) != arity + 3)
            fail(r.cur, "expected kind, corners and one edge-colour word");
        std::vector<int> cs;
        std::set<int> distinct;
        for (int i = 0; i < arity; ++i) {
            const int c = static_cast<int>(parse_number(
                r.cur, t[2 + i], "corner id", 0, static_cast<long long>(m.cornerCount) - 1));
            if (!distinct.insert(c).second) fail(r.cur, "repeated corner in cell");
            cs.push_back(c);
        }
        if (t[2 + arity] != colour_word(kind))
            fail(r.cur, "edge colours disagree with the cell kind");
        Cell cell{kind, cs};
        if (normalize_cell(kind, cs).corners != cs)
            fail(r.cur, "cell corners not in canonical arrangement");
        if (!m.cells.empty() && !(m.cells.back() < cell))
            fail(r.cur, "cell lines not in ascending order");
        m.cells.push_back(std::move(cell));
    }
    return m;
}

std::string write_triangulation(const CausalTriangulation& t) {
    std::string out = "ctri v1\n";
    out += "slices " + std::to_string(t.slices.size()) + "\n";
    for (std::size_t i = 0; i < t.slices.size(); ++i) {
        out += "slice " + std::to_string(i) + "\n";
        append_body(out, t.slices[i].complex);
    }
    for (std::size_t i = 0; i < t.interfaceIsos.size(); ++i) {
        out += "iface " + std::to_string(i) + "\n";
        for (const auto& [blue, red] : t.interfaceIsos[i])
            out += "p " + std::to_string(blue) + " " + std::to_string(red) + "\n";
    }
    return out;
}

CausalTriangulation read_triangulation(const std::string& text) {
    Reader r(text);
    if (r.take() != "ctri v1") fail(r.cur, "expected header 'ctri v1'");
    std::vector<std::string> w = words(r);
    if (w.size() != 2 || w[0] != "slices") fail(r.cur, "expected 'slices <N>'");
    const int n = static_cast<int>(parse_number(r.cur, w[1], "slice count", 1, 1000000));

    std::vector<CausalSlice> slices;
    for (int i = 0; i < n; ++i) {
        w = words(r);
        if (w.size() != 2 || w[0] != "slice" || w[1] != std::to_string(i))
            fail(r.cur, "expected 'slice " + std::to_string(i) + "'");
        slices.push_back(validate_slice(parse_body(r, true)));
    }
    std::vector<std::map<VertexId, VertexId>> isos;
    for (int i = 0; i + 1 < n; ++i) {
        w = words(r);
        if (w.size() != 2 || w[0] != "iface" || w[1] != std::to_string(i))
            fail(r.cur, "expected 'iface " + std::to_string(i) + "'");
        std::map<VertexId, VertexId> iso;
        while (!r.done() && !block_keyword(r.peek())) {
            std::vector<std::string> t = words(r);
            if (t.size() != 3 || t[0] != "p") fail(r.cur, "expected 'p <blue> <red>'");
            const auto blue =
                static_cast<VertexId>(parse_number(r.cur, t[1], "vertex id", 0, kMaxVertexId));
            const auto red =
                static_cast<VertexId>(parse_number(r.cur, t[2], "vertex id", 0, kMaxVertexId));
            if (!iso.empty() && blue <= iso.rbegin()->first)
                fail(r.cur, "interface pairs not ascending");
            iso.emplace(blue, red);
        }
        isos.push_back(std::move(iso));
    }
    if (!r.done()) fail(r.next + 1, "trailing content");
    return stack_slices(std::move(slices), std::move(isos));
}

std::string write_census_csv(const CensusTable& t) {
    if (t.vmax < 1) throw ValidationError("census table has no volume range");
    if (!plain_token(t.strategy)) throw ValidationError("census strategy tag must be a plain token");
    std::string out = kCensusHeader + "\n";
    for (int v = 1; v <= t.vmax; ++v) {
        auto it = t.counts.find(v);
        if (it == t.counts.end()) throw ValidationError("census table missing a volume row");
        out += std::to_string(v) + ',' + std::to_string(it->second) + ',' + t.strategy + ',' +
               std::to_string(t.genus) + '\n';
    }
    return out;
}

CensusTable read_census_csv(const std::string& text) {
    Reader r(text);
    if (r.take() != kCensusHeader) fail(r.cur, "expected census header '" + kCensusHeader + "'");
    CensusTable t;
    t.strategy.clear();
    int expect = 1;
    while (!r.done()) {
        const std::string& line = r.take();
        if (line.find('\r') != std::string::npos) fail(r.cur, "carriage return in input");
        std::vector<std::string> f = split(line, ',');
        if (f.size() != 4) fail(r.cur, "expected 'V,count,strategy,genus' row");
        const int v = static_cast<int>(
            parse_number(r.cur, f[0], "volume", 1, std::numeric_limits<int>::max()));
        if (v != expect) fail(r.cur, "volume rows must cover 1..vmax in ascending order");
        const long long count = parse_number(r.cur, f[1], "count", 0,
                                             std::numeric_limits<long long>::max());
        if (!plain_token(f[2])) fail(r.cur, "malformed strategy tag");
        const int g = static_cast<int>(
            parse_number(r.cur, f[3], "genus", 0, std::numeric_limits<int>::max()));
        if (expect == 1) {
            t.strategy = f[2];
            t.genus = g;
        } else if (f[2] != t.strategy || g != t.genus) {
            fail(r.cur, "strategy and genus must be constant across rows");
        }
        t.counts[v] = count;
        ++expect;
    }
    if (expect == 1) fail(r.cur + 1, "census table has no rows");
    t.vmax = expect - 1;
    return t;
}

std::string write_beta_csv(const BetaEstimate& b) {
    std::string out = "V,logN_over_V,running_inf\n";
    for (const BetaRow& row : b.rows)
        out += std::to_string(row.volume) + ',' + fmt_double(row.logNOverV) + ',' +
               fmt_double(row.runningInf) + '\n';
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw FormatError("cannot read file: " + path);
    return std::move(ss).str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open file for writing: " + path);
    out << text;
    out.flush();
    if (!out) throw FormatError("cannot write file: " + path);
}

}  // namespace io
}  // namespace ct
