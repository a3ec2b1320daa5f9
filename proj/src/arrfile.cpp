#include "arr/arrfile.hpp"

#include <fstream>
#include <sstream>

namespace arr {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

long parse_long(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw SyntaxError(std::string("expected ") + what + ", got '" + s +
                          "'");
    }
}

}  // namespace

Arrangement parse_arrangement(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    FieldDesc desc;
    std::vector<ProjLine> lines;
    auto fail = [&](const std::string& msg) -> void {
        throw SyntaxError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, raw)) {
        ++lineno;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const auto toks = tokenize(raw);
        if (toks.empty()) continue;
        if (!desc) {
            if (toks[0] != "field" || toks.size() < 2)
                fail("expected a field declaration first");
            if (toks[1] == "Q" && toks.size() == 2) {
                desc = make_rational();
            } else if (toks[1] == "GF" && toks.size() == 4) {
                desc = make_finite_field(parse_long(toks[2], "prime p"),
                                         (int)parse_long(toks[3], "degree k"));
            } else if (toks[1] == "CYCLO" && toks.size() == 3) {
                desc = make_cyclotomic(parse_long(toks[2], "index m"));
            } else {
                fail("bad field declaration");
            }
            continue;
        }
        if (toks[0] != "line" || toks.size() != 4)
            fail("expected: line <a> <b> <c>");
        try {
            lines.push_back(ProjLine::make(parse_element(desc, toks[1]),
                                           parse_element(desc, toks[2]),
                                           parse_element(desc, toks[3])));
        } catch (const BadFieldElement& e) {
            fail(e.what());
        } catch (const ZeroVector&) {
            fail("line with all coefficients zero");
        }
    }
    if (!desc) throw SyntaxError("missing field declaration");
    return Arrangement::make(std::move(desc), std::move(lines), "file");
}

std::string serialize_arrangement(const Arrangement& arr) {
    std::string out;
    switch (arr.desc->kind) {
        case FieldKind::Rational: out = "field Q\n"; break;
        case FieldKind::FiniteField:
            out = "field GF " + std::to_string(arr.desc->p) + " " +
                  std::to_string(arr.desc->k) + "\n";
            break;
        case FieldKind::Cyclotomic:
            out = "field CYCLO " + std::to_string(arr.desc->m) + "\n";
            break;
    }
    for (const ProjLine& l : arr.lines)
        out += "line " + l[0].encode() + " " + l[1].encode() + " " +
               l[2].encode() + "\n";
    return out;
}

Arrangement load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SyntaxError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_arrangement(buf.str());
}

void save_arrangement(const Arrangement& arr, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SyntaxError("cannot write " + path);
    out << serialize_arrangement(arr);
}

IncidenceMatrix parse_matrix(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    IncidenceMatrix m;
    bool have_header = false;
    int filled_rows = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const auto toks = tokenize(raw);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 3 || toks[0] != "matrix")
                throw SyntaxError("line " + std::to_string(lineno) +
                                  ": expected: matrix <r> <d>");
            m.rows = (int)parse_long(toks[1], "row count");
            m.cols = (int)parse_long(toks[2], "column count");
            if (m.rows < 1 || m.cols < 1)
                throw SyntaxError("matrix dimensions must be positive");
            m.a.assign((size_t)m.rows * m.cols, 0);
            have_header = true;
            continue;
        }
        if (filled_rows >= m.rows)
            throw SyntaxError("line " + std::to_string(lineno) +
                              ": more rows than declared");
        if ((int)toks.size() != m.cols)
            throw SyntaxError("line " + std::to_string(lineno) + ": expected " +
                              std::to_string(m.cols) + " entries");
        for (int j = 0; j < m.cols; ++j) {
            if (toks[j] != "0" && toks[j] != "1")
                throw SyntaxError("line " + std::to_string(lineno) +
                                  ": entries must be 0 or 1");
            m.a[(size_t)filled_rows * m.cols + j] = (toks[j] == "1");
        }
        ++filled_rows;
    }
    if (!have_header) throw SyntaxError("missing matrix header");
    if (filled_rows != m.rows)
        throw SyntaxError("matrix body has " + std::to_string(filled_rows) +
                          " rows, header declares " + std::to_string(m.rows));
    return m;
}

IncidenceMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SyntaxError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

TVector parse_tvec(const std::string& text) {
    long d = -1;
    std::map<long, Int> counts;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ';')) {
        const size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw SyntaxError("t-vector entries look like d=9 or t3=12");
        const std::string key = part.substr(0, eq);
        const std::string val = part.substr(eq + 1);
        if (key == "d") {
            d = parse_long(val, "line count");
        } else if (key.size() > 1 && key[0] == 't') {
            const long m = parse_long(key.substr(1), "multiplicity");
            counts[m] = Int(parse_long(val, "count"));
        } else {
            throw SyntaxError("unknown t-vector key '" + key + "'");
        }
    }
    if (d < 2) throw SyntaxError("t-vector needs d >= 2");
    try {
        return TVector::hand(d, std::move(counts));
    } catch (const ParameterOutOfRange& e) {
        throw SyntaxError(e.what());
    }
}

}  // namespace arr
