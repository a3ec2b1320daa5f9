// linearr: exact line-arrangement toolbox.
//
// Subcommands: gen, analyze, verify, sweep, reconstruct-field, matrix-perm.
// Exit codes: 0 success, 1 violated check, 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "arr/arrfile.hpp"
#include "arr/report.hpp"

namespace {

using namespace arr;

Rat parse_cli_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw SyntaxError("bad rational '" + s + "'");
    }
}

void parse_range(const std::string& s, long& lo, long& hi) {
    const size_t dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stol(s);
        } else {
            lo = std::stol(s.substr(0, dots));
            hi = std::stol(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw SyntaxError("bad range '" + s + "' (expected a..b)");
    }
    if (lo > hi) throw SyntaxError("empty range '" + s + "'");
}

FamilySpec spec_from_cli(const std::string& family,
                         const std::vector<long>& params, long p_opt,
                         long k_opt) {
    FamilySpec spec{family_from_string(family), 0, 0, 0};
    size_t want = 1;
    switch (spec.family) {
        case Family::CompleteQuadrilateral:
        case Family::DualHesse:
        case Family::Hesse: want = 0; break;
        case Family::FiniteProjectivePlane: want = 2; break;
        default: want = 1; break;
    }
    if (params.size() != want)
        throw SyntaxError(family + " takes " + std::to_string(want) +
                          " parameter(s)");
    if (want >= 1) spec.n = params[0];
    if (spec.family == Family::FiniteProjectivePlane) {
        spec.p = params[0];
        spec.k = params[1];
        spec.n = 0;
    }
    if (spec.family == Family::Ceva) {
        spec.p = p_opt;
        spec.k = k_opt;
    } else if (p_opt || k_opt) {
        throw SyntaxError("--p/--k only apply to the ceva family");
    }
    return spec;
}

void emit(const Json& doc, bool as_json, std::ostream& os) {
    if (as_json)
        os << doc.dump(2) << "\n";
    else
        os << render_text(doc);
}

int run(int argc, char** argv) {
    CLI::App app{"exact projective line-arrangement toolbox"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named family");
    std::string gen_family;
    std::vector<long> gen_params;
    std::string gen_out;
    long gen_p = 0, gen_k = 0;
    gen->add_option("family", gen_family, "family name")->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");
    gen->add_option("--p", gen_p, "ceva: positive characteristic p");
    gen->add_option("--k", gen_k, "ceva: extension degree (default minimal)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "t-vector and invariants");
    std::string analyze_file, analyze_tvec;
    bool analyze_json = false;
    analyze->add_option("file", analyze_file, "arrangement file");
    analyze->add_option("--tvec", analyze_tvec, "inline t-vector, e.g. d=9;t3=12");
    analyze->add_flag("--json", analyze_json, "JSON output");

    // verify
    auto* verify = app.add_subcommand("verify", "full theorem suite");
    std::string verify_file;
    bool verify_json = false;
    verify->add_option("file", verify_file, "arrangement file")->required();
    verify->add_flag("--json", verify_json, "JSON output");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "density sweep, CSV output");
    std::string sweep_family, sweep_h, sweep_x = "1", sweep_range,
                sweep_qexp, sweep_csv_path;
    sweep->set_help_flag("--help", "print help");  // frees -h for the exponent
    sweep->add_option("family", sweep_family, "pg or polygon")->required();
    sweep->add_option("--h", sweep_h,
                      "exponent h: 3/2 or 2 (default 3/2 for pg, 2 for polygon)");
    sweep->add_option("--x", sweep_x, "density parameter x > 0");
    sweep->add_option("--range", sweep_range, "parameter range a..b");
    sweep->add_option("--q-exp", sweep_qexp, "pg: exponent range for q = 2^e");
    sweep->add_option("--csv", sweep_csv_path, "CSV file (default stdout)");

    // reconstruct-field
    auto* recon = app.add_subcommand("reconstruct-field",
                                     "recover the plane's coordinate field");
    std::string recon_file;
    bool recon_json = false;
    recon->add_option("file", recon_file, "arrangement file")->required();
    recon->add_flag("--json", recon_json, "JSON output");

    // matrix-perm
    auto* mperm = app.add_subcommand(
        "matrix-perm", "zero-diagonal row permutation of a 0/1 matrix");
    std::string mperm_file;
    bool mperm_json = false;
    mperm->add_option("file", mperm_file, "matrix file")->required();
    mperm->add_flag("--json", mperm_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (gen->parsed()) {
        const FamilySpec spec = spec_from_cli(gen_family, gen_params, gen_p, gen_k);
        const Arrangement a = generate(spec);
        if (gen_out.empty())
            std::cout << serialize_arrangement(a);
        else
            save_arrangement(a, gen_out);
        return 0;
    }
    if (analyze->parsed()) {
        if (analyze_file.empty() == analyze_tvec.empty())
            throw SyntaxError("analyze needs a file or --tvec, not both");
        Analysis res = analyze_tvec.empty()
                           ? analyze_arrangement(load_arrangement(analyze_file))
                           : analyze_tvector(parse_tvec(analyze_tvec),
                                             FieldClass::PositiveChar,
                                             /*field_class_known=*/false,
                                             /*from_coordinates=*/false);
        emit(res.doc, analyze_json, std::cout);
        return res.ok ? 0 : 1;
    }
    if (verify->parsed()) {
        const Analysis res = verify_arrangement(load_arrangement(verify_file));
        emit(res.doc, verify_json, std::cout);
        return res.ok ? 0 : 1;
    }
    if (sweep->parsed()) {
        SweepFamily fam;
        if (sweep_family == "pg")
            fam = SweepFamily::FiniteProjectivePlane;
        else if (sweep_family == "polygon")
            fam = SweepFamily::Polygon;
        else
            throw SyntaxError("sweep family must be pg or polygon");
        if (sweep_h.empty())
            sweep_h = fam == SweepFamily::FiniteProjectivePlane ? "3/2" : "2";
        std::string range = sweep_range;
        if (!sweep_qexp.empty()) {
            if (fam != SweepFamily::FiniteProjectivePlane)
                throw SyntaxError("--q-exp only applies to the pg family");
            range = sweep_qexp;
        }
        if (range.empty()) throw SyntaxError("sweep needs --range or --q-exp");
        long lo = 0, hi = 0;
        parse_range(range, lo, hi);
        const auto rows = density_sweep(fam, parse_cli_rat(sweep_h),
                                        parse_cli_rat(sweep_x), lo, hi);
        const std::string csv = sweep_csv(rows);
        if (sweep_csv_path.empty()) {
            std::cout << csv;
        } else {
            std::ofstream out(sweep_csv_path);
            if (!out) throw SyntaxError("cannot write " + sweep_csv_path);
            out << csv;
        }
        return 0;
    }
    if (recon->parsed()) {
        const Arrangement a = load_arrangement(recon_file);
        const ReconstructedField rf = reconstruct_field(a);
        Json doc;
        doc["q"] = rf.q;
        doc["k_prime_size"] = (long)rf.elements.size();
        doc["matched_order"] = rf.matched_order ? "pass" : "fail";
        doc["is_field"] = rf.is_field ? "pass" : "fail";
        Json elems = Json::array();
        for (const auto& e : rf.elements) elems.push_back(e.encode());
        doc["elements"] = std::move(elems);
        if (recon_json) {
            doc["add_table"] = rf.add_table;
            doc["mul_table"] = rf.mul_table;
        }
        emit(doc, recon_json, std::cout);
        return (rf.is_field && rf.matched_order) ? 0 : 1;
    }
    if (mperm->parsed()) {
        const IncidenceMatrix m = load_matrix(mperm_file);
        Json doc;
        doc["rows"] = m.rows;
        doc["cols"] = m.cols;
        try {
            const std::vector<int> sigma = zero_diagonal_permutation(m);
            doc["permutation"] = sigma;
            emit(doc, mperm_json, std::cout);
            return 0;
        } catch (const NoZeroDiagonal& e) {
            doc["error"] = e.what();
            emit(doc, mperm_json, std::cout);
            return 1;
        }
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadFieldElement& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DuplicateLine& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const arr::Error& e) {
        // violated theorem assertion or failed reconstruction
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
