// ascert command-line front end. Links only the C API.

#include <ascert.h>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct SchemeDeleter {
    void operator()(ascert_scheme* s) const { ascert_scheme_free(s); }
};
using SchemePtr = std::unique_ptr<ascert_scheme, SchemeDeleter>;

struct TextDeleter {
    void operator()(char* t) const { ascert_text_free(t); }
};
using TextPtr = std::unique_ptr<char, TextDeleter>;

int report_error(ascert_status st) {
    std::cerr << "error (" << ascert_status_str(st) << "): " << ascert_last_error() << "\n";
    return 1;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

int write_output(const std::string& path, const char* text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 1;
    }
    out << text;
    return out ? 0 : 1;
}

int load_scheme(const std::string& path, SchemePtr& out) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return 1;
    }
    ascert_scheme* raw = nullptr;
    if (ascert_status st = ascert_scheme_from_text(text.c_str(), &raw); st != ASCERT_OK)
        return report_error(st);
    out.reset(raw);
    return 0;
}

int emit_scheme(const ascert_scheme* s, const std::string& out_path) {
    char* text = nullptr;
    if (ascert_status st = ascert_scheme_to_text(s, &text); st != ASCERT_OK)
        return report_error(st);
    TextPtr guard(text);
    return write_output(out_path, text);
}

using Transform = ascert_status (*)(const ascert_scheme*, ascert_scheme**);

int run_transform(Transform fn, const std::string& in_path, const std::string& out_path) {
    SchemePtr input;
    if (int rc = load_scheme(in_path, input); rc != 0) return rc;
    ascert_scheme* raw = nullptr;
    if (ascert_status st = fn(input.get(), &raw); st != ASCERT_OK) return report_error(st);
    SchemePtr output(raw);
    return emit_scheme(output.get(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and certification of small association schemes"};
    app.require_subcommand(1);

    std::string family, in_path, out_path;
    std::int64_t m = 0, q = 0;
    bool as_json = false;

    auto* build = app.add_subcommand("build", "generate a certified scheme");
    build->add_option("family", family, "paley-tournament or paley-graph")->required();
    build->add_option("--m", m, "prime m = 3 (mod 4) for paley-tournament");
    build->add_option("--q", q, "prime q = 1 (mod 4) for paley-graph");
    build->add_option("-o,--output", out_path, "output file (default stdout)");

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("input", in_path, "scheme file")->required();
        cmd->add_option("-o,--output", out_path, "output file (default stdout)");
    };
    auto* edc = app.add_subcommand("edc", "extended double cover of a class-2 scheme");
    add_io(edc);
    auto* dbl = app.add_subcommand("double", "doubling of a non-symmetric class-2 scheme");
    add_io(dbl);
    auto* taylor = app.add_subcommand("taylor", "Taylor-type cover of a symmetric class-2 scheme");
    add_io(taylor);
    auto* rev = app.add_subcommand("reverse", "swap the labels of each transpose pair");
    add_io(rev);

    auto* verify = app.add_subcommand("verify", "certify a scheme and print its invariants");
    verify->add_option("input", in_path, "scheme file")->required();
    verify->add_flag("--json", as_json, "JSON output");

    auto* eigen = app.add_subcommand("eigen", "exact eigenmatrices and multiplicities");
    eigen->add_option("input", in_path, "scheme file")->required();
    eigen->add_flag("--json", as_json, "JSON output");

    auto* hadamard = app.add_subcommand("hadamard", "bordered skew Hadamard matrix");
    hadamard->add_option("input", in_path, "scheme file")->required();
    hadamard->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* check = app.add_subcommand(
        "check-theorem", "block form vs permuted direct cover-of-doubling equivalence");
    check->add_option("--m", m, "prime m = 3 (mod 4)")->required();
    check->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    if (build->parsed()) {
        ascert_scheme* raw = nullptr;
        ascert_status st;
        if (family == "paley-tournament") {
            if (!build->count("--m")) {
                std::cerr << "paley-tournament requires --m\n";
                return 2;
            }
            st = ascert_paley_tournament(m, &raw);
        } else if (family == "paley-graph") {
            if (!build->count("--q")) {
                std::cerr << "paley-graph requires --q\n";
                return 2;
            }
            st = ascert_paley_graph(q, &raw);
        } else {
            std::cerr << "unknown family '" << family
                      << "' (expected paley-tournament or paley-graph)\n";
            return 2;
        }
        if (st != ASCERT_OK) return report_error(st);
        SchemePtr s(raw);
        return emit_scheme(s.get(), out_path);
    }

    if (edc->parsed()) return run_transform(ascert_extended_double_cover, in_path, out_path);
    if (dbl->parsed()) return run_transform(ascert_doubling, in_path, out_path);
    if (taylor->parsed()) return run_transform(ascert_taylor_extension, in_path, out_path);
    if (rev->parsed()) return run_transform(ascert_reverse, in_path, out_path);

    if (verify->parsed() || eigen->parsed()) {
        SchemePtr s;
        if (int rc = load_scheme(in_path, s); rc != 0) return rc;
        char* text = nullptr;
        ascert_status st = verify->parsed()
                               ? ascert_verify_report(s.get(), as_json ? 1 : 0, &text)
                               : ascert_eigen_report(s.get(), as_json ? 1 : 0, &text);
        if (st != ASCERT_OK) return report_error(st);
        TextPtr guard(text);
        std::cout << text;
        return 0;
    }

    if (hadamard->parsed()) {
        SchemePtr s;
        if (int rc = load_scheme(in_path, s); rc != 0) return rc;
        char* text = nullptr;
        if (ascert_status st = ascert_hadamard_text(s.get(), &text); st != ASCERT_OK)
            return report_error(st);
        TextPtr guard(text);
        return write_output(out_path, text);
    }

    if (check->parsed()) {
        int pass = 0;
        char* text = nullptr;
        if (ascert_status st = ascert_check_theorem(m, as_json ? 1 : 0, &pass, &text);
            st != ASCERT_OK)
            return report_error(st);
        TextPtr guard(text);
        std::cout << text;
        return pass ? 0 : 1;
    }

    return 2;
}
