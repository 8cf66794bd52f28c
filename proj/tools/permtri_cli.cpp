// Command-line front end for the permtri shared library. Talks to the
// library exclusively through the C interface.
//
// Exit codes: 0 success, 1 usage or input error, 2 mathematical
// inconsistency detected (a verdict cross-check failed).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "permtri.h"

namespace {

struct TowerGuard {
    permtri_tower* t = nullptr;
    ~TowerGuard() { permtri_tower_free(t); }
};

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { permtri_string_free(s); }
};

int fail_status(const char* what, permtri_status st) {
    std::cerr << "error: " << what << ": " << permtri_strerror(st) << "\n";
    return 1;
}

bool parse_hex_u32(const std::string& text, std::uint32_t& out) {
    if (text.empty()) return false;
    std::size_t pos = 0;
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) pos = 2;
    if (pos >= text.size()) return false;
    std::uint64_t v = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else return false;
        v = v << 4 | unsigned(d);
        if (v > 0xffffffffull) return false;
    }
    out = static_cast<std::uint32_t>(v);
    return true;
}

// "HEX:HEX" -> (a, b) coordinates of a + i*b
bool parse_fq2_arg(const std::string& text, std::uint32_t& a, std::uint32_t& b) {
    auto sep = text.find(':');
    if (sep == std::string::npos) return false;
    return parse_hex_u32(text.substr(0, sep), a) && parse_hex_u32(text.substr(sep + 1), b);
}

int make_tower(std::uint32_t m, const std::string& modulus, const std::string& k,
               TowerGuard& guard) {
    permtri_status st = permtri_tower_create(m, modulus.empty() ? nullptr : modulus.c_str(),
                                             k.empty() ? nullptr : k.c_str(), &guard.t);
    if (st != PERMTRI_OK) return fail_status("cannot create field tower", st);
    return 0;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << text << "\n";
    if (!out.good()) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for the trinomial family "
                 "x + alpha x^{q(q-1)+1} + beta x^{2(q-1)+1} over GF(q^2), q = 2^m"};
    app.require_subcommand(1);

    std::uint32_t m = 3;
    std::string modulus_hex, k_hex, alpha_arg, beta_arg, out_path;
    std::string mode = "mu", format = "csv", suite = "all";
    std::uint32_t workers = 0;

    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "extension degree of the base field GF(2^m)")->required();
        cmd->add_option("--modulus", modulus_hex, "irreducible modulus bitmask (hex)");
        cmd->add_option("--k", k_hex, "trace-1 tower constant (hex)");
    };
    auto add_pair_opts = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", alpha_arg, "alpha as HEX:HEX (a + i*b)")->required();
        cmd->add_option("--beta", beta_arg, "beta as HEX:HEX (a + i*b)")->required();
    };

    CLI::App* verify = app.add_subcommand("verify-pair",
                                          "run all verdicts for one pair and cross-check them");
    add_field_opts(verify);
    add_pair_opts(verify);
    verify->add_option("--out", out_path, "write the JSON report here instead of stdout");

    CLI::App* enumerate = app.add_subcommand("enumerate",
                                             "sweep all pairs and export the permutation set");
    add_field_opts(enumerate);
    enumerate->add_option("--mode", mode, "bruteforce | mu | condition")
        ->check(CLI::IsMember({"bruteforce", "mu", "condition"}));
    enumerate->add_option("--workers", workers, "worker threads (0 = auto)");
    enumerate->add_option("--out", out_path, "artifact path (csv or json)");
    enumerate->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* curve_points = app.add_subcommand("curve-points",
                                                "count GF(q)-rational curve points off x = y");
    add_field_opts(curve_points);
    add_pair_opts(curve_points);
    curve_points->add_option("--out", out_path, "write the JSON report here instead of stdout");

    CLI::App* split = app.add_subcommand("split", "splitting analysis of the associated curve");
    add_field_opts(split);
    add_pair_opts(split);
    split->add_option("--out", out_path, "write the JSON report here instead of stdout");

    CLI::App* symbolic = app.add_subcommand("symbolic", "run the symbolic derivation suites");
    symbolic->add_option("--suite", suite, "curve | conics | chains | all")
        ->check(CLI::IsMember({"curve", "conics", "chains", "all"}));
    symbolic->add_option("--out", out_path, "write the JSON reports here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    std::uint32_t aa = 0, ab = 0, ba = 0, bb = 0;
    if (verify->parsed() || curve_points->parsed() || split->parsed()) {
        if (!parse_fq2_arg(alpha_arg, aa, ab) || !parse_fq2_arg(beta_arg, ba, bb)) {
            std::cerr << "error: --alpha/--beta must be HEX:HEX\n";
            return 1;
        }
    }

    if (symbolic->parsed()) {
        StringGuard json;
        int all_passed = 0;
        permtri_status st = permtri_symbolic_run(suite.c_str(), &json.s, &all_passed);
        if (st != PERMTRI_OK) return fail_status("symbolic run failed", st);
        int rc = emit(json.s, out_path);
        if (rc) return rc;
        return all_passed ? 0 : 2;
    }

    TowerGuard tower;
    if (int rc = make_tower(m, modulus_hex, k_hex, tower)) return rc;

    if (verify->parsed()) {
        StringGuard json;
        int consistent = 0;
        permtri_status st =
            permtri_verify_pair(tower.t, aa, ab, ba, bb, &json.s, &consistent);
        if (st != PERMTRI_OK) return fail_status("verify-pair failed", st);
        int rc = emit(json.s, out_path);
        if (rc) return rc;
        return consistent ? 0 : 2;
    }

    if (enumerate->parsed()) {
        StringGuard summary;
        permtri_status st =
            permtri_enumerate(tower.t, mode.c_str(), workers, format.c_str(),
                              out_path.empty() ? nullptr : out_path.c_str(), &summary.s);
        if (st != PERMTRI_OK) return fail_status("enumeration failed", st);
        std::cout << summary.s << "\n";
        std::string text = summary.s;
        return text.find("\"mismatches\": 0") != std::string::npos ? 0 : 2;
    }

    if (curve_points->parsed()) {
        std::uint64_t count = 0;
        std::uint32_t gamma[9];
        permtri_status st = permtri_count_points_off_diagonal(tower.t, aa, ab, ba, bb, &count);
        if (st != PERMTRI_OK) return fail_status("point count failed", st);
        st = permtri_gamma_coeffs(tower.t, aa, ab, ba, bb, gamma);
        if (st != PERMTRI_OK) return fail_status("coefficient evaluation failed", st);
        std::string json = "{\n  \"q\": " + std::to_string(permtri_tower_q(tower.t)) +
                           ",\n  \"points_off_diagonal\": " + std::to_string(count) +
                           ",\n  \"gamma\": [";
        for (int i = 0; i < 9; ++i) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "\"0x%x\"", gamma[i]);
            json += std::string(i ? ", " : "") + buf;
        }
        json += "]\n}";
        return emit(json, out_path);
    }

    if (split->parsed()) {
        StringGuard json;
        permtri_status st = permtri_split_analysis(tower.t, aa, ab, ba, bb, &json.s);
        if (st != PERMTRI_OK) return fail_status("split analysis failed", st);
        return emit(json.s, out_path);
    }

    return 1;
}
