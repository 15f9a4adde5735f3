#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dortho/cli.hpp"

namespace {

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t comma = s.find(',', pos);
        const std::string tok =
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t used = 0;
        if (tok.empty()) throw std::invalid_argument("empty entry in integer list");
        const long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad integer: " + tok);
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and verification of two families of d-orthogonal "
                 "polynomials from su(2) exponential operators"};
    app.require_subcommand(1);

    dortho::RunConfig cfg;
    std::string n_arg;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format: json or csv");
        sub->add_option("--out", cfg.out,
                        "output file; relative paths live under DORTHO_OUT_DIR when set");
    };

    CLI::App* gen_a = app.add_subcommand("gen-a", "emit the full family A triangle");
    gen_a->add_option("--q", cfg.q, "parity class, 0 or 1");
    gen_a->add_option("--c", cfg.c, "parameter c as p/q");
    gen_a->add_option("--N", n_arg, "representation label");
    add_output(gen_a);

    CLI::App* gen_b = app.add_subcommand("gen-b", "emit the full family B triangle");
    gen_b->add_option("--M", cfg.M, "exponent M >= 1");
    gen_b->add_option("--f", cfg.f, "parameter f = a^M b as p/q");
    gen_b->add_option("--N", n_arg, "representation label");
    add_output(gen_b);

    CLI::App* verify = app.add_subcommand("verify", "run the named invariant suite");
    verify->add_flag("--quick", cfg.quick, "restrict to N <= 6");
    verify->add_option("--N-max", cfg.N_max, "exact-suite bound (default 12)");
    verify->add_option("--seed", cfg.seed, "seed for the randomized sample points");
    add_output(verify);

    CLI::App* contract_a = app.add_subcommand("contract-a",
                                              "coefficient contraction of family A");
    contract_a->add_option("--q", cfg.q, "parity class, 0 or 1");
    contract_a->add_option("--c", cfg.c, "parameter c as p/q");
    contract_a->add_option("--j", cfg.j, "member index");
    contract_a->add_option("--N", n_arg, "comma-separated N grid");
    add_output(contract_a);

    CLI::App* contract_b = app.add_subcommand("contract-b",
                                              "matrix-element contraction of family B");
    contract_b->add_option("--M", cfg.M, "exponent M >= 1");
    contract_b->add_option("--a", cfg.a, "split parameter a as p/q");
    contract_b->add_option("--b", cfg.b, "split parameter b as p/q");
    contract_b->add_option("--j", cfg.j, "index j in n = M j + q");
    contract_b->add_option("--q", cfg.q, "residue q in 0..M-1");
    contract_b->add_option("--k", cfg.k, "row index k");
    contract_b->add_option("--N", n_arg, "comma-separated N grid");
    add_output(contract_b);

    CLI::App* gf_check = app.add_subcommand("gf-check",
                                            "contracted generating-function convergence");
    gf_check->add_option("--q", cfg.q, "parity class, 0 or 1");
    gf_check->add_option("--c", cfg.c, "parameter c as p/q");
    gf_check->add_option("--eta", cfg.eta, "sample point eta");
    gf_check->add_option("--N", n_arg, "comma-separated N grid");
    add_output(gf_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.command = app.get_subcommands().at(0)->get_name();
        if (!n_arg.empty()) {
            cfg.N_list = parse_long_list(n_arg);
            cfg.N = cfg.N_list.front();
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    return dortho::run(cfg);
}
