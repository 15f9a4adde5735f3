#include "dortho/cli.hpp"

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dortho/afamily.hpp"
#include "dortho/bfamily.hpp"
#include "dortho/errors.hpp"
#include "dortho/limits.hpp"
#include "dortho/serialization.hpp"
#include "dortho/su2rep.hpp"

namespace dortho {

namespace {

constexpr long kExactNMax = 64;       // full exact triangles
constexpr long kFloatingNMax = 256;   // contraction grids

std::string pad2(long v) {
    std::string s = std::to_string(v);
    return s.size() < 2 ? "0" + s : s;
}

// Writes payload to stdout, or to config.out (relative paths live under
// DORTHO_OUT_DIR when that is set).
void emit(const RunConfig& config, const std::string& payload) {
    if (config.out.empty()) {
        std::cout << payload;
        return;
    }
    std::string path = config.out;
    if (path[0] != '/') {
        const char* dir = std::getenv("DORTHO_OUT_DIR");
        if (dir && *dir) path = std::string(dir) + "/" + path;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ParseError("cannot open output file " + path);
    os << payload;
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

class CheckRunner {
  public:
    void add(std::string name, const std::function<void()>& body) {
        CheckResult r{std::move(name), true, ""};
        try {
            body();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
    std::vector<CheckResult> results;
};

int run_gen_a(const RunConfig& config) {
    FamilyParamsA params{config.q, Rational::parse(config.c), config.N};
    params.validate();
    if (config.N > kExactNMax) throw ParseError("gen-a: N exceeds the exact-path bound 64");

    std::vector<UPoly> fam = a_poly_recurrence(params, params.p());
    for (long j = 0; j <= params.p(); ++j) {
        if (a_poly_hypergeometric(params, j) != fam[static_cast<size_t>(j)])
            throw IdentityFailure("gen-a: recurrence and hypergeometric forms disagree at j = " +
                                  std::to_string(j));
        if (a_poly_from_matrix(params, j) != fam[static_cast<size_t>(j)])
            throw IdentityFailure("gen-a: recurrence and matrix extraction disagree at j = " +
                                  std::to_string(j));
    }
    if (config.format == "csv")
        emit(config, family_a_csv(params, fam));
    else
        emit(config, family_a_json(params, fam).dump(2) + "\n");
    return 0;
}

int run_gen_b(const RunConfig& config) {
    FamilyParamsB params{config.M, Rational::parse(config.f), config.N};
    params.validate();
    if (config.N > kExactNMax) throw ParseError("gen-b: N exceeds the exact-path bound 64");

    std::vector<UPoly> fam = b_poly_recurrence(params, params.N);
    for (long n = 0; n <= params.N; ++n) {
        if (b_poly_hypergeometric(params, n) != fam[static_cast<size_t>(n)])
            throw IdentityFailure("gen-b: recurrence and hypergeometric forms disagree at n = " +
                                  std::to_string(n));
        if (b_poly_from_matrix(params, n) != fam[static_cast<size_t>(n)])
            throw IdentityFailure("gen-b: recurrence and matrix extraction disagree at n = " +
                                  std::to_string(n));
    }
    if (config.format == "csv")
        emit(config, family_b_csv(params, fam));
    else
        emit(config, family_b_json(params, fam).dump(2) + "\n");
    return 0;
}

void require_grid(const RunConfig& config) {
    if (config.N_list.empty()) throw ParseError("contraction commands need --N n1,n2,...");
    for (long n : config.N_list)
        if (n < 0 || n > kFloatingNMax)
            throw ParseError("contraction: N exceeds the floating-path bound 256");
}

int run_report(const RunConfig& config, const ContractionReport& rep) {
    if (config.format == "csv")
        emit(config, report_csv(rep));
    else
        emit(config, report_json(rep).dump(2) + "\n");
    return 0;
}

// ---- verify ----------------------------------------------------------------

void add_afamily_checks(CheckRunner& runner, long bound) {
    const std::vector<Rational> cs = {Rational(1), Rational(Integer(1), Integer(2)),
                                      Rational(Integer(-3), Integer(7))};
    for (long N = 0; N <= bound; ++N)
        for (long q = 0; q <= std::min<long>(1, N); ++q)
            for (const Rational& c : cs) {
                FamilyParamsA params{q, c, N};
                const std::string tag =
                    "/N" + pad2(N) + "/q" + std::to_string(q) + "/c=" + c.str();

                runner.add("afamily/triangle" + tag, [params] {
                    std::vector<UPoly> fam = a_poly_recurrence(params, params.p());
                    for (long j = 0; j <= params.p(); ++j) {
                        const UPoly& ref = fam[static_cast<size_t>(j)];
                        if (ref.degree() != j || ref.leading_coeff() != Rational(1))
                            throw IdentityFailure("member is not monic of degree j");
                        if (a_poly_hypergeometric(params, j) != ref)
                            throw IdentityFailure("hypergeometric form disagrees at j = " +
                                                  std::to_string(j));
                        if (a_poly_from_matrix(params, j) != ref)
                            throw IdentityFailure("matrix extraction disagrees at j = " +
                                                  std::to_string(j));
                        // only the product a b enters
                        if (a_poly_from_matrix_split(params, j, params.c, Rational(1)) != ref)
                            throw IdentityFailure("split (c,1) disagrees at j = " +
                                                  std::to_string(j));
                    }
                });
                runner.add("afamily/inverse" + tag, [params] { inverse_elements_A(params); });
                runner.add("afamily/biortho" + tag, [params] { biortho_poly_check(params); });
                runner.add("afamily/difference" + tag, [params] {
                    for (long j = 0; j <= params.p(); ++j) a_difference_apply(params, j);
                });
                runner.add("afamily/shift" + tag, [params] {
                    for (long j = 0; j <= params.p(); ++j) a_forward_shift(params, j);
                });
                if (N >= 4 + q)
                    runner.add("afamily/functionals" + tag, [params] { functionals_A(params); });
                runner.add("afamily/rowdecomp" + tag, [params] {
                    for (long j = 0; j <= std::min<long>(params.p(), 9); ++j)
                        decompose_inverse_row_A(params, j);
                });
            }
}

void add_bfamily_checks(CheckRunner& runner, long bound) {
    const std::vector<Rational> fs = {Rational(1), Rational(Integer(1), Integer(3)),
                                      Rational(Integer(-2), Integer(5))};
    for (long N = 0; N <= bound; ++N)
        for (long M = 1; M <= 3; ++M)
            for (const Rational& f : fs) {
                FamilyParamsB params{M, f, N};
                const std::string tag =
                    "/N" + pad2(N) + "/M" + std::to_string(M) + "/f=" + f.str();

                runner.add("bfamily/triangle" + tag, [params] {
                    std::vector<UPoly> fam = b_poly_recurrence(params, params.N);
                    for (long n = 0; n <= params.N; ++n) {
                        const UPoly& ref = fam[static_cast<size_t>(n)];
                        if (ref.degree() != n || ref.leading_coeff() != Rational(1))
                            throw IdentityFailure("member is not monic of degree n");
                        if (b_poly_hypergeometric(params, n) != ref)
                            throw IdentityFailure("hypergeometric form disagrees at n = " +
                                                  std::to_string(n));
                        if (b_poly_from_matrix(params, n) != ref)
                            throw IdentityFailure("matrix extraction disagrees at n = " +
                                                  std::to_string(n));
                        // only f = a^M b enters
                        Rational a2 = (params.M == 1) ? params.f : Rational(-1);
                        Rational b2 = (params.M == 1)
                                          ? Rational(1)
                                          : ((params.M % 2 == 0) ? params.f : -params.f);
                        if (pow(a2, params.M) * b2 != params.f)
                            throw IdentityFailure("alternate split is not a split of f");
                        if (b_poly_from_matrix_split(params, n, a2, b2) != ref)
                            throw IdentityFailure("alternate split disagrees at n = " +
                                                  std::to_string(n));
                    }
                });
                runner.add("bfamily/inverse" + tag, [params] { inverse_elements_B(params); });
                runner.add("bfamily/biortho" + tag, [params] { biortho_poly_check_B(params); });
                if (M == 2) {
                    runner.add("bfamily/difference" + tag, [params] {
                        for (long n = 0; n <= params.N; ++n) b_difference_check(params, n);
                    });
                    if (N >= 2)
                        runner.add("bfamily/functionals" + tag,
                                   [params] { functionals_B(params); });
                }
                if (N >= 2 * M - 2)
                    runner.add("bfamily/rowdecomp" + tag, [params] {
                        for (long n = 0; n <= std::min<long>(params.N, 9); ++n)
                            decompose_inverse_row_B(params, n);
                    });
            }
}

void add_su2rep_checks(CheckRunner& runner, long bound) {
    const std::vector<std::pair<Rational, Rational>> abs_ = {
        {Rational(1), Rational(1)},
        {Rational(Integer(1), Integer(2)), Rational(Integer(-1), Integer(3))}};
    for (long N = 0; N <= bound; ++N) {
        for (const auto& [a, b] : abs_)
            for (long M = 1; M <= 3; ++M)
                runner.add("su2rep/conjugation/N" + pad2(N) + "/M" + std::to_string(M) +
                               "/a=" + a.str() + "/b=" + b.str(),
                           [N, a = a, b = b, M] { verify_conjugation_identities(N, a, b, M); });
        for (const Rational& eta : {Rational(1), Rational(Integer(-2), Integer(3))})
            runner.add("su2rep/coherent/N" + pad2(N) + "/eta=" + eta.str(),
                       [N, eta] { coherent_relations_check(coherent_vector(N, eta)); });
    }
}

void add_gf_checks(CheckRunner& runner, long bound, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto u01 = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
    auto pick = [&gen](long lo, long hi) {
        return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto nonzero = [&] {
        long num = 0;
        while (num == 0) num = pick(-9, 9);
        return Rational(Integer(num), Integer(pick(1, 9)));
    };
    auto positive = [&] { return Rational(Integer(pick(1, 9)), Integer(pick(1, 9))); };

    for (int i = 0; i < 20; ++i) {
        const long q = (bound >= 1) ? pick(0, 1) : 0;
        const long N = pick(q, bound);
        const Rational c = nonzero(), a = positive();
        const std::complex<double> eta(2.0 * u01() - 1.0, 2.0 * u01() - 1.0);
        runner.add("gfroutes/a/point" + pad2(i), [q, N, c, a, eta] {
            GFReport rep = a_generating_function_check(FamilyParamsA{q, c, N}, a, eta);
            if (rep.dev12 > 1e-10)
                throw IdentityFailure("route (i) vs (ii) deviation " + std::to_string(rep.dev12));
        });
    }
    for (int i = 0; i < 20; ++i) {
        const long M = pick(1, 3);
        const long N = pick(0, bound);
        const Rational f = nonzero(), a = positive();
        const std::complex<double> eta(2.0 * u01() - 1.0, 2.0 * u01() - 1.0);
        runner.add("gfroutes/b/point" + pad2(i), [M, N, f, a, eta] {
            GFReport rep = b_generating_function_check(FamilyParamsB{M, f, N}, a, eta);
            if (rep.dev12 > 1e-10)
                throw IdentityFailure("route (i) vs (ii) deviation " + std::to_string(rep.dev12));
        });
    }
}

int run_verify(const RunConfig& config) {
    if (config.N_max < 0 || config.N_max > kExactNMax)
        throw ParseError("verify: --N-max must lie in 0..64");
    const long bound = config.quick ? std::min<long>(6, config.N_max) : config.N_max;

    CheckRunner runner;
    add_afamily_checks(runner, bound);
    add_bfamily_checks(runner, bound);
    add_su2rep_checks(runner, bound);
    add_gf_checks(runner, bound, config.seed);

    std::sort(runner.results.begin(), runner.results.end(),
              [](const CheckResult& x, const CheckResult& y) { return x.name < y.name; });

    long passed = 0, failed = 0;
    const CheckResult* first_failure = nullptr;
    for (const CheckResult& r : runner.results) {
        if (r.pass) {
            ++passed;
        } else {
            ++failed;
            if (!first_failure) first_failure = &r;
        }
    }

    if (config.format == "csv") {
        std::ostringstream os;
        os << "name,status,detail\n";
        for (const CheckResult& r : runner.results) {
            std::string detail = r.detail;
            std::replace(detail.begin(), detail.end(), ',', ';');
            os << r.name << "," << (r.pass ? "pass" : "fail") << "," << detail << "\n";
        }
        emit(config, os.str());
    } else {
        json rep;
        rep["suite"] = "verify";
        rep["quick"] = config.quick;
        rep["N_max"] = bound;
        rep["seed"] = config.seed;
        rep["counts"] = {{"total", passed + failed}, {"passed", passed}, {"failed", failed}};
        json checks = json::array();
        for (const CheckResult& r : runner.results) {
            json entry;
            entry["name"] = r.name;
            entry["status"] = r.pass ? "pass" : "fail";
            if (!r.pass) entry["detail"] = r.detail;
            checks.push_back(std::move(entry));
        }
        rep["checks"] = std::move(checks);
        emit(config, rep.dump(2) + "\n");
    }

    if (first_failure) {
        std::cerr << first_failure->name << ": " << first_failure->detail << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int run(const RunConfig& config) {
    try {
        if (config.format != "json" && config.format != "csv") {
            std::cerr << "unknown format: " << config.format << "\n";
            return 2;
        }
        if (config.command == "gen-a") return run_gen_a(config);
        if (config.command == "gen-b") return run_gen_b(config);
        if (config.command == "verify") return run_verify(config);
        if (config.command == "contract-a") {
            require_grid(config);
            return run_report(config,
                              contract_A(config.q, Rational::parse(config.c), config.j,
                                         config.N_list));
        }
        if (config.command == "contract-b") {
            require_grid(config);
            return run_report(config,
                              contract_B(config.M, Rational::parse(config.a),
                                         Rational::parse(config.b), config.j, config.q, config.k,
                                         config.N_list));
        }
        if (config.command == "gf-check") {
            require_grid(config);
            return run_report(config, contract_gf_check(config.q, Rational::parse(config.c),
                                                        config.eta, config.N_list));
        }
        std::cerr << "unknown command: " << config.command << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfFamily& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DorthoError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

} // namespace dortho
