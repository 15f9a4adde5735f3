#include "dortho/serialization.hpp"

#include <iomanip>
#include <sstream>

#include "dortho/errors.hpp"

namespace dortho {

namespace {

json coeffs_json(const UPoly& p) {
    json arr = json::array();
    for (long i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).str());
    return arr;
}

std::vector<Rational> coeffs_from_json(const json& arr) {
    std::vector<Rational> out;
    for (const auto& s : arr) out.push_back(Rational::parse(s.get<std::string>()));
    return out;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

} // namespace

json family_a_json(const FamilyParamsA& params, const std::vector<UPoly>& polys) {
    json out;
    out["family"] = "A";
    out["q"] = params.q;
    out["c"] = params.c.str();
    out["N"] = params.N;
    json arr = json::array();
    for (size_t j = 0; j < polys.size(); ++j) {
        json entry;
        entry["j"] = static_cast<long>(j);
        entry["coeffs"] = coeffs_json(polys[j]);
        arr.push_back(std::move(entry));
    }
    out["polys"] = std::move(arr);
    return out;
}

std::pair<FamilyParamsA, std::vector<UPoly>> family_a_from_json(const json& j) {
    try {
        FamilyParamsA params{j.at("q").get<long>(), Rational::parse(j.at("c").get<std::string>()),
                             j.at("N").get<long>()};
        std::vector<UPoly> polys;
        for (const auto& entry : j.at("polys")) {
            if (entry.at("j").get<long>() != static_cast<long>(polys.size()))
                throw ParseError("family A dump: member indices must run 0,1,2,...");
            polys.emplace_back("l", coeffs_from_json(entry.at("coeffs")));
        }
        return {params, polys};
    } catch (const json::exception& e) {
        throw ParseError(std::string("family A dump: ") + e.what());
    }
}

json family_b_json(const FamilyParamsB& params, const std::vector<UPoly>& polys) {
    json out;
    out["family"] = "B";
    out["M"] = params.M;
    out["f"] = params.f.str();
    out["N"] = params.N;
    json arr = json::array();
    for (size_t n = 0; n < polys.size(); ++n) {
        json entry;
        entry["n"] = static_cast<long>(n);
        entry["coeffs"] = coeffs_json(polys[n]);
        arr.push_back(std::move(entry));
    }
    out["polys"] = std::move(arr);
    return out;
}

std::pair<FamilyParamsB, std::vector<UPoly>> family_b_from_json(const json& j) {
    try {
        FamilyParamsB params{j.at("M").get<long>(), Rational::parse(j.at("f").get<std::string>()),
                             j.at("N").get<long>()};
        std::vector<UPoly> polys;
        for (const auto& entry : j.at("polys")) {
            if (entry.at("n").get<long>() != static_cast<long>(polys.size()))
                throw ParseError("family B dump: member indices must run 0,1,2,...");
            polys.emplace_back("k", coeffs_from_json(entry.at("coeffs")));
        }
        return {params, polys};
    } catch (const json::exception& e) {
        throw ParseError(std::string("family B dump: ") + e.what());
    }
}

std::string family_a_csv(const FamilyParamsA& params, const std::vector<UPoly>& polys) {
    std::ostringstream os;
    os << "family,q,c,N,j,i,coeff\n";
    for (size_t j = 0; j < polys.size(); ++j)
        for (long i = 0; i <= polys[j].degree(); ++i)
            os << "A," << params.q << "," << params.c.str() << "," << params.N << "," << j << ","
               << i << "," << polys[j].coeff(i).str() << "\n";
    return os.str();
}

std::string family_b_csv(const FamilyParamsB& params, const std::vector<UPoly>& polys) {
    std::ostringstream os;
    os << "family,M,f,N,n,i,coeff\n";
    for (size_t n = 0; n < polys.size(); ++n)
        for (long i = 0; i <= polys[n].degree(); ++i)
            os << "B," << params.M << "," << params.f.str() << "," << params.N << "," << n << ","
               << i << "," << polys[n].coeff(i).str() << "\n";
    return os.str();
}

json report_json(const ContractionReport& r) {
    json out;
    out["target"] = r.target;
    out["N"] = r.Ns;
    out["dev_candidate1"] = r.dev_candidate1;
    out["dev_candidate2"] = r.dev_candidate2;
    out["order"] = r.order;
    out["winner"] = r.winner;
    return out;
}

ContractionReport report_from_json(const json& j) {
    try {
        ContractionReport r;
        r.target = j.at("target").get<std::string>();
        r.Ns = j.at("N").get<std::vector<long>>();
        r.dev_candidate1 = j.at("dev_candidate1").get<std::vector<double>>();
        r.dev_candidate2 = j.at("dev_candidate2").get<std::vector<double>>();
        r.order = j.at("order").get<double>();
        r.winner = j.at("winner").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("contraction report: ") + e.what());
    }
}

std::string report_csv(const ContractionReport& r) {
    std::ostringstream os;
    os << "target,N,dev_candidate1,dev_candidate2,order,winner\n";
    for (size_t i = 0; i < r.Ns.size(); ++i) {
        os << r.target << "," << r.Ns[i] << "," << format_double(r.dev_candidate1[i]) << ",";
        if (i < r.dev_candidate2.size()) os << format_double(r.dev_candidate2[i]);
        os << "," << format_double(r.order) << "," << r.winner << "\n";
    }
    return os.str();
}

json matrix_json(const RationalMatrix& m) {
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    json entries = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

RationalMatrix matrix_from_json(const json& j) {
    try {
        RationalMatrix m(j.at("rows").get<long>(), j.at("cols").get<long>());
        const auto& entries = j.at("entries");
        for (long r = 0; r < m.rows(); ++r)
            for (long c = 0; c < m.cols(); ++c)
                m.at(r, c) = Rational::parse(entries.at(static_cast<size_t>(r))
                                                 .at(static_cast<size_t>(c))
                                                 .get<std::string>());
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix dump: ") + e.what());
    }
}

bool report_equal(const ContractionReport& x, const ContractionReport& y) {
    return x.target == y.target && x.Ns == y.Ns && x.dev_candidate1 == y.dev_candidate1 &&
           x.dev_candidate2 == y.dev_candidate2 && x.order == y.order && x.winner == y.winner;
}

} // namespace dortho
