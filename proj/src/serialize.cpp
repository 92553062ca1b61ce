#include <srg/serialize.hpp>

#include <sstream>

namespace srg {

namespace {

std::string opt_rat(const std::optional<Rat>& x) { return x ? rat_to_string(*x) : ""; }

}  // namespace

nlohmann::ordered_json param_record_json(const ParamTriple& t, const DerivedParams& d,
                                         const FeasibilityVerdict& verdict) {
    nlohmann::ordered_json j;
    j["a"] = t.a.get_str();
    j["c"] = t.c.get_str();
    j["e"] = t.e.get_str();
    j["k"] = d.k.get_str();
    j["l"] = rat_to_string(d.l);
    j["n"] = rat_to_string(d.n);
    j["s"] = d.s.get_str();
    j["lambda2"] = d.lambda2.get_str();
    j["m1"] = opt_rat(d.m1);
    j["m2"] = opt_rat(d.m2);
    j["K1"] = d.K1.get_str();
    j["K2"] = d.K2.get_str();
    j["status"] = to_string(verdict.status);
    return j;
}

std::string param_record_csv_header() { return "a,c,e,k,l,n,s,lambda2,m1,m2,K1,K2,status"; }

std::string param_record_csv_row(const ParamTriple& t, const DerivedParams& d,
                                 const FeasibilityVerdict& verdict) {
    std::ostringstream out;
    out << t.a.get_str() << ',' << t.c.get_str() << ',' << t.e.get_str() << ',' << d.k.get_str() << ','
        << rat_to_string(d.l) << ',' << rat_to_string(d.n) << ',' << d.s.get_str() << ','
        << d.lambda2.get_str() << ',' << opt_rat(d.m1) << ',' << opt_rat(d.m2) << ',' << d.K1.get_str()
        << ',' << d.K2.get_str() << ',' << to_string(verdict.status);
    return out.str();
}

}  // namespace srg
