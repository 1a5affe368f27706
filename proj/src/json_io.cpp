#include "shiftlab/json_io.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shiftlab {

Json to_json(const WeightVec& v) {
    Json a = Json::array();
    for (const auto& s : v.str_coords()) a.push_back(s);
    return a;
}

WeightVec weight_from_json(const Json& j) {
    std::vector<Rat> c;
    for (const auto& x : j) c.push_back(parse_rat(x.get<std::string>()));
    return WeightVec(std::move(c));
}

namespace {

Json rat_matrix(const RatMat& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(rat_str(x));
        out.push_back(r);
    }
    return out;
}

Json weights(const std::vector<WeightVec>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
}

}  // namespace

Json to_json(const RootSystem& rs, bool with_roots) {
    Json j;
    j["type"] = rs.lie_type.name();
    j["rank"] = rs.rank;
    j["lacing"] = rs.lacing;
    j["coxeter"] = rs.coxeter;
    j["dual_coxeter"] = rs.dual_coxeter;
    j["dual_coxeter_langlands"] = rs.dual_coxeter_L;
    j["exponents"] = rs.exponents;
    j["weyl_order"] = rs.weyl_order.get_str();
    j["det_cartan"] = rs.det_cartan;
    j["gram"] = rat_matrix(rs.gram);
    j["cartan"] = rs.cartan;
    Json norms = Json::array();
    for (const auto& n : rs.norms) norms.push_back(rat_str(n));
    j["norms"] = norms;
    j["rho"] = to_json(rs.rho);
    j["rho_check"] = to_json(rs.rho_check);
    j["theta"] = to_json(rs.theta);
    j["theta_s"] = to_json(rs.theta_s);
    j["theta_langlands"] = to_json(rs.theta_L);
    j["fundamental_weights"] = weights(rs.fund_weights);
    j["minuscule"] = weights(rs.minuscule);
    j["positive_root_count"] = rs.positive_roots.size();
    if (with_roots) j["positive_roots"] = weights(rs.positive_roots);
    return j;
}

Json to_json(const ShiftCase& c) {
    Json j;
    j["id"] = c.id();
    j["type"] = c.rs->lie_type.name();
    j["variant"] = variant_name(c.variant);
    j["m"] = c.m;
    j["p"] = c.p;
    j["central_charge"] = rat_str(c.central_charge);
    j["digit_max"] = c.digit_max;
    return j;
}

Json to_json(const QSeries& s) {
    // written on the coarsest grid that still holds every nonzero term
    long step = s.grid();
    const auto& cs = s.coeffs();
    for (size_t n = 1; n < cs.size() && step > 1; ++n)
        if (cs[n] != 0) step = std::gcd(step, static_cast<long>(n));
    Json j;
    j["base"] = rat_str(s.base());
    j["grid"] = s.grid() / step;
    if (s.is_zero())
        j["order"] = nullptr;
    else
        j["order"] = s.order() / step;
    j["top"] = rat_str(s.top());
    Json c = Json::array();
    for (size_t n = 0; n < cs.size(); n += static_cast<size_t>(step)) c.push_back(cs[n].get_str());
    j["coeffs"] = c;
    return j;
}

QSeries qseries_from_json(const Json& j) {
    std::vector<BigInt> c;
    for (const auto& x : j.at("coeffs")) c.emplace_back(x.get<std::string>());
    Rat top = parse_rat(j.at("top").get<std::string>());
    long grid = j.at("grid").get<long>();
    if (c.empty()) return QSeries::zero(top, grid);
    return QSeries::from_coeffs(parse_rat(j.at("base").get<std::string>()), grid, std::move(c), top);
}

Json to_json(const ShiftReport& r) {
    Json j;
    j["case"] = r.case_id;
    j["ok"] = r.ok();
    Json counts = Json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    j["counts"] = counts;
    Json fails = Json::array();
    for (const auto& f : r.failures) fails.push_back({{"check", f.check}, {"lambda", f.lambda}, {"witness", f.witness}});
    j["failures"] = fails;
    Json weak = Json::array(), strong = Json::array(), alcove = Json::array(), rows = Json::array();
    for (const auto& row : r.rows) {
        if (row.weak) weak.push_back(row.lambda);
        if (row.strong) strong.push_back(row.lambda);
        if (row.alcove) alcove.push_back(row.lambda);
        Json x;
        x["lambda"] = row.lambda;
        x["weak"] = row.weak;
        x["strong"] = row.strong;
        x["strong_all_words"] = row.strong_all_words;
        x["alcove"] = row.alcove;
        x["alcove_value"] = rat_str(row.alcove_value);
        x["w0_shift"] = to_json(row.w0_shift);
        x["screening"] = row.screening;
        rows.push_back(x);
    }
    j["weak"] = weak;
    j["strong"] = strong;
    j["alcove"] = alcove;
    j["rows"] = rows;
    return j;
}

std::string report_csv(const ShiftReport& r) {
    std::ostringstream os;
    os << "lambda,weak,strong,alcove,w0_shift\n";
    for (const auto& row : r.rows) {
        std::string w;
        for (const auto& s : row.w0_shift.str_coords()) w += (w.empty() ? "" : " ") + s;
        os << '"' << row.lambda << "\"," << row.weak << ',' << row.strong << ',' << row.alcove << ",\"" << w << "\"\n";
    }
    return os.str();
}

Json to_json(const Alcove& a, const AffineWeylElt& w) {
    Json word = Json::array();
    for (int i : a.weyl()[w.sigma].word) word.push_back(i + 1);
    return {{"word", word}, {"translation", to_json(w.translation)}};
}

Json to_json(const AffineWeight& w) {
    return {{"finite", to_json(w.finite)}, {"level", rat_str(w.level)}, {"delta", rat_str(w.delta_coeff)}};
}

}  // namespace shiftlab
