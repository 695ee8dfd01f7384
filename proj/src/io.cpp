#include <entvis/io.hpp>

#include <cmath>
#include <cstdio>

namespace entvis {

std::string fmt17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // snprintf follows LC_NUMERIC; force '.'
    for (char* c = buf; *c; ++c) {
        if (*c == ',') *c = '.';
    }
    return buf;
}

nlohmann::json num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

nlohmann::json to_json(const VisibilityReport& r) {
    nlohmann::json j;
    j["a"] = r.params.a();
    j["h1"] = r.params.h1();
    j["h2"] = r.params.h2();
    j["xi"] = r.params.xi();
    j["v_k1"] = num(r.v_k1);
    j["v_k2"] = num(r.v_k2);
    j["v_kplus"] = num(r.v_kplus);
    j["v_kminus"] = num(r.v_kminus);
    j["v_splus"] = num(r.v_splus);
    j["v_sminus"] = num(r.v_sminus);
    j["V"] = num(r.V);
    j["W"] = num(r.W);
    j["D"] = num(r.D);
    j["epsilon"] = num(r.epsilon);
    j["bound"] = num(r.bound);
    j["regime_warning"] = r.regime_warning;
    return j;
}

nlohmann::json to_json(const CorrectedReport& r) {
    nlohmann::json j;
    j["a"] = r.params.a();
    j["h1"] = r.params.h1();
    j["h2"] = r.params.h2();
    j["xi"] = r.params.xi();
    j["F"] = num(r.F);
    j["v_splus"] = num(r.v_splus);
    j["v_sminus"] = num(r.v_sminus);
    j["equality_mode"] = r.equality_mode;
    j["convention"] = convention_name(r.convention);
    return j;
}

nlohmann::json to_json(const CorrelationReport& r) {
    nlohmann::json j;
    j["a"] = r.params.a();
    j["h1"] = r.params.h1();
    j["h2"] = r.params.h2();
    j["xi"] = r.params.xi();
    j["rho_x"] = num(r.rho_x);
    j["rho_k_log10_abs"] = num(r.rho_k.log10_abs);
    j["rho_k_sign"] = r.rho_k.sign;
    j["R"] = num(r.R);
    j["S"] = num(r.S);
    j["V2_plus_R2"] = num(r.V2_plus_R2);
    j["V2_plus_S2"] = num(r.V2_plus_S2);
    j["rhox2_plus_V2"] = num(r.rhox2_plus_V2);
    j["rhok2_plus_V2"] = num(r.rhok2_plus_V2);
    j["detectability_flag"] = r.detectability_flag;
    return j;
}

nlohmann::json to_json(const CheckResult& r) {
    return {{"name", r.name},           {"max_deviation", num(r.max_deviation)},
            {"tolerance", r.tolerance}, {"samples", r.samples},
            {"passed", r.passed},       {"seconds", r.seconds}};
}

void write_grid_csv(std::ostream& os, const Grid2D& grid, const std::vector<double>& values) {
    os << "u,v,value\n";
    for (std::size_t i = 0; i < grid.n_u; ++i) {
        const std::string u = fmt17(grid.u(i));
        for (std::size_t j = 0; j < grid.n_v; ++j) {
            os << u << ',' << fmt17(grid.v(j)) << ',' << fmt17(values[i * grid.n_v + j]) << '\n';
        }
    }
}

void write_grid_json(std::ostream& os, const Grid2D& grid, const std::vector<double>& values,
                     const nlohmann::json& meta) {
    nlohmann::json g = meta;
    g["u_min"] = grid.u_min;
    g["u_max"] = grid.u_max;
    g["v_min"] = grid.v_min;
    g["v_max"] = grid.v_max;
    g["n_u"] = grid.n_u;
    g["n_v"] = grid.n_v;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < grid.n_u; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < grid.n_v; ++j) {
            row.push_back(num(values[i * grid.n_v + j]));
        }
        rows.push_back(std::move(row));
    }
    os << nlohmann::json{{"grid", g}, {"values", rows}}.dump() << '\n';
}

void write_marginal_csv(std::ostream& os, const Marginal1D& m) {
    os << "# phi=" << fmt17(m.phi) << ", kind=" << (m.kind == DistributionKind::Marginal ? "marginal" : "slice")
       << ", observable=" << observable_name(m.observable);
    if (m.kind == DistributionKind::Slice) {
        os << ", offset=" << fmt17(m.offset);
    }
    os << "\ns,value\n";
    for (std::size_t i = 0; i < m.s.size(); ++i) {
        os << fmt17(m.s[i]) << ',' << fmt17(m.values[i]) << '\n';
    }
}

nlohmann::json to_json(const Marginal1D& m) {
    nlohmann::json j;
    j["phi"] = m.phi;
    j["kind"] = m.kind == DistributionKind::Marginal ? "marginal" : "slice";
    j["observable"] = observable_name(m.observable);
    if (m.kind == DistributionKind::Slice) j["offset"] = m.offset;
    j["s"] = m.s;
    nlohmann::json vals = nlohmann::json::array();
    for (double v : m.values) vals.push_back(num(v));
    j["values"] = vals;
    return j;
}

void write_sweep_csv(std::ostream& os, const std::string& param, const std::vector<SweepRow>& rows) {
    os << param << ",V2_plus_D2,V2_plus_F2,V2_plus_R2,bound\n";
    for (const auto& r : rows) {
        os << fmt17(r.param) << ',' << fmt17(r.v2_plus_d2) << ',' << fmt17(r.v2_plus_f2) << ','
           << fmt17(r.v2_plus_r2) << ',' << fmt17(r.bound) << '\n';
    }
}

nlohmann::json sweep_json(const std::string& param, const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{param, num(r.param)},
                       {"V2_plus_D2", num(r.v2_plus_d2)},
                       {"V2_plus_F2", num(r.v2_plus_f2)},
                       {"V2_plus_R2", num(r.v2_plus_r2)},
                       {"bound", num(r.bound)}});
    }
    return {{"param", param}, {"rows", arr}};
}

} // namespace entvis
