#include "crosscycle/config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "crosscycle/registry.hpp"

namespace crosscycle {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key())) fail(where + "unknown field: " + item.key());
}

// Exact coefficient ingestion: JSON integers and strings only. A 0.25
// would round-trip through binary floating point, so decimals must be
// quoted (rat_from_string turns them into exact rationals).
Rat rat_value(const json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return rat_from_string(v.dump());
        if (v.is_string()) return rat_from_string(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(where + ": " + e.what());
    }
    fail(where + ": expected an integer or a \"p/q\" / decimal string");
}

double double_value(const json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return to_double(rat_value(v, where));
    fail(where + ": expected a number");
}

BiPoly terms_value(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where + ": expected an array of [i, j, coeff] terms");
    BiPoly p;
    for (const json& t : v) {
        if (!t.is_array() || t.size() != 3) fail(where + ": each term must be [i, j, coeff]");
        if (!t[0].is_number_integer() || !t[1].is_number_integer())
            fail(where + ": exponents must be integers");
        long i = t[0].get<long>(), j = t[1].get<long>();
        if (i < 0 || j < 0 || i > 64 || j > 64) fail(where + ": exponent out of range");
        p = p + BiPoly::monomial(static_cast<int>(i), static_cast<int>(j),
                                 rat_value(t[2], where));
    }
    return p;
}

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const std::string& p : parts) {
        if (!s.empty()) s += "; ";
        s += p;
    }
    return s;
}

struct SidePolys {
    BiPoly H;
    std::pair<BiPoly, BiPoly> F;
};

struct CenterSpec {
    SidePolys side;
    std::optional<LinearCenterParams> params;
};

CenterSpec parse_center(const json& v) {
    if (!v.is_object()) fail("center: expected an object");
    CenterSpec out;
    if (v.contains("H")) {
        check_keys(v, {"H", "Fx", "Fy"}, "center: ");
        if (!v.contains("Fx") || !v.contains("Fy")) fail("center: explicit form needs H, Fx, Fy");
        out.side.H = terms_value(v["H"], "center.H");
        out.side.F = {terms_value(v["Fx"], "center.Fx"), terms_value(v["Fy"], "center.Fy")};
        return out;
    }
    check_keys(v, {"A", "B", "C", "omega", "sign"}, "center: ");
    for (const char* k : {"A", "B", "C", "omega"})
        if (!v.contains(k)) fail(std::string("center: missing field: ") + k);
    LinearCenterParams p;
    p.A = rat_value(v["A"], "center.A");
    p.B = rat_value(v["B"], "center.B");
    p.C = rat_value(v["C"], "center.C");
    p.omega = rat_value(v["omega"], "center.omega");
    if (v.contains("sign")) {
        if (!v["sign"].is_number_integer()) fail("center.sign: expected 1 or -1");
        p.sign = v["sign"].get<int>();
    }
    ValidationReport r = validate_center(p);
    if (!r.ok()) fail("center: " + join(r.violations));
    out.side = {H_center(p), F_center(p)};
    out.params = p;
    return out;
}

struct SaddleSpec {
    SidePolys side;
    std::optional<SaddleFamily> family;
    std::optional<SaddleParams> params;
    std::optional<AffineMap> affine;
};

SaddleSpec parse_saddle(const json& v) {
    if (!v.is_object()) fail("saddle: expected an object");
    SaddleSpec out;
    if (v.contains("H")) {
        check_keys(v, {"H", "Fx", "Fy"}, "saddle: ");
        if (!v.contains("Fx") || !v.contains("Fy")) fail("saddle: explicit form needs H, Fx, Fy");
        out.side.H = terms_value(v["H"], "saddle.H");
        out.side.F = {terms_value(v["Fx"], "saddle.Fx"), terms_value(v["Fy"], "saddle.Fy")};
        return out;
    }
    check_keys(v, {"family", "params", "affine"}, "saddle: ");
    if (!v.contains("family") || !v["family"].is_string()) fail("saddle: missing field: family");
    auto fam = family_from_name(v["family"].get<std::string>());
    if (!fam) fail("saddle.family: unknown family: " + v["family"].get<std::string>());

    SaddleParams p{Rat(0), Rat(0), Rat(0), Rat(0)};
    if (v.contains("params")) {
        const json& pv = v["params"];
        if (!pv.is_object()) fail("saddle.params: expected an object");
        check_keys(pv, {"a", "b", "c", "mu"}, "saddle.params: ");
        if (pv.contains("a")) p.a = rat_value(pv["a"], "saddle.params.a");
        if (pv.contains("b")) p.b = rat_value(pv["b"], "saddle.params.b");
        if (pv.contains("c")) p.c = rat_value(pv["c"], "saddle.params.c");
        if (pv.contains("mu")) p.mu = rat_value(pv["mu"], "saddle.params.mu");
    }

    AffineMap m{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)};
    if (v.contains("affine")) {
        const json& mv = v["affine"];
        if (!mv.is_object()) fail("saddle.affine: expected an object");
        check_keys(mv, {"a1", "b1", "c1", "alpha1", "beta1", "gamma1"}, "saddle.affine: ");
        if (mv.contains("a1")) m.a1 = rat_value(mv["a1"], "saddle.affine.a1");
        if (mv.contains("b1")) m.b1 = rat_value(mv["b1"], "saddle.affine.b1");
        if (mv.contains("c1")) m.c1 = rat_value(mv["c1"], "saddle.affine.c1");
        if (mv.contains("alpha1")) m.alpha1 = rat_value(mv["alpha1"], "saddle.affine.alpha1");
        if (mv.contains("beta1")) m.beta1 = rat_value(mv["beta1"], "saddle.affine.beta1");
        if (mv.contains("gamma1")) m.gamma1 = rat_value(mv["gamma1"], "saddle.affine.gamma1");
    }

    ValidationReport r = validate(*fam, p, m);
    if (!r.ok()) fail("saddle: " + join(r.violations));
    out.side = {H_saddle(*fam, p, m), F_saddle(*fam, p, m)};
    out.family = fam;
    out.params = p;
    out.affine = m;
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("config: expected a JSON object");
    check_keys(root,
               {"schema", "example", "center", "saddle", "tol", "ode_tol", "box", "out", "svg",
                "format", "zoom"},
               "");
    if (!root.contains("schema") || !root["schema"].is_number_integer() ||
        root["schema"].get<int>() != 1)
        fail("schema: expected 1");

    RunConfig cfg;
    const bool has_example = root.contains("example");
    const bool has_center = root.contains("center");
    const bool has_saddle = root.contains("saddle");
    if (has_example && (has_center || has_saddle))
        fail("specify either example or center+saddle, not both");
    if (!has_example && has_center != has_saddle)
        fail("center and saddle must be given together");
    if (!has_example && !has_center) fail("missing system source: example or center+saddle");

    if (has_example) {
        if (!root["example"].is_string()) fail("example: expected a registry id string");
        cfg.example = root["example"].get<std::string>();
        try {
            example_by_id(*cfg.example);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    } else {
        CenterSpec center = parse_center(root["center"]);
        SaddleSpec saddle = parse_saddle(root["saddle"]);
        PiecewiseSystem sys;
        try {
            sys = PiecewiseSystem::explicit_forms(center.side.H, center.side.F, saddle.side.H,
                                                  saddle.side.F);
        } catch (const std::invalid_argument& e) {
            fail(std::string("system: ") + e.what());
        }
        sys.family = saddle.family;
        sys.saddle_params = saddle.params;
        sys.affine = saddle.affine;
        cfg.system = std::move(sys);
    }

    if (root.contains("tol")) cfg.tol = double_value(root["tol"], "tol");
    if (root.contains("ode_tol")) cfg.ode_tol = double_value(root["ode_tol"], "ode_tol");
    if (!(cfg.tol > 0)) fail("tol: must be positive");
    if (!(cfg.ode_tol > 0)) fail("ode_tol: must be positive");

    if (root.contains("box")) {
        const json& b = root["box"];
        if (!b.is_array() || b.size() != 4) fail("box: expected [x_lo, x_hi, y_lo, y_hi]");
        std::array<double, 4> box;
        for (int i = 0; i < 4; ++i) box[i] = double_value(b[i], "box");
        if (!(box[0] < box[1]) || !(box[2] < box[3]))
            fail("box: bounds must satisfy x_lo < x_hi and y_lo < y_hi");
        cfg.box = box;
    }

    if (root.contains("out")) {
        if (!root["out"].is_string()) fail("out: expected a path string");
        cfg.out_path = root["out"].get<std::string>();
    }
    if (root.contains("svg")) {
        if (!root["svg"].is_string()) fail("svg: expected a path string");
        cfg.svg_path = root["svg"].get<std::string>();
    }
    if (root.contains("format")) {
        if (!root["format"].is_string()) fail("format: expected csv or json");
        cfg.format = root["format"].get<std::string>();
        if (cfg.format != "csv" && cfg.format != "json") fail("format: expected csv or json");
    }
    if (root.contains("zoom")) {
        if (!root["zoom"].is_boolean()) fail("zoom: expected a boolean");
        cfg.zoom = root["zoom"].get<bool>();
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read config file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

const PiecewiseSystem& config_system(const RunConfig& cfg) {
    if (cfg.system) return *cfg.system;
    return example_by_id(*cfg.example).system;
}

}  // namespace crosscycle
