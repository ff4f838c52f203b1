#include "polscat/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace polscat {

using nlohmann::json;

std::string configuration_name(Configuration c) {
    switch (c) {
        case Configuration::LinPerpLin: return "lin_perp_lin";
        case Configuration::SigmaPlusMinus: return "sigma_plus_minus";
        case Configuration::Custom: return "custom";
    }
    return "?";
}

std::vector<double> GridSpec::points() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        out.push_back(min);
        return out;
    }
    const double step = (max - min) / (endpoint ? (count - 1) : count);
    for (int i = 0; i < count; ++i) out.push_back(min + step * i);
    return out;
}

LevelScheme Scenario::scheme() const {
    return LevelScheme(j_ground, j_excited, zeta0, Complex(0.0, dzeta0_dk_imag));
}

namespace {

class Validator {
public:
    std::vector<std::string> errors;

    void fail(const std::string& msg) { errors.push_back(msg); }

    // Rejects keys outside `allowed`, naming each offender.
    void check_keys(const json& obj, const std::string& where,
                    const std::set<std::string>& allowed) {
        for (const auto& item : obj.items()) {
            if (!allowed.count(item.key()))
                fail("unknown key: " + (where.empty() ? "" : where + ".") + item.key());
        }
    }

    // `key` is the bare member name; `where` only labels error messages.
    double number(const json& obj, const std::string& where, const std::string& key,
                  double fallback) {
        if (!obj.contains(key)) return fallback;
        const json& v = obj.at(key);
        if (!v.is_number()) {
            fail(where_key(where, key) + " must be a number");
            return fallback;
        }
        double d = v.get<double>();
        if (!std::isfinite(d)) {
            fail(where_key(where, key) + " must be finite");
            return fallback;
        }
        return d;
    }

    Complex complex_number(const json& obj, const std::string& where, const std::string& key,
                           Complex fallback) {
        if (!obj.contains(key)) return fallback;
        const json& v = obj.at(key);
        if (v.is_number()) return Complex(v.get<double>(), 0.0);
        if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
            return Complex(v[0].get<double>(), v[1].get<double>());
        fail(where_key(where, key) + " must be a number or [re, im]");
        return fallback;
    }

    static std::string where_key(const std::string& where, const std::string& key) {
        return where.empty() ? key : where + "." + key;
    }
};

GridSpec parse_grid(Validator& v, const json& obj, const std::string& where,
                    const GridSpec& fallback) {
    v.check_keys(obj, where, {"count", "min", "max", "endpoint"});
    GridSpec g = fallback;
    if (obj.contains("count")) {
        if (!obj.at("count").is_number_integer() || obj.at("count").get<long long>() < 1)
            v.fail(where + ".count must be a positive integer");
        else
            g.count = obj.at("count").get<int>();
    }
    g.min = v.number(obj, where, "min", g.min);
    g.max = v.number(obj, where, "max", g.max);
    if (obj.contains("endpoint")) {
        if (!obj.at("endpoint").is_boolean())
            v.fail(where + ".endpoint must be a boolean");
        else
            g.endpoint = obj.at("endpoint").get<bool>();
    }
    if (g.min > g.max) v.fail(where + ": min must not exceed max");
    return g;
}

Element parse_element(Validator& v, const json& obj, const std::string& where) {
    if (!obj.is_object() || !obj.contains("kind") || !obj.at("kind").is_string()) {
        v.fail(where + ": element needs a string 'kind'");
        return Element::gap(0.0, 0.0);
    }
    const std::string kind = obj.at("kind").get<std::string>();
    const double pos = v.number(obj, where, "position", 0.0);
    if (!obj.contains("position")) v.fail(where + ".position is required");

    try {
        if (kind == "atom") {
            v.check_keys(obj, where, {"kind", "position"});
            return Element::atom(pos);
        }
        if (kind == "mirror") {
            v.check_keys(obj, where, {"kind", "position", "reflectivity"});
            Complex r = v.complex_number(obj, where, "reflectivity", Complex(-1.0, 0.0));
            return Element::mirror(pos, r);
        }
        if (kind == "waveplate") {
            v.check_keys(obj, where, {"kind", "position", "retardance", "axis_angle"});
            return Element::waveplate(pos, v.number(obj, where, "retardance", 0.0),
                                      v.number(obj, where, "axis_angle", 0.0));
        }
        if (kind == "rotator") {
            v.check_keys(obj, where, {"kind", "position", "angle"});
            return Element::rotator(pos, v.number(obj, where, "angle", 0.0));
        }
        if (kind == "gap") {
            v.check_keys(obj, where, {"kind", "position", "length"});
            return Element::gap(pos, v.number(obj, where, "length", 0.0));
        }
    } catch (const Error& e) {
        v.fail(where + ": " + e.what());
        return Element::gap(pos, 0.0);
    }
    v.fail(where + ".kind must be one of atom, mirror, waveplate, rotator, gap");
    return Element::gap(pos, 0.0);
}

Eigen::Vector2cd parse_jones(Validator& v, const json& obj, const std::string& where,
                             const Eigen::Vector2cd& fallback) {
    v.check_keys(obj, where, {"mu", "nu"});
    Eigen::Vector2cd out = fallback;
    out(0) = v.complex_number(obj, where, "mu", fallback(0));
    out(1) = v.complex_number(obj, where, "nu", fallback(1));
    return out;
}

}  // namespace

ParseResult parse_scenario(const std::string& text) {
    ParseResult result;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        result.errors.push_back(std::string("not valid JSON: ") + e.what());
        return result;
    }
    if (!doc.is_object()) {
        result.errors.push_back("scenario document must be a JSON object");
        return result;
    }

    Validator v;
    Scenario s;

    v.check_keys(doc, "",
                 {"schema_version", "configuration", "scheme", "beam_amplitude", "wavenumber",
                  "tau_p", "x_grid", "v_grid", "elements", "inputs"});

    if (!doc.contains("schema_version") || !doc.at("schema_version").is_number_integer())
        v.fail("schema_version is required and must be an integer");
    else if (doc.at("schema_version").get<int>() != 1)
        v.fail("schema_version must be 1 (legal range: 1)");

    std::string config = "lin_perp_lin";
    if (doc.contains("configuration")) {
        if (!doc.at("configuration").is_string())
            v.fail("configuration must be a string");
        else
            config = doc.at("configuration").get<std::string>();
    }
    if (config == "lin_perp_lin") {
        s.configuration = Configuration::LinPerpLin;
        s.j_ground = 0.5;
        s.j_excited = 1.5;
    } else if (config == "sigma_plus_minus") {
        s.configuration = Configuration::SigmaPlusMinus;
        s.j_ground = 1.0;
        s.j_excited = 2.0;
    } else if (config == "custom") {
        s.configuration = Configuration::Custom;
        s.j_ground = 0.5;
        s.j_excited = 1.5;
    } else {
        v.fail("configuration must be one of lin_perp_lin, sigma_plus_minus, custom");
    }

    if (doc.contains("scheme")) {
        const json& sch = doc.at("scheme");
        if (!sch.is_object()) {
            v.fail("scheme must be an object");
        } else {
            v.check_keys(sch, "scheme", {"j_ground", "j_excited", "zeta0", "dzeta0_dk_imag"});
            s.j_ground = v.number(sch, "scheme", "j_ground", s.j_ground);
            s.j_excited = v.number(sch, "scheme", "j_excited", s.j_excited);
            s.zeta0 = v.complex_number(sch, "scheme", "zeta0", s.zeta0);
            s.dzeta0_dk_imag = v.number(sch, "scheme", "dzeta0_dk_imag", s.dzeta0_dk_imag);
        }
    }

    s.beam_amplitude = v.number(doc, "", "beam_amplitude", 1.0);
    s.wavenumber = v.number(doc, "", "wavenumber", 1.0);
    s.tau_p = v.number(doc, "", "tau_p", 1.0);
    if (!(s.beam_amplitude > 0.0)) v.fail("beam_amplitude must be positive");
    if (!(s.wavenumber > 0.0)) v.fail("wavenumber must be positive");
    if (!(s.tau_p > 0.0)) v.fail("tau_p must be positive");

    // Defaults: one spatial period of sin(4kx); velocities with
    // k v tau_p in [-0.1, 0.1].
    s.x_grid = GridSpec{64, 0.0, std::numbers::pi, false};
    const double v_edge =
        (s.wavenumber > 0.0 && s.tau_p > 0.0) ? 0.1 / (s.wavenumber * s.tau_p) : 0.1;
    s.v_grid = GridSpec{21, -v_edge, v_edge, true};

    if (doc.contains("x_grid")) {
        if (!doc.at("x_grid").is_object())
            v.fail("x_grid must be an object");
        else
            s.x_grid = parse_grid(v, doc.at("x_grid"), "x_grid", s.x_grid);
    }
    if (doc.contains("v_grid")) {
        if (!doc.at("v_grid").is_object())
            v.fail("v_grid must be an object");
        else
            s.v_grid = parse_grid(v, doc.at("v_grid"), "v_grid", s.v_grid);
    }

    if (s.configuration == Configuration::Custom) {
        if (!doc.contains("elements") || !doc.at("elements").is_array() ||
            doc.at("elements").empty()) {
            v.fail("custom configuration requires a non-empty 'elements' array");
        } else {
            const json& els = doc.at("elements");
            int atoms = 0;
            for (std::size_t i = 0; i < els.size(); ++i) {
                Element e = parse_element(v, els[i], "elements[" + std::to_string(i) + "]");
                if (e.is_atom()) ++atoms;
                s.elements.push_back(e);
            }
            if (atoms != 1) v.fail("custom configuration requires exactly one atom element");
        }
        if (doc.contains("inputs")) {
            if (!doc.at("inputs").is_object()) {
                v.fail("inputs must be an object");
            } else {
                v.check_keys(doc.at("inputs"), "inputs", {"b", "c"});
                if (doc.at("inputs").contains("b"))
                    s.input_b = parse_jones(v, doc.at("inputs").at("b"), "inputs.b", s.input_b);
                if (doc.at("inputs").contains("c"))
                    s.input_c = parse_jones(v, doc.at("inputs").at("c"), "inputs.c", s.input_c);
            }
        }
    } else {
        if (doc.contains("elements")) v.fail("elements is only valid with configuration=custom");
        if (doc.contains("inputs")) v.fail("inputs is only valid with configuration=custom");
    }

    // The scheme constructor enforces the angular-momentum rules; reuse it.
    if (v.errors.empty()) {
        try {
            (void)s.scheme();
        } catch (const Error& e) {
            v.fail(std::string("scheme: ") + e.what());
        }
    }

    result.errors = v.errors;
    if (result.errors.empty()) result.scenario = s;
    return result;
}

namespace {

json grid_json(const GridSpec& g) {
    return json{{"count", g.count}, {"min", g.min}, {"max", g.max}, {"endpoint", g.endpoint}};
}

}  // namespace

std::string Scenario::canonical_json() const {
    json doc;
    doc["schema_version"] = schema_version;
    doc["configuration"] = configuration_name(configuration);
    doc["scheme"] = {{"j_ground", j_ground},
                     {"j_excited", j_excited},
                     {"zeta0", {zeta0.real(), zeta0.imag()}},
                     {"dzeta0_dk_imag", dzeta0_dk_imag}};
    doc["beam_amplitude"] = beam_amplitude;
    doc["wavenumber"] = wavenumber;
    doc["tau_p"] = tau_p;
    doc["x_grid"] = grid_json(x_grid);
    doc["v_grid"] = grid_json(v_grid);
    if (configuration == Configuration::Custom) {
        json els = json::array();
        for (const auto& e : elements) {
            json je{{"kind", e.kind_name()}, {"position", e.position}};
            if (auto* m = std::get_if<Element::Mirror>(&e.params))
                je["reflectivity"] = {m->r_mu.real(), m->r_mu.imag()};
            if (auto* w = std::get_if<Element::Waveplate>(&e.params)) {
                je["retardance"] = w->retardance;
                je["axis_angle"] = w->axis_angle;
            }
            if (auto* r = std::get_if<Element::Rotator>(&e.params)) je["angle"] = r->angle;
            if (auto* g = std::get_if<Element::Gap>(&e.params)) je["length"] = g->length;
            els.push_back(je);
        }
        doc["elements"] = els;
        doc["inputs"] = {{"b", {input_b(0).real(), input_b(0).imag(), input_b(1).real(),
                                input_b(1).imag()}},
                         {"c", {input_c(0).real(), input_c(0).imag(), input_c(1).real(),
                                input_c(1).imag()}}};
    }
    return doc.dump();
}

}  // namespace polscat
