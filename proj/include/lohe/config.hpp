#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cmat.hpp"

namespace lohe {

// Experiment description parsed from flat dotted-key text (one `key = value`
// per line, `#` comments). Defaults are applied here; variant-specific
// consistency is checked by validate().
struct RunConfig {
    // model
    int d1 = 0;
    int d2 = 0;
    int n_agents = 0;
    std::string variant = "generalized";  // generalized|full_rank2|frustrated_unitary|sphere

    // coupling
    double k01 = 0.0;
    double k10 = 0.0;
    double k00 = 0.0;
    double k11 = 0.0;

    // free flow
    std::string flow_kind = "zero";  // zero|left|bilateral|general|unitary_left
    bool has_flow_h = false, has_flow_b = false, has_flow_c = false;
    std::vector<cplx> flow_h, flow_b, flow_c;  // inline matrices, row-major
    std::string flow_tensor_path;
    double flow_scale = 0.0;
    std::uint64_t flow_seed = 101;

    // frustration
    bool has_lambda2 = false;
    std::vector<double> lambda2;  // diagonal of D (lambda_k^2 values)

    // init
    std::string init_kind = "random_normalized";  // haar_svd|random_normalized|file
    std::uint64_t seed = 1;
    double init_spread = -1.0;  // >= 0: cluster unitaries around a Haar anchor
    std::string init_path;

    // sim
    double dt = 1e-3;
    double t_end = 0.0;
    int sample_every = 100;
    bool renormalize = false;

    // output
    std::string out_path;
    std::string out_format = "csv";  // csv|json

    // Normalized key=value echo of the effective configuration.
    std::vector<std::pair<std::string, std::string>> echo() const;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline double parse_double(const std::string& key, int line, const std::string& v) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw parse_error("key '" + key + "' at line " + std::to_string(line) +
                          ": expected a real number, got '" + v + "'");
    }
    if (pos != v.size())
        throw parse_error("key '" + key + "' at line " + std::to_string(line) +
                          ": trailing characters in '" + v + "'");
    return out;
}

inline long long parse_int(const std::string& key, int line, const std::string& v) {
    std::size_t pos = 0;
    long long out = 0;
    try {
        out = std::stoll(v, &pos);
    } catch (const std::exception&) {
        throw parse_error("key '" + key + "' at line " + std::to_string(line) +
                          ": expected an integer, got '" + v + "'");
    }
    if (pos != v.size())
        throw parse_error("key '" + key + "' at line " + std::to_string(line) +
                          ": trailing characters in '" + v + "'");
    return out;
}

inline bool parse_bool(const std::string& key, int line, const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw parse_error("key '" + key + "' at line " + std::to_string(line) +
                      ": expected true or false, got '" + v + "'");
}

// Complex token: "1.5", "-2i", "1+2i", "0.5-0.25i", "i", "-i".
inline cplx parse_complex(const std::string& key, int line, std::string tok) {
    std::string s;
    for (char ch : tok)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s.empty())
        throw parse_error("key '" + key + "' at line " + std::to_string(line) +
                          ": empty complex entry");
    auto bad = [&]() -> parse_error {
        return parse_error("key '" + key + "' at line " + std::to_string(line) +
                           ": malformed complex entry '" + tok + "'");
    };
    auto coeff = [&](std::string c) -> double {
        if (c.empty() || c == "+") return 1.0;
        if (c == "-") return -1.0;
        std::size_t pos = 0;
        double out = 0.0;
        try {
            out = std::stod(c, &pos);
        } catch (const std::exception&) {
            throw bad();
        }
        if (pos != c.size()) throw bad();
        return out;
    };
    if (s.back() != 'i') return cplx(coeff(s), 0.0);
    s.pop_back();  // strip i
    // split at the last top-level +/- (not part of an exponent)
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return cplx(0.0, coeff(s));
    return cplx(coeff(s.substr(0, split)), coeff(s.substr(split)));
}

inline std::vector<cplx> parse_complex_list(const std::string& key, int line,
                                            const std::string& v) {
    std::vector<cplx> out;
    std::string item;
    std::stringstream ss(v);
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(key, line, trim(item)));
    if (out.empty())
        throw parse_error("key '" + key + "' at line " + std::to_string(line) + ": empty list");
    return out;
}

inline std::vector<double> parse_real_list(const std::string& key, int line,
                                           const std::string& v) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(v);
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, line, trim(item)));
    if (out.empty())
        throw parse_error("key '" + key + "' at line " + std::to_string(line) + ": empty list");
    return out;
}

inline std::string fmt_complex(const cplx& z) {
    return fmt_double(z.real()) + (z.imag() < 0 ? "" : "+") + fmt_double(z.imag()) + "i";
}

inline std::string fmt_complex_list(const std::vector<cplx>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += fmt_complex(v[i]);
    }
    return out;
}

inline std::string fmt_real_list(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += fmt_double(v[i]);
    }
    return out;
}

}  // namespace detail

inline const std::set<std::string>& known_config_keys() {
    static const std::set<std::string> keys = {
        "model.d1",           "model.d2",         "model.n_agents",   "model.variant",
        "coupling.k01",       "coupling.k10",     "coupling.k00",     "coupling.k11",
        "free_flow.kind",     "free_flow.h",      "free_flow.b",      "free_flow.c",
        "free_flow.tensor_path", "free_flow.scale", "free_flow.seed",
        "frustration.lambda2",
        "init.kind",          "init.seed",        "init.spread",      "init.path",
        "sim.dt",             "sim.t_end",        "sim.sample_every", "sim.renormalize",
        "output.path",        "output.format"};
    return keys;
}

// Variant-specific consistency checks on a parsed config.
inline void validate_config(const RunConfig& cfg) {
    auto fail = [](const std::string& msg) { throw validation_error("config: " + msg); };
    if (cfg.d1 < 1 || cfg.d2 < 1) fail("model.d1 and model.d2 must be >= 1");
    if (cfg.n_agents < 1) fail("model.n_agents must be >= 1");
    for (double k : {cfg.k01, cfg.k10, cfg.k00, cfg.k11})
        if (!(k >= 0.0) || !std::isfinite(k)) fail("coupling strengths must be finite and >= 0");
    if (!(cfg.dt > 0.0)) fail("sim.dt must be > 0");
    if (!(cfg.t_end > 0.0)) fail("sim.t_end must be > 0");
    if (cfg.dt > cfg.t_end) fail("sim.dt must not exceed sim.t_end");
    if (cfg.sample_every < 1) fail("sim.sample_every must be >= 1");
    if (cfg.variant != "generalized" && cfg.variant != "full_rank2" &&
        cfg.variant != "frustrated_unitary" && cfg.variant != "sphere")
        fail("unknown model.variant '" + cfg.variant + "'");
    if (cfg.flow_kind != "zero" && cfg.flow_kind != "left" && cfg.flow_kind != "bilateral" &&
        cfg.flow_kind != "general" && cfg.flow_kind != "unitary_left")
        fail("unknown free_flow.kind '" + cfg.flow_kind + "'");
    if (cfg.init_kind != "haar_svd" && cfg.init_kind != "random_normalized" &&
        cfg.init_kind != "file")
        fail("unknown init.kind '" + cfg.init_kind + "'");
    if (cfg.out_format != "csv" && cfg.out_format != "json")
        fail("output.format must be csv or json");

    if (cfg.variant == "generalized" && (cfg.k00 != 0.0 || cfg.k11 != 0.0))
        fail("variant generalized requires coupling.k00 = coupling.k11 = 0");
    if (cfg.variant == "frustrated_unitary") {
        if (!cfg.has_lambda2) fail("variant frustrated_unitary requires frustration.lambda2");
        if (static_cast<int>(cfg.lambda2.size()) != cfg.d1)
            fail("frustration.lambda2 must list d1 values");
        if (cfg.d1 != cfg.d2) fail("variant frustrated_unitary requires d1 = d2");
        if (cfg.flow_kind != "zero" && cfg.flow_kind != "unitary_left")
            fail("variant frustrated_unitary takes free_flow.kind zero or unitary_left");
        if (cfg.init_kind == "random_normalized")
            fail("variant frustrated_unitary requires unitary initial data (init.kind haar_svd or file)");
    }
    if (cfg.variant == "sphere") {
        if (cfg.d2 != 1) fail("variant sphere requires model.d2 = 1");
        if (cfg.flow_kind != "zero" && cfg.flow_kind != "unitary_left")
            fail("variant sphere takes free_flow.kind zero or unitary_left");
    }
    if (cfg.has_lambda2)
        for (double v : cfg.lambda2)
            if (!(v >= 0.0)) fail("frustration.lambda2 entries must be >= 0");
    if (cfg.init_kind == "haar_svd" && cfg.variant != "frustrated_unitary" && !cfg.has_lambda2)
        fail("init.kind haar_svd requires frustration.lambda2");
    if (cfg.init_kind == "file" && cfg.init_path.empty())
        fail("init.kind file requires init.path");
    if (cfg.flow_kind == "left" && !cfg.has_flow_h && cfg.flow_scale <= 0.0)
        fail("free_flow.kind left requires free_flow.h or free_flow.scale > 0");
    if (cfg.flow_kind == "bilateral" && (!cfg.has_flow_b || !cfg.has_flow_c) &&
        cfg.flow_scale <= 0.0)
        fail("free_flow.kind bilateral requires free_flow.b and free_flow.c, or free_flow.scale > 0");
    if (cfg.flow_kind == "general" && cfg.flow_tensor_path.empty() && cfg.flow_scale <= 0.0)
        fail("free_flow.kind general requires free_flow.tensor_path or free_flow.scale > 0");
    if (cfg.flow_kind == "unitary_left" && !cfg.has_flow_b && cfg.flow_scale <= 0.0)
        fail("free_flow.kind unitary_left requires free_flow.b or free_flow.scale > 0");
}

inline RunConfig parse_config(const std::string& text) {
    std::map<std::string, std::pair<int, std::string>> kv;  // key -> (line, value)
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool saw_d1 = false, saw_d2 = false, saw_n = false, saw_k01 = false, saw_tend = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (!known_config_keys().count(key))
            throw parse_error("unknown key '" + key + "' at line " + std::to_string(line_no));
        if (kv.count(key))
            throw parse_error("duplicate key '" + key + "' at line " + std::to_string(line_no) +
                              " (first set at line " + std::to_string(kv[key].first) + ")");
        kv[key] = {line_no, value};
    }

    RunConfig cfg;
    auto take = [&](const std::string& key, auto&& apply) {
        auto it = kv.find(key);
        if (it == kv.end()) return false;
        apply(it->second.first, it->second.second);
        return true;
    };
    using detail::parse_bool;
    using detail::parse_complex_list;
    using detail::parse_double;
    using detail::parse_int;
    using detail::parse_real_list;

    saw_d1 = take("model.d1", [&](int l, const std::string& v) {
        cfg.d1 = static_cast<int>(parse_int("model.d1", l, v));
    });
    saw_d2 = take("model.d2", [&](int l, const std::string& v) {
        cfg.d2 = static_cast<int>(parse_int("model.d2", l, v));
    });
    saw_n = take("model.n_agents", [&](int l, const std::string& v) {
        cfg.n_agents = static_cast<int>(parse_int("model.n_agents", l, v));
    });
    take("model.variant", [&](int, const std::string& v) { cfg.variant = v; });
    saw_k01 = take("coupling.k01", [&](int l, const std::string& v) {
        cfg.k01 = parse_double("coupling.k01", l, v);
    });
    take("coupling.k10",
         [&](int l, const std::string& v) { cfg.k10 = parse_double("coupling.k10", l, v); });
    take("coupling.k00",
         [&](int l, const std::string& v) { cfg.k00 = parse_double("coupling.k00", l, v); });
    take("coupling.k11",
         [&](int l, const std::string& v) { cfg.k11 = parse_double("coupling.k11", l, v); });
    take("free_flow.kind", [&](int, const std::string& v) { cfg.flow_kind = v; });
    cfg.has_flow_h = take("free_flow.h", [&](int l, const std::string& v) {
        cfg.flow_h = parse_complex_list("free_flow.h", l, v);
    });
    cfg.has_flow_b = take("free_flow.b", [&](int l, const std::string& v) {
        cfg.flow_b = parse_complex_list("free_flow.b", l, v);
    });
    cfg.has_flow_c = take("free_flow.c", [&](int l, const std::string& v) {
        cfg.flow_c = parse_complex_list("free_flow.c", l, v);
    });
    take("free_flow.tensor_path",
         [&](int, const std::string& v) { cfg.flow_tensor_path = v; });
    take("free_flow.scale", [&](int l, const std::string& v) {
        cfg.flow_scale = parse_double("free_flow.scale", l, v);
    });
    take("free_flow.seed", [&](int l, const std::string& v) {
        cfg.flow_seed = static_cast<std::uint64_t>(parse_int("free_flow.seed", l, v));
    });
    cfg.has_lambda2 = take("frustration.lambda2", [&](int l, const std::string& v) {
        cfg.lambda2 = parse_real_list("frustration.lambda2", l, v);
    });
    take("init.kind", [&](int, const std::string& v) { cfg.init_kind = v; });
    take("init.seed", [&](int l, const std::string& v) {
        cfg.seed = static_cast<std::uint64_t>(parse_int("init.seed", l, v));
    });
    take("init.spread", [&](int l, const std::string& v) {
        cfg.init_spread = parse_double("init.spread", l, v);
    });
    take("init.path", [&](int, const std::string& v) { cfg.init_path = v; });
    take("sim.dt", [&](int l, const std::string& v) { cfg.dt = parse_double("sim.dt", l, v); });
    saw_tend = take("sim.t_end", [&](int l, const std::string& v) {
        cfg.t_end = parse_double("sim.t_end", l, v);
    });
    take("sim.sample_every", [&](int l, const std::string& v) {
        cfg.sample_every = static_cast<int>(parse_int("sim.sample_every", l, v));
    });
    take("sim.renormalize", [&](int l, const std::string& v) {
        cfg.renormalize = parse_bool("sim.renormalize", l, v);
    });
    take("output.path", [&](int, const std::string& v) { cfg.out_path = v; });
    take("output.format", [&](int, const std::string& v) { cfg.out_format = v; });

    for (const auto& [name, seen] :
         std::initializer_list<std::pair<const char*, bool>>{{"model.d1", saw_d1},
                                                              {"model.d2", saw_d2},
                                                              {"model.n_agents", saw_n},
                                                              {"coupling.k01", saw_k01},
                                                              {"sim.t_end", saw_tend}})
        if (!seen) throw parse_error(std::string("missing required key '") + name + "'");

    validate_config(cfg);
    return cfg;
}

inline std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
    using detail::fmt_double;
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("model.d1", std::to_string(d1));
    out.emplace_back("model.d2", std::to_string(d2));
    out.emplace_back("model.n_agents", std::to_string(n_agents));
    out.emplace_back("model.variant", variant);
    out.emplace_back("coupling.k01", fmt_double(k01));
    out.emplace_back("coupling.k10", fmt_double(k10));
    out.emplace_back("coupling.k00", fmt_double(k00));
    out.emplace_back("coupling.k11", fmt_double(k11));
    out.emplace_back("free_flow.kind", flow_kind);
    if (has_flow_h) out.emplace_back("free_flow.h", detail::fmt_complex_list(flow_h));
    if (has_flow_b) out.emplace_back("free_flow.b", detail::fmt_complex_list(flow_b));
    if (has_flow_c) out.emplace_back("free_flow.c", detail::fmt_complex_list(flow_c));
    if (!flow_tensor_path.empty()) out.emplace_back("free_flow.tensor_path", flow_tensor_path);
    if (flow_scale != 0.0) out.emplace_back("free_flow.scale", fmt_double(flow_scale));
    out.emplace_back("free_flow.seed", std::to_string(flow_seed));
    if (has_lambda2) out.emplace_back("frustration.lambda2", detail::fmt_real_list(lambda2));
    out.emplace_back("init.kind", init_kind);
    out.emplace_back("init.seed", std::to_string(seed));
    if (init_spread >= 0.0) out.emplace_back("init.spread", fmt_double(init_spread));
    if (!init_path.empty()) out.emplace_back("init.path", init_path);
    out.emplace_back("sim.dt", fmt_double(dt));
    out.emplace_back("sim.t_end", fmt_double(t_end));
    out.emplace_back("sim.sample_every", std::to_string(sample_every));
    out.emplace_back("sim.renormalize", renormalize ? "true" : "false");
    if (!out_path.empty()) out.emplace_back("output.path", out_path);
    out.emplace_back("output.format", out_format);
    return out;
}

}  // namespace lohe
