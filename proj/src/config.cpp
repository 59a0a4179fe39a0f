#include "cll/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cll/io.hpp"

namespace cll {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

using SectionMap = std::map<std::string, std::map<std::string, std::string>>;

SectionMap parse_sections(std::istream& is) {
    SectionMap sections;
    std::string line;
    std::string current;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t cut = line.find_first_of("#;");
        if (cut != std::string::npos) line.erase(cut);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": unterminated section header");
            }
            current = trim(line.substr(1, line.size() - 2));
            if (current.empty()) {
                throw ConfigError("config line " + std::to_string(lineno) + ": empty section name");
            }
            sections[current];
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        if (current.empty()) {
            throw ConfigError("config line " + std::to_string(lineno) + ": key outside a section");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        }
        if (!sections[current].emplace(key, value).second) {
            throw ConfigError("config: duplicate key '" + key + "' in [" + current + "]");
        }
    }
    return sections;
}

// Tracks key consumption per section so leftover (misspelled) keys are
// reported by name.
class Resolver {
public:
    explicit Resolver(SectionMap sections) : sections_(std::move(sections)) {}

    bool has_section(const std::string& s) const { return sections_.count(s) > 0; }

    bool has(const std::string& s, const std::string& k) const {
        auto it = sections_.find(s);
        return it != sections_.end() && it->second.count(k) > 0;
    }

    std::string get_string(const std::string& s, const std::string& k) {
        auto sec = sections_.find(s);
        if (sec == sections_.end() || sec->second.find(k) == sec->second.end()) {
            throw ConfigError("config: missing required key '" + k + "' in [" + s + "]");
        }
        used_[s].insert(k);
        return sec->second.at(k);
    }

    std::string get_string(const std::string& s, const std::string& k, const std::string& dflt) {
        return has(s, k) ? get_string(s, k) : dflt;
    }

    double get_double(const std::string& s, const std::string& k) {
        return parse_double(s, k, get_string(s, k));
    }

    double get_double(const std::string& s, const std::string& k, double dflt) {
        return has(s, k) ? get_double(s, k) : dflt;
    }

    int get_int(const std::string& s, const std::string& k) {
        const std::string v = get_string(s, k);
        try {
            std::size_t pos = 0;
            const int out = std::stoi(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return out;
        } catch (const std::exception&) {
            throw ConfigError("config: [" + s + "] " + k + " = '" + v + "' is not an integer");
        }
    }

    int get_int(const std::string& s, const std::string& k, int dflt) {
        return has(s, k) ? get_int(s, k) : dflt;
    }

    std::vector<double> get_double_list(const std::string& s, const std::string& k) {
        std::vector<double> out;
        for (const std::string& item : split_list(get_string(s, k))) {
            out.push_back(parse_double(s, k, item));
        }
        if (out.empty()) throw ConfigError("config: [" + s + "] " + k + " is an empty list");
        return out;
    }

    std::vector<int> get_int_list(const std::string& s, const std::string& k) {
        std::vector<int> out;
        for (double v : get_double_list(s, k)) {
            const int i = static_cast<int>(v);
            if (static_cast<double>(i) != v) {
                throw ConfigError("config: [" + s + "] " + k + " must list integers");
            }
            out.push_back(i);
        }
        return out;
    }

    void check_exhausted() const {
        for (const auto& [sec, keys] : sections_) {
            auto used = used_.find(sec);
            for (const auto& [key, value] : keys) {
                if (used == used_.end() || used->second.count(key) == 0) {
                    throw ConfigError("config: unknown key '" + key + "' in [" + sec + "]");
                }
            }
        }
    }

private:
    static std::vector<std::string> split_list(const std::string& v) {
        std::vector<std::string> out;
        std::string item;
        std::istringstream is(v);
        while (std::getline(is, item, ',')) out.push_back(trim(item));
        return out;
    }

    double parse_double(const std::string& s, const std::string& k, const std::string& v) {
        try {
            std::size_t pos = 0;
            const double out = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return out;
        } catch (const std::exception&) {
            throw ConfigError("config: [" + s + "] " + k + " = '" + v + "' is not a number");
        }
    }

    SectionMap sections_;
    std::map<std::string, std::set<std::string>> used_;
};

PhaseFunction load_theta(const std::string& form, double c0, double c1,
                         const std::string& file) {
    if (form == "constant") return PhaseFunction::constant(c0);
    if (form == "linear") return PhaseFunction::linear(c0, c1);
    if (form == "spline") {
        std::ifstream is(file);
        if (!is) throw ConfigError("config: cannot open theta_file '" + file + "'");
        std::vector<double> s, th;
        std::string line;
        while (std::getline(is, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            std::istringstream row(line);
            double a, b;
            if (!(row >> a >> b)) throw ConfigError("theta_file: malformed row '" + line + "'");
            s.push_back(a);
            th.push_back(b);
        }
        try {
            return PhaseFunction::spline(std::move(s), std::move(th));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: theta_file: ") + e.what());
        }
    }
    throw ConfigError("config: [soliton] theta = '" + form +
                      "' (expected constant, linear, or spline)");
}

}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file '" + path + "'");
    Resolver r(parse_sections(is));
    RunConfig cfg;

    // [model]
    cfg.preset = r.get_string("model", "preset", "eq3");
    if (cfg.preset == "eq1" || cfg.preset == "eq3") {
        cfg.a = r.get_double("model", "a");
        cfg.b = r.get_double("model", "b");
        cfg.params = cfg.preset == "eq1" ? ModelParams::from_eq1(cfg.a, cfg.b)
                                         : ModelParams::from_eq3(cfg.a, cfg.b);
    } else if (cfg.preset == "custom") {
        const Complex alpha{r.get_double("model", "alpha_re", 0.0),
                            r.get_double("model", "alpha_im", 0.0)};
        const Complex beta{r.get_double("model", "beta_re", 0.0),
                           r.get_double("model", "beta_im", 0.0)};
        try {
            cfg.params = ModelParams::custom(alpha, beta);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: [model] ") + e.what());
        }
    } else {
        throw ConfigError("config: [model] preset = '" + cfg.preset +
                          "' (expected eq1, eq3, or custom)");
    }

    // [grid]
    try {
        cfg.grid = make_grid(r.get_double("grid", "x0"), r.get_double("grid", "length"),
                             r.get_int("grid", "n"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: [grid] ") + e.what());
    }

    // [initial]
    if (r.has_section("initial")) {
        cfg.has_initial = true;
        cfg.profile = r.get_string("initial", "profile");
        if (cfg.profile == "constant") {
            cfg.const_re = r.get_double("initial", "value_re");
            cfg.const_im = r.get_double("initial", "value_im", 0.0);
        } else if (cfg.profile == "plane_wave") {
            cfg.pw_amplitude = r.get_double("initial", "amplitude");
            cfg.pw_mode = r.get_int("initial", "mode");
        } else if (cfg.profile == "sech_profile") {
            cfg.sp_gamma = r.get_double("initial", "gamma");
            cfg.sp_eta = r.get_double("initial", "eta");
            cfg.sp_lambda = r.get_double("initial", "lambda");
            cfg.sp_k = r.get_double("initial", "k", 0.0);
            cfg.sp_sign = r.get_int("initial", "sign", +1);
            if (cfg.sp_sign != 1 && cfg.sp_sign != -1) {
                throw ConfigError("config: [initial] sign must be +1 or -1");
            }
        } else if (cfg.profile == "soliton") {
            // parameters resolved from [soliton] below
        } else if (cfg.profile == "file") {
            cfg.file_path = r.get_string("initial", "path");
        } else {
            throw ConfigError("config: [initial] profile = '" + cfg.profile +
                              "' (expected constant, plane_wave, sech_profile, soliton, or file)");
        }
    }

    // [series]
    if (r.has_section("series")) {
        cfg.has_series = true;
        cfg.order = r.get_int("series", "order");
        if (cfg.order < 0) throw ConfigError("config: [series] order must be nonnegative");
    }

    // [integrator]
    if (r.has_section("integrator")) {
        cfg.has_integrator = true;
        cfg.integrator.dt = r.get_double("integrator", "dt");
        cfg.integrator.t_end = r.get_double("integrator", "t_end");
        cfg.integrator.store_every = r.get_int("integrator", "store_every", 1);
        cfg.integrator.c_stab = r.get_double("integrator", "c_stab", 0.2);
        if (cfg.integrator.dt <= 0.0) throw ConfigError("config: [integrator] dt must be > 0");
        if (cfg.integrator.t_end < 0.0) {
            throw ConfigError("config: [integrator] t_end must be >= 0");
        }
    }

    // [analysis]
    if (r.has_section("analysis")) {
        if (r.has("analysis", "times")) cfg.times = r.get_double_list("analysis", "times");
        if (r.has("analysis", "orders")) cfg.orders = r.get_int_list("analysis", "orders");
        cfg.tail_window = r.get_int("analysis", "tail_window", 4);
        if (cfg.tail_window < 3) {
            throw ConfigError("config: [analysis] tail_window must be >= 3");
        }
    }

    // [oracle]
    if (r.has_section("oracle")) {
        cfg.dt_fd = r.get_double("oracle", "dt_fd", 1e-3);
        cfg.oracle_max_order = r.get_int("oracle", "max_order", 4);
        if (cfg.dt_fd <= 0.0) throw ConfigError("config: [oracle] dt_fd must be > 0");
        if (cfg.oracle_max_order < 1 || cfg.oracle_max_order > 4) {
            throw ConfigError("config: [oracle] max_order must lie in 1..4");
        }
    }

    // [soliton]
    if (r.has_section("soliton")) {
        cfg.has_soliton = true;
        SolitonSpec& s = cfg.soliton;
        s.gamma = r.get_double("soliton", "gamma");
        s.eta = r.get_double("soliton", "eta");
        s.lambda = r.get_double("soliton", "lambda");
        s.nu = r.get_double("soliton", "nu", 0.0);
        s.omega = r.get_double("soliton", "omega", 0.0);
        s.k = r.get_double("soliton", "k", 0.0);
        s.sign = r.get_int("soliton", "sign", +1);
        s.B = r.get_double("soliton", "B", 0.0);
        if (s.sign != 1 && s.sign != -1) {
            throw ConfigError("config: [soliton] sign must be +1 or -1");
        }
        cfg.theta_form = r.get_string("soliton", "theta", "constant");
        cfg.theta_c0 = r.get_double("soliton", "theta_c0", 0.0);
        cfg.theta_c1 = r.get_double("soliton", "theta_c1", 0.0);
        cfg.theta_file = r.get_string("soliton", "theta_file", "");
        s.theta = load_theta(cfg.theta_form, cfg.theta_c0, cfg.theta_c1, cfg.theta_file);
        cfg.residual_t = r.get_double("soliton", "residual_t", 0.0);
        cfg.residual_dt_fd = r.get_double("soliton", "residual_dt_fd", 1e-4);
        if (cfg.residual_dt_fd <= 0.0) {
            throw ConfigError("config: [soliton] residual_dt_fd must be > 0");
        }
    }
    if (cfg.has_initial && cfg.profile == "soliton" && !cfg.has_soliton) {
        throw ConfigError("config: [initial] profile = soliton requires a [soliton] section");
    }

    r.check_exhausted();
    return cfg;
}

std::string render_config(const RunConfig& cfg) {
    std::ostringstream os;
    auto num = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    os << "[model]\n";
    os << "preset = " << cfg.preset << "\n";
    if (cfg.preset != "custom") {
        os << "a = " << num(cfg.a) << "\n";
        os << "b = " << num(cfg.b) << "\n";
    }
    os << "alpha = " << num(cfg.params.alpha.real()) << " + " << num(cfg.params.alpha.imag())
       << "i\n";
    os << "beta = " << num(cfg.params.beta.real()) << " + " << num(cfg.params.beta.imag())
       << "i\n";
    os << "[grid]\n";
    os << "x0 = " << num(cfg.grid.x0) << "\n";
    os << "length = " << num(cfg.grid.length) << "\n";
    os << "n = " << cfg.grid.n << "\n";
    if (cfg.has_initial) {
        os << "[initial]\n";
        os << "profile = " << cfg.profile << "\n";
        if (cfg.profile == "constant") {
            os << "value_re = " << num(cfg.const_re) << "\n";
            os << "value_im = " << num(cfg.const_im) << "\n";
        } else if (cfg.profile == "plane_wave") {
            os << "amplitude = " << num(cfg.pw_amplitude) << "\n";
            os << "mode = " << cfg.pw_mode << "\n";
        } else if (cfg.profile == "sech_profile") {
            os << "gamma = " << num(cfg.sp_gamma) << "\n";
            os << "eta = " << num(cfg.sp_eta) << "\n";
            os << "lambda = " << num(cfg.sp_lambda) << "\n";
            os << "k = " << num(cfg.sp_k) << "\n";
            os << "sign = " << cfg.sp_sign << "\n";
        } else if (cfg.profile == "file") {
            os << "path = " << cfg.file_path << "\n";
        }
    }
    if (cfg.has_series) {
        os << "[series]\n";
        os << "order = " << cfg.order << "\n";
    }
    if (cfg.has_integrator) {
        os << "[integrator]\n";
        os << "dt = " << num(cfg.integrator.dt) << "\n";
        os << "t_end = " << num(cfg.integrator.t_end) << "\n";
        os << "store_every = " << cfg.integrator.store_every << "\n";
        os << "c_stab = " << num(cfg.integrator.c_stab) << "\n";
    }
    os << "[analysis]\n";
    os << "times =";
    for (std::size_t i = 0; i < cfg.times.size(); ++i) {
        os << (i ? ", " : " ") << num(cfg.times[i]);
    }
    os << "\n";
    if (!cfg.orders.empty()) {
        os << "orders =";
        for (std::size_t i = 0; i < cfg.orders.size(); ++i) {
            os << (i ? ", " : " ") << cfg.orders[i];
        }
        os << "\n";
    }
    os << "tail_window = " << cfg.tail_window << "\n";
    os << "[oracle]\n";
    os << "dt_fd = " << num(cfg.dt_fd) << "\n";
    os << "max_order = " << cfg.oracle_max_order << "\n";
    if (cfg.has_soliton) {
        os << "[soliton]\n";
        os << "gamma = " << num(cfg.soliton.gamma) << "\n";
        os << "eta = " << num(cfg.soliton.eta) << "\n";
        os << "lambda = " << num(cfg.soliton.lambda) << "\n";
        os << "nu = " << num(cfg.soliton.nu) << "\n";
        os << "omega = " << num(cfg.soliton.omega) << "\n";
        os << "k = " << num(cfg.soliton.k) << "\n";
        os << "sign = " << cfg.soliton.sign << "\n";
        os << "B = " << num(cfg.soliton.B) << "\n";
        os << "theta = " << cfg.theta_form << "\n";
        if (cfg.theta_form == "constant" || cfg.theta_form == "linear") {
            os << "theta_c0 = " << num(cfg.theta_c0) << "\n";
        }
        if (cfg.theta_form == "linear") os << "theta_c1 = " << num(cfg.theta_c1) << "\n";
        if (cfg.theta_form == "spline") os << "theta_file = " << cfg.theta_file << "\n";
        os << "residual_t = " << num(cfg.residual_t) << "\n";
        os << "residual_dt_fd = " << num(cfg.residual_dt_fd) << "\n";
    }
    return os.str();
}

ComplexField make_initial_condition(const RunConfig& cfg) {
    if (!cfg.has_initial) {
        throw ConfigError("config: this subcommand requires an [initial] section");
    }
    const GridSpec& g = cfg.grid;
    if (cfg.profile == "constant") {
        return ComplexField(g, Complex{cfg.const_re, cfg.const_im});
    }
    if (cfg.profile == "plane_wave") {
        const double kappa = cfg.pw_mode * g.fundamental_wavenumber();
        const double amp = cfg.pw_amplitude;
        return sample_complex(g, [&](double x) { return std::polar(amp, kappa * x); });
    }
    if (cfg.profile == "sech_profile") {
        SolitonSpec s;
        s.gamma = cfg.sp_gamma;
        s.eta = cfg.sp_eta;
        s.lambda = cfg.sp_lambda;
        s.k = cfg.sp_k;
        s.sign = cfg.sp_sign;
        try {
            return soliton_eval(s, g, 0.0);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: [initial] ") + e.what());
        }
    }
    if (cfg.profile == "soliton") {
        try {
            return soliton_eval(cfg.soliton, g, 0.0);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: [soliton] ") + e.what());
        }
    }
    if (cfg.profile == "file") {
        return io::read_snapshots_file(cfg.file_path, g).front().u;
    }
    throw ConfigError("config: unsupported [initial] profile '" + cfg.profile + "'");
}

}  // namespace cll
