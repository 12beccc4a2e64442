#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <system_error>

#include "twomode/cli.hpp"
#include "twomode/errors.hpp"

namespace twomode::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

double parse_double(std::string_view text, int line, const std::string& key) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError(line, key, "expected a number, got '" + std::string(text) + "'");
    }
    return value;
}

int parse_int(std::string_view text, int line, const std::string& key) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError(line, key, "expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

ModelChoice parse_model(std::string_view text, int line) {
    if (text == "local") return ModelChoice::Local;
    if (text == "nonlocal") return ModelChoice::Nonlocal;
    if (text == "both") return ModelChoice::Both;
    throw ConfigError(line, "model", "expected local, nonlocal or both, got '" + std::string(text) + "'");
}

std::vector<Output> parse_outputs(std::string_view text, int line) {
    static const std::pair<std::string_view, Output> names[] = {
        {"n_a", Output::NA},
        {"n_b", Output::NB},
        {"logneg", Output::LogNeg},
        {"fidelity_a", Output::FidelityA},
        {"fidelity_b", Output::FidelityB},
        {"covariance", Output::Covariance},
    };
    std::vector<Output> out;
    for (const auto token : split(text, ',')) {
        const auto it = std::find_if(std::begin(names), std::end(names),
                                     [&](const auto& n) { return n.first == token; });
        if (it == std::end(names)) {
            throw ConfigError(line, "outputs", "unknown output '" + std::string(token) + "'");
        }
        out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Either a comma list or start:step:stop (inclusive).
std::vector<double> parse_grid(std::string_view text, int line) {
    const std::string key = "nbar_grid";
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw ConfigError(line, key, "range form is start:step:stop");
        const double start = parse_double(parts[0], line, key);
        const double step = parse_double(parts[1], line, key);
        const double stop = parse_double(parts[2], line, key);
        if (!(step > 0.0) || stop < start) throw ConfigError(line, key, "range needs step > 0 and stop >= start");
        const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
        if (count > 100000) throw ConfigError(line, key, "range has too many points");
        std::vector<double> grid;
        for (long k = 0; k < count; ++k) grid.push_back(start + static_cast<double>(k) * step);
        return grid;
    }
    std::vector<double> grid;
    if (trim(text).empty()) return grid;
    for (const auto token : split(text, ',')) grid.push_back(parse_double(token, line, key));
    return grid;
}

} // namespace

RunConfig parse_config(std::string_view text) {
    RunConfig config;
    bool outputs_given = false;

    using Setter = std::function<void(std::string_view, int, const std::string&)>;
    auto number = [](double& target) -> Setter {
        return [&target](std::string_view v, int line, const std::string& key) { target = parse_double(v, line, key); };
    };
    auto both = [](double& x, double& y) -> Setter {
        return [&x, &y](std::string_view v, int line, const std::string& key) { x = y = parse_double(v, line, key); };
    };
    ModelParams& p = config.params;
    InitialState& init = config.initial;
    double a_re = 0, a_im = 0, b_re = 0, b_im = 0;

    const std::map<std::string, Setter, std::less<>> setters = {
        {"omega", number(p.omega)},
        {"kappa", number(p.kappa)},
        {"lambda", number(p.lambda)},
        {"gamma_a", number(p.gamma_a)},
        {"gamma_b", number(p.gamma_b)},
        {"gamma", both(p.gamma_a, p.gamma_b)},
        {"nbar_a", number(p.nbar_a)},
        {"nbar_b", number(p.nbar_b)},
        {"nbar", both(p.nbar_a, p.nbar_b)},
        {"t_max", number(config.t_max)},
        {"dt_out", number(config.dt_out)},
        {"init_a_nbar", number(init.a.nbar)},
        {"init_a_r", number(init.a.squeeze_r)},
        {"init_a_theta", number(init.a.squeeze_theta)},
        {"init_a_re", number(a_re)},
        {"init_a_im", number(a_im)},
        {"init_b_nbar", number(init.b.nbar)},
        {"init_b_r", number(init.b.squeeze_r)},
        {"init_b_theta", number(init.b.squeeze_theta)},
        {"init_b_re", number(b_re)},
        {"init_b_im", number(b_im)},
        {"model", [&](std::string_view v, int line, const std::string&) { config.model = parse_model(v, line); }},
        {"outputs",
         [&](std::string_view v, int line, const std::string&) {
             config.outputs = parse_outputs(v, line);
             outputs_given = true;
         }},
        {"nbar_grid", [&](std::string_view v, int line, const std::string&) { config.nbar_grid = parse_grid(v, line); }},
        {"oracle_cutoff",
         [&](std::string_view v, int line, const std::string& key) { config.oracle_cutoff = parse_int(v, line, key); }},
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(line_no, "", "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_no, "", "missing key");

        const auto setter = setters.find(key);
        if (setter == setters.end()) throw ConfigError(line_no, key, "unknown key");
        if (config.key_lines.contains(key)) {
            throw ConfigError(line_no, key, "duplicate key (first set on line " + std::to_string(config.key_lines[key]) + ")");
        }
        for (const auto& [a, b] : {std::pair{"gamma", "gamma_a"}, {"gamma", "gamma_b"}, {"nbar", "nbar_a"}, {"nbar", "nbar_b"}}) {
            if ((key == a && config.key_lines.contains(b)) || (key == b && config.key_lines.contains(a))) {
                throw ConfigError(line_no, key, std::string("conflicts with ") + (key == a ? b : a));
            }
        }
        setter->second(value, line_no, key);
        config.key_lines[key] = line_no;
    }

    init.a.displacement = {a_re, a_im};
    init.b.displacement = {b_re, b_im};
    if (!outputs_given) {
        config.outputs = {Output::NA, Output::NB, Output::LogNeg};
        if (config.model == ModelChoice::Both) {
            config.outputs.push_back(Output::FidelityA);
            config.outputs.push_back(Output::FidelityB);
        }
    }
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "", "cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

namespace {

int line_of(const RunConfig& config, const std::string& key) {
    const auto it = config.key_lines.find(key);
    return it == config.key_lines.end() ? 0 : it->second;
}

} // namespace

void validate_for_evolve(const RunConfig& config) {
    validate(config.params);
    validate(config.initial);
    if (!(config.t_max > 0.0)) throw ConfigError(line_of(config, "t_max"), "t_max", "must be > 0");
    if (!(config.dt_out > 0.0)) throw ConfigError(line_of(config, "dt_out"), "dt_out", "must be > 0");
    if (config.outputs.empty()) throw ConfigError(line_of(config, "outputs"), "outputs", "no outputs requested");

    const bool wants_fidelity = std::any_of(config.outputs.begin(), config.outputs.end(), [](Output o) {
        return o == Output::FidelityA || o == Output::FidelityB;
    });
    if (wants_fidelity) {
        if (config.model != ModelChoice::Both) {
            throw ConfigError(line_of(config, "outputs"), "outputs", "fidelity outputs require model = both");
        }
        if (config.initial.a.displacement != Complex{} || config.initial.b.displacement != Complex{}) {
            throw ConfigError(line_of(config, "outputs"), "outputs", "fidelity outputs require zero displacement");
        }
    }
    if (config.oracle_cutoff < 2) {
        throw ConfigError(line_of(config, "oracle_cutoff"), "oracle_cutoff", "must be >= 2");
    }
}

void validate_for_sweep(const RunConfig& config) {
    validate(config.params);
    const int line = line_of(config, "nbar_grid");
    const auto& grid = config.nbar_grid;
    if (grid.empty()) throw ConfigError(line, "nbar_grid", "grid must be nonempty");
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (!(grid[k] >= 0.0)) throw ConfigError(line, "nbar_grid", "occupancies must be >= 0");
        if (k > 0 && grid[k] < grid[k - 1]) throw ConfigError(line, "nbar_grid", "grid must be nondecreasing");
    }
}

} // namespace twomode::cli
