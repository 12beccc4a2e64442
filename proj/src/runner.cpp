#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "twomode/cli.hpp"
#include "twomode/dynamics.hpp"
#include "twomode/fock_oracle.hpp"
#include "twomode/generators.hpp"
#include "twomode/measures.hpp"
#include "twomode/steady.hpp"
#include "twomode/stepping.hpp"

namespace twomode::cli {

std::string format_number(double value) {
    if (value == 0.0) return "0"; // folds -0
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const auto comma = line.find(',', start);
            fields.emplace_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

namespace {

// One model's trajectory reduced to what the CSV needs.
struct Track {
    DampingModel model;
    std::vector<double> n_a, n_b;
    std::vector<CovarianceState> cov;
};

std::vector<DampingModel> models_of(ModelChoice choice) {
    switch (choice) {
    case ModelChoice::Local: return {DampingModel::Local};
    case ModelChoice::Nonlocal: return {DampingModel::Nonlocal};
    case ModelChoice::Both: break;
    }
    return {DampingModel::Local, DampingModel::Nonlocal};
}

Track gaussian_track(const RunConfig& config, DampingModel model) {
    const auto gen = build_generators(config.params, model);
    const auto traj = evolve(initial_exponent(config.initial), gen, config.t_max, config.dt_out);
    Track track{model, {}, {}, {}};
    for (const auto& state : traj) {
        const auto m = moments(state);
        track.n_a.push_back(m.n_a);
        track.n_b.push_back(m.n_b);
        track.cov.push_back(to_covariance(state));
    }
    return track;
}

Track oracle_track(const RunConfig& config, DampingModel model) {
    const int cutoff = config.oracle_cutoff;
    const auto system = model == DampingModel::Local ? fock::build_local_superop(config.params, cutoff)
                                                     : fock::build_nonlocal_superop(config.params, cutoff);
    const auto traj = fock::integrate(system, fock::product_state(config.initial, cutoff), config.t_max, config.dt_out);
    Track track{model, {}, {}, {}};
    for (const auto& rho : traj) {
        const auto m = fock::moments(system, rho);
        track.n_a.push_back(m.n_a);
        track.n_b.push_back(m.n_b);
        track.cov.push_back(fock::covariance(system, rho));
    }
    return track;
}

void append_row(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k > 0) out += ',';
        out += fields[k];
    }
    out += '\n';
}

} // namespace

std::string run_evolve(const RunConfig& config, bool use_oracle) {
    validate_for_evolve(config);

    std::vector<Track> tracks;
    for (const auto model : models_of(config.model)) {
        tracks.push_back(use_oracle ? oracle_track(config, model) : gaussian_track(config, model));
    }
    const auto times = output_times(0.0, config.t_max, config.dt_out);

    std::vector<std::string> header{"t"};
    auto per_model = [&](const std::string& name) {
        for (const auto& track : tracks) header.push_back(name + "_" + std::string(to_string(track.model)));
    };
    for (const auto output : config.outputs) {
        switch (output) {
        case Output::NA: per_model("n_a"); break;
        case Output::NB: per_model("n_b"); break;
        case Output::LogNeg: per_model("logneg"); break;
        case Output::FidelityA: header.push_back("fidelity_a"); break;
        case Output::FidelityB: header.push_back("fidelity_b"); break;
        case Output::Covariance:
            for (int i = 0; i < 4; ++i)
                for (int j = i; j < 4; ++j) per_model("V" + std::to_string(i) + std::to_string(j));
            break;
        }
    }

    std::string out;
    append_row(out, header);
    for (std::size_t k = 0; k < times.size(); ++k) {
        std::vector<std::string> row{format_number(times[k])};
        auto fidelity_of = [&](Mode mode) {
            return fidelity(one_mode_reduce(tracks[0].cov[k], mode), one_mode_reduce(tracks[1].cov[k], mode));
        };
        for (const auto output : config.outputs) {
            switch (output) {
            case Output::NA:
                for (const auto& t : tracks) row.push_back(format_number(t.n_a[k]));
                break;
            case Output::NB:
                for (const auto& t : tracks) row.push_back(format_number(t.n_b[k]));
                break;
            case Output::LogNeg:
                for (const auto& t : tracks) row.push_back(format_number(log_negativity(t.cov[k])));
                break;
            case Output::FidelityA: row.push_back(format_number(fidelity_of(Mode::A))); break;
            case Output::FidelityB: row.push_back(format_number(fidelity_of(Mode::B))); break;
            case Output::Covariance:
                for (int i = 0; i < 4; ++i)
                    for (int j = i; j < 4; ++j)
                        for (const auto& t : tracks) row.push_back(format_number(t.cov[k].V(i, j)));
                break;
            }
        }
        append_row(out, row);
    }
    return out;
}

std::string run_steady_sweep(const RunConfig& config) {
    validate_for_sweep(config);
    std::string out;
    append_row(out, {"nbar", "logneg_local", "logneg_nonlocal", "fidelity_onemode"});
    for (const auto& r : nbar_sweep(config.params, config.nbar_grid)) {
        append_row(out, {format_number(r.nbar), format_number(r.logneg_local), format_number(r.logneg_nonlocal),
                         format_number(r.fidelity_onemode)});
    }
    return out;
}

} // namespace twomode::cli
