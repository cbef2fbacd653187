#include "frogsim/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "frogsim/world.hpp"

namespace frog {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& s, const std::string& key) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric value for " + key + ": '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("bad numeric value for " + key + ": '" + s + "'");
    return v;
}

std::int64_t parse_int(const std::string& s, const std::string& key) {
    std::size_t pos = 0;
    std::int64_t v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer value for " + key + ": '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("bad integer value for " + key + ": '" + s + "'");
    return v;
}

std::uint64_t parse_uint(const std::string& s, const std::string& key) {
    std::size_t pos = 0;
    std::uint64_t v;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer value for " + key + ": '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("bad integer value for " + key + ": '" + s + "'");
    return v;
}

}  // namespace

void RunConfig::validate() const {
    variant_from_string(variant);  // throws on unknown name
    if (!(p >= 0.5 && p <= 1.0)) throw std::invalid_argument("p must lie in [0.5, 1]");
    if (has_grid) {
        if (!(grid_start >= 0.5 && grid_start <= 1.0) || !(grid_stop >= 0.5 && grid_stop <= 1.0))
            throw std::invalid_argument("p grid endpoints must lie in [0.5, 1]");
        if (!(grid_step > 0.0)) throw std::invalid_argument("p grid step must be positive");
        if (grid_stop < grid_start) throw std::invalid_argument("p grid stop below start");
    }
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (mode != "observed" && mode != "constants")
        throw std::invalid_argument("mode must be 'observed' or 'constants'");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be 'csv' or 'json'");
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
    if (bins < 0) throw std::invalid_argument("bins must be >= 0");
}

std::vector<double> RunConfig::p_values() const {
    if (!has_grid) return {p};
    std::vector<double> out;
    // Guard against accumulation drift: use index arithmetic and a half-step
    // tolerance at the upper end.
    const int count = static_cast<int>(std::floor((grid_stop - grid_start) / grid_step + 0.5)) + 1;
    for (int i = 0; i < count; ++i) {
        const double v = grid_start + i * grid_step;
        if (v > grid_stop + 0.5 * grid_step) break;
        out.push_back(std::min(v, 1.0));
    }
    return out;
}

void RunConfig::set_grid(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("p grid must have the form start:stop:step");
    grid_start = parse_double(spec.substr(0, c1), "p-grid start");
    grid_stop = parse_double(spec.substr(c1 + 1, c2 - c1 - 1), "p-grid stop");
    grid_step = parse_double(spec.substr(c2 + 1), "p-grid step");
    has_grid = true;
}

std::string RunConfig::grid_spec() const {
    return fmt_double(grid_start) + ":" + fmt_double(grid_stop) + ":" + fmt_double(grid_step);
}

std::string RunConfig::to_kv() const {
    std::ostringstream os;
    os << "variant=" << variant << '\n';
    os << "p=" << fmt_double(p) << '\n';
    os << "has_grid=" << (has_grid ? 1 : 0) << '\n';
    os << "grid_start=" << fmt_double(grid_start) << '\n';
    os << "grid_stop=" << fmt_double(grid_stop) << '\n';
    os << "grid_step=" << fmt_double(grid_step) << '\n';
    os << "n=" << n << '\n';
    os << "reps=" << reps << '\n';
    os << "seed=" << seed << '\n';
    os << "k=" << k << '\n';
    os << "mode=" << mode << '\n';
    os << "format=" << format << '\n';
    os << "out=" << out << '\n';
    os << "threads=" << threads << '\n';
    os << "serial=" << (serial ? 1 : 0) << '\n';
    os << "bins=" << bins << '\n';
    return os.str();
}

RunConfig RunConfig::from_kv(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line missing '=': '" + line + "'");
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        if (key == "variant")
            cfg.variant = val;
        else if (key == "p")
            cfg.p = parse_double(val, key);
        else if (key == "has_grid")
            cfg.has_grid = parse_int(val, key) != 0;
        else if (key == "grid_start")
            cfg.grid_start = parse_double(val, key);
        else if (key == "grid_stop")
            cfg.grid_stop = parse_double(val, key);
        else if (key == "grid_step")
            cfg.grid_step = parse_double(val, key);
        else if (key == "n")
            cfg.n = parse_int(val, key);
        else if (key == "reps")
            cfg.reps = static_cast<int>(parse_int(val, key));
        else if (key == "seed")
            cfg.seed = parse_uint(val, key);
        else if (key == "k")
            cfg.k = static_cast<int>(parse_int(val, key));
        else if (key == "mode")
            cfg.mode = val;
        else if (key == "format")
            cfg.format = val;
        else if (key == "out")
            cfg.out = val;
        else if (key == "threads")
            cfg.threads = static_cast<int>(parse_int(val, key));
        else if (key == "serial")
            cfg.serial = parse_int(val, key) != 0;
        else if (key == "bins")
            cfg.bins = static_cast<int>(parse_int(val, key));
        else
            throw std::invalid_argument("unknown config key '" + key + "'");
    }
    return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_kv(buf.str());
}

}  // namespace frog
