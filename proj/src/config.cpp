#include "ush/config.hpp"

#include <fstream>
#include <sstream>

namespace ush {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& v, int line) {
    try {
        size_t used = 0;
        long long x = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument("");
        return x;
    } catch (...) {
        throw ConfigError(line, "expected an integer, got '" + v + "'");
    }
}

}  // namespace

FieldData load_field_config(std::istream& in) {
    FieldData f;
    f.mode = FieldMode::Table;
    bool mode_set = false, degree_set = false, disc_set = false;
    long long D = 0, m = 0, d = 0;

    struct RawPlace {
        long long p = -1, Nv = -1, count = 1;
        int e = -1;
        std::string splitting;
        int line = 0;
    };
    std::vector<RawPlace> places;
    bool in_place = false;

    std::string lstr;
    int line = 0;
    while (std::getline(in, lstr)) {
        ++line;
        std::string s = trim(lstr);
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = trim(s.substr(0, hash));
        if (s.empty()) continue;
        if (s == "[place]") {
            in_place = true;
            places.push_back({});
            places.back().line = line;
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty() || val.empty()) throw ConfigError(line, "expected 'key = value'");

        if (in_place) {
            RawPlace& pl = places.back();
            if (key == "p") pl.p = parse_int(val, line);
            else if (key == "Nv") pl.Nv = parse_int(val, line);
            else if (key == "e") pl.e = (int)parse_int(val, line);
            else if (key == "count") pl.count = parse_int(val, line);
            else if (key == "splitting") pl.splitting = val;
            else throw ConfigError(line, "unknown place key '" + key + "'");
            continue;
        }
        if (key == "mode") {
            mode_set = true;
            if (val == "table") f.mode = FieldMode::Table;
            else if (val == "rational") f.mode = FieldMode::Rational;
            else if (val == "real-quadratic") f.mode = FieldMode::RealQuadratic;
            else throw ConfigError(line, "unknown mode '" + val + "'");
        } else if (key == "degree") {
            f.degree = (int)parse_int(val, line);
            degree_set = true;
        } else if (key == "disc_F") {
            f.abs_disc_f = parse_int(val, line);
            disc_set = true;
        } else if (key == "disc_rel_norm") {
            f.rel_disc_norm = parse_int(val, line);
        } else if (key == "bound") {
            f.table_bound = parse_int(val, line);
        } else if (key == "D") {
            D = parse_int(val, line);
        } else if (key == "m") {
            m = parse_int(val, line);
        } else if (key == "d") {
            d = parse_int(val, line);
        } else {
            throw ConfigError(line, "unknown key '" + key + "'");
        }
    }

    if (!mode_set) throw ConfigError(line, "missing 'mode'");
    if (f.mode == FieldMode::Rational) {
        if (D <= 0) throw ConfigError(line, "rational mode requires D > 0");
        return FieldData::imaginary_quadratic(D);
    }
    if (f.mode == FieldMode::RealQuadratic) {
        if (m <= 0 || d <= 0) throw ConfigError(line, "real-quadratic mode requires m and d");
        return FieldData::real_quadratic(m, d);
    }

    if (!degree_set || !disc_set)
        throw ConfigError(line, "table mode requires 'degree' and 'disc_F'");
    if (f.table_bound <= 0) throw ConfigError(line, "table mode requires 'bound'");
    for (const auto& pl : places) {
        if (pl.p < 0 || pl.Nv < 0 || pl.e < 0 || pl.splitting.empty())
            throw ConfigError(pl.line, "place requires p, Nv, splitting, e");
        Splitting sp;
        if (pl.splitting == "split") sp = Splitting::Split;
        else if (pl.splitting == "inert") sp = Splitting::Inert;
        else if (pl.splitting == "ramified") sp = Splitting::Ramified;
        else throw ConfigError(pl.line, "unknown splitting '" + pl.splitting + "'");
        if (pl.count < 1) throw ConfigError(pl.line, "count must be positive");
        if (sp == Splitting::Ramified && pl.e != 0)
            throw ConfigError(pl.line,
                              "ramified place must be unramified over Q (standing assumption)");
        for (const auto& other : f.table)
            if (other.p == pl.p && other.Nv == pl.Nv && other.splitting == sp && other.e == pl.e)
                throw ConfigError(pl.line, "duplicate place entry (use 'count' for multiplicity)");
        try {
            LocalPlaceData check(pl.Nv, sp, pl.e, pl.p);
        } catch (const std::exception& ex) {
            throw ConfigError(pl.line, ex.what());
        }
        for (long long i = 0; i < pl.count; ++i)
            f.table.push_back({pl.p, pl.Nv, sp, pl.e});
    }
    try {
        f.validate();
    } catch (const std::exception& ex) {
        throw ConfigError(line, ex.what());
    }
    return f;
}

FieldData load_field_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open field config '" + path + "'");
    return load_field_config(in);
}

}  // namespace ush
