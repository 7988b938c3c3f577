#include "cusp/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cusp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

double parse_double(const std::string& tok) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseFailure("bad numeric field '" + tok + "'");
    return v;
}

}  // namespace

std::string series_to_json(const LogSeries& s) {
    ordered_json j;
    j["a"] = s.a;
    j["n_max"] = s.n_max;
    j["k_max"] = s.k_max;
    j["c"] = s.c;
    return j.dump(2) + "\n";
}

LogSeries series_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseFailure(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("a") || !j.contains("n_max") || !j.contains("k_max") ||
        !j.contains("c"))
        throw ParseFailure("series document needs fields a, n_max, k_max, c");
    LogSeries s;
    try {
        s.a = j.at("a").get<double>();
        s.n_max = j.at("n_max").get<int>();
        s.k_max = j.at("k_max").get<int>();
        s.c = j.at("c").get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseFailure(std::string("series field has wrong type: ") + e.what());
    }
    if (!(s.a > 0.0) || !std::isfinite(s.a)) throw ParseFailure("field a must be a positive real");
    if (s.n_max < 1 || s.k_max < 0) throw ParseFailure("n_max must be >= 1 and k_max >= 0");
    if ((int)s.c.size() != s.n_max) throw ParseFailure("c must have n_max rows");
    for (const auto& row : s.c) {
        if ((int)row.size() != s.k_max + 1) throw ParseFailure("each c row needs k_max + 1 entries");
        for (double v : row)
            if (!std::isfinite(v)) throw ParseFailure("coefficients must be finite");
    }
    return s;
}

std::string admissibility_to_json(const AdmissibilityReport& r) {
    ordered_json j;
    auto put = [&](const char* name, const ConditionVerdict& v) {
        j[name] = {{"pass", v.pass}, {"bound", v.bound}};
    };
    put("cond_i", r.cond_i);
    put("cond_ii", r.cond_ii);
    put("cond_iii", r.cond_iii);
    put("cond_iv", r.cond_iv);
    j["radius"] = r.radius;
    j["conv_radius"] = r.conv_radius;
    j["all_pass"] = r.all_pass();
    return j.dump(2) + "\n";
}

std::string curve_to_csv(const CuspCurve& c) {
    std::string out = "x,u,v\n";
    for (const auto& s : c.samples) {
        out += format_double(s.x);
        out += ',';
        out += format_double(s.u);
        out += ',';
        out += format_double(s.v);
        out += '\n';
    }
    return out;
}

CuspCurve curve_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseFailure("empty curve file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,u,v") throw ParseFailure("curve file must start with header x,u,v");
    CuspCurve c;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t a = line.find(','), b = line.rfind(',');
        if (a == std::string::npos || b == a) throw ParseFailure("curve row needs three fields");
        CurveSample s;
        s.x = parse_double(line.substr(0, a));
        s.u = parse_double(line.substr(a + 1, b - a - 1));
        s.v = parse_double(line.substr(b + 1));
        if (s.x == 0.0) throw ParseFailure("curve rows need x != 0");
        c.samples.push_back(s);
    }
    if (c.samples.empty()) throw ParseFailure("curve file has no samples");
    bool neg = c.samples.front().x < 0.0;
    for (const auto& s : c.samples)
        if ((s.x < 0.0) != neg) throw ParseFailure("curve rows mix parameter signs");
    c.side = neg ? CurveSide::negative_axis : CurveSide::positive_axis;
    return c;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoFailure("read error on '" + path + "'");
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoFailure("write error on '" + path + "'");
}

}  // namespace cusp
