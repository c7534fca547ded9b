#include "eitcool/config.hpp"

#include <charconv>
#include <fstream>

#include "eitcool/csv.hpp"
#include "eitcool/error.hpp"

namespace eitcool {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_value(const std::string& key, const std::string& text)
{
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (!text.empty() && *begin == '+')
        ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty())
        throw Error(ErrorCode::InvalidParameter,
                    "value of '" + key + "' is not a number: '" + text + "'");
    return value;
}

}  // namespace

RawParams parse_config(std::istream& in)
{
    RawParams raw;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string body = trim(line);
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::InvalidParameter,
                        "line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string text = trim(std::string_view(body).substr(eq + 1));
        if (!is_known_key(key))
            throw Error(ErrorCode::UnknownKey,
                        "line " + std::to_string(line_no) + ": unknown parameter key '" + key + "'");
        if (raw.contains(key))
            throw Error(ErrorCode::InvalidParameter,
                        "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        raw[key] = parse_value(key, text);
    }
    return raw;
}

RawParams load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidParameter, "cannot open config file '" + path.string() + "'");
    return parse_config(in);
}

std::pair<std::string, double> parse_assignment(const std::string& text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw Error(ErrorCode::InvalidParameter, "expected key=value, got '" + text + "'");
    std::string key = trim(std::string_view(text).substr(0, eq));
    if (!is_known_key(key))
        throw Error(ErrorCode::UnknownKey, "unknown parameter key '" + key + "'");
    const double value = parse_value(key, trim(std::string_view(text).substr(eq + 1)));
    return {std::move(key), value};
}

std::vector<std::string> describe(const SystemParams& p)
{
    std::vector<std::string> lines;
    auto add = [&](const char* key, double v) {
        lines.push_back(std::string(key) + " = " + format_number(v));
    };
    add("omega_m", p.omega_m);
    add("kappa1", p.kappa1);
    add("kappa2", p.kappa2);
    add("delta1", p.delta1);
    add("delta2", p.delta2);
    add("J", p.coupling_J);
    add("g0", p.g0);
    add("eps", p.drive_eps);
    add("gamma_m", p.gamma_m);
    add("n_thermal", p.n_thermal);
    lines.push_back(std::string("g_mode = ") +
                    (p.g_mode == CouplingMode::Fixed ? "fixed" : "from_drive"));
    if (p.g_mode == CouplingMode::Fixed)
        add("g_fixed", p.g_fixed);
    return lines;
}

}  // namespace eitcool
